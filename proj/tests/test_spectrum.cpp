#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "corpus.hpp"
#include "signedflow/constructions.hpp"
#include "signedflow/errors.hpp"
#include "signedflow/spectrum.hpp"
#include "signedflow/structure.hpp"
#include "signedflow/switching.hpp"

#include <random>
#include <set>

using namespace signedflow;
using namespace signedflow::testing;

namespace {

std::vector<Fraction> fr(std::initializer_list<Fraction> xs) { return std::vector<Fraction>(xs); }

} // namespace

TEST_CASE("signature class counts") {
    CHECK(signature_classes(path(3)).representatives.size() == 1);  // trees are all balanced
    CHECK(signature_classes(k23()).representatives.size() == 4);
    CHECK(signature_classes(petersen()).representatives.size() == 64);
    CHECK(signature_classes(k4()).representatives.size() == 8);
}

TEST_CASE("signature classes partition all signatures of K4") {
    // cross-check against the exhaustive pairwise-equivalence partition of
    // all 2^6 signatures
    Multigraph g = k4();
    auto classes = signature_classes(g);
    std::vector<Signature> reps;
    for (std::uint64_t mask = 0; mask < 64; ++mask) {
        Signature s = Signature::from_mask(6, mask);
        bool seen = false;
        for (const Signature& r : reps)
            if (equivalent(g, r, s).equivalent) seen = true;
        if (!seen) reps.push_back(s);
    }
    CHECK(reps.size() == classes.representatives.size());

    // the listed representatives are pairwise inequivalent and minimal
    for (std::size_t i = 0; i < classes.representatives.size(); ++i) {
        for (std::size_t j = i + 1; j < classes.representatives.size(); ++j)
            CHECK(!equivalent(g, classes.representatives[i], classes.representatives[j]).equivalent);
        auto fr_min = frustration_minimal(g, classes.representatives[i]);
        CHECK(fr_min.minimal.negative_count() ==
              classes.representatives[i].negative_count());
    }
}

TEST_CASE("signature classes respect the rank cap") {
    CHECK_THROWS_AS(signature_classes(petersen(), 3), ResourceCapError);
}

TEST_CASE("spectra of K_2^3") {
    auto s = flow_spectrum(k23(), 8);
    CHECK(s.values() == fr({Fraction(3)}));
    CHECK(s.class_count == 4);
    CHECK(s.non_admissible_classes == 3);
    auto si = integer_flow_spectrum(k23());
    CHECK(si.values() == fr({Fraction(3)}));
}

TEST_CASE("spectra of H_2 separate the circular and integer worlds") {
    SignedGraph h2 = make_family({Family::Ht, 2});
    auto s = flow_spectrum(h2.graph, 8);
    CHECK(s.values() == fr({Fraction(4)}));
    auto si = integer_flow_spectrum(h2.graph);
    CHECK(si.values() == fr({Fraction(5)}));
    // witnesses verify and attain their value
    for (const SpectrumEntry& e : si.entries) {
        CHECK(verify_flow(e.certificate).ok);
        CHECK(e.certificate.kind.r == e.value);
    }
}

TEST_CASE("integer flow spectrum of the Petersen graph") {
    auto si = integer_flow_spectrum(petersen());
    CHECK(si.values() == fr({Fraction(3), Fraction(4), Fraction(5), Fraction(6)}));
    CHECK(si.class_count == 64);
    CHECK(si.non_admissible_classes == 15);
    for (const SpectrumEntry& e : si.entries) CHECK(verify_flow(e.certificate).ok);
}

TEST_CASE("x-spectrum with empty X is the empty-signature flow number") {
    auto r = x_flow_spectrum(k4(), {}, 8);
    CHECK(r.values() == fr({Fraction(4)}));
    CHECK(r.class_count == 1);
}

TEST_CASE("x-spectrum deduplicates equivalent subsets") {
    // all four subsets of {e0, e1} in K_2^3 are pairwise inequivalent
    // ({e0,e1} is equivalent to {e2}, which lies outside the lattice), and
    // only the empty one is admissible
    auto r = integer_x_flow_spectrum(k23(), {0, 1});
    CHECK(r.class_count == 4);
    CHECK(r.non_admissible_classes == 3);
    CHECK(r.values() == fr({Fraction(3)}));

    // a lattice where dedup does fire: all of E(K_2^3)
    auto full = integer_x_flow_spectrum(k23(), {0, 1, 2});
    CHECK(full.class_count < 8);
}

TEST_CASE("is_r_minimal: the empty set") {
    // empty set is r-minimal iff F_c(g, empty) = r
    CHECK(is_r_minimal(k33(), {}, Fraction(3), 8));
    CHECK(!is_r_minimal(k33(), {}, Fraction(4), 8));
    CHECK(is_r_minimal(k4(), {}, Fraction(4), 8));
    CHECK(!is_r_minimal(petersen(), {}, Fraction(3), 8));
    CHECK(is_r_minimal(petersen(), {}, Fraction(5), 8));
}

TEST_CASE("single edges are never 3-minimal on the Petersen graph") {
    for (int e : {0, 7, 14})
        CHECK(!is_r_minimal(petersen(), {e}, Fraction(3), 8));
}

TEST_CASE("bipartite_four_flow signatures are 4-minimal") {
    for (const Multigraph& g : {k33(), cube()}) {
        auto b = bipartite_four_flow(g);
        CHECK(is_r_minimal(g, b.sigma.negative_set(), Fraction(4), 8));
    }
}

TEST_CASE("smallest 3-minimal set of the Petersen graph has size 3 and spectrum {3,4,5}") {
    auto x3 = smallest_r_minimal(petersen(), Fraction(3), 8);
    REQUIRE(x3.has_value());
    CHECK(x3->size() == 3);

    auto sx = x_flow_spectrum(petersen(), *x3, 8);
    CHECK(sx.values() == fr({Fraction(3), Fraction(4), Fraction(5)}));
}

TEST_CASE("r_minimal_sets finds all 4-minimal pairs of K_{3,3} up to size 2") {
    auto sets = r_minimal_sets(k33(), Fraction(4), 2, 8);
    CHECK(!sets.empty());
    for (const auto& x : sets) {
        CHECK(x.size() == 2);
        CHECK(is_r_minimal(k33(), x, Fraction(4), 8));
    }
    auto smallest = smallest_r_minimal(k33(), Fraction(4), 8);
    REQUIRE(smallest.has_value());
    CHECK(*smallest == sets.front());
}

TEST_CASE("flow numbers are constant on switching classes") {
    std::mt19937 rng(37);
    SignedGraph g2 = make_family({Family::Gn, 2});
    for (const SignedGraph& base :
         {with_empty_signature(k4()), g2, with_signature(k4(), Signature(6, {0, 5}))}) {
        if (!is_flow_admissible(base).admissible) continue;
        auto f = integer_flow_number(base);
        auto c = circular_flow_number(base, 8);
        for (int round = 0; round < 5; ++round) {
            SwitchSet at;
            for (int v = 0; v < base.graph.vertex_count(); ++v)
                if (rng() & 1) at.push_back(v);
            SignedGraph switched{base.graph, switch_signature(base.graph, base.sigma, at)};
            // transported certificates stay valid...
            FlowCertificate moved = transport_flow(*f.witness, at);
            CHECK(verify_flow(moved).ok);
            // ...and a fresh search finds the same numbers
            CHECK(integer_flow_number(switched).value == f.value);
            CHECK(circular_flow_number(switched, 8).value == c.value);
        }
    }
}

TEST_CASE("subset budget is reported distinctly") {
    CHECK_THROWS_AS(r_minimal_sets(petersen(), Fraction(3), 15, 8, {}, 100), ResourceCapError);
}

TEST_CASE("smallest minimal sets of 3-edge-colorable cubic graphs") {
    // bipartite: |X3| = 0 and |X4| = 2
    auto x3_b = smallest_r_minimal(k33(), Fraction(3), 8);
    REQUIRE(x3_b.has_value());
    CHECK(x3_b->empty());
    auto x4_b = smallest_r_minimal(k33(), Fraction(4), 8);
    REQUIRE(x4_b.has_value());
    CHECK(x4_b->size() == 2);

    // 3-edge-colorable and not bipartite: |X4| = 0 and 2 <= |X3| <= 3(n/2 - alpha)
    for (const Multigraph& g : {k4(), prism()}) {
        auto x4 = smallest_r_minimal(g, Fraction(4), 8);
        REQUIRE(x4.has_value());
        CHECK(x4->empty());
        auto x3 = smallest_r_minimal(g, Fraction(3), 8);
        REQUIRE(x3.has_value());
        CHECK(x3->size() >= 2);
        int bound = 3 * (g.vertex_count() / 2 - independence_number(g));
        CHECK(static_cast<int>(x3->size()) <= bound);
    }
}

TEST_CASE("smallest 3-minimal sets respect the corpus-wide upper bound") {
    // |X| <= min{(n/2 - alpha)(2t+1), (t/2) n} at t = 1
    for (const Multigraph& g : connected_cubic_multigraphs(6)) {
        if (!has_t_factor(g, 1).has_value()) continue;
        auto x3 = smallest_r_minimal(g, Fraction(3), 8);
        REQUIRE(x3.has_value());
        int bound = std::min(3 * (g.vertex_count() / 2 - independence_number(g)),
                             g.vertex_count() / 2);
        CHECK(static_cast<int>(x3->size()) <= bound);
    }
}
