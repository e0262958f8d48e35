#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "corpus.hpp"
#include "signedflow/constructions.hpp"
#include "signedflow/spectrum.hpp"
#include "signedflow/structure.hpp"
#include "signedflow/switching.hpp"

#include <bit>
#include <map>
#include <random>

using namespace signedflow;
using namespace signedflow::testing;

TEST_CASE("family generators") {
    SignedGraph h2 = make_family({Family::Ht, 2});
    CHECK(h2.graph.vertex_count() == 16);
    CHECK(h2.graph.edge_count() == 20);
    CHECK(bridges(h2.graph).size() == 5);
    CHECK(h2.sigma.negative_count() == 5);
    CHECK(!has_t_factor(h2.graph, 1).has_value());

    SignedGraph g1 = make_family({Family::Gn, 1});
    CHECK(isomorphic(g1.graph, k23()));

    SignedGraph g3 = make_family({Family::Gn, 3});
    CHECK(g3.graph.vertex_count() == 6);
    CHECK(g3.graph.edge_count() == 9);
    CHECK(is_bipartite_after_removal(g3.graph, {}));
    CHECK(g3.graph.is_regular(3));

    SignedGraph pet = make_family({Family::Petersen});
    CHECK(isomorphic(pet.graph, petersen()));

    SignedGraph kp = make_family({Family::KprimeNN, 5});
    CHECK(kp.graph.vertex_count() == 11);
    CHECK(kp.graph.edge_count() == 26);
    CHECK(kp.graph.degree(10) == 2);  // the subdivision vertex is the last id
    for (int v = 0; v < 10; ++v) CHECK(kp.graph.degree(v) == 5);

    SignedGraph gt = make_family({Family::Gt, 2});
    CHECK(gt.graph.is_regular(5));
    CHECK(gt.sigma.negative_count() == 4);
    CHECK(is_flow_admissible(gt).admissible);

    CHECK_THROWS_AS(make_family({Family::Ht, 0}), std::invalid_argument);
    CHECK_THROWS_AS(make_family({Family::Gt, 1}), std::invalid_argument);
}

TEST_CASE("the explicit H_t flows") {
    for (int t : {1, 2, 3}) {
        HtFlows hf = h_t_flows(t);
        CHECK(verify_flow(hf.integer_five_flow).ok);
        CHECK(verify_flow(hf.circular_flow).ok);
        CHECK(hf.circular_flow.kind.r == Fraction(3 * t + 2, t));

        std::set<Fraction> int_values(hf.integer_five_flow.flow.values.begin(),
                                      hf.integer_five_flow.flow.values.end());
        CHECK(int_values == std::set<Fraction>{Fraction(1), Fraction(2), Fraction(4)});

        std::set<Fraction> circ_values(hf.circular_flow.flow.values.begin(),
                                       hf.circular_flow.flow.values.end());
        std::set<Fraction> expected{Fraction(1), Fraction(1) + Fraction(1, t), Fraction(2),
                                    Fraction(2) + Fraction(2, t)};
        CHECK(circ_values == expected);
    }

    // t = 1: bridge value multiset {2, 2, 4}
    HtFlows h1 = h_t_flows(1);
    std::multiset<Fraction> bridge_values;
    for (int i = 0; i < 3; ++i) bridge_values.insert(h1.integer_five_flow.flow.values[4 * i]);
    CHECK(bridge_values == std::multiset<Fraction>{Fraction(2), Fraction(2), Fraction(4)});
}

TEST_CASE("the engine confirms the H_t lower bounds") {
    for (int t : {1, 2, 3}) {
        SignedGraph ht = make_family({Family::Ht, t});
        CHECK(!exists_integer_nzflow(ht, 4).has_value());
        // Farey predecessor of 3 + 2/t at q_max = 8
        Fraction target(3 * t + 2, t);
        Fraction pred(2);
        for (int q = 1; q <= 8; ++q)
            for (int p = 2 * q; Fraction(p, q) < target; ++p)
                if (Fraction(p, q) > pred) pred = Fraction(p, q);
        std::int64_t scale = 8 / pred.den();
        CHECK(!exists_pq_flow(ht, pred.num() * scale, pred.den() * scale).has_value());
    }
}

TEST_CASE("double graph layout") {
    SignedGraph base = with_signature(k4(), Signature(6, {0, 5}));
    auto d0 = double_graph(base.graph, base.sigma, {});
    CHECK(d0.doubled.graph.vertex_count() == 8);
    CHECK(d0.doubled.graph.edge_count() == 12);
    CHECK(d0.doubled.graph.component_count() == 2);  // disjoint union
    CHECK(d0.doubled.sigma.negative_count() == 4);

    auto d = double_graph(base.graph, base.sigma, {0, 3});
    CHECK(d.doubled.graph.vertex_count() == 2 * 4);
    CHECK(d.doubled.graph.edge_count() == 2 * 6);
    // |N| doubles minus the removed negatives
    CHECK(d.doubled.sigma.negative_count() == 2 * 1);

    // N inside X gives the empty signature
    auto d2 = double_graph(base.graph, base.sigma, {0, 5});
    CHECK(d2.doubled.sigma.negative_count() == 0);
}

TEST_CASE("induced flows on the double verify at the same r") {
    std::mt19937 rng(41);
    int done = 0;
    std::vector<Multigraph> graphs = {k4(), prism(), k33()};
    for (const Multigraph& g : connected_cubic_multigraphs(6)) graphs.push_back(g);
    while (done < 50) {
        const Multigraph& g = graphs[rng() % graphs.size()];
        Signature s(g.edge_count());
        for (int e = 0; e < g.edge_count(); ++e)
            if (rng() & 1) s.flip(e);
        if (!is_flow_admissible(g, s).admissible) continue;
        std::vector<int> x;
        for (int e = 0; e < g.edge_count(); ++e)
            if (rng() % 3 == 0) x.push_back(e);
        auto f = integer_flow_number({g, s});
        REQUIRE(f.finite());
        auto induced = induced_flow_on_double(g, s, x, *f.witness);
        CHECK(verify_flow(induced).ok);
        CHECK(induced.kind.r == f.witness->kind.r);
        ++done;
    }
}

TEST_CASE("bipartite_four_flow") {
    for (const Multigraph& g : {k33(), cube(), make_family({Family::Gn, 2}).graph}) {
        auto r = bipartite_four_flow(g);
        CHECK(r.sigma.negative_count() == 2);
        CHECK(verify_flow(r.integer_four_flow).ok);
        CHECK(r.integer_four_flow.kind.r == Fraction(4));
        CHECK(verify_flow(r.circular_witness).ok);
    }
    CHECK_THROWS_AS(bipartite_four_flow(petersen()), std::invalid_argument);  // not bipartite
    CHECK_THROWS_AS(bipartite_four_flow(k23()), std::invalid_argument);       // K_2^3 excluded
    CHECK_THROWS_AS(bipartite_four_flow(k6()), std::invalid_argument);        // not cubic
}

TEST_CASE("oddness_four_flow on the Petersen graph") {
    auto r = oddness_four_flow(petersen());
    CHECK(r.oddness == 2);
    CHECK(r.sigma.negative_count() == 2);
    CHECK(verify_flow(r.integer_four_flow).ok);
    // the produced signature attains F_c = F = 4
    CHECK(circular_flow_number({petersen(), r.sigma}, 8).value == Fraction(4));
    CHECK(integer_flow_number({petersen(), r.sigma}).value == 4);
}

TEST_CASE("oddness_four_flow on the Tietze graph") {
    auto r = oddness_four_flow(tietze());
    CHECK(r.oddness == 2);
    CHECK(r.sigma.negative_count() == 2);
    CHECK(verify_flow(r.integer_four_flow).ok);
}

TEST_CASE("oddness_four_flow rejects 3-edge-colorable inputs") {
    CHECK_THROWS_AS(oddness_four_flow(k4()), std::invalid_argument);
    CHECK_THROWS_AS(oddness_four_flow(k33()), std::invalid_argument);
}

TEST_CASE("every 3-minimal set of the Petersen graph strictly contains a small 4-minimal set") {
    auto x3s = r_minimal_sets(petersen(), Fraction(3), 3, 8);
    CHECK(!x3s.empty());
    for (const auto& x3 : x3s) {
        bool found = false;
        // some proper subset of size <= 2 is 4-minimal
        for (std::uint32_t mask = 0; mask < (1u << x3.size()) && !found; ++mask) {
            if (std::popcount(mask) >= static_cast<int>(x3.size())) continue;
            std::vector<int> sub;
            for (std::size_t i = 0; i < x3.size(); ++i)
                if (mask >> i & 1) sub.push_back(x3[i]);
            if (sub.size() <= 2 && is_r_minimal(petersen(), sub, Fraction(4), 8)) found = true;
        }
        CHECK(found);
    }
}

TEST_CASE("three_flow_via_one_factor") {
    auto r4 = three_flow_via_one_factor(k4());
    CHECK(r4.sigma.negative_count() == 6);  // all-negative
    CHECK(verify_flow(r4.three_flow).ok);

    auto r23 = three_flow_via_one_factor(k23());
    CHECK(verify_flow(r23.three_flow).ok);

    auto r6 = three_flow_via_one_factor(k6());  // 5-regular, t = 2
    CHECK(verify_flow(r6.three_flow).ok);
    CHECK(r6.three_flow.kind.r == Fraction(3));

    SignedGraph h1 = make_family({Family::Ht, 1});
    CHECK_THROWS_AS(three_flow_via_one_factor(h1.graph), std::invalid_argument);  // no 1-factor
    CHECK_THROWS_AS(three_flow_via_one_factor(cycle(4)), std::invalid_argument);  // even-regular
}

TEST_CASE("eulerian_union_four_flow") {
    // a single balanced circuit taken twice: deterministic value 3 everywhere
    Multigraph c4 = cycle(4);
    auto cert = eulerian_union_four_flow(c4, Signature(4), {0, 1, 2, 3}, {0, 1, 2, 3});
    CHECK(verify_flow(cert).ok);
    for (const Fraction& v : cert.flow.values) CHECK(v == Fraction(3));

    // G_n with an even normal signature: the two hamiltonian circuits
    SignedGraph g3 = make_family({Family::Gn, 3});
    Signature even_normal(9, {0, 3});  // two negative pair-edges
    std::vector<int> h1{0, 2, 3, 5, 6, 8};  // first copies + simples
    std::vector<int> h2{1, 2, 4, 5, 7, 8};  // second copies + simples
    auto gcert = eulerian_union_four_flow(g3.graph, even_normal, h1, h2);
    CHECK(verify_flow(gcert).ok);
    CHECK(gcert.kind.r == Fraction(4));

    // hypothesis violations
    CHECK_THROWS_AS(eulerian_union_four_flow(c4, Signature(4), {0, 1}, {2, 3}),
                    std::invalid_argument);  // odd degrees
    CHECK_THROWS_AS(eulerian_union_four_flow(c4, Signature(4, {0}), {0, 1, 2, 3}, {0, 1, 2, 3}),
                    std::invalid_argument);  // unbalanced
    CHECK_THROWS_AS(eulerian_union_four_flow(k4(), Signature(6), {0, 1, 2}, {3, 4}),
                    std::invalid_argument);  // does not cover E
}

TEST_CASE("kotzig_six_flow covers every admissible class of the Kotzig corpus") {
    for (const Multigraph& g : {k4(), k23(), k33()}) {
        auto kz = kotzig_check(g);
        REQUIRE(kz.has_value());
        int even_case = 0, odd_case = 0;
        for (const Signature& rep : signature_classes(g).representatives) {
            if (!is_flow_admissible(g, rep).admissible) continue;
            FlowCertificate cert = kotzig_six_flow(g, rep, (*kz)[0], (*kz)[1], (*kz)[2]);
            CHECK(verify_flow(cert).ok);
            CHECK(cert.sigma == rep);
            CHECK(cert.kind.r <= Fraction(6));
            for (const Fraction& v : cert.flow.values) {
                CHECK(v >= Fraction(1));
                CHECK(v <= Fraction(5));
            }
            if (cert.kind.r == Fraction(4)) {
                ++even_case;
                // the even-parity case uses only values {1,2,3}
                for (const Fraction& v : cert.flow.values) CHECK(v <= Fraction(3));
            } else {
                ++odd_case;
            }
        }
        CHECK(even_case > 0);
        if (g.vertex_count() == 6 && g.edge_count() == 9) CHECK(odd_case > 0);  // K_{3,3}
    }
}

TEST_CASE("kotzig_six_flow validates its hypotheses") {
    auto kz = kotzig_check(k4());
    REQUIRE(kz.has_value());
    CHECK_THROWS_AS(kotzig_six_flow(k4(), Signature(6, {0}), (*kz)[0], (*kz)[1], (*kz)[2]),
                    std::invalid_argument);  // not admissible
    CHECK_THROWS_AS(kotzig_six_flow(k4(), Signature(6), (*kz)[0], (*kz)[0], (*kz)[2]),
                    std::invalid_argument);  // overlapping matchings
}

namespace {

// Nowhere-zero 2-flow supported on a balanced circuit, found by the engine
// on the restricted subgraph and mapped back.
Flow circuit_two_flow(const Multigraph& g, const Signature& s, const std::vector<int>& circuit) {
    std::vector<Edge> sub_edges;
    for (int e : circuit) sub_edges.push_back(g.edge(e));
    Multigraph sub(g.vertex_count(), std::move(sub_edges));
    Signature sub_sig(sub.edge_count());
    for (std::size_t i = 0; i < circuit.size(); ++i)
        sub_sig.set_sign(static_cast<int>(i), s.sign(circuit[i]));
    auto x = find_scaled_flow({sub, sub_sig}, 1, 1);
    REQUIRE(x.has_value());
    Flow f;
    f.orientation = reference_orientation(g, s);
    f.values.resize(g.edge_count());
    for (std::size_t i = 0; i < circuit.size(); ++i) {
        f.values[circuit[i]] = Fraction(1);
        if ((*x)[i] < 0) f.orientation.reverse_edge(circuit[i]);
    }
    return f;
}

} // namespace

TEST_CASE("the G_n odd-case 6-flow assembles from two flow sums") {
    // (G_3, odd normal signature): psi = 2*phi1 + phi2 from two hamiltonian
    // circuits avoiding one negative edge each, then psi + 2*psi' over a
    // positive hamiltonian circuit through the zero edge
    SignedGraph g3 = make_family({Family::Gn, 3});
    Signature sigma(9, {0, 3, 6});
    const Multigraph& g = g3.graph;
    REQUIRE(integer_flow_number({g, sigma}).value == 6);

    std::vector<int> c1{1, 2, 3, 5, 6, 8};  // avoids negative edge 0
    std::vector<int> c2{0, 2, 4, 5, 6, 8};  // avoids negative edge 3... uses 6

    Flow phi1 = circuit_two_flow(g, sigma, c1);
    Flow phi2 = circuit_two_flow(g, sigma, c2);
    auto psi = flow_sum({g, sigma}, phi1, phi2, {2, 1});
    CHECK(psi.valid);
    // psi is a 4-flow that vanishes somewhere but not on a negative edge
    std::vector<int> zero_edges;
    for (int e = 0; e < 9; ++e) {
        if (psi.flow.values[e].is_zero()) {
            zero_edges.push_back(e);
            CHECK(!sigma.is_negative(e));
        } else {
            CHECK(psi.flow.values[e] <= Fraction(3));
        }
    }
    CHECK(!zero_edges.empty());

    // positive hamiltonian circuit through the zero edges
    std::vector<int> c{1, 2, 4, 5, 7, 8};
    for (int ze : zero_edges)
        CHECK(std::find(c.begin(), c.end(), ze) != c.end());
    Flow psi_prime = circuit_two_flow(g, sigma, c);
    // align psi' with psi on the positive parallel partner of edge 0
    int anchor = 1;
    if (!psi.flow.values[anchor].is_zero() &&
        psi.flow.orientation.tau(anchor, End::AtU) != psi_prime.orientation.tau(anchor, End::AtU))
        for (int e : c) psi_prime.orientation.reverse_edge(e);

    auto six = flow_sum({g, sigma}, psi.flow, psi_prime, {1, 2});
    CHECK(six.valid);
    FlowCertificate cert{g, sigma, six.flow, FlowKind::integer(6), true};
    CHECK(verify_flow(cert).ok);
}

TEST_CASE("h_t_flows validates its parameter") {
    CHECK_THROWS_AS(h_t_flows(0), std::invalid_argument);
}

TEST_CASE("oddness_four_flow handles bridged inputs with simple odd circuits") {
    // two copies of K4-with-one-edge-subdivided, joined by a bridge at the
    // subdivision vertices: cubic, bridged, has a 1-factor, and every odd
    // circuit of a 2-factor is simple, so the end-component rule applies
    Multigraph g(10, {{0, 4}, {4, 1}, {0, 2}, {0, 3}, {1, 2}, {1, 3}, {2, 3},
                      {5, 9}, {9, 6}, {5, 7}, {5, 8}, {6, 7}, {6, 8}, {7, 8},
                      {4, 9}});
    REQUIRE(g.is_regular(3));
    REQUIRE(!bridges(g).empty());
    REQUIRE(count_three_edge_colorings(g) == 0);
    REQUIRE(has_t_factor(g, 1).has_value());

    auto r = oddness_four_flow(g);
    CHECK(verify_flow(r.integer_four_flow).ok);
    CHECK(r.sigma.negative_count() == r.oddness);
    CHECK(r.oddness == oddness(g).oddness);
}

TEST_CASE("oddness_four_flow handles odd circuits through parallel edges") {
    // dumbbell of two doubled-edge triangles: the multi-edge rule applies
    Multigraph g(6, {{0, 1}, {0, 1}, {1, 2}, {2, 0}, {2, 5},
                     {3, 4}, {3, 4}, {4, 5}, {5, 3}});
    REQUIRE(g.is_regular(3));
    auto r = oddness_four_flow(g);
    CHECK(verify_flow(r.integer_four_flow).ok);
    CHECK(r.sigma.negative_count() == r.oddness);
}
