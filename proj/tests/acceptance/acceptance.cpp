// Acceptance suite: one verdict line per criterion, all checks exact.
// Run with no arguments for all criteria, or pass criterion numbers.

#include "../corpus.hpp"
#include "signedflow/constructions.hpp"
#include "signedflow/io.hpp"
#include "signedflow/spectrum.hpp"
#include "signedflow/structure.hpp"
#include "signedflow/switching.hpp"

#include <cstdio>
#include <functional>
#include <map>
#include <set>
#include <sstream>
#include <string>
#include <vector>

using namespace signedflow;
using namespace signedflow::testing;

namespace {

struct CriterionFailure : std::runtime_error {
    using std::runtime_error::runtime_error;
};

#define REQUIRE_MSG(cond, msg)                                      \
    do {                                                            \
        if (!(cond)) {                                              \
            std::ostringstream os_;                                 \
            os_ << msg;                                             \
            throw CriterionFailure(os_.str());                      \
        }                                                           \
    } while (0)

constexpr int kQmax = 8;

std::string values_str(const std::vector<Fraction>& vs) {
    std::string out = "{";
    for (std::size_t i = 0; i < vs.size(); ++i) out += (i ? "," : "") + vs[i].str();
    return out + "}";
}

std::vector<Fraction> fracs(std::initializer_list<Fraction> xs) { return xs; }

// ---- shared corpus table -------------------------------------------------
//
// All connected cubic multigraphs with at most 8 vertices, every signature
// class of each, and the class-level integer and circular flow numbers.

struct ClassData {
    Signature sigma;
    bool admissible;
    std::optional<int> f;
    std::optional<Fraction> fc;
};

struct GraphData {
    Multigraph graph;
    std::vector<ClassData> classes;
    bool has_one_factor;
    std::set<Fraction> spectrum;          // attained F_c values
    std::set<int> integer_spectrum;       // attained F values
};

const std::vector<GraphData>& corpus_table() {
    static std::vector<GraphData> table = [] {
        std::vector<GraphData> out;
        for (int n : {2, 4, 6, 8}) {
            for (const Multigraph& g : connected_cubic_multigraphs(n)) {
                GraphData data{g, {}, false, {}, {}};
                data.has_one_factor = has_t_factor(g, 1).has_value();
                for (const Signature& s : signature_classes(g).representatives) {
                    ClassData cd{s, false, std::nullopt, std::nullopt};
                    SignedGraph sg{g, s};
                    cd.admissible = is_flow_admissible(sg).admissible;
                    if (cd.admissible) {
                        cd.f = integer_flow_number(sg).value;
                        cd.fc = circular_flow_number(sg, kQmax).value;
                        data.integer_spectrum.insert(*cd.f);
                        data.spectrum.insert(*cd.fc);
                    }
                    data.classes.push_back(std::move(cd));
                }
                out.push_back(std::move(data));
            }
        }
        return out;
    }();
    return table;
}

bool is_simple(const Multigraph& g) {
    for (int e = 0; e < g.edge_count(); ++e)
        for (int f = e + 1; f < g.edge_count(); ++f)
            if ((g.edge(e).u == g.edge(f).u && g.edge(e).v == g.edge(f).v) ||
                (g.edge(e).u == g.edge(f).v && g.edge(e).v == g.edge(f).u))
                return false;
    return true;
}

bool is_k23(const Multigraph& g) { return g.vertex_count() == 2; }

// ---- criterion 1: the H_t counterexample family --------------------------

void criterion_1() {
    for (int t : {1, 2, 3}) {
        SignedGraph ht = make_family({Family::Ht, t});
        Fraction expected_fc(3 * t + 2, t);

        auto spectrum = flow_spectrum(ht.graph, kQmax);
        REQUIRE_MSG(spectrum.values() == fracs({expected_fc}),
                    "S(H_" << t << ") = " << values_str(spectrum.values()) << ", expected {"
                           << expected_fc.str() << "}");
        auto integer_spectrum = integer_flow_spectrum(ht.graph);
        REQUIRE_MSG(integer_spectrum.values() == fracs({Fraction(5)}),
                    "S-bar(H_" << t << ") = " << values_str(integer_spectrum.values()));

        auto f = integer_flow_number(ht);
        auto fc = circular_flow_number(ht, kQmax);
        REQUIRE_MSG(Fraction(*f.value) - *fc.value == Fraction(2) - Fraction(2, t),
                    "F - F_c on (H_" << t << ", sigma*) is "
                                     << (Fraction(*f.value) - *fc.value).str());
    }
}

// ---- criterion 2: the Petersen graph --------------------------------------

void criterion_2() {
    Multigraph p = petersen();

    auto si = integer_flow_spectrum(p);
    REQUIRE_MSG(si.values() == fracs({Fraction(3), Fraction(4), Fraction(5), Fraction(6)}),
                "S-bar(P) = " << values_str(si.values()));

    auto fc = circular_flow_number(with_empty_signature(p), kQmax);
    REQUIRE_MSG(fc.value == Fraction(5), "F_c(P, empty) = " << fc.value->str());

    REQUIRE_MSG(independence_number(p) == 4, "alpha(P) != 4");
    REQUIRE_MSG(oddness(p).oddness == 2, "omega(P) != 2");
    REQUIRE_MSG(resistance(p) == 2, "r(P) != 2");

    auto x3 = smallest_r_minimal(p, Fraction(3), kQmax);
    REQUIRE_MSG(x3 && x3->size() == 3, "smallest 3-minimal set of P does not have size 3");
    auto sx = x_flow_spectrum(p, *x3, kQmax);
    REQUIRE_MSG(sx.values() == fracs({Fraction(3), Fraction(4), Fraction(5)}),
                "S_X(P) = " << values_str(sx.values()));

    // a size-3 6-minimal X' with integer X'-spectrum {4,5,6}: locate
    // candidates by their cheap integer spectra first, then confirm
    // 6-minimality
    bool found = false;
    std::vector<int> comb{0, 1, 2};
    while (!found) {
        auto sbar = integer_x_flow_spectrum(p, comb);
        if (sbar.values() == fracs({Fraction(4), Fraction(5), Fraction(6)}) &&
            is_r_minimal(p, comb, Fraction(6), kQmax)) {
            auto sx2 = integer_x_flow_spectrum(p, comb);
            REQUIRE_MSG(sx2.values() == fracs({Fraction(4), Fraction(5), Fraction(6)}),
                        "S-bar_{X'}(P) = " << values_str(sx2.values()));
            found = true;
            break;
        }
        int i = 2;
        while (i >= 0 && comb[i] == 15 - 3 + i) --i;
        if (i < 0) break;
        ++comb[i];
        for (int j = i + 1; j < 3; ++j) comb[j] = comb[j - 1] + 1;
    }
    REQUIRE_MSG(found, "no size-3 6-minimal X' with S-bar_{X'}(P) = {4,5,6} found");
}

// ---- criterion 3: the G_n family ------------------------------------------

void criterion_3() {
    auto expect = [](int n, std::vector<Fraction> want) {
        SignedGraph gn = make_family({Family::Gn, n});
        auto si = integer_flow_spectrum(gn.graph);
        REQUIRE_MSG(si.values() == want, "S-bar(G_" << n << ") = " << values_str(si.values())
                                                    << ", expected " << values_str(want));
    };
    expect(1, fracs({Fraction(3)}));
    expect(2, fracs({Fraction(3), Fraction(4)}));
    expect(3, fracs({Fraction(3), Fraction(4), Fraction(6)}));
    expect(4, fracs({Fraction(3), Fraction(4), Fraction(6)}));
}

// ---- criterion 4: the flow-number gap at t = 1 -----------------------------

void criterion_4() {
    int finite_classes = 0;
    for (const GraphData& gd : corpus_table()) {
        for (const ClassData& cd : gd.classes) {
            if (!cd.fc) continue;
            ++finite_classes;
            REQUIRE_MSG(*cd.fc == Fraction(3) || *cd.fc >= Fraction(4),
                        "F_c = " << cd.fc->str() << " lies in the forbidden gap (3,4)");
        }
    }
    REQUIRE_MSG(finite_classes > 300, "unexpectedly small corpus sweep");
}

// ---- criterion 5: the cubic characterizations ------------------------------

void criterion_5() {
    for (const GraphData& gd : corpus_table()) {
        if (is_k23(gd.graph)) continue;
        bool has_3_circ = gd.spectrum.count(Fraction(3)) > 0;
        bool has_3_int = gd.integer_spectrum.count(3) > 0;
        bool has_4_int = gd.integer_spectrum.count(4) > 0;
        REQUIRE_MSG(gd.has_one_factor == has_3_circ && has_3_circ == has_3_int &&
                        has_3_int == has_4_int,
                    "1-factor equivalence fails: 1-factor=" << gd.has_one_factor
                        << " 3 in S=" << has_3_circ << " 3 in S-bar=" << has_3_int
                        << " 4 in S-bar=" << has_4_int);

        if (gd.has_one_factor) {
            REQUIRE_MSG(gd.spectrum.count(Fraction(3)) && gd.spectrum.count(Fraction(4)) &&
                            gd.integer_spectrum.count(3) && gd.integer_spectrum.count(4),
                        "{3,4} not contained in S and S-bar despite a 1-factor");
        } else {
            // corollary: without a 1-factor the integer spectrum starts at 5
            for (int k : gd.integer_spectrum)
                REQUIRE_MSG(k >= 5, "integer spectrum value " << k << " without a 1-factor");
        }

        // 3-minimal sets = minimal bipartite deletion sets (when a 1-factor
        // exists), both sides computed independently
        auto left = r_minimal_sets(gd.graph, Fraction(3), gd.graph.edge_count(), kQmax, {},
                                   std::uint64_t(1) << 22);
        std::vector<std::vector<int>> right;
        if (gd.has_one_factor)
            right = minimal_bipartite_deletion_sets(gd.graph, gd.graph.edge_count(),
                                                    std::uint64_t(1) << 22);
        REQUIRE_MSG(left == right, "3-minimal sets differ from minimal bipartite deletion sets");
    }
}

// ---- criterion 6: constructive certificates --------------------------------

void criterion_6() {
    // h_t_flows
    for (int t : {1, 2, 3}) {
        HtFlows hf = h_t_flows(t);
        REQUIRE_MSG(verify_flow(hf.integer_five_flow).ok, "H_t integer flow fails");
        REQUIRE_MSG(verify_flow(hf.circular_flow).ok, "H_t circular flow fails");
    }

    int bipartite_runs = 0, oddness_runs = 0, three_runs = 0, eulerian_runs = 0,
        kotzig_runs = 0, induced_runs = 0;

    for (const GraphData& gd : corpus_table()) {
        const Multigraph& g = gd.graph;
        bool bipartite = is_bipartite_after_removal(g, {});
        bool bridgeless = bridges(g).empty();
        bool three_colorable = count_three_edge_colorings(g) > 0;
        bool connected = g.component_count() == 1;

        if (bipartite && bridgeless && connected && !is_k23(g)) {
            auto r = bipartite_four_flow(g, kQmax);
            REQUIRE_MSG(r.sigma.negative_count() == 2 && verify_flow(r.integer_four_flow).ok,
                        "bipartite_four_flow failed");
            ++bipartite_runs;
        }
        if (gd.has_one_factor && !three_colorable && connected) {
            auto r = oddness_four_flow(g);
            REQUIRE_MSG(verify_flow(r.integer_four_flow).ok, "oddness_four_flow failed");
            REQUIRE_MSG(r.sigma.negative_count() == oddness(g).oddness,
                        "oddness_four_flow |N| != omega");
            ++oddness_runs;
        }
        if (gd.has_one_factor) {
            auto r = three_flow_via_one_factor(g);
            REQUIRE_MSG(verify_flow(r.three_flow).ok, "three_flow_via_one_factor failed");
            ++three_runs;
        }
        // induced double flows, X = every third edge
        for (const ClassData& cd : gd.classes) {
            if (!cd.admissible) continue;
            SignedGraph sg{g, cd.sigma};
            auto f = integer_flow_number(sg);
            std::vector<int> x;
            for (int e = 0; e < g.edge_count(); e += 3) x.push_back(e);
            auto ind = induced_flow_on_double(g, cd.sigma, x, *f.witness);
            REQUIRE_MSG(verify_flow(ind).ok && ind.kind.r == f.witness->kind.r,
                        "induced flow on the double fails to verify at the same r");
            ++induced_runs;
            break;  // one class per graph keeps this criterion in seconds
        }
    }

    // Petersen and Tietze exercise the non-3-edge-colorable oddness route
    for (const Multigraph& g : {petersen(), tietze()}) {
        auto r = oddness_four_flow(g);
        REQUIRE_MSG(verify_flow(r.integer_four_flow).ok, "oddness_four_flow failed");
        ++oddness_runs;
    }
    // a 5-regular instance of the three-flow construction
    REQUIRE_MSG(verify_flow(three_flow_via_one_factor(k6()).three_flow).ok,
                "three_flow_via_one_factor failed on K_6");

    // eulerian unions: G_n with even normal signatures, both hamiltonian
    // circuits
    for (int n : {2, 3, 4}) {
        SignedGraph gn = make_family({Family::Gn, n});
        std::vector<int> h1, h2;
        for (int i = 0; i < n; ++i) {
            h1.push_back(3 * i);
            h1.push_back(3 * i + 2);
            h2.push_back(3 * i + 1);
            h2.push_back(3 * i + 2);
        }
        std::vector<int> neg;
        if (n >= 2) neg = {0, 3};  // even normal signature
        auto cert = eulerian_union_four_flow(gn.graph, Signature(3 * n, neg), h1, h2);
        REQUIRE_MSG(verify_flow(cert).ok, "eulerian_union_four_flow failed on G_" << n);
        ++eulerian_runs;
    }

    // kotzig_six_flow on every flow-admissible class of K_4 and of every
    // uniquely-3-edge-colorable corpus graph
    std::vector<Multigraph> kotzig_targets{k4()};
    for (const GraphData& gd : corpus_table())
        if (count_three_edge_colorings(gd.graph) == 1 && !isomorphic(gd.graph, k4()))
            kotzig_targets.push_back(gd.graph);
    for (const Multigraph& g : kotzig_targets) {
        auto kz = kotzig_check(g);
        REQUIRE_MSG(kz.has_value(), "uniquely 3-edge-colorable graph is not Kotzig");
        for (const Signature& rep : signature_classes(g).representatives) {
            if (!is_flow_admissible(g, rep).admissible) continue;
            auto cert = kotzig_six_flow(g, rep, (*kz)[0], (*kz)[1], (*kz)[2]);
            REQUIRE_MSG(verify_flow(cert).ok && cert.kind.r <= Fraction(6),
                        "kotzig_six_flow failed");
            ++kotzig_runs;
        }
    }

    REQUIRE_MSG(bipartite_runs >= 3 && oddness_runs >= 3 && three_runs >= 10 &&
                    eulerian_runs == 3 && kotzig_runs >= 4 && induced_runs >= 20,
                "criterion 6 corpus unexpectedly thin: " << bipartite_runs << "/" << oddness_runs
                    << "/" << three_runs << "/" << eulerian_runs << "/" << kotzig_runs << "/"
                    << induced_runs);
}

// ---- criterion 7: the bound suite ------------------------------------------

void chain_on_snark(const Multigraph& g, const char* name) {
    int r = resistance(g);
    int w = oddness(g).oddness;
    int alpha = independence_number(g);
    int n = g.vertex_count();

    auto x4 = smallest_r_minimal(g, Fraction(4), kQmax);
    REQUIRE_MSG(x4.has_value(), name << ": no 4-minimal set found");
    auto x3 = smallest_r_minimal(g, Fraction(3), kQmax);
    REQUIRE_MSG(x3.has_value(), name << ": no 3-minimal set found");

    int upper = std::min(3 * (n / 2 - alpha), n / 2);
    REQUIRE_MSG(r <= static_cast<int>(x4->size()), name << ": r > |X4|");
    REQUIRE_MSG(static_cast<int>(x4->size()) <= w, name << ": |X4| > omega");
    REQUIRE_MSG(w < static_cast<int>(x3->size()), name << ": omega >= |X3|");
    REQUIRE_MSG(static_cast<int>(x3->size()) <= upper, name << ": |X3| > bound " << upper);

    // Prop "smallest": a smallest r-minimal set of a cubic graph induces
    // maximum degree at most 1
    for (const auto& x : {*x3, *x4}) {
        std::map<int, int> deg;
        for (int e : x) {
            ++deg[g.edge(e).u];
            ++deg[g.edge(e).v];
        }
        for (auto [v, d] : deg) {
            (void)v;
            REQUIRE_MSG(d <= 1, name << ": smallest r-minimal set has induced degree " << d);
        }
    }
}

void criterion_7() {
    // Raspaud-Zhu on every admissible corpus instance
    for (const GraphData& gd : corpus_table()) {
        for (const ClassData& cd : gd.classes) {
            if (!cd.admissible) continue;
            REQUIRE_MSG(*cd.f <= 2 * cd.fc->ceil() - 1,
                        "F = " << *cd.f << " exceeds 2*ceil(F_c)-1 with F_c = " << cd.fc->str());
            REQUIRE_MSG(*cd.fc <= Fraction(*cd.f), "F_c > F");
        }
    }
    // smallest-set bounds and the full chain on two snarks
    chain_on_snark(petersen(), "Petersen");
    chain_on_snark(tietze(), "Tietze");
}

// ---- criterion 8: engine self-consistency -----------------------------------

void criterion_8() {
    // circular_flow_number (q_max = 8) vs the exact LP-over-orientations
    // oracle: every corpus graph with <= 14 edges, with a full class sweep
    // where the orientation count stays small
    int checked = 0;
    for (const GraphData& gd : corpus_table()) {
        if (gd.graph.edge_count() > 14) continue;
        std::vector<const ClassData*> sample;
        if (gd.graph.edge_count() <= 9) {
            for (const ClassData& cd : gd.classes) sample.push_back(&cd);
        } else {
            sample.push_back(&gd.classes.front());
            sample.push_back(&gd.classes.back());
        }
        for (const ClassData* cd : sample) {
            SignedGraph sg{gd.graph, cd->sigma};
            auto oracle = circular_flow_number_exact(sg);
            REQUIRE_MSG(oracle == cd->fc,
                        "oracle " << (oracle ? oracle->str() : "infinity") << " vs search "
                                  << (cd->fc ? cd->fc->str() : "infinity"));
            ++checked;
        }
    }
    // plus the named small graphs with their canonical signatures
    for (const SignedGraph& sg :
         {with_empty_signature(k33()), make_family({Family::Ht, 1}),
          make_family({Family::Gn, 3}), make_family({Family::Gn, 4}),
          with_empty_signature(cube())}) {
        auto oracle = circular_flow_number_exact(sg);
        auto search = circular_flow_number(sg, kQmax);
        REQUIRE_MSG(oracle == search.value, "oracle vs search mismatch on a named graph");
        ++checked;
    }
    REQUIRE_MSG(checked > 100, "self-consistency sweep unexpectedly thin");

    // exists_pq_flow at q = 1 agrees with exists_integer_nzflow everywhere
    for (const GraphData& gd : corpus_table()) {
        for (const ClassData& cd : gd.classes) {
            SignedGraph sg{gd.graph, cd.sigma};
            for (int k : {3, 4, 5, 6})
                REQUIRE_MSG(exists_pq_flow(sg, k, 1).has_value() ==
                                exists_integer_nzflow(sg, k).has_value(),
                            "pq(k/1) disagrees with the integer search at k = " << k);
        }
    }
}

} // namespace

int main(int argc, char** argv) {
    std::vector<std::pair<int, std::function<void()>>> criteria = {
        {1, criterion_1}, {2, criterion_2}, {3, criterion_3}, {4, criterion_4},
        {5, criterion_5}, {6, criterion_6}, {7, criterion_7}, {8, criterion_8},
    };
    static const char* kNames[] = {
        "",
        "H_t family: S(H_t) = {3+2/t}, S-bar(H_t) = {5}, F - F_c = 2 - 2/t",
        "Petersen: S-bar, F_c, alpha/omega/r, 3- and 6-minimal X-spectra",
        "G_n family integer spectra",
        "flow-number gap at t = 1 over the cubic corpus",
        "cubic characterizations (1-factor equivalences, bipartite deletion)",
        "constructive certificates verify on their corpus",
        "bound suite (Raspaud-Zhu, smallest sets, snark chain)",
        "engine self-consistency (exact oracle, pq vs integer)",
    };

    std::set<int> selected;
    for (int i = 1; i < argc; ++i) selected.insert(std::atoi(argv[i]));

    int failures = 0;
    for (auto& [num, fn] : criteria) {
        if (!selected.empty() && !selected.count(num)) continue;
        try {
            fn();
            std::printf("criterion %d (%s): PASS\n", num, kNames[num]);
        } catch (const std::exception& e) {
            std::printf("criterion %d (%s): FAIL\n", num, kNames[num]);
            std::fprintf(stderr, "  criterion %d failure: %s\n", num, e.what());
            ++failures;
        }
        std::fflush(stdout);
    }
    return failures == 0 ? 0 : 1;
}
