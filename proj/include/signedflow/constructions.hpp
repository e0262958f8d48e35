#pragma once

#include "signedflow/flow.hpp"
#include "signedflow/search.hpp"

#include <optional>
#include <utility>
#include <vector>

namespace signedflow {

enum class Family { Ht, Gn, Gt, K23, Petersen, KprimeNN };

struct FamilySpec {
    Family family;
    int param = 0;  // t for Ht/Gt, n for Gn/KprimeNN; ignored otherwise
};

// Deterministic generators for the named graph families, with the canonical
// signature where one is fixed:
//   Ht        2t+1 triangles on a hub; one negative edge per triangle (the
//             edge between the two bivalent vertices). Per triangle i
//             (0-based) the edge block is [bridge, (v,a), (a,b) negative,
//             (b,v)] at ids 4i..4i+3; hub is vertex 0.
//   Gn        circuit of length 2n with every second edge doubled; edge
//             block per gadget i: [pair, pair, simple] at ids 3i..3i+2;
//             empty signature. G1 = K23.
//   Gt        four triangle gadgets with one doubled edge each, linked to a
//             hub vertex y, padded to (2t+1)-regularity with K'_{2t+1,2t+1}
//             copies; the first parallel edge of each gadget is negative.
//             Requires t >= 2.
//   K23       two vertices joined by three edges, empty signature.
//   Petersen  outer cycle 0..4 (ids 0..4), spokes (5..9), inner pentagram
//             (10..14), empty signature.
//   KprimeNN  K_{n,n} with one edge subdivided; parts 0..n-1 and n..2n-1,
//             subdivision vertex is the last id; empty signature.
SignedGraph make_family(const FamilySpec& spec);

// The explicit flows on (H_t, sigma*): a verified integer nowhere-zero
// 5-flow with values in {1,2,4} and a verified circular (3+2/t)-flow with
// values in {1, 1+1/t, 2, 2+2/t}.
struct HtFlows {
    SignedGraph graph;
    FlowCertificate integer_five_flow;
    FlowCertificate circular_flow;
};
HtFlows h_t_flows(int t);

// G_X^2: two copies of G - X joined by a pair of matching edges per removed
// edge. Copy H keeps the original vertex ids, copy H' adds |V|; edges are
// laid out as [H edges, H' edges, (uu', vv') pairs per X edge ascending].
struct DoubleGraphResult {
    SignedGraph doubled;
    std::vector<int> x_edges;                      // sorted
    std::vector<int> first_copy_edge;              // original edge -> H edge id (-1 for X)
    std::vector<int> second_copy_edge;             // original edge -> H' edge id (-1 for X)
    std::vector<std::pair<int, int>> pair_edges;   // per X edge: (uu', vv') ids
};
DoubleGraphResult double_graph(const Multigraph& g, const Signature& s,
                               const std::vector<int>& x_edges);

// A nowhere-zero r-flow on (G, sigma) induces one on (G_X^2, sigma_X^2):
// the second copy carries the fully reversed orientation, matching edges
// carry the removed edge's value.
FlowCertificate induced_flow_on_double(const Multigraph& g, const Signature& s,
                                       const std::vector<int>& x_edges,
                                       const FlowCertificate& cert);

// For bipartite cubic bridgeless g (not K_2^3): a signature with exactly
// two negative edges carrying a verified integer 4-flow; the construction
// additionally asserts F_c = 4 at Farey order q_max.
struct BipartiteFourFlow {
    Signature sigma;
    FlowCertificate integer_four_flow;
    FlowCertificate circular_witness;
};
BipartiteFourFlow bipartite_four_flow(const Multigraph& g, int q_max = 8,
                                      const SearchLimits& limits = {});

// For cubic g with a 1-factor that is not 3-edge-colorable: a signature
// with |N| = oddness(g) and a verified integer 4-flow, built by
// subdividing one edge per odd circuit of a minimum 2-factor, pairing the
// subdivision vertices, 3-edge-coloring the auxiliary cubic graph and
// combining 2*phi1 + phi2.
struct OddnessFourFlow {
    Signature sigma;
    FlowCertificate integer_four_flow;
    int oddness;
};
OddnessFourFlow oddness_four_flow(const Multigraph& g, const SearchLimits& limits = {});

// For (2t+1)-regular g with a 1-factor: a signature carrying a verified
// integer nowhere-zero 3-flow. t = 1 uses the all-negative signature with
// the 1-factor reversed; t >= 2 routes a 3-flow through a spanning cubic
// subgraph and a value-1 eulerian flow through the even-regular rest.
struct ThreeFlowViaOneFactor {
    Signature sigma;
    FlowCertificate three_flow;
};
ThreeFlowViaOneFactor three_flow_via_one_factor(const Multigraph& g,
                                                const SearchLimits& limits = {});

// For H1 u H2 = E with each H_i inducing an even-degree subgraph balanced
// under the restricted signature: the verified integer 4-flow phi1 + 2*phi2
// from value-1 flows on switching-aligned eulerian orientations.
FlowCertificate eulerian_union_four_flow(const Multigraph& g, const Signature& s,
                                         const std::vector<int>& h1, const std::vector<int>& h2);

// Bouchet bound for Kotzig graphs: given three pairwise-disjoint perfect
// matchings partitioning E with pairwise hamiltonian unions, returns a
// verified integer nowhere-zero flow with all values in [1,5] (a 4-flow in
// the even-parity case, 6-flow otherwise) on the flow-admissible (g, s).
FlowCertificate kotzig_six_flow(const Multigraph& g, const Signature& s,
                                const std::vector<int>& m1, const std::vector<int>& m2,
                                const std::vector<int>& m3);

} // namespace signedflow
