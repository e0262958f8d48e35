#pragma once

#include "signedflow/multigraph.hpp"

#include <array>
#include <cstdint>
#include <functional>
#include <optional>
#include <vector>

namespace signedflow {

// Spanning subgraph with every degree exactly t.
struct FactorWitness {
    std::vector<int> edges;
    int t;
};

// Proper edge coloring; for cubic graphs with 3 colors each class is a
// perfect matching.
struct EdgeColoring {
    std::vector<int> colors;  // per edge, 0-based
    int color_count;
};

// Enumerates all perfect matchings in deterministic order (always extends
// at the lowest unmatched vertex, edges in ascending id order); callback
// returns false to stop. Returns true iff enumeration was exhaustive.
bool for_each_perfect_matching(const Multigraph& g,
                               const std::function<bool(const std::vector<int>&)>& callback,
                               std::uint64_t node_budget = 100'000'000);

std::vector<std::vector<int>> perfect_matchings(const Multigraph& g,
                                                std::uint64_t node_budget = 100'000'000);

// Maximum matching by Edmonds' blossom algorithm; mate[v] = -1 when
// unmatched. Deterministic.
std::vector<int> maximum_matching(const Multigraph& g);

// t-factor via the Tutte gadget reduction to perfect matching. On small
// gadgets the matching question is answered both by exhaustive search and
// by the blossom algorithm, and the two must agree.
std::optional<FactorWitness> has_t_factor(const Multigraph& g, int t,
                                          std::uint64_t node_budget = 100'000'000);

struct OddnessResult {
    int oddness;
    std::vector<int> minimum_two_factor;  // complement of the realizing 1-factor
};

// Minimum number of odd circuits over all 2-factors of a cubic graph,
// through the 1-factor/2-factor complement bijection.
OddnessResult oddness(const Multigraph& g, std::uint64_t node_budget = 100'000'000);

// Minimum size of a smallest color class over all proper 4-edge-colorings
// of a cubic graph; 0 iff 3-edge-colorable.
int resistance(const Multigraph& g, std::uint64_t node_budget = 400'000'000);

bool is_bipartite_after_removal(const Multigraph& g, const std::vector<int>& removed);

// All inclusion-minimal X with |X| <= size_cap such that g - X is
// bipartite, ascending by (size, lex).
std::vector<std::vector<int>> minimal_bipartite_deletion_sets(const Multigraph& g, int size_cap,
                                                              std::uint64_t subset_budget = 1u << 22);

// Proper 3-edge-colorings counted up to color permutation.
std::int64_t count_three_edge_colorings(const Multigraph& g,
                                        std::uint64_t node_budget = 400'000'000);

// Three pairwise-disjoint perfect matchings partitioning E whose pairwise
// unions are hamiltonian circuits, if the cubic graph has them.
std::optional<std::array<std::vector<int>, 3>> kotzig_check(const Multigraph& g,
                                                            std::uint64_t node_budget = 400'000'000);

// Independence number by branch and bound.
int independence_number(const Multigraph& g);

// One directed eulerian traversal step.
struct EulerStep {
    int edge;
    int from;
    int to;
};

// Eulerian circuits of the subgraph formed by the given edges (every vertex
// must have even degree there), one circuit per component, deterministic.
std::vector<std::vector<EulerStep>> eulerian_circuits(const Multigraph& g,
                                                      const std::vector<int>& edges);

// Vertex sets of the circuits of a 2-regular subgraph given by edge ids,
// each as an ordered closed walk; deterministic (starts at the smallest
// vertex, first step along the lowest edge id).
struct CircuitWalk {
    std::vector<int> vertices;  // v0, v1, ..., v_{k-1}
    std::vector<int> edges;     // edge i joins vertices i and i+1 (mod k)
};
std::vector<CircuitWalk> circuit_decomposition(const Multigraph& g, const std::vector<int>& edges);

} // namespace signedflow
