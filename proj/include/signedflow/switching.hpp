#pragma once

#include "signedflow/multigraph.hpp"

#include <optional>
#include <vector>

namespace signedflow {

// Switches the signature at every vertex in `at`: an edge's sign flips iff
// exactly one of its endpoints is in the set. Switching twice at the same
// set restores the original signature.
Signature switch_signature(const Multigraph& g, const Signature& s, const SwitchSet& at);

struct BalanceResult {
    bool balanced;
    // When unbalanced, the fundamental circuit (as edge ids) of the first
    // sign-inconsistent non-tree edge, in ascending edge id scan order.
    std::vector<int> witness_circuit;
};

// True iff every circuit carries an even number of negative edges.
BalanceResult is_balanced(const Multigraph& g, const Signature& s);

struct EquivalenceResult {
    bool equivalent;
    // A switch set realizing the equivalence when it holds.
    SwitchSet realizing_set;
};

// Signatures are equivalent iff their product signature is balanced.
EquivalenceResult equivalent(const Multigraph& g, const Signature& s1, const Signature& s2);

struct FrustrationResult {
    Signature minimal;
    SwitchSet realizing_set;
};

// Equivalent signature of minimum |N| over the whole switching orbit,
// ties broken by lexicographically smallest negative set. Exhaustive over
// 2^(|V|-c) switch sets; refuses graphs above the vertex cap.
FrustrationResult frustration_minimal(const Multigraph& g, const Signature& s,
                                      int vertex_cap = 24);

// All cut edges. Parallel edges are never bridges.
std::vector<int> bridges(const Multigraph& g);

enum class AdmissibilityReason {
    Admissible,
    SingleNegativeEdgeClass,  // equivalent to a signature with exactly one negative edge
    BridgeWithBalancedSide,   // some bridge has a balanced component on one side
    NoEdges,
};

struct AdmissibilityResult {
    bool admissible;
    AdmissibilityReason reason;
};

// Bouchet's criterion, applied per connected component. A graph with no
// edges is declared not flow-admissible.
AdmissibilityResult is_flow_admissible(const Multigraph& g, const Signature& s);

inline AdmissibilityResult is_flow_admissible(const SignedGraph& sg) {
    return is_flow_admissible(sg.graph, sg.sigma);
}

} // namespace signedflow
