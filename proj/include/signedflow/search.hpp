#pragma once

#include "signedflow/flow.hpp"
#include "signedflow/multigraph.hpp"

#include <cstdint>
#include <functional>
#include <optional>
#include <vector>

namespace signedflow {

struct SearchLimits {
    // Branch nodes (value assignments tried) allowed in one search call.
    std::uint64_t node_budget = 400'000'000;
    // Edge cap for the exact orientation-enumeration oracle.
    int exact_edge_cap = 16;
};

// ---- scaled flow search -------------------------------------------------
//
// The basic question everything else reduces to: does the signed graph have
// an integer-valued flow x with lo <= |x(e)| <= hi for every edge, relative
// to the reference orientation (negative x means the edge is reversed)?
//
// The search is complete: branch variables are the co-tree edges of a
// deterministic spanning forest, ordered by decreasing incident-constraint
// count; values are tried in increasing magnitude, positive before
// negative; tree-edge values are forced bottom-up from the vertex boundary
// equations by interval propagation, which also prunes partial assignments.
// The first solution in this order is the reported witness. Flows come in
// {x, -x} pairs; only the representative whose first branch variable is
// positive is visited.

// First solution in search order, or nullopt for definitive absence.
// Throws ResourceCapError when the node budget runs out.
std::optional<std::vector<std::int64_t>> find_scaled_flow(const SignedGraph& sg,
                                                          std::int64_t lo, std::int64_t hi,
                                                          const SearchLimits& limits = {});

// Enumerates scaled flows (one per {x,-x} pair) in search order until the
// callback returns false. Returns true iff the enumeration was exhaustive.
bool for_each_scaled_flow(const SignedGraph& sg, std::int64_t lo, std::int64_t hi,
                          const std::function<bool(const std::vector<std::int64_t>&)>& callback,
                          const SearchLimits& limits = {});

// Builds a normalized certificate from a scaled solution: values |x|/q, kind
// as given; edges with negative x are reversed relative to the reference
// orientation.
FlowCertificate certificate_from_scaled(const SignedGraph& sg, const std::vector<std::int64_t>& x,
                                        std::int64_t q, FlowKind kind);

// ---- existence searches -------------------------------------------------

// Verified integer nowhere-zero k-flow (values 1..k-1), or definitive
// absence. Exhaustive over the (orientation, value) space.
std::optional<FlowCertificate> exists_integer_nzflow(const SignedGraph& sg, int k,
                                                     const SearchLimits& limits = {});

// Integer-valued flow with |values| in [q, p-q]; divided by q this is a
// circular p/q-flow, and the certificate stores the rational form.
// Requires p > 2q >= 2; gcd(p, q) may be anything.
std::optional<FlowCertificate> exists_pq_flow(const SignedGraph& sg, std::int64_t p,
                                              std::int64_t q, const SearchLimits& limits = {});

// Nowhere-zero modular p/q-flow: scaled values x with |x| in [q, p-q] and
// every boundary sum = 0 (mod p). Exhaustive over scaled value assignments
// with per-vertex modular pruning.
std::optional<FlowCertificate> exists_modular_flow(const SignedGraph& sg, std::int64_t p,
                                                   std::int64_t q, const SearchLimits& limits = {});

// ---- flow numbers -------------------------------------------------------

struct IntegerFlowNumber {
    std::optional<int> value;  // nullopt means infinity (not flow-admissible)
    std::optional<FlowCertificate> witness;

    bool finite() const { return value.has_value(); }
};

// Smallest k with an integer nowhere-zero k-flow, by ascending search from
// k = 2. Infinity iff not flow-admissible; an admissible graph without a
// 30-flow would be a mathematical sensation and is treated as an internal
// error.
IntegerFlowNumber integer_flow_number(const SignedGraph& sg, const SearchLimits& limits = {});

enum class Completeness { Exact, UpperBoundAtQmax };

struct CircularFlowNumber {
    std::optional<Fraction> value;  // nullopt means infinity
    Completeness completeness;
    std::optional<FlowCertificate> witness;

    bool finite() const { return value.has_value(); }
};

// Least p/q with denominator <= q_max admitting a nowhere-zero circular
// flow, found by monotone binary search over the Farey sequence of order
// q_max between 2 and the integer flow number. The completeness flag stays
// UpperBoundAtQmax unless confirm_with_exact is set and the orientation-
// enumeration oracle (below) agrees; a disagreement is a reportable event
// and raises logic_error.
CircularFlowNumber circular_flow_number(const SignedGraph& sg, int q_max,
                                        const SearchLimits& limits = {},
                                        bool confirm_with_exact = false);

// Same search restricted to values below a known-good anchor: anchor must
// admit a flow and anchor_witness must verify at it. Used to decide
// "F_c == r" without recomputing the integer anchor first.
CircularFlowNumber circular_flow_number_from_anchor(const SignedGraph& sg, int q_max,
                                                    Fraction anchor, FlowCertificate anchor_witness,
                                                    const SearchLimits& limits = {});

inline int default_q_max(const SignedGraph& sg) { return 2 * sg.graph.edge_count(); }

// Exact cross-check oracle: enumerates all 2^|E| orientations and minimizes
// r over the flow polytope {1 <= f(e) <= r-1, zero boundary} of each by
// exact rational LP. Infinity iff not admissible. reverse_order only
// changes the enumeration order, never the result.
std::optional<Fraction> circular_flow_number_exact(const SignedGraph& sg,
                                                   const SearchLimits& limits = {},
                                                   bool reverse_order = false);

} // namespace signedflow
