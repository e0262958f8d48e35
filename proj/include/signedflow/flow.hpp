#pragma once

#include "signedflow/fraction.hpp"
#include "signedflow/multigraph.hpp"

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

namespace signedflow {

// Per-half-edge direction. tau = +1 means the half-edge points out of its
// incident vertex. The signed consistency law is
//     tau(h_e^u) * tau(h_e^v) = -sigma(e):
// a positive edge has one outgoing and one incoming half-edge; a negative
// edge is extroverted (both incoming, tau = -1 on both) or introverted
// (both outgoing); that naming of the two negative-edge shapes is used
// consistently throughout this library.
class Orientation {
public:
    Orientation() = default;
    explicit Orientation(int edge_count) : tau_(2 * edge_count, +1) {}

    int edge_count() const { return static_cast<int>(tau_.size() / 2); }
    int tau(int e, End end) const { return tau_[2 * e + static_cast<int>(end)]; }
    int tau(HalfEdgeRef h) const { return tau(h.edge, h.end); }
    void set_tau(int e, End end, int t) { tau_[2 * e + static_cast<int>(end)] = static_cast<std::int8_t>(t); }
    void flip(int e, End end) { tau_[2 * e + static_cast<int>(end)] *= -1; }
    void reverse_edge(int e) { flip(e, End::AtU); flip(e, End::AtV); }

    // tau at the half-edge of e incident to vertex v (v must be an endpoint).
    int tau_at(const Multigraph& g, int e, int v) const {
        return tau(e, g.edge(e).u == v ? End::AtU : End::AtV);
    }

    bool consistent_with(const Multigraph& g, const Signature& s) const;

    friend bool operator==(const Orientation& a, const Orientation& b) {
        return a.tau_ == b.tau_;
    }

private:
    std::vector<std::int8_t> tau_;
};

// Deterministic reference orientation: positive edges directed u -> v,
// negative edges extroverted.
Orientation reference_orientation(const Multigraph& g, const Signature& s);

// Orientation plus exact nonnegative edge values. Values may be zero
// (non-nowhere-zero flows arise as intermediates); negative values are
// always normalized away by reversing the edge.
struct Flow {
    Orientation orientation;
    std::vector<Fraction> values;
};

enum class FlowKindType { Integer, Circular, Modular };

struct FlowKind {
    FlowKindType type;
    Fraction r;  // integer k as k/1, circular/modular as p/q (reduced)

    static FlowKind integer(std::int64_t k) { return {FlowKindType::Integer, Fraction(k)}; }
    static FlowKind circular(Fraction r) { return {FlowKindType::Circular, r}; }
    static FlowKind modular(Fraction r) { return {FlowKindType::Modular, r}; }
    std::string str() const;
};

// 64-bit FNV-1a over the canonical serialization of the underlying
// multigraph (vertex count and edge list, no signs). Stable across runs.
std::uint64_t graph_fingerprint(const Multigraph& g);

// Self-contained verifiable flow claim. Holds a copy of the signed graph so
// that verify_flow needs no external context.
struct FlowCertificate {
    Multigraph graph;
    Signature sigma;
    Flow flow;
    FlowKind kind;
    bool nowhere_zero;

    std::uint64_t fingerprint() const { return graph_fingerprint(graph); }
};

// Exact per-vertex boundary sums under the tau = +1 <=> outgoing convention.
// Throws if the orientation violates the consistency law for sg.
std::vector<Fraction> boundary(const SignedGraph& sg, const Flow& f);

struct VerifyResult {
    bool ok;
    std::string violation;  // first violation, empty when ok
};

// Full certificate check: orientation consistency, value ranges for the
// claimed kind, nowhere-zero support when claimed, and exact boundary
// conditions (zero for integer/circular, zero mod p/q for modular).
VerifyResult verify_flow(const FlowCertificate& cert);

// Certificate on the switched signature: half-edges at switched vertices
// reverse, values are unchanged. Verifies under switch_signature(g, s, at).
FlowCertificate transport_flow(const FlowCertificate& cert, const SwitchSet& at);

// Replaces any negative value by reversing the edge. Exposed for tests; all
// library flows are already normalized.
void normalize_flow(Flow& f);

struct FlowSumResult {
    Flow flow;
    // True iff every nonzero value of the sum has magnitude >= 1, which is
    // exactly when the sum is again a flow.
    bool valid;
};

// Oriented sum c1*f1 + c2*f2 on a common signed graph: where the scaled
// flows agree in direction magnitudes add, otherwise they subtract and the
// larger contribution decides the direction.
FlowSumResult flow_sum(const SignedGraph& sg, const Flow& f1, const Flow& f2,
                       std::pair<std::int64_t, std::int64_t> coeffs);

} // namespace signedflow
