#include "signedflow/flow.hpp"

#include "signedflow/switching.hpp"

#include <sstream>
#include <stdexcept>

namespace signedflow {

Fraction Fraction::parse(const std::string& text) {
    auto slash = text.find('/');
    try {
        if (slash == std::string::npos)
            return Fraction(std::stoll(text));
        return Fraction(std::stoll(text.substr(0, slash)),
                        std::stoll(text.substr(slash + 1)));
    } catch (const std::logic_error&) {
        throw std::invalid_argument("bad rational: '" + text + "'");
    }
}

bool Orientation::consistent_with(const Multigraph& g, const Signature& s) const {
    if (edge_count() != g.edge_count()) return false;
    for (int e = 0; e < g.edge_count(); ++e)
        if (tau(e, End::AtU) * tau(e, End::AtV) != -s.sign(e)) return false;
    return true;
}

Orientation reference_orientation(const Multigraph& g, const Signature& s) {
    Orientation o(g.edge_count());
    for (int e = 0; e < g.edge_count(); ++e) {
        if (s.is_negative(e)) {
            o.set_tau(e, End::AtU, -1);
            o.set_tau(e, End::AtV, -1);
        } else {
            o.set_tau(e, End::AtU, +1);
            o.set_tau(e, End::AtV, -1);
        }
    }
    return o;
}

std::string FlowKind::str() const {
    switch (type) {
        case FlowKindType::Integer: return "integer " + r.str();
        case FlowKindType::Circular: return "circular " + r.str();
        case FlowKindType::Modular: return "modular " + r.str();
    }
    return "?";
}

std::uint64_t graph_fingerprint(const Multigraph& g) {
    std::uint64_t h = 1469598103934665603ull;
    auto mix = [&h](std::uint64_t x) {
        for (int i = 0; i < 8; ++i) {
            h ^= (x >> (8 * i)) & 0xff;
            h *= 1099511628211ull;
        }
    };
    mix(static_cast<std::uint64_t>(g.vertex_count()));
    for (const Edge& e : g.edges()) {
        mix(static_cast<std::uint64_t>(e.u));
        mix(static_cast<std::uint64_t>(e.v));
    }
    return h;
}

std::vector<Fraction> boundary(const SignedGraph& sg, const Flow& f) {
    if (!f.orientation.consistent_with(sg.graph, sg.sigma))
        throw std::invalid_argument("boundary: orientation inconsistent with signature");
    std::vector<Fraction> delta(sg.graph.vertex_count());
    for (int e = 0; e < sg.graph.edge_count(); ++e) {
        const Edge& ed = sg.graph.edge(e);
        delta[ed.u] += Fraction(f.orientation.tau(e, End::AtU)) * f.values[e];
        delta[ed.v] += Fraction(f.orientation.tau(e, End::AtV)) * f.values[e];
    }
    return delta;
}

VerifyResult verify_flow(const FlowCertificate& cert) {
    const Multigraph& g = cert.graph;
    const Flow& f = cert.flow;
    if (static_cast<int>(f.values.size()) != g.edge_count())
        return {false, "value count does not match edge count"};
    if (!f.orientation.consistent_with(g, cert.sigma))
        return {false, "orientation violates tau(u)*tau(v) = -sigma(e)"};

    const Fraction r = cert.kind.r;
    const Fraction hi = r - Fraction(1);
    for (int e = 0; e < g.edge_count(); ++e) {
        const Fraction& x = f.values[e];
        if (x < Fraction(0))
            return {false, "edge " + std::to_string(e) + ": negative stored value"};
        if (x.is_zero()) {
            if (cert.nowhere_zero)
                return {false, "edge " + std::to_string(e) + ": zero value in nowhere-zero flow"};
            continue;
        }
        if (x < Fraction(1) || x > hi)
            return {false, "edge " + std::to_string(e) + ": value " + x.str() +
                               " outside [1, " + hi.str() + "]"};
        if (cert.kind.type == FlowKindType::Integer && !x.is_integer())
            return {false, "edge " + std::to_string(e) + ": non-integer value " + x.str()};
    }

    std::vector<Fraction> delta = boundary({g, cert.sigma}, f);
    for (int v = 0; v < g.vertex_count(); ++v) {
        if (cert.kind.type == FlowKindType::Modular) {
            // exact: q * delta(v) must be an integer divisible by p
            Fraction scaled = delta[v] * Fraction(r.den());
            if (!scaled.is_integer() || scaled.num() % r.num() != 0)
                return {false, "vertex " + std::to_string(v) + ": boundary " + delta[v].str() +
                                   " not 0 (mod " + r.str() + ")"};
        } else if (!delta[v].is_zero()) {
            return {false, "vertex " + std::to_string(v) + ": boundary " + delta[v].str()};
        }
    }
    return {true, {}};
}

FlowCertificate transport_flow(const FlowCertificate& cert, const SwitchSet& at) {
    std::vector<char> in_set(cert.graph.vertex_count(), 0);
    for (int v : at) in_set[v] = 1;
    FlowCertificate out = cert;
    out.sigma = switch_signature(cert.graph, cert.sigma, at);
    for (int e = 0; e < cert.graph.edge_count(); ++e) {
        if (in_set[cert.graph.edge(e).u]) out.flow.orientation.flip(e, End::AtU);
        if (in_set[cert.graph.edge(e).v]) out.flow.orientation.flip(e, End::AtV);
    }
    return out;
}

void normalize_flow(Flow& f) {
    for (std::size_t e = 0; e < f.values.size(); ++e) {
        if (f.values[e] < Fraction(0)) {
            f.values[e] = -f.values[e];
            f.orientation.reverse_edge(static_cast<int>(e));
        }
    }
}

FlowSumResult flow_sum(const SignedGraph& sg, const Flow& f1, const Flow& f2,
                       std::pair<std::int64_t, std::int64_t> coeffs) {
    int m = sg.graph.edge_count();
    if (static_cast<int>(f1.values.size()) != m || static_cast<int>(f2.values.size()) != m)
        throw std::invalid_argument("flow_sum: flows on mismatched graphs");

    // Pre-scale by the integer coefficients; a negative coefficient reverses
    // every edge of that flow.
    auto scaled = [m](const Flow& f, std::int64_t c) {
        Flow out = f;
        for (int e = 0; e < m; ++e) {
            out.values[e] = f.values[e] * Fraction(c < 0 ? -c : c);
            if (c < 0) out.orientation.reverse_edge(e);
        }
        return out;
    };
    Flow a = scaled(f1, coeffs.first);
    Flow b = scaled(f2, coeffs.second);

    Flow sum;
    sum.orientation = Orientation(m);
    sum.values.resize(m);
    bool valid = true;
    for (int e = 0; e < m; ++e) {
        bool same_dir = a.orientation.tau(e, End::AtU) == b.orientation.tau(e, End::AtU);
        if (same_dir) {
            sum.values[e] = a.values[e] + b.values[e];
            sum.orientation.set_tau(e, End::AtU, a.orientation.tau(e, End::AtU));
            sum.orientation.set_tau(e, End::AtV, a.orientation.tau(e, End::AtV));
        } else {
            const Flow& big = a.values[e] >= b.values[e] ? a : b;
            sum.values[e] = (a.values[e] - b.values[e]).abs();
            sum.orientation.set_tau(e, End::AtU, big.orientation.tau(e, End::AtU));
            sum.orientation.set_tau(e, End::AtV, big.orientation.tau(e, End::AtV));
        }
        if (!sum.values[e].is_zero() && sum.values[e] < Fraction(1)) valid = false;
    }
    return {std::move(sum), valid};
}

} // namespace signedflow
