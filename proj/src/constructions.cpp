#include "signedflow/constructions.hpp"

#include "signedflow/errors.hpp"
#include "signedflow/structure.hpp"
#include "signedflow/switching.hpp"

#include <algorithm>
#include <array>
#include <cassert>
#include <queue>
#include <stdexcept>

namespace signedflow {

namespace {

Multigraph petersen_graph() {
    std::vector<Edge> e;
    for (int i = 0; i < 5; ++i) e.push_back({i, (i + 1) % 5});
    for (int i = 0; i < 5; ++i) e.push_back({i, i + 5});
    for (int i = 0; i < 5; ++i) e.push_back({5 + i, 5 + (i + 2) % 5});
    return Multigraph(10, std::move(e));
}

SignedGraph make_ht(int t) {
    if (t < 1) throw std::invalid_argument("make_family: H_t requires t >= 1");
    int k = 2 * t + 1;
    std::vector<Edge> edges;
    std::vector<int> neg;
    for (int i = 0; i < k; ++i) {
        int v = 1 + 3 * i, a = 2 + 3 * i, b = 3 + 3 * i;
        edges.push_back({0, v});
        edges.push_back({v, a});
        neg.push_back(static_cast<int>(edges.size()));
        edges.push_back({a, b});
        edges.push_back({b, v});
    }
    Multigraph g(1 + 3 * k, std::move(edges));
    Signature s(g.edge_count(), neg);
    return {std::move(g), std::move(s)};
}

SignedGraph make_gn(int n) {
    if (n < 1) throw std::invalid_argument("make_family: G_n requires n >= 1");
    std::vector<Edge> edges;
    for (int i = 0; i < n; ++i) {
        int a = 2 * i, b = 2 * i + 1, c = (2 * i + 2) % (2 * n);
        edges.push_back({a, b});
        edges.push_back({a, b});
        edges.push_back({b, c});
    }
    Multigraph g(2 * n, std::move(edges));
    return with_empty_signature(g);
}

SignedGraph make_kprime(int n) {
    if (n < 2) throw std::invalid_argument("make_family: K'_{n,n} requires n >= 2");
    std::vector<Edge> edges;
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j) {
            if (i == 0 && j == 0) continue;
            edges.push_back({i, n + j});
        }
    int x = 2 * n;
    edges.push_back({0, x});
    edges.push_back({x, n});
    Multigraph g(2 * n + 1, std::move(edges));
    return with_empty_signature(g);
}

SignedGraph make_gt(int t) {
    if (t < 2) throw std::invalid_argument("make_family: G_t requires t >= 2");
    // base graph H: gadgets T_1..T_4 (vertices a,b,c = 3i..3i+2), gadget
    // edges [(a,b),(a,b),(b,c),(c,a)], links c_1..c_3 -> y = c_4
    std::vector<Edge> edges;
    std::vector<int> neg;
    for (int i = 0; i < 4; ++i) {
        int a = 3 * i, b = 3 * i + 1, c = 3 * i + 2;
        neg.push_back(static_cast<int>(edges.size()));
        edges.push_back({a, b});
        edges.push_back({a, b});
        edges.push_back({b, c});
        edges.push_back({c, a});
    }
    int y = 11;
    for (int i = 0; i < 3; ++i) edges.push_back({3 * i + 2, y});

    int next_vertex = 12;
    // pad host vertex h with one K'_{2t+1,2t+1} copy, identifying the
    // subdivision vertex with h
    int n2 = 2 * t + 1;
    auto add_copy = [&edges, &next_vertex, n2](int host) {
        int ubase = next_vertex, wbase = next_vertex + n2;
        next_vertex += 2 * n2;
        for (int i = 0; i < n2; ++i)
            for (int j = 0; j < n2; ++j) {
                if (i == 0 && j == 0) continue;
                edges.push_back({ubase + i, wbase + j});
            }
        edges.push_back({host, ubase});
        edges.push_back({host, wbase});
    };
    for (int h = 0; h < 11; ++h)
        for (int c = 0; c < t - 1; ++c) add_copy(h);
    for (int c = 0; c < t - 2; ++c) add_copy(y);

    Multigraph g(next_vertex, std::move(edges));
    if (!g.is_regular(2 * t + 1))
        throw std::logic_error("make_family: G_t padding is not (2t+1)-regular");
    Signature s(g.edge_count(), neg);
    return {std::move(g), std::move(s)};
}

} // namespace

SignedGraph make_family(const FamilySpec& spec) {
    switch (spec.family) {
        case Family::Ht: return make_ht(spec.param);
        case Family::Gn: return make_gn(spec.param);
        case Family::Gt: return make_gt(spec.param);
        case Family::K23: return with_empty_signature(Multigraph(2, {{0, 1}, {0, 1}, {0, 1}}));
        case Family::Petersen: return with_empty_signature(petersen_graph());
        case Family::KprimeNN: return make_kprime(spec.param);
    }
    throw std::invalid_argument("make_family: unknown family");
}

HtFlows h_t_flows(int t) {
    SignedGraph sg = make_ht(t);
    int k = 2 * t + 1;
    Flow integer_flow, circular_flow;
    integer_flow.orientation = Orientation(sg.graph.edge_count());
    integer_flow.values.resize(sg.graph.edge_count());
    circular_flow.values.resize(sg.graph.edge_count());

    for (int i = 0; i < k; ++i) {
        int j = i + 1;
        int bridge = 4 * i, t1 = 4 * i + 1, neg = 4 * i + 2, t2 = 4 * i + 3;
        Orientation& o = integer_flow.orientation;
        if (j <= t + 1) {
            // extroverted triangle: edges run into v_j, bridge into the hub
            o.set_tau(neg, End::AtU, -1);
            o.set_tau(neg, End::AtV, -1);
            o.set_tau(t1, End::AtU, -1);  // (v_j, a_j) directed a_j -> v_j
            o.set_tau(t1, End::AtV, +1);
            o.set_tau(t2, End::AtU, +1);  // (b_j, v_j) directed b_j -> v_j
            o.set_tau(t2, End::AtV, -1);
            o.set_tau(bridge, End::AtU, -1);  // (hub, v_j) directed v_j -> hub
            o.set_tau(bridge, End::AtV, +1);
        } else {
            // introverted triangle: edges run out of v_j, bridge out of the hub
            o.set_tau(neg, End::AtU, +1);
            o.set_tau(neg, End::AtV, +1);
            o.set_tau(t1, End::AtU, +1);  // v_j -> a_j
            o.set_tau(t1, End::AtV, -1);
            o.set_tau(t2, End::AtU, -1);  // v_j -> b_j
            o.set_tau(t2, End::AtV, +1);
            o.set_tau(bridge, End::AtU, +1);  // hub -> v_j
            o.set_tau(bridge, End::AtV, -1);
        }
        Fraction tri_int = j <= 2 * t ? Fraction(1) : Fraction(2);
        Fraction bridge_int = j <= 2 * t ? Fraction(2) : Fraction(4);
        integer_flow.values[t1] = integer_flow.values[neg] = integer_flow.values[t2] = tri_int;
        integer_flow.values[bridge] = bridge_int;

        Fraction tri_circ = j <= t + 1 ? Fraction(1) : Fraction(1) + Fraction(1, t);
        Fraction bridge_circ = j <= t + 1 ? Fraction(2) : Fraction(2) + Fraction(2, t);
        circular_flow.values[t1] = circular_flow.values[neg] = circular_flow.values[t2] = tri_circ;
        circular_flow.values[bridge] = bridge_circ;
    }
    circular_flow.orientation = integer_flow.orientation;

    FlowCertificate five{sg.graph, sg.sigma, std::move(integer_flow), FlowKind::integer(5), true};
    FlowCertificate circ{sg.graph, sg.sigma, std::move(circular_flow),
                         FlowKind::circular(Fraction(3 * t + 2, t)), true};
    for (const FlowCertificate* c : {&five, &circ}) {
        VerifyResult res = verify_flow(*c);
        if (!res.ok) throw std::logic_error("h_t_flows: construction failed: " + res.violation);
    }
    return {std::move(sg), std::move(five), std::move(circ)};
}

DoubleGraphResult double_graph(const Multigraph& g, const Signature& s,
                               const std::vector<int>& x_edges) {
    std::vector<int> x = x_edges;
    std::sort(x.begin(), x.end());
    if (std::unique(x.begin(), x.end()) != x.end())
        throw std::invalid_argument("double_graph: duplicate edges in X");
    std::vector<char> in_x(g.edge_count(), 0);
    for (int e : x) {
        if (e < 0 || e >= g.edge_count())
            throw std::invalid_argument("double_graph: edge id out of range");
        in_x[e] = 1;
    }

    int n = g.vertex_count();
    DoubleGraphResult out;
    out.x_edges = x;
    out.first_copy_edge.assign(g.edge_count(), -1);
    out.second_copy_edge.assign(g.edge_count(), -1);
    std::vector<Edge> edges;
    std::vector<int> neg;
    for (int e = 0; e < g.edge_count(); ++e) {
        if (in_x[e]) continue;
        out.first_copy_edge[e] = static_cast<int>(edges.size());
        if (s.is_negative(e)) neg.push_back(static_cast<int>(edges.size()));
        edges.push_back(g.edge(e));
    }
    for (int e = 0; e < g.edge_count(); ++e) {
        if (in_x[e]) continue;
        out.second_copy_edge[e] = static_cast<int>(edges.size());
        if (s.is_negative(e)) neg.push_back(static_cast<int>(edges.size()));
        edges.push_back({g.edge(e).u + n, g.edge(e).v + n});
    }
    for (int e : x) {
        int uu = static_cast<int>(edges.size());
        edges.push_back({g.edge(e).u, g.edge(e).u + n});
        int vv = static_cast<int>(edges.size());
        edges.push_back({g.edge(e).v, g.edge(e).v + n});
        out.pair_edges.emplace_back(uu, vv);
    }
    Multigraph dg(2 * n, std::move(edges));
    Signature ds(dg.edge_count(), neg);
    out.doubled = {std::move(dg), std::move(ds)};
    return out;
}

FlowCertificate induced_flow_on_double(const Multigraph& g, const Signature& s,
                                       const std::vector<int>& x_edges,
                                       const FlowCertificate& cert) {
    if (graph_fingerprint(cert.graph) != graph_fingerprint(g) || !(cert.sigma == s))
        throw std::invalid_argument("induced_flow_on_double: certificate is not on (g, s)");
    VerifyResult pre = verify_flow(cert);
    if (!pre.ok) throw std::invalid_argument("induced_flow_on_double: certificate invalid: " + pre.violation);

    DoubleGraphResult dr = double_graph(g, s, x_edges);
    const Multigraph& dg = dr.doubled.graph;
    Flow f;
    f.orientation = Orientation(dg.edge_count());
    f.values.resize(dg.edge_count());
    const Orientation& tau = cert.flow.orientation;
    for (int e = 0; e < g.edge_count(); ++e) {
        if (dr.first_copy_edge[e] != -1) {
            int fe = dr.first_copy_edge[e];
            f.values[fe] = cert.flow.values[e];
            f.orientation.set_tau(fe, End::AtU, tau.tau(e, End::AtU));
            f.orientation.set_tau(fe, End::AtV, tau.tau(e, End::AtV));
            int se = dr.second_copy_edge[e];
            f.values[se] = cert.flow.values[e];
            // second copy carries the fully reversed orientation
            f.orientation.set_tau(se, End::AtU, -tau.tau(e, End::AtU));
            f.orientation.set_tau(se, End::AtV, -tau.tau(e, End::AtV));
        }
    }
    for (std::size_t i = 0; i < dr.x_edges.size(); ++i) {
        int e = dr.x_edges[i];
        auto [uu, vv] = dr.pair_edges[i];
        f.values[uu] = cert.flow.values[e];
        f.values[vv] = cert.flow.values[e];
        f.orientation.set_tau(uu, End::AtU, tau.tau(e, End::AtU));
        f.orientation.set_tau(uu, End::AtV, -tau.tau(e, End::AtU));
        f.orientation.set_tau(vv, End::AtU, tau.tau(e, End::AtV));
        f.orientation.set_tau(vv, End::AtV, -tau.tau(e, End::AtV));
    }
    FlowCertificate out{dg, dr.doubled.sigma, std::move(f), cert.kind, cert.nowhere_zero};
    VerifyResult res = verify_flow(out);
    if (!res.ok) throw std::logic_error("induced_flow_on_double: induced flow invalid: " + res.violation);
    return out;
}

namespace {

bool connected_after_removal(const Multigraph& g, int e1, int e3) {
    if (g.vertex_count() == 0) return true;
    std::vector<char> seen(g.vertex_count(), 0);
    std::vector<int> stack{0};
    seen[0] = 1;
    int count = 1;
    while (!stack.empty()) {
        int v = stack.back();
        stack.pop_back();
        for (auto [w, e] : g.adjacency()[v]) {
            if (e == e1 || e == e3 || seen[w]) continue;
            seen[w] = 1;
            ++count;
            stack.push_back(w);
        }
    }
    return count == g.vertex_count();
}

} // namespace

BipartiteFourFlow bipartite_four_flow(const Multigraph& g, int q_max, const SearchLimits& limits) {
    if (!g.is_regular(3)) throw std::invalid_argument("bipartite_four_flow: graph is not cubic");
    if (g.component_count() != 1) throw std::invalid_argument("bipartite_four_flow: graph is not connected");
    if (!bridges(g).empty()) throw std::invalid_argument("bipartite_four_flow: graph has a bridge");
    if (!is_bipartite_after_removal(g, {})) throw std::invalid_argument("bipartite_four_flow: graph is not bipartite");
    if (g.vertex_count() == 2) throw std::invalid_argument("bipartite_four_flow: K_2^3 is excluded");

    SignedGraph base = with_empty_signature(g);
    std::optional<BipartiteFourFlow> result;

    // Scan nowhere-zero 3-flows until one has a 2-factor circuit with three
    // consecutive edges e1,e2,e3 whose outer pair is not a 2-edge-cut.
    for_each_scaled_flow(base, 1, 2, [&](const std::vector<std::int64_t>& x) {
        std::vector<int> two_factor;
        for (int e = 0; e < g.edge_count(); ++e)
            if (x[e] == 1 || x[e] == -1) two_factor.push_back(e);
        auto circuits = circuit_decomposition(g, two_factor);

        for (const CircuitWalk& c : circuits) {
            int len = static_cast<int>(c.edges.size());
            if (len < 4) continue;  // parallel-pair circuits cannot host the path
            for (int r = 0; r < len; ++r) {
                int e1 = c.edges[r], e2 = c.edges[(r + 1) % len], e3 = c.edges[(r + 2) % len];
                if (!connected_after_removal(g, e1, e3)) continue;

                // signed value of a circuit edge relative to the walk
                // direction; x is relative to u->v
                auto walk_value = [&](int pos) {
                    int e = c.edges[pos];
                    bool forward = g.edge(e).u == c.vertices[pos];
                    return forward ? x[e] : -x[e];
                };
                bool reversed = walk_value((r + 1) % len) < 0;  // want +1 on e2

                // working orientation: matching edges as in x, circuit
                // edges along the (possibly reversed) walk
                Flow flow;
                flow.orientation = reference_orientation(g, base.sigma);
                flow.values.resize(g.edge_count());
                std::vector<std::int64_t> y(g.edge_count(), 0);
                for (int e = 0; e < g.edge_count(); ++e)
                    if (x[e] == 2 || x[e] == -2) {
                        y[e] = 2;
                        if (x[e] < 0) flow.orientation.reverse_edge(e);
                    }
                for (const CircuitWalk& walk : circuits) {
                    bool rev = &walk == &c && reversed;
                    int wl = static_cast<int>(walk.edges.size());
                    for (int i = 0; i < wl; ++i) {
                        int e = walk.edges[i];
                        int from = rev ? walk.vertices[(i + 1) % wl] : walk.vertices[i];
                        bool forward = g.edge(e).u == from;
                        // direct e along the walk
                        flow.orientation.set_tau(e, End::AtU, forward ? +1 : -1);
                        flow.orientation.set_tau(e, End::AtV, forward ? -1 : +1);
                        std::int64_t val = forward ? x[e] : -x[e];
                        y[e] = val;  // +-1
                    }
                }

                // path naming in the traversal direction
                int v1, v4, f1 = e1, f3 = e3;
                if (!reversed) {
                    v1 = c.vertices[r];
                    v4 = c.vertices[(r + 3) % len];
                } else {
                    f1 = e3;
                    f3 = e1;
                    v1 = c.vertices[(r + 3) % len];
                    v4 = c.vertices[r];
                }

                // reverse one half-edge of f1 at v1 and of f3 at v4
                auto flip_at = [&](int e, int v) {
                    flow.orientation.flip(e, g.edge(e).u == v ? End::AtU : End::AtV);
                };
                flip_at(f1, v1);
                flip_at(f3, v4);

                // add 2 along the rest of the circuit
                for (int i = 0; i < len; ++i) {
                    int e = c.edges[i];
                    if (e == e1 || e == e2 || e == e3) continue;
                    y[e] += 2;
                }
                for (int e = 0; e < g.edge_count(); ++e) {
                    flow.values[e] = Fraction(y[e] < 0 ? -y[e] : y[e]);
                    if (y[e] < 0) flow.orientation.reverse_edge(e);
                }

                Signature sigma(g.edge_count(), {std::min(f1, f3), std::max(f1, f3)});
                FlowCertificate cert{g, sigma, std::move(flow), FlowKind::integer(4), true};
                VerifyResult res = verify_flow(cert);
                if (!res.ok)
                    throw std::logic_error("bipartite_four_flow: invalid flow: " + res.violation);

                CircularFlowNumber fc = circular_flow_number({g, sigma}, q_max, limits);
                if (!fc.value || *fc.value != Fraction(4))
                    throw std::logic_error("bipartite_four_flow: produced signature has F_c != 4");
                FlowCertificate circ = *fc.witness;
                result = BipartiteFourFlow{sigma, std::move(cert), std::move(circ)};
                return false;
            }
        }
        return true;  // try the next 3-flow
    }, limits);

    if (!result)
        throw std::logic_error("bipartite_four_flow: no usable 3-flow found");
    return std::move(*result);
}

ThreeFlowViaOneFactor three_flow_via_one_factor(const Multigraph& g, const SearchLimits& limits) {
    int n = g.vertex_count();
    if (n == 0) throw std::invalid_argument("three_flow_via_one_factor: empty graph");
    int d = g.degree(0);
    if (d < 3 || d % 2 == 0 || !g.is_regular(d))
        throw std::invalid_argument("three_flow_via_one_factor: graph is not (2t+1)-regular");
    int t = (d - 1) / 2;

    auto factor = has_t_factor(g, 1, limits.node_budget);
    if (!factor) throw std::invalid_argument("three_flow_via_one_factor: no 1-factor");
    std::vector<char> in_m(g.edge_count(), 0);
    for (int e : factor->edges) in_m[e] = 1;

    Flow flow;
    flow.orientation = Orientation(g.edge_count());
    flow.values.resize(g.edge_count());
    std::vector<int> neg;

    if (t == 1) {
        // all-negative signature; 1-factor edges introverted with value 2,
        // the rest extroverted with value 1
        for (int e = 0; e < g.edge_count(); ++e) {
            neg.push_back(e);
            int tau = in_m[e] ? +1 : -1;
            flow.orientation.set_tau(e, End::AtU, tau);
            flow.orientation.set_tau(e, End::AtV, tau);
            flow.values[e] = Fraction(in_m[e] ? 2 : 1);
        }
    } else {
        // spanning cubic subgraph M u F2 carries the 3-flow, the remaining
        // (2t-2)-regular part a value-1 eulerian flow
        std::vector<Edge> rest_edges;
        std::vector<int> rest_ids;
        for (int e = 0; e < g.edge_count(); ++e) {
            if (in_m[e]) continue;
            rest_edges.push_back(g.edge(e));
            rest_ids.push_back(e);
        }
        Multigraph rest(n, std::move(rest_edges));
        auto f2 = has_t_factor(rest, 2, limits.node_budget);
        if (!f2) throw std::logic_error("three_flow_via_one_factor: even-regular graph without 2-factor");
        std::vector<char> in_h(g.edge_count(), 0);
        for (int e : factor->edges) in_h[e] = 1;
        for (int e : f2->edges) in_h[rest_ids[e]] = 1;

        std::vector<int> remainder;
        for (int e = 0; e < g.edge_count(); ++e) {
            if (in_h[e]) {
                neg.push_back(e);
                int tau = in_m[e] ? +1 : -1;  // factor introverted, F2 extroverted
                flow.orientation.set_tau(e, End::AtU, tau);
                flow.orientation.set_tau(e, End::AtV, tau);
                flow.values[e] = Fraction(in_m[e] ? 2 : 1);
            } else {
                remainder.push_back(e);
            }
        }
        for (const auto& circuit : eulerian_circuits(g, remainder)) {
            for (const EulerStep& step : circuit) {
                flow.orientation.set_tau(step.edge, g.edge(step.edge).u == step.from ? End::AtU : End::AtV, +1);
                flow.orientation.set_tau(step.edge, g.edge(step.edge).u == step.to ? End::AtU : End::AtV, -1);
                flow.values[step.edge] = Fraction(1);
            }
        }
    }

    Signature sigma(g.edge_count(), neg);
    FlowCertificate cert{g, sigma, std::move(flow), FlowKind::integer(3), true};
    VerifyResult res = verify_flow(cert);
    if (!res.ok) throw std::logic_error("three_flow_via_one_factor: invalid flow: " + res.violation);
    return {std::move(sigma), std::move(cert)};
}

namespace {

// Value-1 flow on an even-degree balanced subgraph: orient an eulerian
// circuit of each component and align it with the signs through the
// balance 2-coloring (tau at v is negated on one color class).
Flow switching_aligned_unit_flow(const Multigraph& g, const Signature& s,
                                 const std::vector<int>& subgraph) {
    std::vector<std::vector<std::pair<int, int>>> inc(g.vertex_count());
    for (int e : subgraph) {
        inc[g.edge(e).u].emplace_back(e, g.edge(e).v);
        inc[g.edge(e).v].emplace_back(e, g.edge(e).u);
    }
    std::vector<int> col(g.vertex_count(), -1);
    for (int root = 0; root < g.vertex_count(); ++root) {
        if (col[root] != -1 || inc[root].empty()) continue;
        col[root] = 0;
        std::queue<int> q;
        q.push(root);
        while (!q.empty()) {
            int v = q.front();
            q.pop();
            for (auto [e, w] : inc[v]) {
                int want = col[v] ^ (s.is_negative(e) ? 1 : 0);
                if (col[w] == -1) {
                    col[w] = want;
                    q.push(w);
                } else if (col[w] != want) {
                    throw std::invalid_argument("eulerian union: subgraph is not balanced");
                }
            }
        }
    }
    Flow f;
    f.orientation = reference_orientation(g, s);
    f.values.resize(g.edge_count());
    for (const auto& circuit : eulerian_circuits(g, subgraph)) {
        for (const EulerStep& step : circuit) {
            int sign_from = col[step.from] == 1 ? -1 : +1;
            int sign_to = col[step.to] == 1 ? -1 : +1;
            f.orientation.set_tau(step.edge, g.edge(step.edge).u == step.from ? End::AtU : End::AtV,
                                  +1 * sign_from);
            f.orientation.set_tau(step.edge, g.edge(step.edge).u == step.to ? End::AtU : End::AtV,
                                  -1 * sign_to);
            f.values[step.edge] = Fraction(1);
        }
    }
    return f;
}

} // namespace

FlowCertificate eulerian_union_four_flow(const Multigraph& g, const Signature& s,
                                         const std::vector<int>& h1, const std::vector<int>& h2) {
    std::vector<char> covered(g.edge_count(), 0);
    for (int e : h1) covered[e] = 1;
    for (int e : h2) covered[e] = 1;
    for (int e = 0; e < g.edge_count(); ++e)
        if (!covered[e])
            throw std::invalid_argument("eulerian_union_four_flow: H1 u H2 does not cover E");

    Flow f1 = switching_aligned_unit_flow(g, s, h1);
    Flow f2 = switching_aligned_unit_flow(g, s, h2);
    FlowSumResult sum = flow_sum({g, s}, f1, f2, {1, 2});
    if (!sum.valid) throw std::logic_error("eulerian_union_four_flow: sum is not a flow");
    FlowCertificate cert{g, s, std::move(sum.flow), FlowKind::integer(4), true};
    VerifyResult res = verify_flow(cert);
    if (!res.ok) throw std::logic_error("eulerian_union_four_flow: invalid flow: " + res.violation);
    return cert;
}

namespace {

void validate_kotzig_matchings(const Multigraph& g, const std::vector<int>& m1,
                               const std::vector<int>& m2, const std::vector<int>& m3) {
    std::vector<int> owner(g.edge_count(), -1);
    const std::vector<int>* ms[3] = {&m1, &m2, &m3};
    for (int i = 0; i < 3; ++i) {
        std::vector<int> deg(g.vertex_count(), 0);
        for (int e : *ms[i]) {
            if (owner[e] != -1) throw std::invalid_argument("kotzig_six_flow: matchings overlap");
            owner[e] = i;
            ++deg[g.edge(e).u];
            ++deg[g.edge(e).v];
        }
        for (int v = 0; v < g.vertex_count(); ++v)
            if (deg[v] != 1) throw std::invalid_argument("kotzig_six_flow: not a perfect matching");
    }
    for (int e = 0; e < g.edge_count(); ++e)
        if (owner[e] == -1)
            throw std::invalid_argument("kotzig_six_flow: matchings do not partition E");
    for (int i = 0; i < 3; ++i)
        for (int j = i + 1; j < 3; ++j) {
            std::vector<int> uni = *ms[i];
            uni.insert(uni.end(), ms[j]->begin(), ms[j]->end());
            auto circuits = circuit_decomposition(g, uni);
            if (circuits.size() != 1 ||
                static_cast<int>(circuits[0].vertices.size()) != g.vertex_count())
                throw std::invalid_argument("kotzig_six_flow: a pairwise union is not hamiltonian");
        }
}

} // namespace

FlowCertificate kotzig_six_flow(const Multigraph& g, const Signature& s,
                                const std::vector<int>& m1, const std::vector<int>& m2,
                                const std::vector<int>& m3) {
    validate_kotzig_matchings(g, m1, m2, m3);
    if (!is_flow_admissible(g, s).admissible)
        throw std::invalid_argument("kotzig_six_flow: signed graph is not flow-admissible");

    // two of the matchings meet N with the same parity
    const std::vector<int>* ms[3] = {&m1, &m2, &m3};
    int cnt[3] = {0, 0, 0};
    for (int i = 0; i < 3; ++i)
        for (int e : *ms[i])
            if (s.is_negative(e)) ++cnt[i];
    int ia = 0, ib = 1, ic = 2;
    if (cnt[0] % 2 == cnt[1] % 2) { ia = 0; ib = 1; ic = 2; }
    else if (cnt[0] % 2 == cnt[2] % 2) { ia = 0; ib = 2; ic = 1; }
    else { ia = 1; ib = 2; ic = 0; }
    const std::vector<int>&A = *ms[ia], &B = *ms[ib], &C3 = *ms[ic];

    // switch the negatives off the hamiltonian circuit A u B
    std::vector<int> ab = A;
    ab.insert(ab.end(), B.begin(), B.end());
    CircuitWalk cyc = circuit_decomposition(g, ab)[0];
    int len = static_cast<int>(cyc.vertices.size());
    SwitchSet clean_set;
    {
        std::vector<int> col(g.vertex_count(), 0);
        for (int i = 1; i < len; ++i) {
            int e = cyc.edges[i - 1];
            col[cyc.vertices[i]] = col[cyc.vertices[i - 1]] ^ (s.is_negative(e) ? 1 : 0);
        }
        for (int v = 0; v < g.vertex_count(); ++v)
            if (col[v]) clean_set.push_back(v);
    }
    Signature sp = switch_signature(g, s, clean_set);
    for (int e : ab)
        if (sp.is_negative(e))
            throw std::logic_error("kotzig_six_flow: cleaning switch failed");

    int neg_in_c3 = 0;
    for (int e : C3)
        if (sp.is_negative(e)) ++neg_in_c3;

    if (neg_in_c3 % 2 == 0) {
        std::vector<int> ac = A;
        ac.insert(ac.end(), C3.begin(), C3.end());
        FlowCertificate cert = eulerian_union_four_flow(g, sp, ab, ac);
        FlowCertificate back = transport_flow(cert, clean_set);
        VerifyResult res = verify_flow(back);
        if (!res.ok) throw std::logic_error("kotzig_six_flow: transported flow invalid: " + res.violation);
        return back;
    }

    // odd case: |N'| >= 3, all negatives in C3.
    // 4-flow phi = phi_{A u C3} + 2 phi_{A u B} on sigma* (= sigma' with one
    // negative edge made positive); A u B becomes a directed hamiltonian
    // circuit and every C3 edge carries value 1.
    std::vector<int> pos(g.vertex_count(), 0);
    for (int i = 0; i < len; ++i) pos[cyc.vertices[i]] = i;

    int chosen = -1, chosen_pos = len;
    for (int e = 0; e < g.edge_count(); ++e) {
        if (!sp.is_negative(e)) continue;
        int p = std::min(pos[g.edge(e).u], pos[g.edge(e).v]);
        if (p < chosen_pos) {
            chosen_pos = p;
            chosen = e;
        }
    }
    Signature sstar = sp;
    sstar.flip(chosen);

    std::vector<int> ac = A;
    ac.insert(ac.end(), C3.begin(), C3.end());
    Flow f_ac = switching_aligned_unit_flow(g, sstar, ac);
    Flow f_ab;
    {
        // directed circuit along the canonical walk
        f_ab.orientation = reference_orientation(g, sstar);
        f_ab.values.resize(g.edge_count());
        for (int i = 0; i < len; ++i) {
            int e = cyc.edges[i];
            bool forward = g.edge(e).u == cyc.vertices[i];
            f_ab.orientation.set_tau(e, End::AtU, forward ? +1 : -1);
            f_ab.orientation.set_tau(e, End::AtV, forward ? -1 : +1);
            f_ab.values[e] = Fraction(1);
        }
    }
    FlowSumResult sum = flow_sum({g, sstar}, f_ac, f_ab, {1, 2});
    if (!sum.valid) throw std::logic_error("kotzig_six_flow: base sum is not a flow");
    Flow phi = std::move(sum.flow);
    {
        FlowCertificate check{g, sstar, phi, FlowKind::integer(4), true};
        VerifyResult res = verify_flow(check);
        if (!res.ok) throw std::logic_error("kotzig_six_flow: base 4-flow invalid: " + res.violation);
        phi = std::move(check.flow);
    }

    // back on sigma': make the chosen edge extroverted by reversing its
    // outgoing half-edge; the tail x is left with boundary -2
    int x_vertex;
    {
        int e = chosen;
        if (phi.orientation.tau(e, End::AtU) == +1) {
            x_vertex = g.edge(e).u;
            phi.orientation.flip(e, End::AtU);
        } else {
            x_vertex = g.edge(e).v;
            phi.orientation.flip(e, End::AtV);
        }
    }

    // an introverted negative edge exists; take the first along the circuit
    // from x
    auto pos_from_x = [&](int v) { return (pos[v] - pos[x_vertex] + len) % len; };
    int f_edge = -1, best_key = len;
    for (int e = 0; e < g.edge_count(); ++e) {
        if (!sp.is_negative(e) || e == chosen) continue;
        if (phi.orientation.tau(e, End::AtU) != +1 || phi.orientation.tau(e, End::AtV) != +1)
            continue;
        int key = std::min(pos_from_x(g.edge(e).u), pos_from_x(g.edge(e).v));
        if (key < best_key) {
            best_key = key;
            f_edge = e;
        }
    }
    if (f_edge == -1)
        throw std::logic_error("kotzig_six_flow: no introverted edge available for the repair");

    int u_vertex = g.edge(f_edge).u, w_vertex = g.edge(f_edge).v;
    if (pos_from_x(u_vertex) > pos_from_x(w_vertex)) std::swap(u_vertex, w_vertex);

    // walk edge at rotated position i runs from circuit vertex i to i+1
    for (int i = 0; i < pos_from_x(u_vertex); ++i) {
        int e = cyc.edges[(pos[x_vertex] + i) % len];
        phi.values[e] += Fraction(2);
    }
    for (int i = pos_from_x(u_vertex); i < pos_from_x(w_vertex); ++i) {
        int e = cyc.edges[(pos[x_vertex] + i) % len];
        phi.values[e] += Fraction(1);
    }
    phi.values[f_edge] = Fraction(2);

    FlowCertificate cert{g, sp, std::move(phi), FlowKind::integer(6), true};
    VerifyResult res = verify_flow(cert);
    if (!res.ok) throw std::logic_error("kotzig_six_flow: repaired flow invalid: " + res.violation);
    FlowCertificate back = transport_flow(cert, clean_set);
    res = verify_flow(back);
    if (!res.ok) throw std::logic_error("kotzig_six_flow: transported flow invalid: " + res.violation);
    return back;
}

namespace {

// lowest edge id on the circuit, the default pick for f_i
int default_circuit_edge(const CircuitWalk& c) {
    return *std::min_element(c.edges.begin(), c.edges.end());
}

} // namespace

OddnessFourFlow oddness_four_flow(const Multigraph& g, const SearchLimits& limits) {
    if (!g.is_regular(3)) throw std::invalid_argument("oddness_four_flow: graph is not cubic");
    if (g.component_count() != 1)
        throw std::invalid_argument("oddness_four_flow: graph is not connected");
    if (count_three_edge_colorings(g, limits.node_budget) > 0)
        throw std::invalid_argument(
            "oddness_four_flow: 3-edge-colorable input (the empty set is already 4-minimal)");

    OddnessResult odd = oddness(g, limits.node_budget);
    auto all_circuits = circuit_decomposition(g, odd.minimum_two_factor);
    std::vector<CircuitWalk> odd_circuits;
    for (auto& c : all_circuits)
        if (c.vertices.size() % 2 == 1) odd_circuits.push_back(std::move(c));
    int two_n = static_cast<int>(odd_circuits.size());
    if (two_n == 0 || two_n % 2 != 0)
        throw std::logic_error("oddness_four_flow: unexpected odd circuit count");

    std::vector<char> in_f2(g.edge_count(), 0);
    for (int e : odd.minimum_two_factor) in_f2[e] = 1;

    // pick f_i in each odd circuit, honoring the special cases for
    // multi-edges on odd circuits and for end-components of bridged graphs
    std::vector<int> chosen(two_n, -1);
    auto has_parallel_copy = [&](int e) {
        for (int e2 = 0; e2 < g.edge_count(); ++e2) {
            if (e2 == e) continue;
            if ((g.edge(e2).u == g.edge(e).u && g.edge(e2).v == g.edge(e).v) ||
                (g.edge(e2).u == g.edge(e).v && g.edge(e2).v == g.edge(e).u))
                return true;
        }
        return false;
    };
    bool special_done = false;
    for (int k = 0; k < two_n && !special_done; ++k) {
        // case: two circuit vertices joined by two edges of g
        std::vector<int> sorted_edges = odd_circuits[k].edges;
        std::sort(sorted_edges.begin(), sorted_edges.end());
        for (int e : sorted_edges) {
            if (has_parallel_copy(e)) {
                chosen[k] = e;
                special_done = true;
                break;
            }
        }
    }
    if (!special_done) {
        auto cut_edges = bridges(g);
        for (int b : cut_edges) {
            if (special_done) break;
            for (int x : {g.edge(b).u, g.edge(b).v}) {
                // side of b containing x
                std::vector<char> seen(g.vertex_count(), 0);
                std::vector<int> stack{x};
                seen[x] = 1;
                while (!stack.empty()) {
                    int v = stack.back();
                    stack.pop_back();
                    for (auto [w, e] : g.adjacency()[v]) {
                        if (e == b || seen[w]) continue;
                        seen[w] = 1;
                        stack.push_back(w);
                    }
                }
                // K must be bridgeless: no other bridge of g inside it
                bool side_bridgeless = true;
                for (int b2 : cut_edges) {
                    if (b2 == b) continue;
                    if (seen[g.edge(b2).u] && seen[g.edge(b2).v]) side_bridgeless = false;
                }
                if (!side_bridgeless) continue;
                // x must sit on an odd circuit
                for (int k = 0; k < two_n; ++k) {
                    const CircuitWalk& c = odd_circuits[k];
                    auto it = std::find(c.vertices.begin(), c.vertices.end(), x);
                    if (it == c.vertices.end()) continue;
                    // neighbors of x in K are its two circuit neighbors
                    int i = static_cast<int>(it - c.vertices.begin());
                    int lenc = static_cast<int>(c.vertices.size());
                    int n1 = c.vertices[(i + 1) % lenc], n2 = c.vertices[(i - 1 + lenc) % lenc];
                    int x1 = std::min(n1, n2);
                    int best = -1;
                    for (int j = 0; j < lenc; ++j) {
                        int e = c.edges[j];
                        bool at_x1 = g.edge(e).u == x1 || g.edge(e).v == x1;
                        bool is_xx1 = (g.edge(e).u == x && g.edge(e).v == x1) ||
                                      (g.edge(e).u == x1 && g.edge(e).v == x);
                        if (at_x1 && !is_xx1 && (best == -1 || e < best)) best = e;
                    }
                    if (best != -1) {
                        chosen[k] = best;
                        special_done = true;
                    }
                    break;
                }
                if (special_done) break;
            }
        }
    }
    for (int k = 0; k < two_n; ++k)
        if (chosen[k] == -1) chosen[k] = default_circuit_edge(odd_circuits[k]);

    // auxiliary cubic graph G': subdivide each f_i with u_i and join
    // u_{2k}u_{2k+1}
    int n = g.vertex_count();
    std::vector<Edge> gp_edges;
    std::vector<int> gp_of_edge(g.edge_count(), -1);
    std::vector<char> is_chosen(g.edge_count(), 0);
    for (int e : chosen) is_chosen[e] = 1;
    for (int e = 0; e < g.edge_count(); ++e) {
        if (is_chosen[e]) continue;
        gp_of_edge[e] = static_cast<int>(gp_edges.size());
        gp_edges.push_back(g.edge(e));
    }
    std::vector<std::pair<int, int>> split(two_n);  // (a-u_i edge, u_i-b edge)
    for (int i = 0; i < two_n; ++i) {
        int e = chosen[i];
        int ui = n + i;
        split[i].first = static_cast<int>(gp_edges.size());
        gp_edges.push_back({g.edge(e).u, ui});
        split[i].second = static_cast<int>(gp_edges.size());
        gp_edges.push_back({ui, g.edge(e).v});
    }
    std::vector<int> pairing;
    for (int k = 0; k + 1 < two_n; k += 2) {
        pairing.push_back(static_cast<int>(gp_edges.size()));
        gp_edges.push_back({n + k, n + k + 1});
    }
    Multigraph gp(n + two_n, std::move(gp_edges));

    // F1' = (E - F2) u pairing, colored 0; the even 2-factor F2' alternates
    // colors 1 and 2 around each circuit
    std::vector<int> color(gp.edge_count(), -1);
    std::vector<int> f2p;
    for (int e = 0; e < g.edge_count(); ++e) {
        if (gp_of_edge[e] == -1) continue;
        if (in_f2[e]) f2p.push_back(gp_of_edge[e]);
        else color[gp_of_edge[e]] = 0;
    }
    for (int i = 0; i < two_n; ++i) {
        f2p.push_back(split[i].first);
        f2p.push_back(split[i].second);
    }
    for (int e : pairing) color[e] = 0;
    auto f2p_circuits = circuit_decomposition(gp, f2p);
    for (const CircuitWalk& c : f2p_circuits)
        for (std::size_t i = 0; i < c.edges.size(); ++i) color[c.edges[i]] = 1 + (i % 2);

    // phi1 on colors {0,1}: disjoint even circuits, each directed, value 1
    Signature empty_sig(gp.edge_count());
    auto unit_circuit_flow = [&](const std::vector<int>& support) {
        Flow f;
        f.orientation = reference_orientation(gp, empty_sig);
        f.values.resize(gp.edge_count());
        for (const CircuitWalk& c : circuit_decomposition(gp, support)) {
            for (std::size_t i = 0; i < c.edges.size(); ++i) {
                int e = c.edges[i];
                bool forward = gp.edge(e).u == c.vertices[i];
                f.orientation.set_tau(e, End::AtU, forward ? +1 : -1);
                f.orientation.set_tau(e, End::AtV, forward ? -1 : +1);
                f.values[e] = Fraction(1);
            }
        }
        return f;
    };
    std::vector<int> c01, c12;
    for (int e = 0; e < gp.edge_count(); ++e) {
        if (color[e] == 0 || color[e] == 1) c01.push_back(e);
        if (color[e] == 1 || color[e] == 2) c12.push_back(e);
    }
    Flow phi1 = unit_circuit_flow(c01);
    Flow phi2 = unit_circuit_flow(c12);

    // at each u_i the color-1 circuit edge f_i' must run against phi1:
    // flip the whole F2' circuit direction in phi2 where needed
    for (int i = 0; i < two_n; ++i) {
        int fip = color[split[i].first] == 1 ? split[i].first : split[i].second;
        if (phi2.orientation.tau(fip, End::AtU) == phi1.orientation.tau(fip, End::AtU)) {
            for (const CircuitWalk& c : f2p_circuits) {
                if (std::find(c.edges.begin(), c.edges.end(), fip) == c.edges.end()) continue;
                for (int e : c.edges) phi2.orientation.reverse_edge(e);
                break;
            }
        }
    }

    FlowSumResult sum = flow_sum({gp, empty_sig}, phi1, phi2, {2, 1});
    if (!sum.valid) throw std::logic_error("oddness_four_flow: 2*phi1 + phi2 is not a flow");
    Flow psi = std::move(sum.flow);

    // contract back: suppress the u_i, turning each split pair into a
    // negative edge of g with value 1
    Flow flow;
    flow.orientation = Orientation(g.edge_count());
    flow.values.resize(g.edge_count());
    std::vector<int> neg;
    for (int e = 0; e < g.edge_count(); ++e) {
        if (gp_of_edge[e] != -1) {
            int pe = gp_of_edge[e];
            flow.values[e] = psi.values[pe];
            flow.orientation.set_tau(e, End::AtU, psi.orientation.tau(pe, End::AtU));
            flow.orientation.set_tau(e, End::AtV, psi.orientation.tau(pe, End::AtV));
        }
    }
    for (int i = 0; i < two_n; ++i) {
        int e = chosen[i];
        if (!(psi.values[split[i].first] == Fraction(1)) ||
            !(psi.values[split[i].second] == Fraction(1)))
            throw std::logic_error("oddness_four_flow: split edges do not carry value 1");
        flow.values[e] = Fraction(1);
        // half-edge at a comes from (a,u_i), at b from (u_i,b)
        flow.orientation.set_tau(e, End::AtU, psi.orientation.tau(split[i].first, End::AtU));
        flow.orientation.set_tau(e, End::AtV, psi.orientation.tau(split[i].second, End::AtV));
        if (flow.orientation.tau(e, End::AtU) * flow.orientation.tau(e, End::AtV) != 1)
            throw std::logic_error("oddness_four_flow: contracted edge is not negative");
        neg.push_back(e);
    }
    std::sort(neg.begin(), neg.end());
    Signature sigma(g.edge_count(), neg);
    FlowCertificate cert{g, sigma, std::move(flow), FlowKind::integer(4), true};
    VerifyResult res = verify_flow(cert);
    if (!res.ok) throw std::logic_error("oddness_four_flow: invalid flow: " + res.violation);
    return {std::move(sigma), std::move(cert), two_n};
}

} // namespace signedflow
