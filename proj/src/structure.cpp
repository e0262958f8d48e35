#include "signedflow/structure.hpp"

#include "signedflow/errors.hpp"

#include <algorithm>
#include <bit>
#include <cassert>
#include <queue>
#include <stdexcept>

namespace signedflow {

namespace {

struct MatchingEnumerator {
    const Multigraph& g;
    std::uint64_t budget;
    std::uint64_t nodes = 0;
    std::vector<char> used;
    std::vector<int> picked;

    bool rec(const std::function<bool(const std::vector<int>&)>& callback) {
        if (++nodes > budget) throw ResourceCapError("perfect matching enumeration: budget exceeded");
        int v = -1;
        for (int i = 0; i < g.vertex_count(); ++i) {
            if (!used[i]) { v = i; break; }
        }
        if (v == -1) {
            std::vector<int> out = picked;
            std::sort(out.begin(), out.end());
            return callback(out);
        }
        used[v] = 1;
        for (auto [w, e] : g.adjacency()[v]) {
            if (used[w]) continue;
            used[w] = 1;
            picked.push_back(e);
            bool keep_going = rec(callback);
            picked.pop_back();
            used[w] = 0;
            if (!keep_going) { used[v] = 0; return false; }
        }
        used[v] = 0;
        return true;
    }
};

} // namespace

bool for_each_perfect_matching(const Multigraph& g,
                               const std::function<bool(const std::vector<int>&)>& callback,
                               std::uint64_t node_budget) {
    if (g.vertex_count() % 2 == 1) return true;  // parity: no perfect matching
    MatchingEnumerator en{g, node_budget, 0, std::vector<char>(g.vertex_count(), 0), {}};
    return en.rec(callback);
}

std::vector<std::vector<int>> perfect_matchings(const Multigraph& g, std::uint64_t node_budget) {
    std::vector<std::vector<int>> out;
    for_each_perfect_matching(g, [&out](const std::vector<int>& m) {
        out.push_back(m);
        return true;
    }, node_budget);
    return out;
}

std::vector<int> maximum_matching(const Multigraph& g) {
    int n = g.vertex_count();
    std::vector<std::vector<int>> adj(n);
    for (const Edge& e : g.edges()) {
        adj[e.u].push_back(e.v);
        adj[e.v].push_back(e.u);
    }
    std::vector<int> match(n, -1), p(n), base(n);
    std::vector<char> used(n), blossom(n);

    auto lca = [&](int a, int b) {
        std::vector<char> path(n, 0);
        while (true) {
            a = base[a];
            path[a] = 1;
            if (match[a] == -1) break;
            a = p[match[a]];
        }
        while (true) {
            b = base[b];
            if (path[b]) return b;
            b = p[match[b]];
        }
    };
    auto mark_path = [&](int v, int b, int child) {
        while (base[v] != b) {
            blossom[base[v]] = 1;
            blossom[base[match[v]]] = 1;
            p[v] = child;
            child = match[v];
            v = p[match[v]];
        }
    };
    auto find_path = [&](int root) {
        std::fill(used.begin(), used.end(), 0);
        std::fill(p.begin(), p.end(), -1);
        for (int i = 0; i < n; ++i) base[i] = i;
        used[root] = 1;
        std::queue<int> q;
        q.push(root);
        while (!q.empty()) {
            int v = q.front();
            q.pop();
            for (int to : adj[v]) {
                if (base[v] == base[to] || match[v] == to) continue;
                if (to == root || (match[to] != -1 && p[match[to]] != -1)) {
                    int curbase = lca(v, to);
                    std::fill(blossom.begin(), blossom.end(), 0);
                    mark_path(v, curbase, to);
                    mark_path(to, curbase, v);
                    for (int i = 0; i < n; ++i) {
                        if (blossom[base[i]]) {
                            base[i] = curbase;
                            if (!used[i]) {
                                used[i] = 1;
                                q.push(i);
                            }
                        }
                    }
                } else if (p[to] == -1) {
                    p[to] = v;
                    if (match[to] == -1) {
                        // augment along the path to root
                        int u = to;
                        while (u != -1) {
                            int pv = p[u], ppv = match[pv];
                            match[u] = pv;
                            match[pv] = u;
                            u = ppv;
                        }
                        return true;
                    }
                    used[match[to]] = 1;
                    q.push(match[to]);
                }
            }
        }
        return false;
    };

    for (int v = 0; v < n; ++v)
        if (match[v] == -1) find_path(v);
    return match;
}

namespace {

// Tutte gadget for the t-factor problem: vertex v becomes d(v) edge stubs
// plus d(v)-t dummies joined completely to them; each original edge joins
// its two stubs. Perfect matchings of the gadget are exactly the t-factors.
struct FactorGadget {
    Multigraph graph;
    std::vector<int> connector_of_edge;  // gadget edge id of each original edge
};

FactorGadget build_factor_gadget(const Multigraph& g, int t) {
    int n = g.vertex_count();
    std::vector<int> stub_base(n, 0), dummy_base(n, 0);
    int next = 0;
    for (int v = 0; v < n; ++v) {
        stub_base[v] = next;
        next += g.degree(v);
    }
    for (int v = 0; v < n; ++v) {
        dummy_base[v] = next;
        next += g.degree(v) - t;
    }
    // stub index of edge e at endpoint v: position of e among v's incident
    // edges in ascending id order
    std::vector<std::vector<int>> incident(n);
    for (int e = 0; e < g.edge_count(); ++e) {
        incident[g.edge(e).u].push_back(e);
        incident[g.edge(e).v].push_back(e);
    }
    auto stub_of = [&](int e, int v) {
        const auto& inc = incident[v];
        int pos = static_cast<int>(std::find(inc.begin(), inc.end(), e) - inc.begin());
        return stub_base[v] + pos;
    };
    std::vector<Edge> edges;
    std::vector<int> connector;
    for (int e = 0; e < g.edge_count(); ++e) {
        connector.push_back(static_cast<int>(edges.size()));
        edges.push_back({stub_of(e, g.edge(e).u), stub_of(e, g.edge(e).v)});
    }
    for (int v = 0; v < n; ++v)
        for (int i = 0; i < g.degree(v); ++i)
            for (int j = 0; j < g.degree(v) - t; ++j)
                edges.push_back({stub_base[v] + i, dummy_base[v] + j});
    return {Multigraph(next, std::move(edges)), std::move(connector)};
}

} // namespace

std::optional<FactorWitness> has_t_factor(const Multigraph& g, int t, std::uint64_t node_budget) {
    if (t < 1) throw std::invalid_argument("has_t_factor: t must be >= 1");
    for (int v = 0; v < g.vertex_count(); ++v)
        if (g.degree(v) < t) return std::nullopt;
    if (static_cast<std::int64_t>(t) * g.vertex_count() % 2 != 0) return std::nullopt;

    FactorGadget gadget = build_factor_gadget(g, t);
    int gn = gadget.graph.vertex_count();

    // blossom route
    std::vector<int> match = maximum_matching(gadget.graph);
    int matched = 0;
    for (int v = 0; v < gn; ++v)
        if (match[v] != -1) ++matched;
    bool blossom_found = matched == gn;

    // exhaustive route on small gadgets; the two must agree
    constexpr int kExhaustiveVertexCap = 22;
    std::optional<std::vector<int>> exhaustive_pm;
    if (gn <= kExhaustiveVertexCap) {
        for_each_perfect_matching(gadget.graph, [&](const std::vector<int>& pm) {
            exhaustive_pm = pm;
            return false;
        }, node_budget);
        if (exhaustive_pm.has_value() != blossom_found)
            throw std::logic_error("has_t_factor: exhaustive and blossom routes disagree");
    }
    if (!blossom_found) return std::nullopt;

    FactorWitness w;
    w.t = t;
    if (exhaustive_pm) {
        std::vector<char> in_pm(gadget.graph.edge_count(), 0);
        for (int e : *exhaustive_pm) in_pm[e] = 1;
        for (int e = 0; e < g.edge_count(); ++e)
            if (in_pm[gadget.connector_of_edge[e]]) w.edges.push_back(e);
    } else {
        for (int e = 0; e < g.edge_count(); ++e) {
            const Edge& ge = gadget.graph.edge(gadget.connector_of_edge[e]);
            if (match[ge.u] == ge.v) w.edges.push_back(e);
        }
    }
    return w;
}

std::vector<CircuitWalk> circuit_decomposition(const Multigraph& g, const std::vector<int>& edges) {
    std::vector<std::vector<std::pair<int, int>>> inc(g.vertex_count());  // (edge, other end)
    for (int e : edges) {
        inc[g.edge(e).u].emplace_back(e, g.edge(e).v);
        inc[g.edge(e).v].emplace_back(e, g.edge(e).u);
    }
    for (int v = 0; v < g.vertex_count(); ++v)
        if (!inc[v].empty() && inc[v].size() != 2)
            throw std::invalid_argument("circuit_decomposition: subgraph is not 2-regular");
    std::vector<char> used_edge(g.edge_count(), 0);
    std::vector<CircuitWalk> out;
    for (int start = 0; start < g.vertex_count(); ++start) {
        if (inc[start].empty()) continue;
        bool fresh = !used_edge[inc[start][0].first] && !used_edge[inc[start][1].first];
        if (!fresh) continue;
        CircuitWalk walk;
        int v = start;
        // first step along the lowest incident edge id
        int e = std::min(inc[start][0].first, inc[start][1].first);
        while (true) {
            walk.vertices.push_back(v);
            walk.edges.push_back(e);
            used_edge[e] = 1;
            v = g.other_end(e, v);
            if (v == start) break;
            e = used_edge[inc[v][0].first] ? inc[v][1].first : inc[v][0].first;
        }
        out.push_back(std::move(walk));
    }
    return out;
}

OddnessResult oddness(const Multigraph& g, std::uint64_t node_budget) {
    if (!g.is_regular(3)) throw std::invalid_argument("oddness: graph is not cubic");
    std::optional<OddnessResult> best;
    for_each_perfect_matching(g, [&](const std::vector<int>& pm) {
        std::vector<char> in_pm(g.edge_count(), 0);
        for (int e : pm) in_pm[e] = 1;
        std::vector<int> two_factor;
        for (int e = 0; e < g.edge_count(); ++e)
            if (!in_pm[e]) two_factor.push_back(e);
        int odd = 0;
        for (const CircuitWalk& c : circuit_decomposition(g, two_factor))
            if (c.vertices.size() % 2 == 1) ++odd;
        if (!best || odd < best->oddness) best = OddnessResult{odd, two_factor};
        return true;
    }, node_budget);
    if (!best) throw std::invalid_argument("oddness: graph has no 1-factor");
    return *best;
}

namespace {

struct ColoringSearch {
    const Multigraph& g;
    int color_limit;  // 3 or 4
    std::uint64_t budget;
    std::uint64_t nodes = 0;
    std::vector<int> color;        // per edge, -1 unassigned
    std::vector<int> vertex_mask;  // colors used at each vertex

    // Canonical color introduction: an edge may reuse any color already
    // introduced or introduce the next one, so each coloring is counted
    // once up to color permutation.
    void run(int e, int introduced, const std::function<bool()>& on_complete) {
        if (++nodes > budget) throw ResourceCapError("edge coloring search: budget exceeded");
        if (e == g.edge_count()) {
            if (!on_complete()) stop = true;
            return;
        }
        int u = g.edge(e).u, v = g.edge(e).v;
        int max_color = std::min(introduced, color_limit - 1);
        for (int c = 0; c <= max_color && !stop; ++c) {
            int bit = 1 << c;
            if ((vertex_mask[u] | vertex_mask[v]) & bit) continue;
            color[e] = c;
            vertex_mask[u] |= bit;
            vertex_mask[v] |= bit;
            run(e + 1, std::max(introduced, c + 1), on_complete);
            vertex_mask[u] &= ~bit;
            vertex_mask[v] &= ~bit;
            color[e] = -1;
        }
    }

    bool stop = false;
};

} // namespace

int resistance(const Multigraph& g, std::uint64_t node_budget) {
    if (!g.is_regular(3)) throw std::invalid_argument("resistance: graph is not cubic");
    int best = g.edge_count() + 1;
    ColoringSearch search{g, 4, node_budget, 0,
                          std::vector<int>(g.edge_count(), -1),
                          std::vector<int>(g.vertex_count(), 0)};
    search.run(0, 0, [&]() {
        int counts[4] = {0, 0, 0, 0};
        for (int e = 0; e < g.edge_count(); ++e) ++counts[search.color[e]];
        best = std::min(best, *std::min_element(counts, counts + 4));
        return best > 0;  // resistance 0 cannot be improved
    });
    if (best > g.edge_count())
        throw std::logic_error("resistance: cubic graph without proper 4-edge-coloring");
    return best;
}

std::int64_t count_three_edge_colorings(const Multigraph& g, std::uint64_t node_budget) {
    if (!g.is_regular(3)) throw std::invalid_argument("count_three_edge_colorings: not cubic");
    std::int64_t count = 0;
    ColoringSearch search{g, 3, node_budget, 0,
                          std::vector<int>(g.edge_count(), -1),
                          std::vector<int>(g.vertex_count(), 0)};
    search.run(0, 0, [&]() {
        ++count;
        return true;
    });
    return count;
}

namespace {

bool union_is_hamiltonian(const Multigraph& g, const std::vector<int>& m1,
                          const std::vector<int>& m2) {
    std::vector<int> edges = m1;
    edges.insert(edges.end(), m2.begin(), m2.end());
    auto circuits = circuit_decomposition(g, edges);
    return circuits.size() == 1 &&
           static_cast<int>(circuits[0].vertices.size()) == g.vertex_count();
}

} // namespace

std::optional<std::array<std::vector<int>, 3>> kotzig_check(const Multigraph& g,
                                                            std::uint64_t node_budget) {
    if (!g.is_regular(3)) throw std::invalid_argument("kotzig_check: graph is not cubic");
    if (g.vertex_count() == 0) return std::nullopt;
    std::optional<std::array<std::vector<int>, 3>> found;
    ColoringSearch search{g, 3, node_budget, 0,
                          std::vector<int>(g.edge_count(), -1),
                          std::vector<int>(g.vertex_count(), 0)};
    search.run(0, 0, [&]() {
        std::array<std::vector<int>, 3> classes;
        for (int e = 0; e < g.edge_count(); ++e) classes[search.color[e]].push_back(e);
        if (union_is_hamiltonian(g, classes[0], classes[1]) &&
            union_is_hamiltonian(g, classes[0], classes[2]) &&
            union_is_hamiltonian(g, classes[1], classes[2])) {
            found = std::move(classes);
            return false;
        }
        return true;
    });
    return found;
}

bool is_bipartite_after_removal(const Multigraph& g, const std::vector<int>& removed) {
    std::vector<char> gone(g.edge_count(), 0);
    for (int e : removed) gone[e] = 1;
    std::vector<int> color(g.vertex_count(), -1);
    for (int s = 0; s < g.vertex_count(); ++s) {
        if (color[s] != -1) continue;
        color[s] = 0;
        std::queue<int> q;
        q.push(s);
        while (!q.empty()) {
            int v = q.front();
            q.pop();
            for (auto [w, e] : g.adjacency()[v]) {
                if (gone[e]) continue;
                if (color[w] == -1) {
                    color[w] = color[v] ^ 1;
                    q.push(w);
                } else if (color[w] == color[v]) {
                    return false;
                }
            }
        }
    }
    return true;
}

std::vector<std::vector<int>> minimal_bipartite_deletion_sets(const Multigraph& g, int size_cap,
                                                              std::uint64_t subset_budget) {
    std::vector<std::vector<int>> out;
    std::uint64_t examined = 0;
    int m = g.edge_count();
    for (int size = 0; size <= std::min(size_cap, m); ++size) {
        std::vector<int> comb(size);
        for (int i = 0; i < size; ++i) comb[i] = i;
        while (true) {
            if (++examined > subset_budget)
                throw ResourceCapError("minimal_bipartite_deletion_sets: budget exceeded");
            if (is_bipartite_after_removal(g, comb)) {
                // bipartiteness after removal is monotone, so inclusion-
                // minimality only needs the one-smaller subsets
                bool minimal = true;
                for (int skip = 0; skip < size && minimal; ++skip) {
                    std::vector<int> sub;
                    for (int i = 0; i < size; ++i)
                        if (i != skip) sub.push_back(comb[i]);
                    if (is_bipartite_after_removal(g, sub)) minimal = false;
                }
                if (minimal) out.push_back(comb);
            }
            int i = size - 1;
            while (i >= 0 && comb[i] == m - size + i) --i;
            if (i < 0) break;
            ++comb[i];
            for (int j = i + 1; j < size; ++j) comb[j] = comb[j - 1] + 1;
        }
        if (size == 0 && !out.empty()) break;  // the empty set is the unique minimal set
    }
    return out;
}

int independence_number(const Multigraph& g) {
    int n = g.vertex_count();
    if (n > 64) throw ResourceCapError("independence_number: more than 64 vertices");
    std::vector<std::uint64_t> nbr(n, 0);
    for (const Edge& e : g.edges()) {
        nbr[e.u] |= std::uint64_t(1) << e.v;
        nbr[e.v] |= std::uint64_t(1) << e.u;
    }
    int best = 0;
    // branch on a maximum-degree candidate: in or out of the set
    std::function<void(std::uint64_t, int)> rec = [&](std::uint64_t cand, int size) {
        if (size + std::popcount(cand) <= best) return;
        if (cand == 0) {
            best = std::max(best, size);
            return;
        }
        int pick = -1, pick_deg = -1;
        for (std::uint64_t c = cand; c; c &= c - 1) {
            int v = std::countr_zero(c);
            int d = std::popcount(nbr[v] & cand);
            if (d > pick_deg) {
                pick = v;
                pick_deg = d;
            }
        }
        rec(cand & ~nbr[pick] & ~(std::uint64_t(1) << pick), size + 1);
        rec(cand & ~(std::uint64_t(1) << pick), size);
    };
    rec(n == 64 ? ~std::uint64_t(0) : (std::uint64_t(1) << n) - 1, 0);
    return best;
}

std::vector<std::vector<EulerStep>> eulerian_circuits(const Multigraph& g,
                                                      const std::vector<int>& edges) {
    std::vector<std::vector<std::pair<int, int>>> inc(g.vertex_count());  // (edge, to)
    for (int e : edges) {
        inc[g.edge(e).u].emplace_back(e, g.edge(e).v);
        inc[g.edge(e).v].emplace_back(e, g.edge(e).u);
    }
    for (int v = 0; v < g.vertex_count(); ++v)
        if (inc[v].size() % 2 != 0)
            throw std::invalid_argument("eulerian_circuits: odd degree vertex in subgraph");
    std::vector<char> used(g.edge_count(), 0);
    std::vector<std::size_t> next(g.vertex_count(), 0);
    std::vector<std::vector<EulerStep>> out;
    for (int start = 0; start < g.vertex_count(); ++start) {
        bool has_unused = false;
        for (auto [e, to] : inc[start]) {
            (void)to;
            if (!used[e]) { has_unused = true; break; }
        }
        if (!has_unused) continue;
        // Hierholzer
        std::vector<EulerStep> circuit;
        std::vector<std::pair<int, int>> stack{{start, -1}};  // (vertex, edge used to arrive)
        while (!stack.empty()) {
            auto [v, arrived] = stack.back();
            bool advanced = false;
            while (next[v] < inc[v].size()) {
                auto [e, to] = inc[v][next[v]];
                if (used[e]) {
                    ++next[v];
                    continue;
                }
                used[e] = 1;
                stack.emplace_back(to, e);
                advanced = true;
                break;
            }
            if (!advanced) {
                stack.pop_back();
                if (arrived != -1 && !stack.empty())
                    circuit.push_back({arrived, stack.back().first, v});
            }
        }
        std::reverse(circuit.begin(), circuit.end());
        out.push_back(std::move(circuit));
    }
    return out;
}

} // namespace signedflow
