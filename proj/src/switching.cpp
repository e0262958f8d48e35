#include "signedflow/switching.hpp"

#include "signedflow/errors.hpp"

#include <algorithm>
#include <bit>
#include <queue>
#include <stdexcept>

namespace signedflow {

Signature switch_signature(const Multigraph& g, const Signature& s, const SwitchSet& at) {
    std::vector<char> in_set(g.vertex_count(), 0);
    for (int v : at) {
        if (v < 0 || v >= g.vertex_count())
            throw std::invalid_argument("switch_signature: vertex index out of range");
        in_set[v] = 1;
    }
    Signature out = s;
    for (int e = 0; e < g.edge_count(); ++e)
        if (in_set[g.edge(e).u] != in_set[g.edge(e).v]) out.flip(e);
    return out;
}

namespace {

// BFS sign-propagation over every component. color[v] in {0,1} satisfies
// color[u] ^ color[v] == [edge negative] on all tree edges; parent arrays
// describe the BFS forest (roots are the smallest vertex per component).
struct SignColoring {
    std::vector<int> color;
    std::vector<int> parent_vertex;  // -1 at roots
    std::vector<int> parent_edge;
    std::vector<int> depth;
    std::vector<char> is_tree_edge;
    int first_bad_edge = -1;  // smallest-id non-tree edge violating parity
};

SignColoring propagate_signs(const Multigraph& g, const Signature& s) {
    SignColoring sc;
    int n = g.vertex_count();
    sc.color.assign(n, -1);
    sc.parent_vertex.assign(n, -1);
    sc.parent_edge.assign(n, -1);
    sc.depth.assign(n, 0);
    sc.is_tree_edge.assign(g.edge_count(), 0);
    const auto& adj = g.adjacency();
    for (int root = 0; root < n; ++root) {
        if (sc.color[root] != -1) continue;
        sc.color[root] = 0;
        std::queue<int> q;
        q.push(root);
        while (!q.empty()) {
            int v = q.front();
            q.pop();
            for (auto [w, e] : adj[v]) {
                if (sc.color[w] != -1) continue;
                sc.color[w] = sc.color[v] ^ (s.is_negative(e) ? 1 : 0);
                sc.parent_vertex[w] = v;
                sc.parent_edge[w] = e;
                sc.depth[w] = sc.depth[v] + 1;
                sc.is_tree_edge[e] = 1;
                q.push(w);
            }
        }
    }
    for (int e = 0; e < g.edge_count(); ++e) {
        if (sc.is_tree_edge[e]) continue;
        int parity = sc.color[g.edge(e).u] ^ sc.color[g.edge(e).v];
        if (parity != (s.is_negative(e) ? 1 : 0)) {
            sc.first_bad_edge = e;
            break;
        }
    }
    return sc;
}

// Tree path between the endpoints of edge e, plus e itself.
std::vector<int> fundamental_circuit(const Multigraph& g, const SignColoring& sc, int e) {
    std::vector<int> circuit{e};
    int a = g.edge(e).u, b = g.edge(e).v;
    while (sc.depth[a] > sc.depth[b]) {
        circuit.push_back(sc.parent_edge[a]);
        a = sc.parent_vertex[a];
    }
    while (sc.depth[b] > sc.depth[a]) {
        circuit.push_back(sc.parent_edge[b]);
        b = sc.parent_vertex[b];
    }
    while (a != b) {
        circuit.push_back(sc.parent_edge[a]);
        circuit.push_back(sc.parent_edge[b]);
        a = sc.parent_vertex[a];
        b = sc.parent_vertex[b];
    }
    std::sort(circuit.begin(), circuit.end());
    return circuit;
}

} // namespace

BalanceResult is_balanced(const Multigraph& g, const Signature& s) {
    SignColoring sc = propagate_signs(g, s);
    if (sc.first_bad_edge == -1) return {true, {}};
    return {false, fundamental_circuit(g, sc, sc.first_bad_edge)};
}

EquivalenceResult equivalent(const Multigraph& g, const Signature& s1, const Signature& s2) {
    Signature product(g.edge_count());
    for (int e = 0; e < g.edge_count(); ++e)
        product.set_sign(e, s1.sign(e) * s2.sign(e));
    SignColoring sc = propagate_signs(g, product);
    if (sc.first_bad_edge != -1) return {false, {}};
    SwitchSet at;
    for (int v = 0; v < g.vertex_count(); ++v)
        if (sc.color[v] == 1) at.push_back(v);
    return {true, at};
}

FrustrationResult frustration_minimal(const Multigraph& g, const Signature& s, int vertex_cap) {
    if (g.vertex_count() > vertex_cap)
        throw ResourceCapError("frustration_minimal: vertex cap exceeded");
    if (g.edge_count() > 64)
        throw ResourceCapError("frustration_minimal: more than 64 edges");

    // One root per component stays out of the switch set, so every signature
    // of the orbit is visited exactly once.
    const auto& comp = g.component_of();
    std::vector<int> free_vertices;
    for (int v = 0; v < g.vertex_count(); ++v)
        if (comp[v] != v) free_vertices.push_back(v);
    int k = static_cast<int>(free_vertices.size());

    std::vector<std::uint64_t> incident_mask(g.vertex_count(), 0);
    for (int e = 0; e < g.edge_count(); ++e) {
        incident_mask[g.edge(e).u] ^= std::uint64_t(1) << e;
        incident_mask[g.edge(e).v] ^= std::uint64_t(1) << e;
    }

    std::uint64_t cur = s.mask();
    std::uint64_t cur_switch = 0;
    std::uint64_t best = cur;
    std::uint64_t best_switch = 0;
    auto better = [](std::uint64_t a, std::uint64_t b) {
        int pa = std::popcount(a), pb = std::popcount(b);
        if (pa != pb) return pa < pb;
        if (a == b) return false;
        // lexicographically smaller negative set: owns the lowest differing id
        return (a & (-(a ^ b) & (a ^ b))) != 0;
    };

    // Gray code walk over subsets of the free vertices.
    for (std::uint64_t i = 1; i < (std::uint64_t(1) << k); ++i) {
        int bit = std::countr_zero(i);
        cur ^= incident_mask[free_vertices[bit]];
        cur_switch ^= std::uint64_t(1) << bit;
        if (better(cur, best)) {
            best = cur;
            best_switch = cur_switch;
        }
    }

    SwitchSet at;
    for (int b = 0; b < k; ++b)
        if (best_switch >> b & 1) at.push_back(free_vertices[b]);
    return {Signature::from_mask(g.edge_count(), best), at};
}

std::vector<int> bridges(const Multigraph& g) {
    int n = g.vertex_count();
    std::vector<int> disc(n, -1), low(n, 0);
    std::vector<int> out;
    const auto& adj = g.adjacency();
    int timer = 0;

    // Iterative DFS; entry_edge is the edge id used to reach the vertex.
    struct Frame {
        int v;
        int entry_edge;
        std::size_t next;
    };
    std::vector<Frame> stack;
    for (int s = 0; s < n; ++s) {
        if (disc[s] != -1) continue;
        stack.push_back({s, -1, 0});
        disc[s] = low[s] = timer++;
        while (!stack.empty()) {
            Frame& f = stack.back();
            if (f.next < adj[f.v].size()) {
                auto [w, e] = adj[f.v][f.next++];
                if (e == f.entry_edge) continue;
                if (disc[w] == -1) {
                    disc[w] = low[w] = timer++;
                    stack.push_back({w, e, 0});
                } else {
                    low[f.v] = std::min(low[f.v], disc[w]);
                }
            } else {
                int v = f.v, entry = f.entry_edge;
                stack.pop_back();
                if (!stack.empty()) {
                    int p = stack.back().v;
                    low[p] = std::min(low[p], low[v]);
                    if (low[v] > disc[p]) out.push_back(entry);
                }
            }
        }
    }
    std::sort(out.begin(), out.end());
    return out;
}

namespace {

// A connected piece extracted as a standalone graph, with maps back to the
// host graph's ids.
struct Piece {
    Multigraph graph;
    Signature sigma;
    std::vector<int> vertex_ids;
    std::vector<int> edge_ids;
};

std::vector<Piece> split_components(const Multigraph& g, const Signature& s) {
    const auto& comp = g.component_of();
    std::vector<Piece> pieces;
    std::vector<int> piece_of(g.vertex_count(), -1);
    std::vector<int> local_id(g.vertex_count(), -1);
    for (int v = 0; v < g.vertex_count(); ++v) {
        if (comp[v] == v) {
            piece_of[v] = static_cast<int>(pieces.size());
            pieces.push_back({});
        }
    }
    std::vector<std::vector<Edge>> edges(pieces.size());
    for (int v = 0; v < g.vertex_count(); ++v) {
        Piece& p = pieces[piece_of[comp[v]]];
        local_id[v] = static_cast<int>(p.vertex_ids.size());
        p.vertex_ids.push_back(v);
    }
    for (int e = 0; e < g.edge_count(); ++e) {
        int pi = piece_of[comp[g.edge(e).u]];
        edges[pi].push_back({local_id[g.edge(e).u], local_id[g.edge(e).v]});
        pieces[pi].edge_ids.push_back(e);
    }
    for (std::size_t i = 0; i < pieces.size(); ++i) {
        pieces[i].graph = Multigraph(static_cast<int>(pieces[i].vertex_ids.size()),
                                     std::move(edges[i]));
        Signature sig(pieces[i].graph.edge_count());
        for (int le = 0; le < pieces[i].graph.edge_count(); ++le)
            sig.set_sign(le, s.sign(pieces[i].edge_ids[le]));
        pieces[i].sigma = sig;
    }
    return pieces;
}

bool component_equivalent_to_single_negative(const Multigraph& g, const Signature& s) {
    for (int e = 0; e < g.edge_count(); ++e) {
        Signature flipped = s;
        flipped.flip(e);
        if (is_balanced(g, flipped).balanced) return true;
    }
    return false;
}

bool bridge_has_balanced_side(const Multigraph& g, const Signature& s) {
    auto cut_edges = bridges(g);
    const auto& adj = g.adjacency();
    for (int b : cut_edges) {
        for (int side_root : {g.edge(b).u, g.edge(b).v}) {
            // gather the side of b containing side_root
            std::vector<char> seen(g.vertex_count(), 0);
            std::vector<int> stack{side_root};
            seen[side_root] = 1;
            while (!stack.empty()) {
                int v = stack.back();
                stack.pop_back();
                for (auto [w, e] : adj[v]) {
                    if (e == b || seen[w]) continue;
                    seen[w] = 1;
                    stack.push_back(w);
                }
            }
            // balance of the side's restricted signature, checked in place:
            // drop every edge not fully inside the side
            std::vector<Edge> side_edges;
            std::vector<int> side_edge_ids;
            std::vector<int> local(g.vertex_count(), -1);
            int nv = 0;
            for (int v = 0; v < g.vertex_count(); ++v)
                if (seen[v]) local[v] = nv++;
            for (int e = 0; e < g.edge_count(); ++e) {
                if (e == b) continue;
                if (seen[g.edge(e).u] && seen[g.edge(e).v]) {
                    side_edges.push_back({local[g.edge(e).u], local[g.edge(e).v]});
                    side_edge_ids.push_back(e);
                }
            }
            Multigraph side(nv, std::move(side_edges));
            Signature side_sig(side.edge_count());
            for (int le = 0; le < side.edge_count(); ++le)
                side_sig.set_sign(le, s.sign(side_edge_ids[le]));
            if (is_balanced(side, side_sig).balanced) return true;
        }
    }
    return false;
}

} // namespace

AdmissibilityResult is_flow_admissible(const Multigraph& g, const Signature& s) {
    if (g.edge_count() == 0) return {false, AdmissibilityReason::NoEdges};
    for (const Piece& p : split_components(g, s)) {
        if (p.graph.edge_count() == 0) continue;
        if (component_equivalent_to_single_negative(p.graph, p.sigma))
            return {false, AdmissibilityReason::SingleNegativeEdgeClass};
        if (bridge_has_balanced_side(p.graph, p.sigma))
            return {false, AdmissibilityReason::BridgeWithBalancedSide};
    }
    return {true, AdmissibilityReason::Admissible};
}

} // namespace signedflow
