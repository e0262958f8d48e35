#pragma once

#include <cstdint>
#include <string>
#include <vector>

namespace signedflow {

// Endpoints of one edge. Parallel edges are permitted, loops are not.
struct Edge {
    int u;
    int v;
};

// Loop-free multigraph with dense edge ids 0..|E|-1.
class Multigraph {
public:
    Multigraph() : vertex_count_(0) {}
    Multigraph(int vertex_count, std::vector<Edge> edges);

    int vertex_count() const { return vertex_count_; }
    int edge_count() const { return static_cast<int>(edges_.size()); }
    const Edge& edge(int id) const { return edges_[id]; }
    const std::vector<Edge>& edges() const { return edges_; }

    int degree(int v) const;
    bool is_regular(int k) const;

    // For vertex v, the other endpoint of incident edge e.
    int other_end(int e, int v) const {
        return edges_[e].u == v ? edges_[e].v : edges_[e].u;
    }

    // adjacency()[v] lists (neighbor, edge id) pairs in ascending edge id
    // order. Built at construction; instances are immutable and safe to
    // share across workers.
    const std::vector<std::vector<std::pair<int, int>>>& adjacency() const { return adj_; }

    // component_of()[v] is the id of v's connected component; components are
    // numbered by their smallest vertex.
    const std::vector<int>& component_of() const { return comp_; }
    int component_count() const { return comp_count_; }

private:
    int vertex_count_;
    std::vector<Edge> edges_;
    std::vector<std::vector<std::pair<int, int>>> adj_;
    std::vector<int> comp_;
    int comp_count_ = 0;
};

// Per-edge sign. Together with a Multigraph this forms a SignedGraph.
class Signature {
public:
    Signature() = default;
    explicit Signature(int edge_count) : signs_(edge_count, +1) {}
    Signature(int edge_count, const std::vector<int>& negative_edges);

    int size() const { return static_cast<int>(signs_.size()); }
    int sign(int e) const { return signs_[e]; }
    bool is_negative(int e) const { return signs_[e] < 0; }
    void set_sign(int e, int s) { signs_[e] = static_cast<std::int8_t>(s); }
    void flip(int e) { signs_[e] = -signs_[e]; }

    std::vector<int> negative_set() const;
    int negative_count() const;

    // Negative set as a bitmask; requires size() <= 64.
    std::uint64_t mask() const;
    static Signature from_mask(int edge_count, std::uint64_t mask);

    friend bool operator==(const Signature& a, const Signature& b) {
        return a.signs_ == b.signs_;
    }

private:
    std::vector<std::int8_t> signs_;
};

struct SignedGraph {
    Multigraph graph;
    Signature sigma;
};

inline SignedGraph with_signature(const Multigraph& g, const Signature& s) {
    return SignedGraph{g, s};
}

inline SignedGraph with_empty_signature(const Multigraph& g) {
    return SignedGraph{g, Signature(g.edge_count())};
}

// A set of vertices to switch at.
using SwitchSet = std::vector<int>;

// Which end of an edge a half-edge sits at.
enum class End : std::uint8_t { AtU = 0, AtV = 1 };

struct HalfEdgeRef {
    int edge;
    End end;
};

// Compares edge sets "lexicographically as sorted id sequences":
// {0,3} < {1,2}. Returns true if a < b.
bool edge_set_less(const std::vector<int>& a, const std::vector<int>& b);

} // namespace signedflow
