#include "signedflow/multigraph.hpp"

#include <algorithm>
#include <stdexcept>

namespace signedflow {

Multigraph::Multigraph(int vertex_count, std::vector<Edge> edges)
    : vertex_count_(vertex_count), edges_(std::move(edges)) {
    if (vertex_count_ < 0) throw std::invalid_argument("negative vertex count");
    for (std::size_t i = 0; i < edges_.size(); ++i) {
        const Edge& e = edges_[i];
        if (e.u < 0 || e.u >= vertex_count_ || e.v < 0 || e.v >= vertex_count_)
            throw std::invalid_argument("edge " + std::to_string(i) + ": endpoint out of range");
        if (e.u == e.v)
            throw std::invalid_argument("edge " + std::to_string(i) + ": loops are not allowed");
    }
    adj_.assign(vertex_count_, {});
    for (int e = 0; e < edge_count(); ++e) {
        adj_[edges_[e].u].emplace_back(edges_[e].v, e);
        adj_[edges_[e].v].emplace_back(edges_[e].u, e);
    }
    comp_.assign(vertex_count_, -1);
    std::vector<int> stack;
    for (int s = 0; s < vertex_count_; ++s) {
        if (comp_[s] != -1) continue;
        comp_[s] = s;
        ++comp_count_;
        stack.push_back(s);
        while (!stack.empty()) {
            int v = stack.back();
            stack.pop_back();
            for (auto [w, e] : adj_[v]) {
                (void)e;
                if (comp_[w] == -1) {
                    comp_[w] = s;
                    stack.push_back(w);
                }
            }
        }
    }
}

int Multigraph::degree(int v) const {
    int d = 0;
    for (const Edge& e : edges_)
        if (e.u == v || e.v == v) ++d;
    return d;
}

bool Multigraph::is_regular(int k) const {
    for (int v = 0; v < vertex_count_; ++v)
        if (degree(v) != k) return false;
    return true;
}

Signature::Signature(int edge_count, const std::vector<int>& negative_edges)
    : signs_(edge_count, +1) {
    for (int e : negative_edges) {
        if (e < 0 || e >= edge_count) throw std::invalid_argument("negative edge id out of range");
        signs_[e] = -1;
    }
}

std::vector<int> Signature::negative_set() const {
    std::vector<int> out;
    for (int e = 0; e < size(); ++e)
        if (signs_[e] < 0) out.push_back(e);
    return out;
}

int Signature::negative_count() const {
    int n = 0;
    for (auto s : signs_)
        if (s < 0) ++n;
    return n;
}

std::uint64_t Signature::mask() const {
    if (size() > 64) throw std::invalid_argument("Signature::mask requires <= 64 edges");
    std::uint64_t m = 0;
    for (int e = 0; e < size(); ++e)
        if (signs_[e] < 0) m |= std::uint64_t(1) << e;
    return m;
}

Signature Signature::from_mask(int edge_count, std::uint64_t mask) {
    Signature s(edge_count);
    for (int e = 0; e < edge_count; ++e)
        if (mask >> e & 1) s.signs_[e] = -1;
    return s;
}

bool edge_set_less(const std::vector<int>& a, const std::vector<int>& b) {
    return std::lexicographical_compare(a.begin(), a.end(), b.begin(), b.end());
}

} // namespace signedflow
