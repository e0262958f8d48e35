#include "signedflow/search.hpp"

#include "signedflow/errors.hpp"
#include "signedflow/lp.hpp"
#include "signedflow/switching.hpp"

#include <algorithm>
#include <cassert>
#include <numeric>
#include <queue>
#include <stdexcept>

namespace signedflow {

namespace {

using std::int64_t;
using std::uint64_t;

// Depth-first search over signed scaled values on the co-tree edges of a
// spanning forest, with interval propagation over the vertex boundary
// equations. Tree-edge values are never branched on: once the co-tree
// edges of a component are fixed, propagation forces the tree edges
// bottom-up (leaf elimination), so the search is exhaustive over the whole
// (orientation, value) space.
class ScaledFlowSearch {
public:
    ScaledFlowSearch(const SignedGraph& sg, int64_t lo, int64_t hi, const SearchLimits& limits)
        : g_(sg.graph), lo_(lo), hi_(hi), budget_(limits.node_budget) {
        if (lo_ < 1 || hi_ < lo_) throw std::invalid_argument("scaled flow search: bad value range");
        int m = g_.edge_count();
        Orientation ref = reference_orientation(g_, sg.sigma);
        vertex_terms_.assign(g_.vertex_count(), {});
        for (int e = 0; e < m; ++e) {
            vertex_terms_[g_.edge(e).u].emplace_back(e, ref.tau(e, End::AtU));
            vertex_terms_[g_.edge(e).v].emplace_back(e, ref.tau(e, End::AtV));
        }
        build_branch_order();
        dlo_.assign(m, -hi_);
        dhi_.assign(m, hi_);
        in_queue_.assign(g_.vertex_count(), 0);
    }

    // Returns true iff enumeration ran to exhaustion (callback never stopped it).
    bool run(const std::function<bool(const std::vector<int64_t>&)>& callback) {
        for (int v = 0; v < g_.vertex_count(); ++v) enqueue(v);
        if (!propagate()) return true;  // no flow at all
        return dfs(0, callback);
    }

private:
    void build_branch_order() {
        int n = g_.vertex_count(), m = g_.edge_count();
        std::vector<char> is_tree(m, 0);
        std::vector<int> parent_v(n, -1), parent_e(n, -1), depth(n, 0), seen(n, 0);
        const auto& adj = g_.adjacency();
        for (int root = 0; root < n; ++root) {
            if (seen[root]) continue;
            seen[root] = 1;
            std::queue<int> q;
            q.push(root);
            while (!q.empty()) {
                int v = q.front();
                q.pop();
                for (auto [w, e] : adj[v]) {
                    if (seen[w]) continue;
                    seen[w] = 1;
                    parent_v[w] = v;
                    parent_e[w] = e;
                    depth[w] = depth[v] + 1;
                    is_tree[e] = 1;
                    q.push(w);
                }
            }
        }
        // Branch on co-tree edges, longest fundamental cycle first (they sit
        // in the most tree-edge constraints), ties by edge id.
        std::vector<std::pair<int, int>> keyed;
        for (int e = 0; e < m; ++e) {
            if (is_tree[e]) continue;
            int a = g_.edge(e).u, b = g_.edge(e).v, len = 0;
            while (depth[a] > depth[b]) { a = parent_v[a]; ++len; }
            while (depth[b] > depth[a]) { b = parent_v[b]; ++len; }
            while (a != b) { a = parent_v[a]; b = parent_v[b]; len += 2; }
            keyed.emplace_back(-len, e);
        }
        std::sort(keyed.begin(), keyed.end());
        for (auto [k, e] : keyed) {
            (void)k;
            branch_order_.push_back(e);
        }
    }

    void enqueue(int v) {
        if (!in_queue_[v]) {
            in_queue_[v] = 1;
            queue_.push_back(v);
        }
    }

    // Clamp the interval of e to the value set {x : lo <= |x| <= hi}.
    bool snap(int e) {
        if (dlo_[e] < -hi_) dlo_[e] = -hi_;
        if (dhi_[e] > hi_) dhi_[e] = hi_;
        if (dlo_[e] > -lo_ && dlo_[e] < lo_) dlo_[e] = lo_;
        if (dhi_[e] > -lo_ && dhi_[e] < lo_) dhi_[e] = -lo_;
        return dlo_[e] <= dhi_[e];
    }

    // Bounds consistency over the vertex equations, to fixpoint.
    bool propagate() {
        while (!queue_.empty()) {
            int v = queue_.back();
            queue_.pop_back();
            in_queue_[v] = 0;
            int64_t smin = 0, smax = 0;
            for (auto [e, c] : vertex_terms_[v]) {
                if (c > 0) { smin += dlo_[e]; smax += dhi_[e]; }
                else { smin -= dhi_[e]; smax -= dlo_[e]; }
            }
            if (smin > 0 || smax < 0) { clear_queue(); return false; }
            for (auto [e, c] : vertex_terms_[v]) {
                int64_t tmin = c > 0 ? dlo_[e] : -dhi_[e];
                int64_t tmax = c > 0 ? dhi_[e] : -dlo_[e];
                int64_t rest_min = smin - tmin, rest_max = smax - tmax;
                // the term c*x must equal -rest
                int64_t xlo = c > 0 ? -rest_max : rest_min;
                int64_t xhi = c > 0 ? -rest_min : rest_max;
                int64_t old_lo = dlo_[e], old_hi = dhi_[e];
                if (xlo > dlo_[e]) dlo_[e] = xlo;
                if (xhi < dhi_[e]) dhi_[e] = xhi;
                if (!snap(e)) { clear_queue(); return false; }
                if (dlo_[e] != old_lo || dhi_[e] != old_hi) {
                    enqueue(g_.edge(e).u);
                    enqueue(g_.edge(e).v);
                }
            }
        }
        return true;
    }

    void clear_queue() {
        for (int v : queue_) in_queue_[v] = 0;
        queue_.clear();
    }

    bool dfs(std::size_t depth, const std::function<bool(const std::vector<int64_t>&)>& callback) {
        if (depth == branch_order_.size()) {
            std::vector<int64_t> x(g_.edge_count());
            for (int e = 0; e < g_.edge_count(); ++e) {
                if (dlo_[e] != dhi_[e])
                    throw std::logic_error("flow search: tree edge not forced at full depth");
                x[e] = dlo_[e];
            }
            return callback(x);
        }
        int e = branch_order_[depth];
        int64_t elo = dlo_[e], ehi = dhi_[e];
        std::vector<int64_t> saved_lo = dlo_, saved_hi = dhi_;
        for (int64_t mag = lo_; mag <= hi_; ++mag) {
            for (int sgn = +1; sgn >= -1; sgn -= 2) {
                // flows come in {x,-x} pairs: the first branch variable of a
                // solution can always be taken positive
                if (depth == 0 && sgn < 0) continue;
                int64_t val = sgn * mag;
                if (val < elo || val > ehi) continue;
                if (++nodes_ > budget_)
                    throw ResourceCapError("flow search: node budget exceeded");
                dlo_[e] = dhi_[e] = val;
                clear_queue();
                enqueue(g_.edge(e).u);
                enqueue(g_.edge(e).v);
                bool keep_going = true;
                if (propagate()) keep_going = dfs(depth + 1, callback);
                dlo_ = saved_lo;
                dhi_ = saved_hi;
                if (!keep_going) return false;
            }
        }
        return true;
    }

    const Multigraph& g_;
    int64_t lo_, hi_;
    uint64_t budget_;
    uint64_t nodes_ = 0;
    std::vector<std::vector<std::pair<int, int>>> vertex_terms_;
    std::vector<int> branch_order_;
    std::vector<int64_t> dlo_, dhi_;
    std::vector<int> queue_;
    std::vector<char> in_queue_;
};

} // namespace

std::optional<std::vector<int64_t>> find_scaled_flow(const SignedGraph& sg, int64_t lo,
                                                     int64_t hi, const SearchLimits& limits) {
    std::optional<std::vector<int64_t>> found;
    ScaledFlowSearch search(sg, lo, hi, limits);
    search.run([&found](const std::vector<int64_t>& x) {
        found = x;
        return false;
    });
    return found;
}

bool for_each_scaled_flow(const SignedGraph& sg, int64_t lo, int64_t hi,
                          const std::function<bool(const std::vector<int64_t>&)>& callback,
                          const SearchLimits& limits) {
    ScaledFlowSearch search(sg, lo, hi, limits);
    return search.run(callback);
}

FlowCertificate certificate_from_scaled(const SignedGraph& sg, const std::vector<int64_t>& x,
                                        int64_t q, FlowKind kind) {
    Flow f;
    f.orientation = reference_orientation(sg.graph, sg.sigma);
    f.values.resize(sg.graph.edge_count());
    for (int e = 0; e < sg.graph.edge_count(); ++e) {
        f.values[e] = Fraction(x[e] < 0 ? -x[e] : x[e], q);
        if (x[e] < 0) f.orientation.reverse_edge(e);
    }
    FlowCertificate cert{sg.graph, sg.sigma, std::move(f), kind, true};
    VerifyResult check = verify_flow(cert);
    if (!check.ok)
        throw std::logic_error("search produced an invalid certificate: " + check.violation);
    return cert;
}

std::optional<FlowCertificate> exists_integer_nzflow(const SignedGraph& sg, int k,
                                                     const SearchLimits& limits) {
    if (k < 2) throw std::invalid_argument("exists_integer_nzflow: k must be >= 2");
    auto x = find_scaled_flow(sg, 1, k - 1, limits);
    if (!x) return std::nullopt;
    return certificate_from_scaled(sg, *x, 1, FlowKind::integer(k));
}

std::optional<FlowCertificate> exists_pq_flow(const SignedGraph& sg, int64_t p, int64_t q,
                                              const SearchLimits& limits) {
    if (q < 1 || p <= 2 * q) throw std::invalid_argument("exists_pq_flow: need p > 2q >= 2");
    auto x = find_scaled_flow(sg, q, p - q, limits);
    if (!x) return std::nullopt;
    return certificate_from_scaled(sg, *x, q, FlowKind::circular(Fraction(p, q)));
}

namespace {

// Exhaustive search for modular flows: every edge is a branch variable,
// ordered so that vertices close early; a vertex whose incident edges are
// all assigned prunes on its residue.
class ModularSearch {
public:
    ModularSearch(const SignedGraph& sg, int64_t p, int64_t q, const SearchLimits& limits)
        : g_(sg.graph), p_(p), lo_(q), hi_(p - q), budget_(limits.node_budget) {
        Orientation ref = reference_orientation(g_, sg.sigma);
        int n = g_.vertex_count(), m = g_.edge_count();
        coeff_u_.resize(m);
        coeff_v_.resize(m);
        for (int e = 0; e < m; ++e) {
            coeff_u_[e] = ref.tau(e, End::AtU);
            coeff_v_[e] = ref.tau(e, End::AtV);
        }
        remaining_.assign(n, 0);
        sum_.assign(n, 0);
        for (int e = 0; e < m; ++e) {
            ++remaining_[g_.edge(e).u];
            ++remaining_[g_.edge(e).v];
        }
        // list each vertex's unlisted incident edges in id order
        std::vector<char> listed(m, 0);
        const auto& adj = g_.adjacency();
        for (int v = 0; v < n; ++v) {
            for (auto [w, e] : adj[v]) {
                (void)w;
                if (!listed[e]) {
                    listed[e] = 1;
                    order_.push_back(e);
                }
            }
        }
    }

    std::optional<std::vector<int64_t>> run() {
        values_.assign(g_.edge_count(), 0);
        std::optional<std::vector<int64_t>> found;
        dfs(0, found);
        return found;
    }

private:
    bool vertex_ok(int v) const { return sum_[v] % p_ == 0; }

    void dfs(std::size_t depth, std::optional<std::vector<int64_t>>& found) {
        if (found) return;
        if (depth == order_.size()) {
            found = values_;
            return;
        }
        int e = order_[depth];
        int u = g_.edge(e).u, v = g_.edge(e).v;
        for (int64_t mag = lo_; mag <= hi_ && !found; ++mag) {
            for (int sgn = +1; sgn >= -1; sgn -= 2) {
                if (depth == 0 && sgn < 0) continue;  // negation symmetry
                if (++nodes_ > budget_)
                    throw ResourceCapError("modular flow search: node budget exceeded");
                int64_t val = sgn * mag;
                values_[e] = val;
                sum_[u] += coeff_u_[e] * val;
                sum_[v] += coeff_v_[e] * val;
                --remaining_[u];
                --remaining_[v];
                bool ok = (remaining_[u] > 0 || vertex_ok(u)) &&
                          (remaining_[v] > 0 || vertex_ok(v));
                if (ok) dfs(depth + 1, found);
                ++remaining_[u];
                ++remaining_[v];
                sum_[u] -= coeff_u_[e] * val;
                sum_[v] -= coeff_v_[e] * val;
                if (found) return;
            }
        }
    }

    const Multigraph& g_;
    int64_t p_, lo_, hi_;
    uint64_t budget_;
    uint64_t nodes_ = 0;
    std::vector<int> coeff_u_, coeff_v_, order_;
    std::vector<int> remaining_;
    std::vector<int64_t> sum_;
    std::vector<int64_t> values_;
};

} // namespace

std::optional<FlowCertificate> exists_modular_flow(const SignedGraph& sg, int64_t p, int64_t q,
                                                   const SearchLimits& limits) {
    if (q < 1 || p <= 2 * q) throw std::invalid_argument("exists_modular_flow: need p > 2q >= 2");
    ModularSearch search(sg, p, q, limits);
    auto x = search.run();
    if (!x) return std::nullopt;
    Flow f;
    f.orientation = reference_orientation(sg.graph, sg.sigma);
    f.values.resize(sg.graph.edge_count());
    for (int e = 0; e < sg.graph.edge_count(); ++e) {
        f.values[e] = Fraction((*x)[e] < 0 ? -(*x)[e] : (*x)[e], q);
        if ((*x)[e] < 0) f.orientation.reverse_edge(e);
    }
    FlowCertificate cert{sg.graph, sg.sigma, std::move(f),
                         FlowKind::modular(Fraction(p, q)), true};
    VerifyResult check = verify_flow(cert);
    if (!check.ok)
        throw std::logic_error("modular search produced an invalid certificate: " + check.violation);
    return cert;
}

IntegerFlowNumber integer_flow_number(const SignedGraph& sg, const SearchLimits& limits) {
    if (!is_flow_admissible(sg).admissible) return {std::nullopt, std::nullopt};
    // Every flow-admissible signed graph has a nowhere-zero 30-flow, so an
    // ascent past 30 can only be a bug.
    for (int k = 2; k <= 30; ++k) {
        auto cert = exists_integer_nzflow(sg, k, limits);
        if (cert) return {k, std::move(cert)};
    }
    throw std::logic_error("integer_flow_number: admissible graph with no 30-flow");
}

namespace {

std::optional<FlowCertificate> probe_pq(const SignedGraph& sg, int64_t p, int64_t q,
                                        const SearchLimits& limits) {
    auto x = find_scaled_flow(sg, q, p - q, limits);
    if (!x) return std::nullopt;
    return certificate_from_scaled(sg, *x, q, FlowKind::circular(Fraction(p, q)));
}

} // namespace

CircularFlowNumber circular_flow_number_from_anchor(const SignedGraph& sg, int q_max,
                                                    Fraction anchor, FlowCertificate anchor_witness,
                                                    const SearchLimits& limits) {
    // Binary search over the Farey values of order q_max, stratified by
    // denominator: at a fixed q, existence of a (p,q)-flow is genuinely
    // monotone in p (the value window [q, p-q] only grows), whereas across
    // denominators the searched grids do not nest. For each q we check
    // whether denominator q improves on the best ratio so far, and if so
    // binary-search the least such p. The anchor bounds the search from
    // above; its certificate must already verify at the anchor value.
    Fraction best = anchor;
    std::optional<FlowCertificate> witness = std::move(anchor_witness);
    witness->kind = FlowKind::circular(best);
    for (int64_t q = 1; q <= q_max; ++q) {
        // largest p with p/q < best
        int64_t hi = (best.num() * q - 1) / best.den();
        int64_t lo = 2 * q;
        if (hi < lo) continue;
        auto top = probe_pq(sg, hi, q, limits);
        if (!top) continue;
        while (lo < hi) {
            int64_t mid = lo + (hi - lo) / 2;
            auto cert = probe_pq(sg, mid, q, limits);
            if (cert) {
                top = std::move(cert);
                hi = mid;
            } else {
                lo = mid + 1;
            }
        }
        best = Fraction(hi, q);
        witness = std::move(top);
        witness->kind = FlowKind::circular(best);
    }
    return {best, Completeness::UpperBoundAtQmax, std::move(witness)};
}

CircularFlowNumber circular_flow_number(const SignedGraph& sg, int q_max,
                                        const SearchLimits& limits, bool confirm_with_exact) {
    if (q_max < 1) throw std::invalid_argument("circular_flow_number: q_max must be >= 1");
    if (!is_flow_admissible(sg).admissible)
        return {std::nullopt, Completeness::Exact, std::nullopt};

    IntegerFlowNumber f = integer_flow_number(sg, limits);
    CircularFlowNumber out = circular_flow_number_from_anchor(sg, q_max, Fraction(*f.value),
                                                              std::move(*f.witness), limits);
    if (confirm_with_exact && sg.graph.edge_count() <= limits.exact_edge_cap) {
        auto oracle = circular_flow_number_exact(sg, limits);
        if (!oracle || *oracle != *out.value)
            throw std::logic_error(
                "circular flow number discrepancy: search found " + out.value->str() +
                ", exact oracle found " + (oracle ? oracle->str() : std::string("infinity)")));
        out.completeness = Completeness::Exact;
    }
    return out;
}

std::optional<Fraction> circular_flow_number_exact(const SignedGraph& sg,
                                                   const SearchLimits& limits,
                                                   bool reverse_order) {
    if (!is_flow_admissible(sg).admissible) return std::nullopt;
    int m = sg.graph.edge_count();
    int n = sg.graph.vertex_count();
    if (m > limits.exact_edge_cap)
        throw ResourceCapError("circular_flow_number_exact: edge cap exceeded");

    Orientation ref = reference_orientation(sg.graph, sg.sigma);
    std::optional<Fraction> best;

    // Variables: y_e = f_e - 1 (m), slack s_e (m), rho = r - 2.
    int cols = 2 * m + 1;
    std::uint64_t total = std::uint64_t(1) << m;
    for (std::uint64_t step = 0; step < total; ++step) {
        std::uint64_t mask = reverse_order ? total - 1 - step : step;
        std::vector<std::vector<Fraction>> a(n + m, std::vector<Fraction>(cols));
        std::vector<Fraction> b(n + m);
        for (int e = 0; e < m; ++e) {
            int flip = (mask >> e & 1) ? -1 : +1;
            int cu = flip * ref.tau(e, End::AtU);
            int cv = flip * ref.tau(e, End::AtV);
            a[sg.graph.edge(e).u][e] += Fraction(cu);
            a[sg.graph.edge(e).v][e] += Fraction(cv);
            b[sg.graph.edge(e).u] -= Fraction(cu);
            b[sg.graph.edge(e).v] -= Fraction(cv);
            // y_e - rho + s_e = 0
            a[n + e][e] = Fraction(1);
            a[n + e][m + e] = Fraction(1);
            a[n + e][2 * m] = Fraction(-1);
        }
        std::vector<Fraction> c(cols);
        c[2 * m] = Fraction(1);
        LpResult lp = solve_lp_min(std::move(a), std::move(b), std::move(c));
        if (lp.status == LpStatus::Infeasible) continue;
        if (lp.status != LpStatus::Optimal)
            throw std::logic_error("circular_flow_number_exact: unbounded flow LP");
        Fraction r = Fraction(2) + lp.objective;
        if (!best || r < *best) best = r;
    }
    if (!best) throw std::logic_error("circular_flow_number_exact: admissible but no orientation feasible");
    return best;
}

} // namespace signedflow
