#include "signedflow/spectrum.hpp"

#include "signedflow/errors.hpp"
#include "signedflow/switching.hpp"

#include <algorithm>
#include <bit>
#include <functional>
#include <map>
#include <stdexcept>
#include <unordered_map>

namespace signedflow {

namespace {

std::uint64_t lowbit(std::uint64_t x) { return x & (~x + 1); }

// lexicographically smaller negative set wins ties at equal popcount
bool mask_less(std::uint64_t a, std::uint64_t b) {
    int pa = std::popcount(a), pb = std::popcount(b);
    if (pa != pb) return pa < pb;
    if (a == b) return false;
    return (a & lowbit(a ^ b)) != 0;
}

} // namespace

SignatureClassList signature_classes(const Multigraph& g, int rank_cap,
                                     const SearchLimits& limits) {
    (void)limits;
    int m = g.edge_count();
    if (m > 64) throw ResourceCapError("signature_classes: more than 64 edges");
    int dim = m - g.vertex_count() + g.component_count();
    if (dim > rank_cap) throw ResourceCapError("signature_classes: cycle space dimension above cap");

    // Cut space basis from the vertex cut vectors, reduced to row echelon
    // form over GF(2).
    std::vector<std::uint64_t> basis;
    std::vector<int> pivot_col;
    for (int v = 0; v < g.vertex_count(); ++v) {
        std::uint64_t row = 0;
        for (int e = 0; e < m; ++e)
            if (g.edge(e).u == v || g.edge(e).v == v) row ^= std::uint64_t(1) << e;
        for (std::size_t i = 0; i < basis.size(); ++i)
            if (row >> pivot_col[i] & 1) row ^= basis[i];
        if (row) {
            int pc = std::countr_zero(row);
            // keep echelon form: eliminate the new pivot from earlier rows
            for (std::size_t i = 0; i < basis.size(); ++i)
                if (basis[i] >> pc & 1) basis[i] ^= row;
            basis.push_back(row);
            pivot_col.push_back(pc);
        }
    }
    int rank = static_cast<int>(basis.size());

    std::vector<char> is_pivot(m, 0);
    for (int pc : pivot_col) is_pivot[pc] = 1;
    std::vector<int> free_cols;
    for (int e = 0; e < m; ++e)
        if (!is_pivot[e]) free_cols.push_back(e);

    // One coset per assignment of the free columns; within each coset the
    // minimum-|N| member is found by a Gray code walk over the basis.
    SignatureClassList out;
    out.cut_space_rank = rank;
    std::uint64_t count = std::uint64_t(1) << free_cols.size();
    for (std::uint64_t i = 0; i < count; ++i) {
        std::uint64_t rep = 0;
        for (std::size_t j = 0; j < free_cols.size(); ++j)
            if (i >> j & 1) rep |= std::uint64_t(1) << free_cols[j];
        std::uint64_t cur = rep, best = rep;
        for (std::uint64_t k = 1; k < (std::uint64_t(1) << rank); ++k) {
            cur ^= basis[std::countr_zero(k)];
            if (mask_less(cur, best)) best = cur;
        }
        out.representatives.push_back(Signature::from_mask(m, best));
    }
    return out;
}

bool SpectrumReport::contains(const Fraction& r) const {
    for (const auto& e : entries)
        if (e.value == r) return true;
    return false;
}

std::vector<Fraction> SpectrumReport::values() const {
    std::vector<Fraction> out;
    for (const auto& e : entries) out.push_back(e.value);
    return out;
}

namespace {

struct NumberResult {
    std::optional<Fraction> value;
    std::optional<FlowCertificate> cert;
    Completeness completeness;
};

SpectrumReport spectrum_over(const Multigraph& g, const std::vector<Signature>& reps,
                             bool integer_spectrum,
                             const std::function<NumberResult(const SignedGraph&)>& number) {
    SpectrumReport report;
    report.integer_spectrum = integer_spectrum;
    report.class_count = static_cast<int>(reps.size());
    report.non_admissible_classes = 0;
    std::map<Fraction, SpectrumEntry> by_value;
    for (const Signature& s : reps) {
        SignedGraph sg{g, s};
        if (!is_flow_admissible(sg).admissible) {
            ++report.non_admissible_classes;
            continue;
        }
        NumberResult r = number(sg);
        if (!r.value)
            throw std::logic_error("spectrum: admissible class with infinite flow number");
        if (!by_value.count(*r.value))
            by_value.emplace(*r.value,
                             SpectrumEntry{*r.value, s, std::move(*r.cert), r.completeness});
    }
    for (auto& [v, entry] : by_value) {
        (void)v;
        report.entries.push_back(std::move(entry));
    }
    return report;
}

} // namespace

SpectrumReport flow_spectrum(const Multigraph& g, int q_max, const SearchLimits& limits,
                             int rank_cap) {
    auto classes = signature_classes(g, rank_cap, limits);
    return spectrum_over(g, classes.representatives, false, [&](const SignedGraph& sg) {
        CircularFlowNumber c = circular_flow_number(sg, q_max, limits);
        return NumberResult{c.value, std::move(c.witness), c.completeness};
    });
}

SpectrumReport integer_flow_spectrum(const Multigraph& g, const SearchLimits& limits,
                                     int rank_cap) {
    auto classes = signature_classes(g, rank_cap, limits);
    return spectrum_over(g, classes.representatives, true, [&](const SignedGraph& sg) {
        IntegerFlowNumber f = integer_flow_number(sg, limits);
        std::optional<Fraction> v;
        if (f.value) v = Fraction(*f.value);
        return NumberResult{v, std::move(f.witness), Completeness::Exact};
    });
}

namespace {

std::vector<Signature> x_subset_representatives(const Multigraph& g,
                                                const std::vector<int>& x_edges,
                                                std::uint64_t subset_budget) {
    std::vector<int> x = x_edges;
    std::sort(x.begin(), x.end());
    if (std::unique(x.begin(), x.end()) != x.end())
        throw std::invalid_argument("x_flow_spectrum: duplicate edge ids in X");
    for (int e : x)
        if (e < 0 || e >= g.edge_count())
            throw std::invalid_argument("x_flow_spectrum: edge id out of range");
    if (x.size() >= 63 || (std::uint64_t(1) << x.size()) > subset_budget)
        throw ResourceCapError("x_flow_spectrum: 2^|X| above budget");

    // Enumerate subsets of X as negative sets and keep the first
    // representative of each switching class.
    std::vector<Signature> reps;
    for (std::uint64_t mask = 0; mask < (std::uint64_t(1) << x.size()); ++mask) {
        std::vector<int> neg;
        for (std::size_t j = 0; j < x.size(); ++j)
            if (mask >> j & 1) neg.push_back(x[j]);
        Signature s(g.edge_count(), neg);
        bool seen = false;
        for (const Signature& kept : reps) {
            if (equivalent(g, kept, s).equivalent) {
                seen = true;
                break;
            }
        }
        if (!seen) reps.push_back(std::move(s));
    }
    return reps;
}

} // namespace

SpectrumReport x_flow_spectrum(const Multigraph& g, const std::vector<int>& x_edges, int q_max,
                               const SearchLimits& limits) {
    auto reps = x_subset_representatives(g, x_edges, std::uint64_t(1) << 20);
    return spectrum_over(g, reps, false, [&](const SignedGraph& sg) {
        CircularFlowNumber c = circular_flow_number(sg, q_max, limits);
        return NumberResult{c.value, std::move(c.witness), c.completeness};
    });
}

SpectrumReport integer_x_flow_spectrum(const Multigraph& g, const std::vector<int>& x_edges,
                                       const SearchLimits& limits) {
    auto reps = x_subset_representatives(g, x_edges, std::uint64_t(1) << 20);
    return spectrum_over(g, reps, true, [&](const SignedGraph& sg) {
        IntegerFlowNumber f = integer_flow_number(sg, limits);
        std::optional<Fraction> v;
        if (f.value) v = Fraction(*f.value);
        return NumberResult{v, std::move(f.witness), Completeness::Exact};
    });
}

namespace {

// F_c(sg) == r, decided at Farey order q_max. Cheap rejections first: a
// nowhere-zero integer k-flow with k < r proves F_c <= k.
bool circular_flow_number_equals(const SignedGraph& sg, Fraction r, int q_max,
                                 const SearchLimits& limits) {
    if (r.den() > q_max) return false;  // r is not on the grid at all
    if (!is_flow_admissible(sg).admissible) return false;
    for (std::int64_t k = 2; Fraction(k) < r; ++k)
        if (exists_integer_nzflow(sg, static_cast<int>(k), limits)) return false;
    std::int64_t scale = q_max / r.den();
    std::int64_t q = r.den() * scale;
    std::int64_t p = r.num() * scale;
    auto x = find_scaled_flow(sg, q, p - q, limits);
    if (!x) return false;
    auto anchor = certificate_from_scaled(sg, *x, q, FlowKind::circular(r));
    auto below = circular_flow_number_from_anchor(sg, q_max, r, std::move(anchor), limits);
    return *below.value == r;
}

std::uint64_t edges_to_mask(const std::vector<int>& edges) {
    std::uint64_t m = 0;
    for (int e : edges) m |= std::uint64_t(1) << e;
    return m;
}

class RMinimalTester {
public:
    RMinimalTester(const Multigraph& g, Fraction r, int q_max, const SearchLimits& limits)
        : g_(g), r_(r), q_max_(q_max), limits_(limits) {}

    bool attains(std::uint64_t mask) {
        auto it = memo_.find(mask);
        if (it != memo_.end()) return it->second;
        Signature s = Signature::from_mask(g_.edge_count(), mask);
        bool result = circular_flow_number_equals({g_, s}, r_, q_max_, limits_);
        memo_.emplace(mask, result);
        return result;
    }

    // X attains r and no proper subset does.
    bool minimal(const std::vector<int>& x) {
        std::uint64_t mask = edges_to_mask(x);
        if (!attains(mask)) return false;
        if (mask == 0) return true;
        // iterate all proper submasks
        std::uint64_t sub = (mask - 1) & mask;
        while (true) {
            if (attains(sub)) return false;
            if (sub == 0) break;
            sub = (sub - 1) & mask;
        }
        return true;
    }

private:
    const Multigraph& g_;
    Fraction r_;
    int q_max_;
    SearchLimits limits_;
    std::unordered_map<std::uint64_t, bool> memo_;
};

void validate_edge_set(const Multigraph& g, const std::vector<int>& x) {
    for (int e : x)
        if (e < 0 || e >= g.edge_count())
            throw std::invalid_argument("edge id out of range");
    if (g.edge_count() > 62) throw ResourceCapError("r-minimal sets: more than 62 edges");
}

// Yields subsets of {0..m-1} ascending by (size, lex); callback returns
// true to continue.
template <typename F>
void for_each_subset_by_size(int m, int size_cap, std::uint64_t budget, F&& callback) {
    std::uint64_t examined = 0;
    for (int size = 0; size <= size_cap; ++size) {
        std::vector<int> comb(size);
        for (int i = 0; i < size; ++i) comb[i] = i;
        if (size > m) break;
        while (true) {
            if (++examined > budget)
                throw ResourceCapError("r-minimal sets: subset budget exceeded");
            if (!callback(static_cast<const std::vector<int>&>(comb))) return;
            // next combination
            int i = size - 1;
            while (i >= 0 && comb[i] == m - size + i) --i;
            if (i < 0) break;
            ++comb[i];
            for (int j = i + 1; j < size; ++j) comb[j] = comb[j - 1] + 1;
        }
    }
}

} // namespace

bool is_r_minimal(const Multigraph& g, const std::vector<int>& x_edges, Fraction r, int q_max,
                  const SearchLimits& limits) {
    validate_edge_set(g, x_edges);
    RMinimalTester tester(g, r, q_max, limits);
    std::vector<int> x = x_edges;
    std::sort(x.begin(), x.end());
    return tester.minimal(x);
}

std::vector<std::vector<int>> r_minimal_sets(const Multigraph& g, Fraction r, int size_cap,
                                             int q_max, const SearchLimits& limits,
                                             std::uint64_t subset_budget) {
    validate_edge_set(g, {});
    RMinimalTester tester(g, r, q_max, limits);
    std::vector<std::vector<int>> out;
    for_each_subset_by_size(g.edge_count(), size_cap, subset_budget,
                            [&](const std::vector<int>& x) {
                                if (tester.minimal(x)) out.push_back(x);
                                return true;
                            });
    return out;
}

std::optional<std::vector<int>> smallest_r_minimal(const Multigraph& g, Fraction r, int q_max,
                                                   const SearchLimits& limits,
                                                   std::uint64_t subset_budget) {
    validate_edge_set(g, {});
    RMinimalTester tester(g, r, q_max, limits);
    std::optional<std::vector<int>> out;
    for_each_subset_by_size(g.edge_count(), g.edge_count(), subset_budget,
                            [&](const std::vector<int>& x) {
                                if (tester.minimal(x)) {
                                    out = x;
                                    return false;
                                }
                                return true;
                            });
    return out;
}

} // namespace signedflow
