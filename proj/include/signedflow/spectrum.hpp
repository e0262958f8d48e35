#pragma once

#include "signedflow/search.hpp"

#include <cstdint>
#include <optional>
#include <vector>

namespace signedflow {

// All switching classes of signatures of g: exactly 2^(|E|-|V|+c)
// representatives, pairwise inequivalent, in a deterministic order. Each
// representative is the minimum-|N| member of its coset (ties by
// lexicographically smallest negative set).
struct SignatureClassList {
    std::vector<Signature> representatives;
    int cut_space_rank;  // |V| - c
};

// rank_cap bounds the cycle space dimension |E|-|V|+c (class count 2^dim).
SignatureClassList signature_classes(const Multigraph& g, int rank_cap = 16,
                                     const SearchLimits& limits = {});

struct SpectrumEntry {
    Fraction value;
    Signature witness;
    FlowCertificate certificate;
    Completeness completeness;
};

struct SpectrumReport {
    bool integer_spectrum;
    std::vector<SpectrumEntry> entries;  // ascending by value
    int class_count;
    int non_admissible_classes;

    bool contains(const Fraction& r) const;
    std::vector<Fraction> values() const;
};

// Circular flow numbers attained over all flow-admissible signature
// classes, with one witness signature and verified certificate per value.
SpectrumReport flow_spectrum(const Multigraph& g, int q_max, const SearchLimits& limits = {},
                             int rank_cap = 16);

// Integer variant.
SpectrumReport integer_flow_spectrum(const Multigraph& g, const SearchLimits& limits = {},
                                     int rank_cap = 16);

// Spectra over the signatures with negative set contained in X, deduplicated
// by switching equivalence (switching generally leaves Sigma_X, so classes
// are filtered pairwise within the subset lattice).
SpectrumReport x_flow_spectrum(const Multigraph& g, const std::vector<int>& x_edges, int q_max,
                               const SearchLimits& limits = {});
SpectrumReport integer_x_flow_spectrum(const Multigraph& g, const std::vector<int>& x_edges,
                                       const SearchLimits& limits = {});

// True iff the signature with N = X has circular flow number exactly r and
// no proper subset of X attains r. r is a Fraction; values are compared at
// Farey order q_max.
bool is_r_minimal(const Multigraph& g, const std::vector<int>& x_edges, Fraction r, int q_max,
                  const SearchLimits& limits = {});

// All r-minimal sets of size <= size_cap, ascending by (size, lex).
std::vector<std::vector<int>> r_minimal_sets(const Multigraph& g, Fraction r, int size_cap,
                                             int q_max, const SearchLimits& limits = {},
                                             std::uint64_t subset_budget = 1u << 20);

// First r-minimal set in (size, lex) order, if any exists.
std::optional<std::vector<int>> smallest_r_minimal(const Multigraph& g, Fraction r, int q_max,
                                                   const SearchLimits& limits = {},
                                                   std::uint64_t subset_budget = 1u << 20);

} // namespace signedflow
