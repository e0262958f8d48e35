#include "signedflow/lp.hpp"

#include <cassert>
#include <stdexcept>

namespace signedflow {

namespace {

// Dense tableau: rows 0..m-1 are constraints (last column = rhs), row m is
// the reduced cost row (last column = -objective value).
struct Tableau {
    int m, n;
    std::vector<std::vector<Fraction>> t;
    std::vector<int> basis;

    void pivot(int row, int col) {
        Fraction p = t[row][col];
        for (auto& x : t[row]) x = x / p;
        for (int i = 0; i <= m; ++i) {
            if (i == row || t[i][col].is_zero()) continue;
            Fraction factor = t[i][col];
            for (int j = 0; j <= n; ++j) t[i][j] -= factor * t[row][j];
        }
        basis[row] = col;
    }

    // Bland's rule: entering = lowest-index negative reduced cost, leaving =
    // lowest basis index among minimum ratios. Returns false at optimality.
    bool step(LpStatus& status) {
        int col = -1;
        for (int j = 0; j < n; ++j) {
            if (t[m][j] < Fraction(0)) { col = j; break; }
        }
        if (col == -1) { status = LpStatus::Optimal; return false; }
        int row = -1;
        Fraction best_ratio;
        for (int i = 0; i < m; ++i) {
            if (t[i][col] > Fraction(0)) {
                Fraction ratio = t[i][n] / t[i][col];
                if (row == -1 || ratio < best_ratio ||
                    (ratio == best_ratio && basis[i] < basis[row])) {
                    row = i;
                    best_ratio = ratio;
                }
            }
        }
        if (row == -1) { status = LpStatus::Unbounded; return false; }
        pivot(row, col);
        return true;
    }
};

} // namespace

LpResult solve_lp_min(std::vector<std::vector<Fraction>> a, std::vector<Fraction> b,
                      std::vector<Fraction> c) {
    int m = static_cast<int>(a.size());
    int n = m == 0 ? static_cast<int>(c.size()) : static_cast<int>(a[0].size());
    for (int i = 0; i < m; ++i) {
        if (b[i] < Fraction(0)) {
            for (auto& x : a[i]) x = -x;
            b[i] = -b[i];
        }
    }

    // Phase 1: artificial variable per row, minimize their sum.
    Tableau tab;
    tab.m = m;
    tab.n = n + m;
    tab.t.assign(m + 1, std::vector<Fraction>(tab.n + 1));
    tab.basis.resize(m);
    for (int i = 0; i < m; ++i) {
        for (int j = 0; j < n; ++j) tab.t[i][j] = a[i][j];
        tab.t[i][n + i] = Fraction(1);
        tab.t[i][tab.n] = b[i];
        tab.basis[i] = n + i;
    }
    for (int j = n; j < tab.n; ++j) tab.t[m][j] = Fraction(1);
    for (int i = 0; i < m; ++i)
        for (int j = 0; j <= tab.n; ++j) tab.t[m][j] -= tab.t[i][j];

    LpStatus status = LpStatus::Optimal;
    while (tab.step(status)) {}
    if (status == LpStatus::Unbounded)
        throw std::logic_error("simplex: phase 1 unbounded");
    Fraction phase1 = -tab.t[m][tab.n];
    if (!phase1.is_zero()) return {LpStatus::Infeasible, Fraction(0), {}};

    // Drive remaining artificials out of the basis; a row with no real
    // column to pivot on is redundant and can be neutralized.
    for (int i = 0; i < m; ++i) {
        if (tab.basis[i] < n) continue;
        int col = -1;
        for (int j = 0; j < n; ++j)
            if (!tab.t[i][j].is_zero()) { col = j; break; }
        if (col != -1) tab.pivot(i, col);
    }

    // Phase 2: original objective over the real columns.
    for (int j = 0; j <= tab.n; ++j) tab.t[m][j] = Fraction(0);
    for (int j = 0; j < n; ++j) tab.t[m][j] = c[j];
    for (int i = 0; i < m; ++i) {
        if (tab.basis[i] < n && !tab.t[m][tab.basis[i]].is_zero()) {
            Fraction factor = tab.t[m][tab.basis[i]];
            for (int j = 0; j <= tab.n; ++j) tab.t[m][j] -= factor * tab.t[i][j];
        }
    }
    // forbid artificial columns from re-entering
    auto blocked = [&](int j) { return j >= n; };
    while (true) {
        int col = -1;
        for (int j = 0; j < n; ++j) {
            if (!blocked(j) && tab.t[m][j] < Fraction(0)) { col = j; break; }
        }
        if (col == -1) { status = LpStatus::Optimal; break; }
        int row = -1;
        Fraction best_ratio;
        for (int i = 0; i < m; ++i) {
            if (tab.t[i][col] > Fraction(0)) {
                Fraction ratio = tab.t[i][tab.n] / tab.t[i][col];
                if (row == -1 || ratio < best_ratio ||
                    (ratio == best_ratio && tab.basis[i] < tab.basis[row])) {
                    row = i;
                    best_ratio = ratio;
                }
            }
        }
        if (row == -1) return {LpStatus::Unbounded, Fraction(0), {}};
        tab.pivot(row, col);
    }

    std::vector<Fraction> x(n);
    for (int i = 0; i < m; ++i)
        if (tab.basis[i] < n) x[tab.basis[i]] = tab.t[i][tab.n];
    Fraction obj;
    for (int j = 0; j < n; ++j) obj += c[j] * x[j];
    return {LpStatus::Optimal, obj, std::move(x)};
}

} // namespace signedflow
