#pragma once

#include "signedflow/fraction.hpp"

#include <vector>

namespace signedflow {

enum class LpStatus { Optimal, Infeasible, Unbounded };

struct LpResult {
    LpStatus status;
    Fraction objective;
    std::vector<Fraction> solution;
};

// Exact two-phase primal simplex with Bland's rule:
//     minimize c^T x  subject to  A x = b,  x >= 0.
// All arithmetic is rational, so the result is exact and termination is
// guaranteed. Intended for the small flow polytopes of this library.
LpResult solve_lp_min(std::vector<std::vector<Fraction>> a, std::vector<Fraction> b,
                      std::vector<Fraction> c);

} // namespace signedflow
