#pragma once

#include <vector>

#include "circpow/rational.hpp"

namespace circpow {

struct LpSolution {
    Rational objective;
    std::vector<Rational> primal; // one value per column of A
    std::vector<Rational> dual;   // one value per row of A
};

// Maximizes c^T x subject to A x <= b, x >= 0 with exact rational pivoting
// and Bland's rule (so termination is guaranteed). Requires b >= 0, which
// makes the slack basis feasible; every program in this library has that
// shape. Throws Error on an unbounded program.
LpSolution simplex_max(const std::vector<std::vector<Rational>>& A,
                       const std::vector<Rational>& b, const std::vector<Rational>& c);

} // namespace circpow
