#include "circpow/simplex.hpp"

#include "circpow/errors.hpp"

namespace circpow {

LpSolution simplex_max(const std::vector<std::vector<Rational>>& A,
                       const std::vector<Rational>& b, const std::vector<Rational>& c) {
    const int m = static_cast<int>(A.size());
    const int n = static_cast<int>(c.size());
    for (int i = 0; i < m; ++i) {
        if (static_cast<int>(A[i].size()) != n) throw Error("ragged constraint matrix");
        if (b[i] < Rational(0)) throw Error("simplex_max requires b >= 0");
    }

    // Tableau columns: n structural, m slacks, rhs. Row m is the objective
    // (reduced costs); slack basis is feasible since b >= 0.
    std::vector<std::vector<Rational>> t(m + 1, std::vector<Rational>(n + m + 1));
    std::vector<int> basis(m);
    for (int i = 0; i < m; ++i) {
        for (int j = 0; j < n; ++j) t[i][j] = A[i][j];
        t[i][n + i] = Rational(1);
        t[i][n + m] = b[i];
        basis[i] = n + i;
    }
    for (int j = 0; j < n; ++j) t[m][j] = -c[j];

    while (true) {
        // Bland: entering column = smallest index with a negative reduced cost.
        int enter = -1;
        for (int j = 0; j < n + m; ++j)
            if (t[m][j] < Rational(0)) {
                enter = j;
                break;
            }
        if (enter < 0) break;

        // Ratio test; ties broken by smallest basic variable index (Bland).
        int leave = -1;
        Rational best;
        for (int i = 0; i < m; ++i) {
            if (!(t[i][enter] > Rational(0))) continue;
            Rational ratio = t[i][n + m] / t[i][enter];
            if (leave < 0 || ratio < best ||
                (ratio == best && basis[i] < basis[leave])) {
                leave = i;
                best = ratio;
            }
        }
        if (leave < 0) throw Error("linear program is unbounded");

        Rational pivot = t[leave][enter];
        for (auto& x : t[leave]) x /= pivot;
        for (int i = 0; i <= m; ++i) {
            if (i == leave) continue;
            Rational factor = t[i][enter];
            if (factor == Rational(0)) continue;
            for (int j = 0; j <= n + m; ++j) t[i][j] -= factor * t[leave][j];
        }
        basis[leave] = enter;
    }

    LpSolution out;
    out.objective = t[m][n + m];
    out.primal.assign(n, Rational(0));
    for (int i = 0; i < m; ++i)
        if (basis[i] < n) out.primal[basis[i]] = t[i][n + m];
    out.dual.assign(m, Rational(0));
    for (int i = 0; i < m; ++i) out.dual[i] = t[m][n + i];
    return out;
}

} // namespace circpow
