#pragma once

#include "arith.hpp"

#include <optional>

namespace wrt {

using RatMatrix = std::vector<std::vector<Rational>>;  // row-major

// Solve A x = y by Gauss-Jordan elimination. A may be tall; nullopt if
// inconsistent or if the solution is not unique.
inline std::optional<std::vector<Rational>> solve_linear(RatMatrix A, std::vector<Rational> y) {
    const size_t rows = A.size();
    const size_t cols = rows ? A[0].size() : 0;
    ensure(y.size() == rows, "solve_linear: shape mismatch");
    std::vector<size_t> pivot_col;
    size_t r = 0;
    for (size_t c = 0; c < cols && r < rows; ++c) {
        size_t piv = r;
        while (piv < rows && A[piv][c] == 0) ++piv;
        if (piv == rows) return std::nullopt;
        std::swap(A[piv], A[r]);
        std::swap(y[piv], y[r]);
        Rational inv = 1 / A[r][c];
        for (size_t j = c; j < cols; ++j) A[r][j] *= inv;
        y[r] *= inv;
        for (size_t i = 0; i < rows; ++i) {
            if (i == r || A[i][c] == 0) continue;
            Rational f = A[i][c];
            for (size_t j = c; j < cols; ++j) A[i][j] -= f * A[r][j];
            y[i] -= f * y[r];
        }
        pivot_col.push_back(c);
        ++r;
    }
    if (r < cols) return std::nullopt;
    for (size_t i = r; i < rows; ++i)
        if (y[i] != 0) return std::nullopt;
    std::vector<Rational> x(cols);
    for (size_t i = 0; i < r; ++i) x[pivot_col[i]] = y[i];
    return x;
}

inline Rational determinant(RatMatrix A) {
    const size_t n = A.size();
    Rational det = 1;
    for (size_t c = 0; c < n; ++c) {
        size_t piv = c;
        while (piv < n && A[piv][c] == 0) ++piv;
        if (piv == n) return 0;
        if (piv != c) {
            std::swap(A[piv], A[c]);
            det = -det;
        }
        det *= A[c][c];
        for (size_t i = c + 1; i < n; ++i) {
            if (A[i][c] == 0) continue;
            Rational f = A[i][c] / A[c][c];
            for (size_t j = c; j < n; ++j) A[i][j] -= f * A[c][j];
        }
    }
    return det;
}

}  // namespace wrt
