#pragma once

#include <cmath>
#include <vector>

#include "supermin/alg_scalar.hpp"

namespace supermin {

template <class S>
using Matrix = std::vector<std::vector<S>>;

namespace detail {

template <class S>
bool negligible(const S& x, double tol) {
    if constexpr (ScalarField<S>::exact)
        return ScalarField<S>::is_zero(x);
    else
        return std::abs(x) <= tol;
}

/// In-place reduced row echelon form; returns pivot columns.
template <class S>
std::vector<int> rref(Matrix<S>& a, double tol) {
    std::vector<int> pivots;
    const int rows = static_cast<int>(a.size());
    if (rows == 0) return pivots;
    const int cols = static_cast<int>(a[0].size());
    int r = 0;
    for (int c = 0; c < cols && r < rows; ++c) {
        int best = -1;
        double best_mag = 0.0;
        for (int i = r; i < rows; ++i) {
            if (negligible(a[i][c], tol)) continue;
            if constexpr (ScalarField<S>::exact) {
                best = i;
                break;
            } else {
                const double m = std::abs(a[i][c]);
                if (m > best_mag) {
                    best_mag = m;
                    best = i;
                }
            }
        }
        if (best < 0) continue;
        std::swap(a[r], a[best]);
        const S inv = ScalarField<S>::from_int(1) / a[r][c];
        for (int j = c; j < cols; ++j) a[r][j] = a[r][j] * inv;
        for (int i = 0; i < rows; ++i) {
            if (i == r || negligible(a[i][c], 0.0)) continue;
            const S factor = a[i][c];
            for (int j = c; j < cols; ++j) a[i][j] = a[i][j] - factor * a[r][j];
        }
        pivots.push_back(c);
        ++r;
    }
    return pivots;
}

}  // namespace detail

template <class S>
int rank(Matrix<S> a, double tol = 1e-10) {
    return static_cast<int>(detail::rref(a, tol).size());
}

/// Basis of {x : A x = 0}, one vector per free column.
template <class S>
std::vector<std::vector<S>> nullspace(Matrix<S> a, int cols, double tol = 1e-10) {
    const auto pivots = detail::rref(a, tol);
    std::vector<bool> is_pivot(static_cast<std::size_t>(cols), false);
    for (int c : pivots) is_pivot[c] = true;
    std::vector<std::vector<S>> basis;
    for (int free = 0; free < cols; ++free) {
        if (is_pivot[free]) continue;
        std::vector<S> v(static_cast<std::size_t>(cols));
        v[free] = ScalarField<S>::from_int(1);
        for (std::size_t r = 0; r < pivots.size(); ++r) v[pivots[r]] = -a[r][free];
        basis.push_back(std::move(v));
    }
    return basis;
}

}  // namespace supermin
