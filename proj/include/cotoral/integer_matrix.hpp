#pragma once

// Exact integer matrix kernels: row-style Hermite normal form, Smith
// invariant factors, integer left kernels and echelon back-substitution.
// Matrices are stored as vectors of rows.

#include <algorithm>
#include <cstddef>
#include <optional>
#include <utility>
#include <vector>

#include <boost/multiprecision/cpp_int.hpp>

namespace cotoral {

using Integer = boost::multiprecision::cpp_int;
using IntVector = std::vector<Integer>;
using IntMatrix = std::vector<IntVector>;

namespace detail {

inline Integer floor_div(const Integer& a, const Integer& b) {
    Integer q = a / b;
    if (q * b != a && ((a < 0) != (b < 0))) --q;
    return q;
}

inline Integer abs_value(const Integer& a) { return a < 0 ? Integer(-a) : a; }

inline void axpy_row(IntVector& dst, const Integer& q, const IntVector& src) {
    for (std::size_t j = 0; j < dst.size(); ++j) dst[j] -= q * src[j];
}

inline bool is_zero(const IntVector& v) {
    return std::all_of(v.begin(), v.end(), [](const Integer& x) { return x == 0; });
}

}  // namespace detail

/// Row-style Hermite normal form of the row span of `m` (all rows of width
/// `cols`). Pivots are positive, entries above a pivot lie in [0, pivot),
/// zero rows are dropped. The result is the unique canonical basis of the
/// row lattice.
inline IntMatrix hermite_rows(IntMatrix m, std::size_t cols) {
    std::size_t pivot_row = 0;
    for (std::size_t c = 0; c < cols && pivot_row < m.size(); ++c) {
        bool have_pivot = false;
        for (;;) {
            std::optional<std::size_t> best;
            for (std::size_t i = pivot_row; i < m.size(); ++i) {
                if (m[i][c] == 0) continue;
                if (!best || detail::abs_value(m[i][c]) < detail::abs_value(m[*best][c])) best = i;
            }
            if (!best) break;
            have_pivot = true;
            std::swap(m[pivot_row], m[*best]);
            bool cleared = true;
            for (std::size_t i = pivot_row + 1; i < m.size(); ++i) {
                if (m[i][c] == 0) continue;
                Integer q = m[i][c] / m[pivot_row][c];
                detail::axpy_row(m[i], q, m[pivot_row]);
                if (m[i][c] != 0) cleared = false;
            }
            if (cleared) break;
        }
        if (!have_pivot) continue;
        if (m[pivot_row][c] < 0)
            for (auto& x : m[pivot_row]) x = -x;
        const Integer& p = m[pivot_row][c];
        for (std::size_t i = 0; i < pivot_row; ++i) {
            Integer q = detail::floor_div(m[i][c], p);
            if (q != 0) detail::axpy_row(m[i], q, m[pivot_row]);
        }
        ++pivot_row;
    }
    m.resize(pivot_row);
    return m;
}

/// Column index of the first nonzero entry of each row of an echelon matrix.
inline std::vector<std::size_t> pivot_columns(const IntMatrix& echelon) {
    std::vector<std::size_t> pivots;
    pivots.reserve(echelon.size());
    for (const auto& row : echelon) {
        std::size_t c = 0;
        while (c < row.size() && row[c] == 0) ++c;
        pivots.push_back(c);
    }
    return pivots;
}

/// Integer coefficients c with c * echelon = v, if they exist.
inline std::optional<IntVector> echelon_coordinates(const IntMatrix& echelon, IntVector v) {
    IntVector coeffs(echelon.size());
    auto pivots = pivot_columns(echelon);
    for (std::size_t i = 0; i < echelon.size(); ++i) {
        const Integer& p = echelon[i][pivots[i]];
        if (v[pivots[i]] % p != 0) return std::nullopt;
        coeffs[i] = v[pivots[i]] / p;
        if (coeffs[i] != 0) detail::axpy_row(v, coeffs[i], echelon[i]);
    }
    if (!detail::is_zero(v)) return std::nullopt;
    return coeffs;
}

inline IntMatrix transpose(const IntMatrix& m, std::size_t cols) {
    IntMatrix t(cols, IntVector(m.size()));
    for (std::size_t i = 0; i < m.size(); ++i)
        for (std::size_t j = 0; j < cols; ++j) t[j][i] = m[i][j];
    return t;
}

/// Basis (in Hermite form) of the integer left kernel {z : z * m = 0}, where
/// `m` has m.size() rows and `cols` columns. Always a saturated lattice.
inline IntMatrix left_kernel(const IntMatrix& m, std::size_t cols) {
    const std::size_t rows = m.size();
    IntMatrix aug(rows, IntVector(cols + rows));
    for (std::size_t i = 0; i < rows; ++i) {
        for (std::size_t j = 0; j < cols; ++j) aug[i][j] = m[i][j];
        aug[i][cols + i] = 1;
    }
    aug = hermite_rows(std::move(aug), cols + rows);
    IntMatrix kernel;
    for (const auto& row : aug) {
        if (!std::all_of(row.begin(), row.begin() + static_cast<std::ptrdiff_t>(cols),
                         [](const Integer& x) { return x == 0; }))
            continue;
        kernel.emplace_back(row.begin() + static_cast<std::ptrdiff_t>(cols), row.end());
    }
    return hermite_rows(std::move(kernel), rows);
}

/// Nonzero Smith invariant factors d_1 | d_2 | ... of `m` (all positive).
inline std::vector<Integer> smith_diagonal(IntMatrix a, std::size_t cols) {
    const std::size_t rows = a.size();
    std::vector<Integer> diag;
    std::size_t t = 0;
    while (t < rows && t < cols) {
        // smallest nonzero entry of the trailing block becomes the pivot
        std::optional<std::pair<std::size_t, std::size_t>> best;
        for (std::size_t i = t; i < rows; ++i)
            for (std::size_t j = t; j < cols; ++j) {
                if (a[i][j] == 0) continue;
                if (!best || detail::abs_value(a[i][j]) < detail::abs_value(a[best->first][best->second]))
                    best = {i, j};
            }
        if (!best) break;
        std::swap(a[t], a[best->first]);
        for (auto& row : a) std::swap(row[t], row[best->second]);

        bool clean = false;
        while (!clean) {
            clean = true;
            for (std::size_t i = t + 1; i < rows; ++i) {
                if (a[i][t] == 0) continue;
                Integer q = a[i][t] / a[t][t];
                detail::axpy_row(a[i], q, a[t]);
                if (a[i][t] != 0) {
                    std::swap(a[t], a[i]);
                    clean = false;
                }
            }
            for (std::size_t j = t + 1; j < cols; ++j) {
                if (a[t][j] == 0) continue;
                Integer q = a[t][j] / a[t][t];
                for (std::size_t i = t; i < rows; ++i) a[i][j] -= q * a[i][t];
                if (a[t][j] != 0) {
                    for (auto& row : a) std::swap(row[t], row[j]);
                    clean = false;
                }
            }
        }
        diag.push_back(detail::abs_value(a[t][t]));
        ++t;
    }
    // diag(a, b) ~ diag(gcd, lcm): sweep until the divisibility chain holds
    for (std::size_t i = 0; i < diag.size(); ++i)
        for (std::size_t j = i + 1; j < diag.size(); ++j) {
            Integer g = boost::multiprecision::gcd(diag[i], diag[j]);
            Integer l = diag[i] / g * diag[j];
            diag[i] = g;
            diag[j] = l;
        }
    return diag;
}

}  // namespace cotoral
