#pragma once

// Exact rational vectors and subspaces of Q^n. A Subspace stores its
// reduced row echelon basis, so subspace equality is structural.

#include <algorithm>
#include <cstddef>
#include <optional>
#include <string>
#include <vector>

#include <boost/multiprecision/cpp_int.hpp>

#include "cotoral/errors.hpp"

namespace cotoral {

using Rational = boost::multiprecision::cpp_rational;
using RatVector = std::vector<Rational>;
using RatMatrix = std::vector<RatVector>;

inline std::string to_string(const Rational& q) { return q.str(); }

/// Parses "p", "-p" or "p/q".
inline Rational parse_rational(const std::string& text) {
    auto valid_int = [](const std::string& s) {
        std::size_t i = (!s.empty() && (s[0] == '-' || s[0] == '+')) ? 1 : 0;
        if (i == s.size()) return false;
        return std::all_of(s.begin() + static_cast<std::ptrdiff_t>(i), s.end(),
                           [](char c) { return c >= '0' && c <= '9'; });
    };
    auto slash = text.find('/');
    std::string num = text.substr(0, slash);
    std::string den = slash == std::string::npos ? "1" : text.substr(slash + 1);
    if (!valid_int(num) || !valid_int(den)) throw ParseError("malformed rational '" + text + "'");
    boost::multiprecision::cpp_int n(num[0] == '+' ? num.substr(1) : num);
    boost::multiprecision::cpp_int d(den[0] == '+' ? den.substr(1) : den);
    if (d == 0) throw ParseError("zero denominator in '" + text + "'");
    return Rational(n, d);
}

inline bool is_zero(const RatVector& v) {
    return std::all_of(v.begin(), v.end(), [](const Rational& x) { return x == 0; });
}

/// Reduced row echelon form; zero rows removed.
inline RatMatrix rref(RatMatrix m, std::size_t cols) {
    std::size_t row = 0;
    for (std::size_t c = 0; c < cols && row < m.size(); ++c) {
        std::size_t p = row;
        while (p < m.size() && m[p][c] == 0) ++p;
        if (p == m.size()) continue;
        std::swap(m[row], m[p]);
        Rational inv = 1 / m[row][c];
        for (auto& x : m[row]) x *= inv;
        for (std::size_t i = 0; i < m.size(); ++i) {
            if (i == row || m[i][c] == 0) continue;
            Rational f = m[i][c];
            for (std::size_t j = 0; j < cols; ++j) m[i][j] -= f * m[row][j];
        }
        ++row;
    }
    m.resize(row);
    return m;
}

class Subspace {
public:
    Subspace() = default;

    static Subspace zero(std::size_t n) {
        Subspace s;
        s.n_ = n;
        return s;
    }

    static Subspace full(std::size_t n) {
        RatMatrix id(n, RatVector(n));
        for (std::size_t i = 0; i < n; ++i) id[i][i] = 1;
        return span(n, std::move(id));
    }

    static Subspace span(std::size_t n, RatMatrix vectors) {
        for (const auto& v : vectors)
            if (v.size() != n)
                throw DimensionError("vector of length " + std::to_string(v.size()) + " in Q^" + std::to_string(n));
        Subspace s;
        s.n_ = n;
        s.basis_ = rref(std::move(vectors), n);
        return s;
    }

    std::size_t ambient_dim() const noexcept { return n_; }
    std::size_t dim() const noexcept { return basis_.size(); }
    const RatMatrix& basis() const noexcept { return basis_; }
    bool is_zero() const noexcept { return basis_.empty(); }
    bool is_full() const noexcept { return basis_.size() == n_; }

    /// Coefficients of `v` in the echelon basis, if v lies in the subspace.
    std::optional<RatVector> coordinates(RatVector v) const {
        RatVector c(basis_.size());
        for (std::size_t i = 0; i < basis_.size(); ++i) {
            std::size_t p = 0;
            while (basis_[i][p] == 0) ++p;
            c[i] = v[p];
            if (c[i] != 0)
                for (std::size_t j = 0; j < n_; ++j) v[j] -= c[i] * basis_[i][j];
        }
        if (!cotoral::is_zero(v)) return std::nullopt;
        return c;
    }

    bool contains(const RatVector& v) const { return coordinates(v).has_value(); }

    bool contains(const Subspace& other) const {
        return std::all_of(other.basis_.begin(), other.basis_.end(), [&](const RatVector& v) { return contains(v); });
    }

    friend bool operator==(const Subspace&, const Subspace&) = default;

private:
    std::size_t n_ = 0;
    RatMatrix basis_;
};

inline Subspace subspace_sum(const Subspace& a, const Subspace& b) {
    RatMatrix rows = a.basis();
    rows.insert(rows.end(), b.basis().begin(), b.basis().end());
    return Subspace::span(a.ambient_dim(), std::move(rows));
}

/// Rational left kernel {z : z * m = 0} of an (rows x cols) matrix.
inline RatMatrix rational_left_kernel(const RatMatrix& m, std::size_t cols) {
    const std::size_t rows = m.size();
    RatMatrix aug(rows, RatVector(cols + rows));
    for (std::size_t i = 0; i < rows; ++i) {
        for (std::size_t j = 0; j < cols; ++j) aug[i][j] = m[i][j];
        aug[i][cols + i] = 1;
    }
    // echelon on the first `cols` columns, then the identity part of the zero rows is the kernel
    std::size_t row = 0;
    for (std::size_t c = 0; c < cols && row < rows; ++c) {
        std::size_t p = row;
        while (p < rows && aug[p][c] == 0) ++p;
        if (p == rows) continue;
        std::swap(aug[row], aug[p]);
        for (std::size_t i = row + 1; i < rows; ++i) {
            if (aug[i][c] == 0) continue;
            Rational f = aug[i][c] / aug[row][c];
            for (std::size_t j = 0; j < cols + rows; ++j) aug[i][j] -= f * aug[row][j];
        }
        ++row;
    }
    RatMatrix kernel;
    for (std::size_t i = row; i < rows; ++i) kernel.emplace_back(aug[i].begin() + static_cast<std::ptrdiff_t>(cols), aug[i].end());
    return kernel;
}

inline Subspace subspace_intersection(const Subspace& a, const Subspace& b) {
    const std::size_t n = a.ambient_dim();
    RatMatrix stacked = a.basis();
    stacked.insert(stacked.end(), b.basis().begin(), b.basis().end());
    RatMatrix rows;
    for (const auto& z : rational_left_kernel(stacked, n)) {
        RatVector v(n);
        for (std::size_t i = 0; i < a.dim(); ++i)
            for (std::size_t j = 0; j < n; ++j) v[j] += z[i] * a.basis()[i][j];
        rows.push_back(std::move(v));
    }
    return Subspace::span(n, std::move(rows));
}

/// Image of the subspace under v -> v * m (m is ambient x target).
inline Subspace subspace_image(const Subspace& s, const RatMatrix& m, std::size_t target_dim) {
    RatMatrix rows;
    for (const auto& v : s.basis()) {
        RatVector w(target_dim);
        for (std::size_t i = 0; i < v.size(); ++i)
            if (v[i] != 0)
                for (std::size_t j = 0; j < target_dim; ++j) w[j] += v[i] * m[i][j];
        rows.push_back(std::move(w));
    }
    return Subspace::span(target_dim, std::move(rows));
}

/// Inverse of a square matrix, or nothing if singular.
inline std::optional<RatMatrix> inverse(const RatMatrix& m) {
    const std::size_t n = m.size();
    RatMatrix aug(n, RatVector(2 * n));
    for (std::size_t i = 0; i < n; ++i) {
        if (m[i].size() != n) throw DimensionError("inverse of a non-square matrix");
        for (std::size_t j = 0; j < n; ++j) aug[i][j] = m[i][j];
        aug[i][n + i] = 1;
    }
    aug = rref(std::move(aug), 2 * n);
    if (aug.size() < n) return std::nullopt;
    for (std::size_t i = 0; i < n; ++i)
        if (aug[i][i] != 1) return std::nullopt;
    RatMatrix inv(n);
    for (std::size_t i = 0; i < n; ++i) inv[i].assign(aug[i].begin() + static_cast<std::ptrdiff_t>(n), aug[i].end());
    return inv;
}

/// Row vector times matrix.
inline RatVector times(const RatVector& v, const RatMatrix& m, std::size_t cols) {
    RatVector w(cols);
    for (std::size_t i = 0; i < v.size(); ++i)
        if (v[i] != 0)
            for (std::size_t j = 0; j < cols; ++j) w[j] += v[i] * m[i][j];
    return w;
}

/// Rank of a rational matrix.
inline std::size_t rank_of(const RatMatrix& m, std::size_t cols) { return rref(m, cols).size(); }

}  // namespace cotoral
