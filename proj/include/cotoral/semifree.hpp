#pragma once

// Semifree rational T-spectra (T the circle) through their algebraic model:
// a wide sphere is an injective Q[c]-map N -> Q[c,c^-1] (x) V with V finite
// dimensional and N bounded above. Degrees of one parity are collapsed into
// |V| by powers of c, and N becomes a decreasing filtration
//
//   0 = Nbar_{2a} <= ... <= Nbar_{i+2} <= Nbar_i <= ... <= Nbar_{2b} = |V|
//
// stored here per parity on a fixed basis of |V| ordered by ascending degree
// blocks. c has degree -2, so S^0 has Nbar_i = |V| for i <= 0 and 0 above.

#include <algorithm>
#include <array>
#include <cstddef>
#include <map>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "cotoral/errors.hpp"
#include "cotoral/rational.hpp"

namespace cotoral {

inline int parity_of(int degree) { return ((degree % 2) + 2) % 2; }

/// Laurent polynomial with non-negative coefficients; no zero coefficients stored.
using LaurentPoly = std::map<int, std::size_t>;

inline LaurentPoly shift(const LaurentPoly& p, int by) {
    LaurentPoly out;
    for (const auto& [e, c] : p) out[e + by] = c;
    return out;
}

class ParityPart {
public:
    ParityPart() = default;
    explicit ParityPart(int parity) : parity_(parity) {}

    /// Validates and canonicalizes. `filtration` is a step function: Nbar_i is
    /// the entry at the greatest key <= i, and |V| below every key.
    static ParityPart make(int parity, const std::map<int, std::size_t>& v_dims,
                           const std::map<int, Subspace>& filtration) {
        if (parity != 0 && parity != 1) throw ValidationError("parity must be 0 or 1");
        ParityPart part(parity);
        for (const auto& [d, n] : v_dims) {
            if (parity_of(d) != parity)
                throw ValidationError("degree " + std::to_string(d) + " in the wrong parity part");
            if (n > 0) part.v_dims_[d] = n;
            part.total_ += n;
        }
        Subspace prev = Subspace::full(part.total_);
        for (const auto& [i, s] : filtration) {
            if (parity_of(i) != parity)
                throw ValidationError("filtration degree " + std::to_string(i) + " in the wrong parity part");
            if (s.ambient_dim() != part.total_)
                throw DimensionError("filtration subspace at degree " + std::to_string(i) + " lives in Q^" +
                                     std::to_string(s.ambient_dim()) + ", |V| has dimension " +
                                     std::to_string(part.total_));
            if (!prev.contains(s))
                throw ValidationError("filtration is not decreasing at degree " + std::to_string(i));
            if (!(s == prev)) part.jumps_[i] = s;
            prev = s;
        }
        if (!prev.is_zero()) throw ValidationError("Nbar_i must vanish in high degrees (N bounded above)");
        return part;
    }

    int parity() const noexcept { return parity_; }
    const std::map<int, std::size_t>& v_dims() const noexcept { return v_dims_; }
    std::size_t total() const noexcept { return total_; }
    /// Degrees where Nbar changes, with the new value.
    const std::map<int, Subspace>& jumps() const noexcept { return jumps_; }
    bool empty() const noexcept { return total_ == 0; }

    Subspace filtration(int degree) const {
        auto it = jumps_.upper_bound(degree);
        if (it == jumps_.begin()) return Subspace::full(total_);
        return std::prev(it)->second;
    }

    std::size_t block_dim(int degree) const {
        auto it = v_dims_.find(degree);
        return it == v_dims_.end() ? 0 : it->second;
    }

    std::size_t block_offset(int degree) const {
        std::size_t off = 0;
        for (const auto& [d, n] : v_dims_) {
            if (d >= degree) break;
            off += n;
        }
        return off;
    }

    /// Degree of each coordinate of |V|.
    std::vector<int> coordinate_degrees() const {
        std::vector<int> out;
        out.reserve(total_);
        for (const auto& [d, n] : v_dims_) out.insert(out.end(), n, d);
        return out;
    }

    RatVector embed_block(int degree, const RatVector& block) const {
        if (block.size() != block_dim(degree))
            throw DimensionError("block vector has " + std::to_string(block.size()) + " entries, V_" +
                                 std::to_string(degree) + " has dimension " + std::to_string(block_dim(degree)));
        RatVector v(total_);
        std::copy(block.begin(), block.end(), v.begin() + static_cast<std::ptrdiff_t>(block_offset(degree)));
        return v;
    }

    /// Coordinate subspace V_{<= degree}.
    Subspace blocks_up_to(int degree) const {
        std::size_t upto = block_offset(degree) + block_dim(degree);
        RatMatrix rows;
        for (std::size_t i = 0; i < upto; ++i) {
            RatVector e(total_);
            e[i] = 1;
            rows.push_back(std::move(e));
        }
        return Subspace::span(total_, std::move(rows));
    }

    Subspace block(int degree) const {
        RatMatrix rows;
        for (std::size_t i = 0; i < block_dim(degree); ++i) {
            RatVector e(total_);
            e[block_offset(degree) + i] = 1;
            rows.push_back(std::move(e));
        }
        return Subspace::span(total_, std::move(rows));
    }

    friend bool operator==(const ParityPart&, const ParityPart&) = default;

private:
    int parity_ = 0;
    std::map<int, std::size_t> v_dims_;
    std::size_t total_ = 0;
    std::map<int, Subspace> jumps_;
};

class WideSphere {
public:
    WideSphere() : parts_{ParityPart(0), ParityPart(1)} {}

    WideSphere(ParityPart even, ParityPart odd) : parts_{std::move(even), std::move(odd)} {
        if (parts_[0].parity() != 0 || parts_[1].parity() != 1)
            throw ValidationError("wide sphere parts must be (even, odd)");
    }

    const ParityPart& even() const noexcept { return parts_[0]; }
    const ParityPart& odd() const noexcept { return parts_[1]; }
    const ParityPart& part(int parity) const { return parts_.at(static_cast<std::size_t>(parity)); }

    std::size_t total_dim() const noexcept { return parts_[0].total() + parts_[1].total(); }
    bool is_zero() const noexcept { return total_dim() == 0; }

    friend bool operator==(const WideSphere&, const WideSphere&) = default;

private:
    std::array<ParityPart, 2> parts_;
};

inline WideSphere with_part(const WideSphere& x, ParityPart p) {
    return p.parity() == 0 ? WideSphere(std::move(p), x.odd()) : WideSphere(x.even(), std::move(p));
}

// ---------------------------------------------------------------------------
// basic objects and polynomials

/// The T-fixed sphere S^n.
inline WideSphere fixed_sphere(int n) {
    int p = parity_of(n);
    auto part = ParityPart::make(p, {{n, 1}}, {{n + 2, Subspace::zero(1)}});
    return with_part(WideSphere(), std::move(part));
}

/// p_T(t) = sum dim V_i t^i.
inline LaurentPoly fixed_point_poly(const WideSphere& x) {
    LaurentPoly p;
    for (int par : {0, 1})
        for (const auto& [d, n] : x.part(par).v_dims()) p[d] += n;
    return p;
}

/// p_1(t) = sum dim(Nbar_i / Nbar_{i+2}) t^i.
inline LaurentPoly borel_jump_poly(const WideSphere& x) {
    LaurentPoly p;
    for (int par : {0, 1}) {
        const auto& part = x.part(par);
        if (part.jumps().empty()) continue;
        int lo = part.jumps().begin()->first - 2;
        int hi = part.jumps().rbegin()->first;
        for (int i = lo; i <= hi; i += 2) {
            std::size_t jump = part.filtration(i).dim() - part.filtration(i + 2).dim();
            if (jump > 0) p[i] += jump;
        }
    }
    return p;
}

// ---------------------------------------------------------------------------
// structural operations

namespace detail {

inline RatVector scatter(const RatVector& v, const std::vector<std::size_t>& index, std::size_t n) {
    RatVector out(n);
    for (std::size_t i = 0; i < v.size(); ++i) out[index[i]] = v[i];
    return out;
}

inline Subspace scatter(const Subspace& s, const std::vector<std::size_t>& index, std::size_t n) {
    RatMatrix rows;
    for (const auto& v : s.basis()) rows.push_back(scatter(v, index, n));
    return Subspace::span(n, std::move(rows));
}

inline ParityPart shifted(const ParityPart& p, int v_shift, int filtration_shift) {
    std::map<int, std::size_t> dims;
    for (const auto& [d, n] : p.v_dims()) dims[d + v_shift] = n;
    std::map<int, Subspace> filt;
    for (const auto& [i, s] : p.jumps()) filt[i + filtration_shift] = s;
    return ParityPart::make(parity_of(p.parity() + v_shift), dims, filt);
}

inline ParityPart direct_sum(const ParityPart& a, const ParityPart& b) {
    std::map<int, std::size_t> dims = a.v_dims();
    for (const auto& [d, n] : b.v_dims()) dims[d] += n;
    std::vector<std::size_t> ia, ib;
    std::size_t pos = 0;
    for (const auto& [d, n] : dims) {
        for (std::size_t i = 0; i < a.block_dim(d); ++i) ia.push_back(pos++);
        for (std::size_t i = 0; i < b.block_dim(d); ++i) ib.push_back(pos++);
    }
    std::map<int, Subspace> filt;
    auto add_key = [&](int i) {
        filt[i] = subspace_sum(scatter(a.filtration(i), ia, pos), scatter(b.filtration(i), ib, pos));
    };
    for (const auto& kv : a.jumps()) add_key(kv.first);
    for (const auto& kv : b.jumps()) add_key(kv.first);
    return ParityPart::make(a.parity(), dims, filt);
}

/// |V| / Q v for v supported in the block of `degree`; the coordinate of the
/// first nonzero entry of v is eliminated, other coordinates keep their order.
inline ParityPart quotient_by(const ParityPart& p, int degree, const RatVector& v) {
    const std::size_t n = p.total();
    std::size_t j = p.block_offset(degree);
    while (v[j] == 0) ++j;
    RatMatrix proj(n, RatVector(n - 1));
    for (std::size_t i = 0; i < n; ++i) {
        if (i == j) {
            for (std::size_t l = 0; l < n; ++l)
                if (l != j) proj[i][l < j ? l : l - 1] = -v[l] / v[j];
        } else {
            proj[i][i < j ? i : i - 1] = 1;
        }
    }
    std::map<int, std::size_t> dims = p.v_dims();
    dims[degree] -= 1;
    std::map<int, Subspace> filt;
    for (const auto& [i, s] : p.jumps()) filt[i] = subspace_image(s, proj, n - 1);
    return ParityPart::make(p.parity(), dims, filt);
}

/// Extension by one new basis vector iota in degree m (appended to its
/// block): Nbar_i gains iota + wbar for every i <= m.
inline ParityPart extend(const ParityPart& p, int m, const RatVector& wbar) {
    const std::size_t n = p.total();
    if (wbar.size() != n)
        throw DimensionError("extension class has " + std::to_string(wbar.size()) + " entries, |V| has dimension " +
                             std::to_string(n));
    const std::size_t pos = p.block_offset(m) + p.block_dim(m);
    std::vector<std::size_t> index(n);
    for (std::size_t i = 0; i < n; ++i) index[i] = i < pos ? i : i + 1;
    RatVector g = scatter(wbar, index, n + 1);
    g[pos] = 1;
    std::map<int, std::size_t> dims = p.v_dims();
    dims[m] += 1;
    std::map<int, Subspace> filt;
    auto value_at = [&](int i) {
        Subspace s = scatter(p.filtration(i), index, n + 1);
        return i <= m ? subspace_sum(s, Subspace::span(n + 1, {g})) : s;
    };
    for (const auto& kv : p.jumps()) filt[kv.first] = value_at(kv.first);
    filt[m + 2] = value_at(m + 2);
    return ParityPart::make(p.parity(), dims, filt);
}

}  // namespace detail

inline WideSphere wedge(const WideSphere& x, const WideSphere& y) {
    return {detail::direct_sum(x.even(), y.even()), detail::direct_sum(x.odd(), y.odd())};
}

/// Shifts every degree by n; odd n exchanges the parity parts.
inline WideSphere suspend(const WideSphere& x, int n) {
    ParityPart a = detail::shifted(x.even(), n, n);
    ParityPart b = detail::shifted(x.odd(), n, n);
    if (parity_of(n) == 0) return {std::move(a), std::move(b)};
    return {std::move(b), std::move(a)};
}

/// Smash with S^{kz}: V is unchanged and N becomes c^{-k} N, i.e. Nbar'_i = Nbar_{i-2k}.
inline WideSphere twist(const WideSphere& x, int k) {
    return {detail::shifted(x.even(), 0, 2 * k), detail::shifted(x.odd(), 0, 2 * k)};
}

/// The representation sphere S^{kz}.
inline WideSphere rep_sphere(int k) { return twist(fixed_sphere(0), k); }

// ---------------------------------------------------------------------------
// membership conditions

struct ConditionFailure {
    /// 1: p_1 != t^{2k} p_T.  2: V_{<=i} meets Nbar_{i+2k+2}.
    int condition = 0;
    int degree = 0;

    friend bool operator==(const ConditionFailure&, const ConditionFailure&) = default;
};

struct TwistCheck {
    bool holds = true;
    std::optional<ConditionFailure> failure;
};

/// Membership in thick(S^{kz}).
///
/// (1) p_1(t) = t^{2k} p_T(t), the sign fixed by S^{kz} itself being k-twisted.
/// (2) for every degree i, V_{<=i} n Nbar_{i+2k+2} = 0. For k = 0 this is
///     (Q[c^-1] (x) V) n cN = 0; degreewise V_i n Nbar_{i+2} = 0 alone is not
///     closed under the cofibre constructions (see tests).
inline TwistCheck is_k_twisted(const WideSphere& x, int k) {
    LaurentPoly pt = shift(fixed_point_poly(x), 2 * k);
    LaurentPoly p1 = borel_jump_poly(x);
    if (pt != p1) {
        std::optional<int> first;
        auto note = [&](int e) {
            if (!first || e < *first) first = e;
        };
        for (const auto& [e, c] : pt)
            if (!p1.contains(e) || p1.at(e) != c) note(e - 2 * k);
        for (const auto& [e, c] : p1)
            if (!pt.contains(e)) note(e - 2 * k);
        return {false, ConditionFailure{1, *first}};
    }
    std::optional<int> bad;
    for (int par : {0, 1}) {
        const auto& part = x.part(par);
        for (const auto& [d, n] : part.v_dims()) {
            if (bad && d >= *bad) break;
            if (!subspace_intersection(part.blocks_up_to(d), part.filtration(d + 2 * k + 2)).is_zero()) {
                bad = d;
                break;
            }
        }
    }
    if (bad) return {false, ConditionFailure{2, *bad}};
    return {true, std::nullopt};
}

inline TwistCheck is_untwisted(const WideSphere& x) { return is_k_twisted(x, 0); }

/// X lies in the thick subcategory generated by S^{kz}. Contrast with
/// ideal_contains: as thick tensor ideals S^0 already generates everything
/// with isotropy {1, T}.
inline bool in_thick_of_sphere(const WideSphere& x, int k) { return is_k_twisted(x, k).holds; }

// ---------------------------------------------------------------------------
// cofibres, summands, change of basis

/// Data of a map f: S^n -> X.
struct AttachingDatum {
    /// Component into the part of the same parity as n: an element of V_n in
    /// block coordinates. It must lie in Nbar_n (so the map exists).
    std::optional<RatVector> fixed_component;
    /// Component into the other parity: the extension class of the cofibre,
    /// a vector of that part's |V| taken modulo Nbar_{n+1}.
    std::optional<RatVector> extension;
};

/// Cofibre Y of f: S^n -> X. A nonzero same-parity component splits off a
/// free summand (Y is a retract of X in that parity, the other parity is
/// untouched); otherwise Y is the extension of X by S^{n+1} with the given
/// class, zero giving X v S^{n+1}.
inline WideSphere attach_fixed_sphere(const WideSphere& x, int n, const AttachingDatum& f) {
    const int p = parity_of(n);
    const ParityPart& same = x.part(p);
    if (f.fixed_component && !is_zero(*f.fixed_component)) {
        RatVector v = same.embed_block(n, *f.fixed_component);
        if (!same.filtration(n).contains(v))
            throw ValidationError("no map S^" + std::to_string(n) + " -> X with this component: vector not in Nbar_" +
                                  std::to_string(n));
        if (same.filtration(n + 2).contains(v))
            throw ValidationError("attaching vector lies in Nbar_" + std::to_string(n + 2) +
                                  "; the cofibre is not a wide sphere");
        return with_part(x, detail::quotient_by(same, n, v));
    }
    const ParityPart& other = x.part(1 - p);
    RatVector w = f.extension ? *f.extension : RatVector(other.total());
    return with_part(x, detail::extend(other, n + 1, w));
}

/// Cofibre of S^{kz+n} -> X.
inline WideSphere attach_sphere(const WideSphere& x, int n, const AttachingDatum& f, int k) {
    return twist(attach_fixed_sphere(twist(x, -k), n, f), k);
}

/// Block-diagonal change of basis for both parities: v -> v * phi[parity].
using BasisChange = std::array<RatMatrix, 2>;

inline bool is_block_diagonal(const ParityPart& p, const RatMatrix& phi) {
    auto deg = p.coordinate_degrees();
    if (phi.size() != p.total()) return false;
    for (std::size_t i = 0; i < phi.size(); ++i) {
        if (phi[i].size() != p.total()) return false;
        for (std::size_t j = 0; j < phi[i].size(); ++j)
            if (phi[i][j] != 0 && deg[i] != deg[j]) return false;
    }
    return true;
}

inline WideSphere apply_basis_change(const WideSphere& x, const BasisChange& phi) {
    std::array<ParityPart, 2> out;
    for (int par : {0, 1}) {
        const auto& part = x.part(par);
        const auto& m = phi[static_cast<std::size_t>(par)];
        if (!is_block_diagonal(part, m) || !inverse(m))
            throw ValidationError("basis change must be invertible and preserve degree blocks");
        std::map<int, Subspace> filt;
        for (const auto& [i, s] : part.jumps()) filt[i] = subspace_image(s, m, part.total());
        out[static_cast<std::size_t>(par)] = ParityPart::make(par, part.v_dims(), filt);
    }
    return {std::move(out[0]), std::move(out[1])};
}

/// phi (X -> Y) is an isomorphism of wide spheres.
inline bool is_isomorphism(const WideSphere& x, const WideSphere& y, const BasisChange& phi) {
    for (int par : {0, 1}) {
        const auto& a = x.part(par);
        const auto& b = y.part(par);
        const auto& m = phi[static_cast<std::size_t>(par)];
        if (a.v_dims() != b.v_dims() || !is_block_diagonal(a, m) || !inverse(m)) return false;
        std::vector<int> keys;
        for (const auto& kv : a.jumps()) keys.push_back(kv.first);
        for (const auto& kv : b.jumps()) keys.push_back(kv.first);
        for (int i : keys)
            if (!(subspace_image(a.filtration(i), m, a.total()) == b.filtration(i))) return false;
    }
    return true;
}

/// Homogeneous basis vectors (each supported in one degree block) of the two
/// summands, in the coordinates of one parity part.
struct PartSplitting {
    RatMatrix first;
    RatMatrix second;
};

namespace detail {

inline int block_of(const ParityPart& p, const RatVector& v) {
    auto deg = p.coordinate_degrees();
    std::optional<int> d;
    for (std::size_t i = 0; i < v.size(); ++i) {
        if (v[i] == 0) continue;
        if (d && *d != deg[i]) throw ValidationError("splitting vector is not homogeneous");
        d = deg[i];
    }
    if (!d) throw ValidationError("zero vector in splitting");
    return *d;
}

inline std::pair<ParityPart, ParityPart> split_part(const ParityPart& p, const PartSplitting& s) {
    const std::size_t n = p.total();
    if (s.first.size() + s.second.size() != n) throw ValidationError("splitting does not have |V| many vectors");
    for (const auto& v : s.first)
        if (v.size() != n) throw DimensionError("splitting vector length differs from |V|");
    for (const auto& v : s.second)
        if (v.size() != n) throw DimensionError("splitting vector length differs from |V|");

    // sort each side by degree so the new coordinates are block ordered
    auto ordered = [&](const RatMatrix& vs) {
        std::vector<std::pair<int, RatVector>> tagged;
        for (const auto& v : vs) tagged.emplace_back(block_of(p, v), v);
        std::stable_sort(tagged.begin(), tagged.end(), [](const auto& a, const auto& b) { return a.first < b.first; });
        return tagged;
    };
    auto a = ordered(s.first);
    auto b = ordered(s.second);
    RatMatrix basis;
    for (const auto& t : a) basis.push_back(t.second);
    for (const auto& t : b) basis.push_back(t.second);
    auto inv = inverse(basis);
    if (!inv) throw ValidationError("splitting vectors are not a basis of |V|");

    Subspace span_a = Subspace::span(n, s.first);
    Subspace span_b = Subspace::span(n, s.second);
    std::map<int, Subspace> fa, fb;
    for (const auto& [i, nb] : p.jumps()) {
        Subspace ia = subspace_intersection(nb, span_a);
        Subspace ib = subspace_intersection(nb, span_b);
        if (ia.dim() + ib.dim() != nb.dim())
            throw ValidationError("filtration does not split along the summands at degree " + std::to_string(i));
        RatMatrix ra, rb;
        for (const auto& v : ia.basis()) {
            RatVector c = times(v, *inv, n);
            ra.emplace_back(c.begin(), c.begin() + static_cast<std::ptrdiff_t>(a.size()));
        }
        for (const auto& v : ib.basis()) {
            RatVector c = times(v, *inv, n);
            rb.emplace_back(c.begin() + static_cast<std::ptrdiff_t>(a.size()), c.end());
        }
        fa[i] = Subspace::span(a.size(), std::move(ra));
        fb[i] = Subspace::span(b.size(), std::move(rb));
    }
    std::map<int, std::size_t> da, db;
    for (const auto& t : a) ++da[t.first];
    for (const auto& t : b) ++db[t.first];
    return {ParityPart::make(p.parity(), da, fa), ParityPart::make(p.parity(), db, fb)};
}

}  // namespace detail

/// X = X' (+) X'' along the given splitting; throws if the filtration does not split.
inline std::pair<WideSphere, WideSphere> split_summands(const WideSphere& x, const PartSplitting& even,
                                                        const PartSplitting& odd) {
    auto [e1, e2] = detail::split_part(x.even(), even);
    auto [o1, o2] = detail::split_part(x.odd(), odd);
    return {WideSphere(std::move(e1), std::move(o1)), WideSphere(std::move(e2), std::move(o2))};
}

// ---------------------------------------------------------------------------
// constructive decomposition

/// One cell of a build: a sphere S^{kz+degree}. `vector` is the split vector
/// in the coordinates of the decomposed object (its parity part); its image
/// in the quotient at the time of the step lies in V_degree \ Nbar_{degree+2}.
struct BuildStep {
    int degree = 0;
    int twist = 0;
    RatVector vector;

    friend bool operator==(const BuildStep&, const BuildStep&) = default;
};

struct Decomposition {
    /// v_dims of the decomposed object per parity: the frame of step vectors.
    std::array<std::map<int, std::size_t>, 2> layout;
    std::vector<BuildStep> steps;
    std::optional<ConditionFailure> failure;

    bool succeeded() const noexcept { return !failure.has_value(); }
};

/// Certificate that X lies in thick(S^{kz}), or the failing condition.
/// Working in the lowest remaining degree n, the split vectors of degree n
/// span Nbar_n n V_{<=n}, which projects isomorphically onto V_n.
inline Decomposition decompose_twisted(const WideSphere& x, int k) {
    Decomposition out;
    out.layout = {x.even().v_dims(), x.odd().v_dims()};
    auto check = is_k_twisted(x, k);
    if (!check.holds) {
        out.failure = check.failure;
        return out;
    }
    WideSphere y = twist(x, -k);
    for (int par : {0, 1}) {
        const auto& part = y.part(par);
        for (const auto& [d, dim] : part.v_dims()) {
            Subspace lift = subspace_intersection(part.filtration(d), part.blocks_up_to(d));
            const std::size_t off = part.block_offset(d);
            RatMatrix proj;
            for (const auto& v : lift.basis())
                proj.emplace_back(v.begin() + static_cast<std::ptrdiff_t>(off),
                                  v.begin() + static_cast<std::ptrdiff_t>(off + dim));
            auto inv = inverse(proj);
            if (lift.dim() != dim || !inv)
                throw ValidationError("internal: split vectors do not project onto V_" + std::to_string(d));
            for (std::size_t l = 0; l < dim; ++l)
                out.steps.push_back({d, k, times((*inv)[l], lift.basis(), part.total())});
        }
    }
    return out;
}

inline Decomposition decompose_untwisted(const WideSphere& x) { return decompose_twisted(x, 0); }

struct Replay {
    WideSphere object;
    /// Isomorphism from `object` onto the decomposed object.
    BasisChange to_target;
};

namespace detail {

/// alpha with alpha * rows = target, if any.
inline std::optional<RatVector> solve_combination(const RatMatrix& rows, const RatVector& target) {
    const std::size_t m = rows.size();
    const std::size_t n = target.size();
    RatMatrix sys(n, RatVector(m + 1));
    for (std::size_t j = 0; j < n; ++j) {
        for (std::size_t i = 0; i < m; ++i) sys[j][i] = rows[i][j];
        sys[j][m] = target[j];
    }
    sys = rref(std::move(sys), m + 1);
    RatVector alpha(m);
    for (const auto& r : sys) {
        std::size_t p = 0;
        while (r[p] == 0) ++p;
        if (p == m) return std::nullopt;
        alpha[p] = r[m];
    }
    return alpha;
}

}  // namespace detail

/// Rebuilds the certified object by attaching cells S^{kz+n} in step order;
/// each step's vector minus its V_n component is the extension class.
inline Replay replay(const Decomposition& cert) {
    if (!cert.succeeded()) throw ValidationError("cannot replay a failed decomposition");
    WideSphere z;
    BasisChange images;
    for (const auto& step : cert.steps) {
        const int par = parity_of(step.degree);
        const auto& layout = cert.layout[static_cast<std::size_t>(par)];
        std::size_t total = 0, off = 0, dim = 0;
        for (const auto& [d, n] : layout) {
            if (d < step.degree) off += n;
            if (d == step.degree) dim = n;
            total += n;
        }
        if (step.vector.size() != total) throw DimensionError("step vector does not match the layout");
        RatVector x(total);
        for (std::size_t i = off; i < off + dim; ++i) x[i] = step.vector[i];
        if (is_zero(x)) throw ValidationError("step vector has no component in V_" + std::to_string(step.degree));
        RatVector w(total);
        for (std::size_t i = 0; i < w.size(); ++i) w[i] = step.vector[i] - x[i];

        auto& xs = images[static_cast<std::size_t>(par)];
        auto alpha = detail::solve_combination(xs, w);
        if (!alpha) throw ValidationError("extension class is not built from earlier cells");
        const auto& zpart = z.part(par);
        const std::size_t pos = zpart.block_offset(step.degree) + zpart.block_dim(step.degree);
        AttachingDatum datum;
        datum.extension = *alpha;
        z = attach_sphere(z, step.degree - 1, datum, step.twist);
        xs.insert(xs.begin() + static_cast<std::ptrdiff_t>(pos), x);
    }
    return {std::move(z), std::move(images)};
}

}  // namespace cotoral
