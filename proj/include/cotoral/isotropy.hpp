#pragma once

// Geometric isotropy of finite rational T-spectra. A family of subgroups
// closed under passage to cotoral subgroups and with finitely many
// cotorally maximal members is stored as that finite antichain.

#include <algorithm>
#include <cstddef>
#include <set>
#include <string>
#include <vector>

#include "cotoral/errors.hpp"
#include "cotoral/lattice.hpp"

namespace cotoral {

class IsotropySet {
public:
    IsotropySet() = default;

    /// The empty family in T^r.
    explicit IsotropySet(std::size_t ambient_rank) : ambient_rank_(ambient_rank) {}

    /// Cotoral-downward closure of `generators`, reduced to its maximal antichain.
    static IsotropySet closure_of(std::size_t ambient_rank, std::vector<ClosedSubgroup> generators) {
        for (const auto& k : generators)
            if (k.ambient_rank() != ambient_rank)
                throw AmbientMismatch("subgroup of T^" + std::to_string(k.ambient_rank()) +
                                      " in a family over T^" + std::to_string(ambient_rank));
        std::sort(generators.begin(), generators.end(), antichain_order);
        generators.erase(std::unique(generators.begin(), generators.end()), generators.end());
        IsotropySet s(ambient_rank);
        for (std::size_t i = 0; i < generators.size(); ++i) {
            bool absorbed = false;
            for (std::size_t j = 0; j < generators.size() && !absorbed; ++j)
                absorbed = i != j && is_cotoral(generators[i], generators[j]);
            if (!absorbed) s.maximal_.push_back(generators[i]);
        }
        return s;
    }

    std::size_t ambient_rank() const noexcept { return ambient_rank_; }
    const std::vector<ClosedSubgroup>& maximal() const noexcept { return maximal_; }
    bool empty() const noexcept { return maximal_.empty(); }

    void require_same_ambient(std::size_t rank) const {
        if (rank != ambient_rank_)
            throw AmbientMismatch("families over T^" + std::to_string(ambient_rank_) + " and T^" +
                                  std::to_string(rank));
    }

    /// Dimension descending, then Hermite basis lexicographically.
    static bool antichain_order(const ClosedSubgroup& a, const ClosedSubgroup& b) {
        if (a.dimension() != b.dimension()) return a.dimension() > b.dimension();
        return a < b;
    }

    friend bool operator==(const IsotropySet&, const IsotropySet&) = default;

private:
    std::size_t ambient_rank_ = 0;
    std::vector<ClosedSubgroup> maximal_;
};

struct BasicCell {
    ClosedSubgroup subgroup;
    int degree = 0;

    friend bool operator==(const BasicCell&, const BasicCell&) = default;
};

/// Formal wedge of suspended basic cells; no cells is the zero object.
struct FiniteObjectExpr {
    std::size_t ambient_rank = 0;
    std::vector<BasicCell> cells;

    friend bool operator==(const FiniteObjectExpr&, const FiniteObjectExpr&) = default;
};

inline FiniteObjectExpr wedge(FiniteObjectExpr x, const FiniteObjectExpr& y) {
    if (x.ambient_rank != y.ambient_rank) throw AmbientMismatch("wedge of objects over different tori");
    x.cells.insert(x.cells.end(), y.cells.begin(), y.cells.end());
    return x;
}

inline IsotropySet cone(const ClosedSubgroup& k) { return IsotropySet::closure_of(k.ambient_rank(), {k}); }

/// Degree shifts are invisible to isotropy.
inline IsotropySet isotropy_of(const FiniteObjectExpr& expr) {
    std::vector<ClosedSubgroup> gens;
    gens.reserve(expr.cells.size());
    for (const auto& cell : expr.cells) gens.push_back(cell.subgroup);
    return IsotropySet::closure_of(expr.ambient_rank, std::move(gens));
}

inline bool member(const ClosedSubgroup& h, const IsotropySet& a) {
    a.require_same_ambient(h.ambient_rank());
    return std::any_of(a.maximal().begin(), a.maximal().end(),
                       [&](const ClosedSubgroup& k) { return is_cotoral(h, k); });
}

/// B is a subfamily of A.
inline bool contains(const IsotropySet& a, const IsotropySet& b) {
    a.require_same_ambient(b.ambient_rank());
    return std::all_of(b.maximal().begin(), b.maximal().end(),
                       [&](const ClosedSubgroup& k) { return member(k, a); });
}

inline IsotropySet set_union(const IsotropySet& a, const IsotropySet& b) {
    a.require_same_ambient(b.ambient_rank());
    std::vector<ClosedSubgroup> gens = a.maximal();
    gens.insert(gens.end(), b.maximal().begin(), b.maximal().end());
    return IsotropySet::closure_of(a.ambient_rank(), std::move(gens));
}

inline bool equals(const IsotropySet& a, const IsotropySet& b) {
    a.require_same_ambient(b.ambient_rank());
    return a == b;
}

namespace detail {

/// Coset representatives of Z^s / rowspan(h) for a full-rank upper
/// triangular Hermite matrix h: the box 0 <= x_i < h_ii.
inline std::vector<IntVector> hermite_box(const IntMatrix& h) {
    std::vector<IntVector> out{IntVector(h.size())};
    for (std::size_t i = 0; i < h.size(); ++i) {
        std::vector<IntVector> next;
        for (const auto& v : out)
            for (Integer a = 0; a < h[i][i]; ++a) {
                IntVector w = v;
                w[i] = a;
                next.push_back(std::move(w));
            }
        out = std::move(next);
    }
    return out;
}

/// Every lattice L with lower <= L <= upper, where upper/lower is finite.
inline std::vector<IntegerLattice> intermediate_lattices(const IntegerLattice& lower, const IntegerLattice& upper) {
    const std::size_t s = upper.rank();
    IntMatrix coords;
    for (const auto& row : lower.basis()) coords.push_back(*upper.coordinates(row));
    IntMatrix h = hermite_rows(std::move(coords), s);
    const std::size_t generators_needed = smith_invariants(lower, upper).invariant_factors.size();

    std::vector<IntVector> reps = hermite_box(h);
    auto lift = [&](const IntVector& c) {
        IntVector v(upper.ambient_rank());
        for (std::size_t i = 0; i < s; ++i)
            for (std::size_t j = 0; j < v.size(); ++j) v[j] += c[i] * upper.basis()[i][j];
        return v;
    };
    std::vector<IntVector> lifted;
    lifted.reserve(reps.size());
    for (const auto& r : reps) lifted.push_back(lift(r));

    // A subgroup of a finite abelian group with m invariant factors needs at
    // most m generators.
    std::set<IntegerLattice> found{lower};
    std::vector<std::size_t> idx(generators_needed, 0);
    if (generators_needed == 0) return {lower};
    for (;;) {
        IntMatrix rows = lower.basis();
        for (auto i : idx) rows.push_back(lifted[i]);
        found.insert(IntegerLattice::from_generators(lower.ambient_rank(), std::move(rows)));
        std::size_t pos = 0;
        while (pos < idx.size() && ++idx[pos] == lifted.size()) idx[pos++] = 0;
        if (pos == idx.size()) break;
    }
    return {found.begin(), found.end()};
}

}  // namespace detail

/// cone(H) n cone(K). Maximal members have annihilators between
/// Ann(H) + Ann(K) and its saturation.
inline IsotropySet intersect_cones(const ClosedSubgroup& h, const ClosedSubgroup& k) {
    h.require_same_ambient(k);
    IntegerLattice lower = lattice_sum(h.annihilator(), k.annihilator());
    IntegerLattice upper = lower.saturation();
    std::vector<ClosedSubgroup> keep;
    for (auto& lattice : detail::intermediate_lattices(lower, upper)) {
        ClosedSubgroup l(std::move(lattice));
        if (is_cotoral(l, h) && is_cotoral(l, k)) keep.push_back(std::move(l));
    }
    return IsotropySet::closure_of(h.ambient_rank(), std::move(keep));
}

inline IsotropySet set_intersection(const IsotropySet& a, const IsotropySet& b) {
    a.require_same_ambient(b.ambient_rank());
    std::vector<ClosedSubgroup> gens;
    for (const auto& h : a.maximal())
        for (const auto& k : b.maximal()) {
            auto part = intersect_cones(h, k);
            gens.insert(gens.end(), part.maximal().begin(), part.maximal().end());
        }
    return IsotropySet::closure_of(a.ambient_rank(), std::move(gens));
}

/// Y lies in the thick tensor ideal generated by X. Finite objects are
/// classified up to ideal membership by their geometric isotropy.
inline bool ideal_contains(const FiniteObjectExpr& x, const FiniteObjectExpr& y) {
    if (x.ambient_rank != y.ambient_rank) throw AmbientMismatch("objects over different tori");
    return contains(isotropy_of(x), isotropy_of(y));
}

inline bool ideal_equal(const FiniteObjectExpr& x, const FiniteObjectExpr& y) {
    return ideal_contains(x, y) && ideal_contains(y, x);
}

}  // namespace cotoral
