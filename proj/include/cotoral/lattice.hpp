#pragma once

// Closed subgroups of the torus T^r = (R/Z)^r, encoded by their annihilator
// lattices in the character group Z^r.
//
//   K  <->  Ann(K) = { l in Z^r : l . x in Z for all x in K }
//
// The correspondence reverses inclusion, dim K = r - rank Ann(K), and K is
// connected iff Ann(K) is saturated. Every lattice is kept in row-style
// Hermite normal form so value equality is structural equality.

#include <algorithm>
#include <cstddef>
#include <string>
#include <vector>

#include "cotoral/errors.hpp"
#include "cotoral/integer_matrix.hpp"

namespace cotoral {

struct AmbientTorus {
    std::size_t rank = 0;
};

class IntegerLattice {
public:
    /// Zero lattice in Z^0.
    IntegerLattice() = default;

    /// Lattice spanned by `rows`; every row must have `ambient_rank` entries.
    static IntegerLattice from_generators(std::size_t ambient_rank, IntMatrix rows) {
        for (const auto& row : rows)
            if (row.size() != ambient_rank)
                throw DimensionError("generator row has " + std::to_string(row.size()) +
                                     " entries, ambient rank is " + std::to_string(ambient_rank));
        IntegerLattice l;
        l.ambient_rank_ = ambient_rank;
        l.basis_ = hermite_rows(std::move(rows), ambient_rank);
        return l;
    }

    static IntegerLattice zero(std::size_t ambient_rank) { return from_generators(ambient_rank, {}); }

    static IntegerLattice standard(std::size_t ambient_rank) {
        IntMatrix id(ambient_rank, IntVector(ambient_rank));
        for (std::size_t i = 0; i < ambient_rank; ++i) id[i][i] = 1;
        return from_generators(ambient_rank, std::move(id));
    }

    std::size_t ambient_rank() const noexcept { return ambient_rank_; }
    const IntMatrix& basis() const noexcept { return basis_; }
    std::size_t rank() const noexcept { return basis_.size(); }

    std::optional<IntVector> coordinates(const IntVector& v) const {
        if (v.size() != ambient_rank_) throw DimensionError("vector length differs from ambient rank");
        return echelon_coordinates(basis_, v);
    }

    bool contains(const IntVector& v) const { return coordinates(v).has_value(); }

    bool contains(const IntegerLattice& other) const {
        require_same_ambient(other);
        return std::all_of(other.basis_.begin(), other.basis_.end(),
                           [&](const IntVector& row) { return contains(row); });
    }

    /// (Q . L) intersected with Z^r.
    IntegerLattice saturation() const {
        IntMatrix orthogonal = left_kernel(transpose(basis_, ambient_rank_), basis_.size());
        IntMatrix sat = left_kernel(transpose(orthogonal, ambient_rank_), orthogonal.size());
        return from_generators(ambient_rank_, std::move(sat));
    }

    void require_same_ambient(const IntegerLattice& other) const {
        if (other.ambient_rank_ != ambient_rank_)
            throw AmbientMismatch("lattices live in Z^" + std::to_string(ambient_rank_) + " and Z^" +
                                  std::to_string(other.ambient_rank_));
    }

    friend bool operator==(const IntegerLattice&, const IntegerLattice&) = default;

    /// Lexicographic order on (ambient rank, row count, rows).
    friend bool operator<(const IntegerLattice& a, const IntegerLattice& b) {
        if (a.ambient_rank_ != b.ambient_rank_) return a.ambient_rank_ < b.ambient_rank_;
        if (a.basis_.size() != b.basis_.size()) return a.basis_.size() < b.basis_.size();
        return a.basis_ < b.basis_;
    }

private:
    std::size_t ambient_rank_ = 0;
    IntMatrix basis_;
};

inline IntegerLattice hermite_normal_form(std::size_t ambient_rank, const IntMatrix& m) {
    return IntegerLattice::from_generators(ambient_rank, m);
}

inline IntegerLattice lattice_sum(const IntegerLattice& a, const IntegerLattice& b) {
    a.require_same_ambient(b);
    IntMatrix rows = a.basis();
    rows.insert(rows.end(), b.basis().begin(), b.basis().end());
    return IntegerLattice::from_generators(a.ambient_rank(), std::move(rows));
}

inline IntegerLattice lattice_intersection(const IntegerLattice& a, const IntegerLattice& b) {
    a.require_same_ambient(b);
    const std::size_t r = a.ambient_rank();
    // z = (x, y) with x A - y B = 0; the intersection is spanned by x A.
    IntMatrix stacked = a.basis();
    for (const auto& row : b.basis()) {
        IntVector neg(row);
        for (auto& x : neg) x = -x;
        stacked.push_back(std::move(neg));
    }
    IntMatrix kernel = left_kernel(stacked, r);
    IntMatrix rows;
    for (const auto& z : kernel) {
        IntVector v(r);
        for (std::size_t i = 0; i < a.rank(); ++i)
            for (std::size_t j = 0; j < r; ++j) v[j] += z[i] * a.basis()[i][j];
        rows.push_back(std::move(v));
    }
    return IntegerLattice::from_generators(r, std::move(rows));
}

/// Finite abelian group Z/d_1 x ... x Z/d_s with d_1 | ... | d_s, d_i >= 2.
struct ComponentGroup {
    std::vector<Integer> invariant_factors;

    bool trivial() const noexcept { return invariant_factors.empty(); }

    Integer order() const {
        Integer n = 1;
        for (const auto& d : invariant_factors) n *= d;
        return n;
    }

    friend bool operator==(const ComponentGroup&, const ComponentGroup&) = default;
};

struct QuotientStructure {
    ComponentGroup torsion;
    std::size_t free_rank = 0;
};

/// Structure of super/sub for sub contained in super.
inline QuotientStructure quotient_structure(const IntegerLattice& sub, const IntegerLattice& super) {
    super.require_same_ambient(sub);
    IntMatrix coeffs;
    coeffs.reserve(sub.rank());
    for (const auto& row : sub.basis()) {
        auto c = super.coordinates(row);
        if (!c) throw ContainmentError("sublattice is not contained in the superlattice");
        coeffs.push_back(std::move(*c));
    }
    QuotientStructure q;
    for (auto& d : smith_diagonal(std::move(coeffs), super.rank()))
        if (d > 1) q.torsion.invariant_factors.push_back(std::move(d));
    q.free_rank = super.rank() - sub.rank();
    return q;
}

inline ComponentGroup smith_invariants(const IntegerLattice& sub, const IntegerLattice& super) {
    return quotient_structure(sub, super).torsion;
}

class ClosedSubgroup {
public:
    /// The rank-0 torus (trivial group).
    ClosedSubgroup() = default;

    explicit ClosedSubgroup(IntegerLattice annihilator) : annihilator_(std::move(annihilator)) {}

    static ClosedSubgroup full_torus(std::size_t rank) { return ClosedSubgroup(IntegerLattice::zero(rank)); }
    static ClosedSubgroup trivial(std::size_t rank) { return ClosedSubgroup(IntegerLattice::standard(rank)); }

    /// C_n inside the circle; n >= 1.
    static ClosedSubgroup cyclic(const Integer& n) {
        if (n < 1) throw ValidationError("cyclic subgroup order must be positive");
        return ClosedSubgroup(IntegerLattice::from_generators(1, {{n}}));
    }

    const IntegerLattice& annihilator() const noexcept { return annihilator_; }
    std::size_t ambient_rank() const noexcept { return annihilator_.ambient_rank(); }
    std::size_t dimension() const noexcept { return ambient_rank() - annihilator_.rank(); }

    /// pi_0(K), the torsion of Z^r / Ann(K).
    ComponentGroup component_group() const { return smith_invariants(annihilator_, annihilator_.saturation()); }

    bool is_connected() const { return annihilator_ == annihilator_.saturation(); }

    void require_same_ambient(const ClosedSubgroup& other) const {
        if (other.ambient_rank() != ambient_rank())
            throw AmbientMismatch("subgroups of T^" + std::to_string(ambient_rank()) + " and T^" +
                                  std::to_string(other.ambient_rank()));
    }

    friend bool operator==(const ClosedSubgroup&, const ClosedSubgroup&) = default;
    friend bool operator<(const ClosedSubgroup& a, const ClosedSubgroup& b) { return a.annihilator_ < b.annihilator_; }

private:
    IntegerLattice annihilator_;
};

inline ClosedSubgroup canonicalize_subgroup(AmbientTorus ambient, const IntMatrix& generators) {
    return ClosedSubgroup(IntegerLattice::from_generators(ambient.rank, generators));
}

/// L is a subgroup of K.
inline bool is_subgroup(const ClosedSubgroup& l, const ClosedSubgroup& k) {
    l.require_same_ambient(k);
    return l.annihilator().contains(k.annihilator());
}

/// L is cotoral in K: L <= K and K/L is a torus. Reflexive.
inline bool is_cotoral(const ClosedSubgroup& l, const ClosedSubgroup& k) {
    if (!is_subgroup(l, k)) return false;
    return smith_invariants(k.annihilator(), l.annihilator()).trivial();
}

/// Intersection K n L.
inline ClosedSubgroup subgroup_meet(const ClosedSubgroup& k, const ClosedSubgroup& l) {
    k.require_same_ambient(l);
    return ClosedSubgroup(lattice_sum(k.annihilator(), l.annihilator()));
}

/// Closed subgroup generated by K u L.
inline ClosedSubgroup subgroup_sum(const ClosedSubgroup& k, const ClosedSubgroup& l) {
    k.require_same_ambient(l);
    return ClosedSubgroup(lattice_intersection(k.annihilator(), l.annihilator()));
}

/// H/K as a subgroup of the torus T/K, whose character lattice is Ann(K).
/// Coordinates are taken in the Hermite basis of Ann(K).
inline ClosedSubgroup quotient_subgroup(const ClosedSubgroup& k, const ClosedSubgroup& h) {
    k.require_same_ambient(h);
    if (!is_subgroup(k, h)) throw ContainmentError("quotient_subgroup needs K contained in H");
    IntMatrix rows;
    for (const auto& row : h.annihilator().basis()) rows.push_back(*k.annihilator().coordinates(row));
    return ClosedSubgroup(IntegerLattice::from_generators(k.annihilator().rank(), std::move(rows)));
}

}  // namespace cotoral
