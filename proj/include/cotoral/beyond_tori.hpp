#pragma once

// Spectra beyond tori: finite groups (discrete), O(2) and SO(3) as explicit
// catalogs, and the toral part of a compact Lie group as Sub_a(T)/W.

#include <algorithm>
#include <cstdint>
#include <deque>
#include <map>
#include <set>
#include <string>
#include <variant>
#include <vector>

#include "cotoral/balmer.hpp"
#include "cotoral/errors.hpp"
#include "cotoral/lattice.hpp"
#include "cotoral/poset.hpp"
#include "cotoral/rational.hpp"

namespace cotoral {

// ---------------------------------------------------------------------------
// finite groups

struct DiscretePoset {
    std::vector<std::string> points;
    std::vector<Edge> edges;  // always empty here
};

/// Conjugacy classes are supplied by the caller.
inline DiscretePoset finite_group_spectrum(const std::vector<std::string>& classes) {
    std::set<std::string> seen;
    for (const auto& c : classes)
        if (!seen.insert(c).second) throw ValidationError("duplicate conjugacy class label '" + c + "'");
    return {classes, {}};
}

// ---------------------------------------------------------------------------
// O(2) and SO(3)

struct O2Cyclic {
    ClosedSubgroup subgroup;  // closed subgroup of SO(2) = T^1
    friend bool operator==(const O2Cyclic&, const O2Cyclic&) = default;
};
/// D_{2n}, the point 1/2n of the Polish Point.
struct DihedralPoint {
    std::uint64_t n = 1;
    friend bool operator==(const DihedralPoint&, const DihedralPoint&) = default;
};
/// O(2) itself, the limit point 0.
struct O2Top {
    friend bool operator==(const O2Top&, const O2Top&) = default;
};

using O2Prime = std::variant<O2Cyclic, DihedralPoint, O2Top>;

inline O2Prime o2_cyclic(const Integer& n) { return O2Cyclic{ClosedSubgroup::cyclic(n)}; }
inline O2Prime o2_circle() { return O2Cyclic{ClosedSubgroup::full_torus(1)}; }

inline O2Prime dihedral_point(std::uint64_t n) {
    if (n < 1) throw ValidationError("dihedral points are indexed by n >= 1");
    return DihedralPoint{n};
}

/// The cyclic part is ordered by cotoral inclusion; the dihedral part carries
/// no order relations (its topology is that of the Polish Point).
inline bool o2_prime_leq(const O2Prime& p, const O2Prime& q) {
    if (const auto* a = std::get_if<O2Cyclic>(&p)) {
        const auto* b = std::get_if<O2Cyclic>(&q);
        return b && is_cotoral(a->subgroup, b->subgroup);
    }
    return p == q;
}

/// A set of dihedral points given as a finite list or as a cofinite set
/// (complement listed).
struct DihedralSet {
    bool cofinite = false;
    std::set<std::uint64_t> listed;

    static DihedralSet finite(std::set<std::uint64_t> members) { return {false, std::move(members)}; }
    static DihedralSet all_but(std::set<std::uint64_t> missing) { return {true, std::move(missing)}; }

    bool contains(std::uint64_t n) const { return cofinite != listed.contains(n); }
    friend bool operator==(const DihedralSet&, const DihedralSet&) = default;
};

inline DihedralSet set_union(const DihedralSet& a, const DihedralSet& b) {
    std::set<std::uint64_t> out;
    if (!a.cofinite && !b.cofinite) {
        std::set_union(a.listed.begin(), a.listed.end(), b.listed.begin(), b.listed.end(),
                       std::inserter(out, out.end()));
        return DihedralSet::finite(out);
    }
    if (a.cofinite && b.cofinite) {
        std::set_intersection(a.listed.begin(), a.listed.end(), b.listed.begin(), b.listed.end(),
                              std::inserter(out, out.end()));
        return DihedralSet::all_but(out);
    }
    const auto& co = a.cofinite ? a : b;
    const auto& fin = a.cofinite ? b : a;
    std::set_difference(co.listed.begin(), co.listed.end(), fin.listed.begin(), fin.listed.end(),
                        std::inserter(out, out.end()));
    return DihedralSet::all_but(out);
}

inline DihedralSet set_intersection(const DihedralSet& a, const DihedralSet& b) {
    std::set<std::uint64_t> out;
    if (!a.cofinite && !b.cofinite) {
        std::set_intersection(a.listed.begin(), a.listed.end(), b.listed.begin(), b.listed.end(),
                              std::inserter(out, out.end()));
        return DihedralSet::finite(out);
    }
    if (a.cofinite && b.cofinite) {
        std::set_union(a.listed.begin(), a.listed.end(), b.listed.begin(), b.listed.end(),
                       std::inserter(out, out.end()));
        return DihedralSet::all_but(out);
    }
    const auto& co = a.cofinite ? a : b;
    const auto& fin = a.cofinite ? b : a;
    std::set_difference(fin.listed.begin(), fin.listed.end(), co.listed.begin(), co.listed.end(),
                        std::inserter(out, out.end()));
    return DihedralSet::finite(out);
}

struct O2Support {
    IsotropySet cyclic{1};
    DihedralSet dihedral;
    bool top = false;
};

/// A finite complex with O(2) in its geometric isotropy has all but finitely
/// many dihedral subgroups there; without O(2), only finitely many.
inline bool o2_is_realizable_support(const IsotropySet& cyclic, const DihedralSet& dihedral, bool top) {
    cyclic.require_same_ambient(1);
    return is_realizable_support(cyclic) && (top ? dihedral.cofinite : !dihedral.cofinite);
}

inline bool o2_is_realizable_support(const O2Support& s) {
    return o2_is_realizable_support(s.cyclic, s.dihedral, s.top);
}

inline O2Support set_union(const O2Support& a, const O2Support& b) {
    return {set_union(a.cyclic, b.cyclic), set_union(a.dihedral, b.dihedral), a.top || b.top};
}

inline O2Support set_intersection(const O2Support& a, const O2Support& b) {
    return {set_intersection(a.cyclic, b.cyclic), set_intersection(a.dihedral, b.dihedral), a.top && b.top};
}

enum class Exceptional { Tetrahedral, Octahedral, Icosahedral };

struct SO3Cyclic {
    ClosedSubgroup subgroup;
    friend bool operator==(const SO3Cyclic&, const SO3Cyclic&) = default;
};
struct SO3Dihedral {
    std::uint64_t n = 2;
    friend bool operator==(const SO3Dihedral&, const SO3Dihedral&) = default;
};
struct SO3O2Class {
    friend bool operator==(const SO3O2Class&, const SO3O2Class&) = default;
};
struct SO3Exceptional {
    Exceptional kind;
    friend bool operator==(const SO3Exceptional&, const SO3Exceptional&) = default;
};

using SO3Prime = std::variant<SO3Cyclic, SO3Dihedral, SO3O2Class, SO3Exceptional>;

/// Restriction along O(2) -> SO(3). D_2 is conjugate in SO(3) to C_2.
inline SO3Prime so3_restrict(const O2Prime& p) {
    if (const auto* c = std::get_if<O2Cyclic>(&p)) return SO3Cyclic{c->subgroup};
    if (const auto* d = std::get_if<DihedralPoint>(&p)) {
        if (d->n == 1) return SO3Cyclic{ClosedSubgroup::cyclic(2)};
        return SO3Dihedral{d->n};
    }
    return SO3O2Class{};
}

// ---------------------------------------------------------------------------
// Weyl quotients

namespace detail {

inline Rational determinant(const IntMatrix& m) {
    const std::size_t n = m.size();
    RatMatrix a(n, RatVector(n));
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j) a[i][j] = Rational(m[i][j]);
    Rational det = 1;
    for (std::size_t c = 0; c < n; ++c) {
        std::size_t p = c;
        while (p < n && a[p][c] == 0) ++p;
        if (p == n) return 0;
        if (p != c) {
            std::swap(a[p], a[c]);
            det = -det;
        }
        det *= a[c][c];
        for (std::size_t i = c + 1; i < n; ++i) {
            if (a[i][c] == 0) continue;
            Rational f = a[i][c] / a[c][c];
            for (std::size_t j = c; j < n; ++j) a[i][j] -= f * a[c][j];
        }
    }
    return det;
}

inline IntMatrix multiply(const IntMatrix& a, const IntMatrix& b) {
    const std::size_t n = a.size();
    IntMatrix out(n, IntVector(n));
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t k = 0; k < n; ++k)
            if (a[i][k] != 0)
                for (std::size_t j = 0; j < n; ++j) out[i][j] += a[i][k] * b[k][j];
    return out;
}

inline IntMatrix identity(std::size_t n) {
    IntMatrix id(n, IntVector(n));
    for (std::size_t i = 0; i < n; ++i) id[i][i] = 1;
    return id;
}

}  // namespace detail

/// A finite group of integer matrices acting on characters by l -> l * w.
class WeylAction {
public:
    static constexpr std::size_t default_element_bound = 4096;

    WeylAction() = default;

    static WeylAction generated_by(std::size_t rank, std::vector<IntMatrix> generators,
                                   std::size_t element_bound = default_element_bound) {
        for (const auto& g : generators) {
            if (g.size() != rank) throw DimensionError("Weyl generator is not " + std::to_string(rank) + "x" + std::to_string(rank));
            for (const auto& row : g)
                if (row.size() != rank) throw DimensionError("Weyl generator is not square");
            Rational d = detail::determinant(g);
            if (d != 1 && d != -1) throw ValidationError("Weyl generator is not invertible over the integers");
        }
        WeylAction w;
        w.rank_ = rank;
        w.generators_ = generators;
        std::set<IntMatrix> seen{detail::identity(rank)};
        std::deque<IntMatrix> queue{detail::identity(rank)};
        while (!queue.empty()) {
            IntMatrix x = std::move(queue.front());
            queue.pop_front();
            for (const auto& g : generators) {
                IntMatrix y = detail::multiply(x, g);
                if (seen.insert(y).second) {
                    if (seen.size() > element_bound)
                        throw ValidationError("Weyl group exceeds " + std::to_string(element_bound) +
                                              " elements; generators must generate a finite group");
                    queue.push_back(std::move(y));
                }
            }
        }
        w.elements_.assign(seen.begin(), seen.end());
        return w;
    }

    static WeylAction trivial(std::size_t rank) { return generated_by(rank, {}); }

    std::size_t rank() const noexcept { return rank_; }
    const std::vector<IntMatrix>& generators() const noexcept { return generators_; }
    const std::vector<IntMatrix>& elements() const noexcept { return elements_; }
    std::size_t order() const noexcept { return elements_.size(); }

    ClosedSubgroup apply(const IntMatrix& w, const ClosedSubgroup& k) const {
        IntMatrix rows;
        for (const auto& l : k.annihilator().basis()) {
            IntVector out(rank_);
            for (std::size_t i = 0; i < rank_; ++i)
                if (l[i] != 0)
                    for (std::size_t j = 0; j < rank_; ++j) out[j] += l[i] * w[i][j];
            rows.push_back(std::move(out));
        }
        return ClosedSubgroup(IntegerLattice::from_generators(rank_, std::move(rows)));
    }

    void require_rank(std::size_t r) const {
        if (r != rank_)
            throw AmbientMismatch("Weyl action on T^" + std::to_string(rank_) + " applied to a subgroup of T^" +
                                  std::to_string(r));
    }

private:
    std::size_t rank_ = 0;
    std::vector<IntMatrix> generators_;
    std::vector<IntMatrix> elements_;
};

struct SubgroupOrbit {
    ClosedSubgroup canonical;
    std::size_t size = 0;

    friend bool operator==(const SubgroupOrbit&, const SubgroupOrbit&) = default;
};

inline std::set<ClosedSubgroup> orbit_members(const ClosedSubgroup& k, const WeylAction& w) {
    w.require_rank(k.ambient_rank());
    std::set<ClosedSubgroup> out;
    for (const auto& g : w.elements()) out.insert(w.apply(g, k));
    return out;
}

inline SubgroupOrbit weyl_orbit(const ClosedSubgroup& k, const WeylAction& w) {
    auto members = orbit_members(k, w);
    return {*members.begin(), members.size()};
}

/// Some w . L is cotoral in K.
inline bool quotient_order(const SubgroupOrbit& lower, const SubgroupOrbit& upper, const WeylAction& w) {
    w.require_rank(lower.canonical.ambient_rank());
    w.require_rank(upper.canonical.ambient_rank());
    return std::any_of(w.elements().begin(), w.elements().end(), [&](const IntMatrix& g) {
        return is_cotoral(w.apply(g, lower.canonical), upper.canonical);
    });
}

struct QuotientSlice {
    std::size_t ambient_rank = 0;
    std::vector<SubgroupOrbit> orbits;
    /// Covering relations of quotient_order (lower, upper).
    std::vector<Edge> hasse_edges;
};

/// Sub_a(T)/W restricted to the bounded slice; the slice is first closed
/// under W so orbits are complete.
inline QuotientSlice toral_quotient_slice(AmbientTorus ambient, const WeylAction& w, const SliceBounds& bounds,
                                          unsigned threads = 1) {
    w.require_rank(ambient.rank);
    SpectrumSlice slice = enumerate_slice(ambient, bounds, threads);
    std::set<ClosedSubgroup> seen;
    std::vector<SubgroupOrbit> orbits;
    for (const auto& p : slice.primes) {
        if (seen.contains(p.subgroup)) continue;
        auto members = orbit_members(p.subgroup, w);
        seen.insert(members.begin(), members.end());
        orbits.push_back({*members.begin(), members.size()});
    }
    std::sort(orbits.begin(), orbits.end(), [](const SubgroupOrbit& a, const SubgroupOrbit& b) {
        return detail::slice_order({a.canonical}, {b.canonical});
    });
    auto less = order_matrix(
        orbits.size(),
        [&](std::size_t i, std::size_t j) {
            return orbits[i].canonical.dimension() < orbits[j].canonical.dimension() &&
                   quotient_order(orbits[i], orbits[j], w);
        },
        threads);
    QuotientSlice out;
    out.ambient_rank = ambient.rank;
    out.hasse_edges = hasse_edges(less);
    out.orbits = std::move(orbits);
    return out;
}

inline QuotientSlice toral_quotient_slice(AmbientTorus ambient, const WeylAction& w, const Integer& max_index,
                                          unsigned threads = 1) {
    SliceBounds b;
    b.max_index = max_index;
    for (std::size_t d = 0; d <= ambient.rank; ++d) b.include_dims.insert(d);
    return toral_quotient_slice(ambient, w, b, threads);
}

}  // namespace cotoral
