#pragma once

// Balmer spectrum of finite rational T-spectra. Every prime is a subgroup
// prime P_K = { X : Phi^K X is nonequivariantly trivial }; the model takes
// this exhaustion as its data axiom, so primes are stored as subgroups.
// Inclusion of primes is cotoral inclusion of subgroups, and the Zariski
// topology is generated by the closed sets cone(H) = supp(sigma_H).

#include <algorithm>
#include <cstddef>
#include <functional>
#include <optional>
#include <set>
#include <vector>

#include "cotoral/errors.hpp"
#include "cotoral/isotropy.hpp"
#include "cotoral/lattice.hpp"
#include "cotoral/poset.hpp"

namespace cotoral {

struct BalmerPrime {
    ClosedSubgroup subgroup;

    friend bool operator==(const BalmerPrime&, const BalmerPrime&) = default;
};

/// Closed subsets of the spectrum reachable from finite objects: finite unions of cones.
using ClosedSupport = IsotropySet;

inline bool prime_leq(const BalmerPrime& p, const BalmerPrime& q) { return is_cotoral(p.subgroup, q.subgroup); }

inline ClosedSupport support(const FiniteObjectExpr& expr) { return isotropy_of(expr); }

/// Every antichain-encoded family is a realizable support: finitely many
/// maximal members by construction, downward closure implied.
inline bool is_realizable_support(const IsotropySet&) { return true; }

inline ClosedSupport closure(std::size_t ambient_rank, const std::vector<BalmerPrime>& primes) {
    std::vector<ClosedSubgroup> gens;
    gens.reserve(primes.size());
    for (const auto& p : primes) gens.push_back(p.subgroup);
    return IsotropySet::closure_of(ambient_rank, std::move(gens));
}

inline ClosedSupport closed_intersection(const ClosedSupport& a, const ClosedSupport& b) {
    return set_intersection(a, b);
}

/// Returns K when `a` is the single cone of K; an empty result witnesses
/// that the matching intersection of subgroup primes is not prime.
inline std::optional<ClosedSubgroup> unique_minimal_check(const IsotropySet& a) {
    if (a.empty()) throw ValidationError("unique_minimal_check needs a nonempty family");
    if (a.maximal().size() == 1) return a.maximal().front();
    return std::nullopt;
}

struct SliceBounds {
    /// Bound on |pi_0(K)|, the index of Ann(K) in its saturation.
    Integer max_index = 1;
    /// Dimensions to keep. The full torus is always kept.
    std::set<std::size_t> include_dims;
    /// Bound on |entry| of the Hermite basis; 0 means "use max_index".
    Integer max_entry = 0;

    Integer entry_bound() const { return max_entry > 0 ? max_entry : max_index; }
};

struct SpectrumSlice {
    std::size_t ambient_rank = 0;
    std::vector<BalmerPrime> primes;
    /// (lower, upper) index pairs: the covering relations of cotoral inclusion.
    std::vector<Edge> hasse_edges;
    SliceBounds bounds;
};

namespace detail {

/// Every Hermite-normal-form matrix of width r whose entries are bounded by `bound` in absolute value.
inline void for_each_bounded_hermite(std::size_t r, const Integer& bound,
                                     const std::function<void(const IntMatrix&)>& visit) {
    for (std::size_t s = 0; s <= r; ++s) {
        // pivot column choices: increasing s-subsets of [0, r)
        std::vector<std::size_t> cols(s);
        for (std::size_t i = 0; i < s; ++i) cols[i] = i;
        for (;;) {
            std::vector<bool> is_pivot_col(r, false);
            for (auto c : cols) is_pivot_col[c] = true;
            std::vector<Integer> pivots(s, 1);
            for (;;) {
                struct Cell {
                    std::size_t row, col;
                    Integer lo, hi;
                };
                std::vector<Cell> cells;
                for (std::size_t i = 0; i < s; ++i)
                    for (std::size_t c = cols[i] + 1; c < r; ++c) {
                        if (is_pivot_col[c]) {
                            auto j = static_cast<std::size_t>(std::find(cols.begin(), cols.end(), c) - cols.begin());
                            cells.push_back({i, c, 0, pivots[j] - 1});
                        } else {
                            cells.push_back({i, c, -bound, bound});
                        }
                    }
                IntMatrix m(s, IntVector(r));
                for (std::size_t i = 0; i < s; ++i) m[i][cols[i]] = pivots[i];
                for (auto& cell : cells) m[cell.row][cell.col] = cell.lo;
                for (;;) {
                    visit(m);
                    std::size_t k = 0;
                    for (; k < cells.size(); ++k) {
                        auto& x = m[cells[k].row][cells[k].col];
                        if (x < cells[k].hi) {
                            ++x;
                            break;
                        }
                        x = cells[k].lo;
                    }
                    if (k == cells.size()) break;
                }
                std::size_t k = 0;
                for (; k < s; ++k) {
                    if (pivots[k] < bound) {
                        ++pivots[k];
                        break;
                    }
                    pivots[k] = 1;
                }
                if (k == s) break;
            }
            // next combination
            std::size_t i = s;
            while (i > 0 && cols[i - 1] == r - s + i - 1) --i;
            if (i == 0) break;
            ++cols[i - 1];
            for (std::size_t j = i; j < s; ++j) cols[j] = cols[j - 1] + 1;
        }
    }
}

inline bool slice_order(const BalmerPrime& a, const BalmerPrime& b) {
    if (a.subgroup.dimension() != b.subgroup.dimension()) return a.subgroup.dimension() < b.subgroup.dimension();
    return a.subgroup < b.subgroup;
}

}  // namespace detail

/// Hasse edges for an arbitrary finite set of primes, sorted by slice order first.
inline SpectrumSlice slice_from_primes(std::size_t ambient_rank, std::vector<BalmerPrime> primes,
                                       SliceBounds bounds, unsigned threads = 1) {
    std::sort(primes.begin(), primes.end(), detail::slice_order);
    primes.erase(std::unique(primes.begin(), primes.end()), primes.end());
    auto less = order_matrix(
        primes.size(),
        [&](std::size_t i, std::size_t j) {
            // cotoral inclusion strictly raises dimension
            return primes[i].subgroup.dimension() < primes[j].subgroup.dimension() && prime_leq(primes[i], primes[j]);
        },
        threads);
    SpectrumSlice slice;
    slice.ambient_rank = ambient_rank;
    slice.hasse_edges = hasse_edges(less);
    slice.primes = std::move(primes);
    slice.bounds = std::move(bounds);
    return slice;
}

inline SpectrumSlice enumerate_slice(AmbientTorus ambient, const SliceBounds& bounds, unsigned threads = 1) {
    if (bounds.max_index < 1) throw ValidationError("max_index must be at least 1");
    std::vector<BalmerPrime> primes;
    detail::for_each_bounded_hermite(ambient.rank, bounds.entry_bound(), [&](const IntMatrix& m) {
        ClosedSubgroup k(IntegerLattice::from_generators(ambient.rank, m));
        if (!bounds.include_dims.contains(k.dimension())) return;
        if (k.component_group().order() > bounds.max_index) return;
        primes.push_back({std::move(k)});
    });
    primes.push_back({ClosedSubgroup::full_torus(ambient.rank)});
    return slice_from_primes(ambient.rank, std::move(primes), bounds, threads);
}

/// Convenience overload keeping every dimension 0..r.
inline SpectrumSlice enumerate_slice(AmbientTorus ambient, const Integer& max_index, unsigned threads = 1) {
    SliceBounds b;
    b.max_index = max_index;
    for (std::size_t d = 0; d <= ambient.rank; ++d) b.include_dims.insert(d);
    return enumerate_slice(ambient, b, threads);
}

}  // namespace cotoral
