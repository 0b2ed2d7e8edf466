#pragma once

#include <cstdint>
#include <random>
#include <vector>

#include "cotoral/cotoral.hpp"
#include "oracles/lattice_oracle.hpp"

namespace testing_support {

using namespace cotoral;

inline std::mt19937_64& rng() {
    static std::mt19937_64 gen(0x5eed2024u);
    return gen;
}

inline long uniform(long lo, long hi) { return std::uniform_int_distribution<long>(lo, hi)(rng()); }

inline IntMatrix random_rows(std::size_t rank, std::size_t count, long bound) {
    IntMatrix m(count, IntVector(rank));
    for (auto& row : m)
        for (auto& x : row) x = uniform(-bound, bound);
    return m;
}

/// Random closed subgroup of T^rank whose Hermite pivots are at most `pivot_bound`.
inline ClosedSubgroup random_subgroup(std::size_t rank, long pivot_bound = 6) {
    for (;;) {
        auto rows = random_rows(rank, static_cast<std::size_t>(uniform(0, static_cast<long>(rank))), pivot_bound);
        ClosedSubgroup k = canonicalize_subgroup(AmbientTorus{rank}, rows);
        bool ok = true;
        for (const auto& row : k.annihilator().basis())
            for (const auto& x : row)
                if (x != 0) {
                    ok = x <= pivot_bound;
                    break;
                }
        if (ok) return k;
    }
}

/// A subgroup of k, obtained by adding random characters to its annihilator.
inline ClosedSubgroup random_smaller(const ClosedSubgroup& k, long bound = 3) {
    IntMatrix rows = k.annihilator().basis();
    auto extra = random_rows(k.ambient_rank(), static_cast<std::size_t>(uniform(0, 2)), bound);
    rows.insert(rows.end(), extra.begin(), extra.end());
    return canonicalize_subgroup(AmbientTorus{k.ambient_rank()}, rows);
}

inline oracle::IntMat rows_of(const ClosedSubgroup& k) { return k.annihilator().basis(); }

/// Oracle verdict on cotorality of l in k, independent of Hermite/Smith code.
inline bool oracle_cotoral(const ClosedSubgroup& l, const ClosedSubgroup& k) {
    return oracle::torsion_free_extension(rows_of(l), rows_of(k));
}

inline bool oracle_subgroup(const ClosedSubgroup& l, const ClosedSubgroup& k) {
    return oracle::lattice_contains(rows_of(l), rows_of(k));
}

}  // namespace testing_support
