#pragma once

#include <algorithm>
#include <cstddef>
#include <thread>
#include <utility>
#include <vector>

namespace cotoral {

using Edge = std::pair<std::size_t, std::size_t>;

/// Strict order relation matrix: less[i][j] == true iff element i < element j.
using OrderMatrix = std::vector<std::vector<bool>>;

/// Evaluates `strictly_less(i, j)` for every ordered pair. Rows are split
/// across `threads` workers; the result does not depend on the split.
template <typename Less>
OrderMatrix order_matrix(std::size_t n, Less strictly_less, unsigned threads = 1) {
    OrderMatrix less(n, std::vector<bool>(n, false));
    auto fill_rows = [&](std::size_t begin, std::size_t end) {
        for (std::size_t i = begin; i < end; ++i)
            for (std::size_t j = 0; j < n; ++j)
                if (i != j) less[i][j] = strictly_less(i, j);
    };
    if (threads <= 1 || n < 2) {
        fill_rows(0, n);
        return less;
    }
    // vector<bool> rows are written by exactly one worker each
    std::vector<std::thread> pool;
    const std::size_t chunk = (n + threads - 1) / threads;
    for (std::size_t b = 0; b < n; b += chunk) pool.emplace_back(fill_rows, b, std::min(n, b + chunk));
    for (auto& t : pool) t.join();
    return less;
}

/// Covering pairs (i, j) of a strict partial order: i < j with nothing strictly between.
inline std::vector<Edge> hasse_edges(const OrderMatrix& less) {
    const std::size_t n = less.size();
    std::vector<Edge> edges;
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j) {
            if (!less[i][j]) continue;
            bool covered = true;
            for (std::size_t m = 0; m < n && covered; ++m)
                if (less[i][m] && less[m][j]) covered = false;
            if (covered) edges.emplace_back(i, j);
        }
    return edges;
}

/// Reflexive-transitive reachability along `edges`.
inline OrderMatrix reachability(std::size_t n, const std::vector<Edge>& edges) {
    OrderMatrix reach(n, std::vector<bool>(n, false));
    for (std::size_t i = 0; i < n; ++i) reach[i][i] = true;
    for (const auto& [a, b] : edges) reach[a][b] = true;
    for (std::size_t m = 0; m < n; ++m)
        for (std::size_t i = 0; i < n; ++i)
            if (reach[i][m])
                for (std::size_t j = 0; j < n; ++j)
                    if (reach[m][j]) reach[i][j] = true;
    return reach;
}

}  // namespace cotoral
