#pragma once

// Test-only oracles. They work from raw edge lists and plain vectors and
// never call into the slope, critical or reconstruction code they check.

#include <metslope/space.hpp>

#include <algorithm>
#include <cstddef>
#include <limits>
#include <numeric>
#include <vector>

namespace oracle {

using metslope::EdgeSpec;

/// Definition of the discrete slope evaluated by a double loop over the
/// edge list in both orientations.
inline std::vector<double> brute_force_slopes(std::size_t n, const std::vector<EdgeSpec>& edges,
                                              const std::vector<double>& values) {
    std::vector<double> slope(n, 0.0);
    for (std::size_t x = 0; x < n; ++x) {
        for (const auto& e : edges) {
            std::size_t y = n;
            if (e.u == x) y = e.v;
            if (e.v == x) y = e.u;
            if (y == n) continue;
            const double drop = values[x] - values[y];
            if (drop > 0.0) slope[x] = std::max(slope[x], drop / e.length);
        }
    }
    return slope;
}

/// All-pairs shortest paths.
inline std::vector<std::vector<double>> floyd_warshall(std::size_t n,
                                                       const std::vector<EdgeSpec>& edges) {
    constexpr double inf = std::numeric_limits<double>::infinity();
    std::vector<std::vector<double>> d(n, std::vector<double>(n, inf));
    for (std::size_t i = 0; i < n; ++i) d[i][i] = 0.0;
    for (const auto& e : edges) {
        d[e.u][e.v] = std::min(d[e.u][e.v], e.length);
        d[e.v][e.u] = std::min(d[e.v][e.u], e.length);
    }
    for (std::size_t k = 0; k < n; ++k)
        for (std::size_t i = 0; i < n; ++i)
            for (std::size_t j = 0; j < n; ++j)
                if (d[i][k] + d[k][j] < d[i][j]) d[i][j] = d[i][k] + d[k][j];
    return d;
}

inline bool connected(std::size_t n, const std::vector<EdgeSpec>& edges) {
    std::vector<std::size_t> parent(n);
    std::iota(parent.begin(), parent.end(), 0);
    const auto find = [&](std::size_t a) {
        while (parent[a] != a) a = parent[a] = parent[parent[a]];
        return a;
    };
    std::size_t components = n;
    for (const auto& e : edges) {
        const auto a = find(e.u);
        const auto b = find(e.v);
        if (a != b) {
            parent[a] = b;
            --components;
        }
    }
    return components == 1;
}

/// Every connected labelled simple graph on n vertices with unit lengths.
inline std::vector<std::vector<EdgeSpec>> connected_graphs(std::size_t n) {
    std::vector<EdgeSpec> all;
    for (std::size_t u = 0; u < n; ++u)
        for (std::size_t v = u + 1; v < n; ++v) all.push_back({u, v, 1.0});
    std::vector<std::vector<EdgeSpec>> graphs;
    for (std::size_t mask = 0; mask < (std::size_t{1} << all.size()); ++mask) {
        std::vector<EdgeSpec> edges;
        for (std::size_t k = 0; k < all.size(); ++k)
            if (mask & (std::size_t{1} << k)) edges.push_back(all[k]);
        if (n == 1 || (!edges.empty() && connected(n, edges))) graphs.push_back(edges);
    }
    return graphs;
}

/// Field number `index` in base `base`: digit k is the value at point k.
inline std::vector<double> enumerate_field(std::size_t index, std::size_t n, std::size_t base) {
    std::vector<double> values(n);
    for (std::size_t k = 0; k < n; ++k) {
        values[k] = static_cast<double>(index % base);
        index /= base;
    }
    return values;
}

/// Interval [i, i+1] / 3^level is a rising segment of the level-`level`
/// Cantor approximant iff i has no ternary digit 1 (level digits).
inline bool cantor_stair_segment(std::size_t i, int level) {
    for (int k = 0; k < level; ++k) {
        if (i % 3 == 1) return false;
        i /= 3;
    }
    return true;
}

inline std::size_t pow3(int k) {
    std::size_t p = 1;
    for (int i = 0; i < k; ++i) p *= 3;
    return p;
}

}  // namespace oracle
