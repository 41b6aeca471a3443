#pragma once

// Exhaustive uniqueness check: on a fixed graph, no two fields valued in
// {0..base-1} share both the slope field and the values on their critical
// set. Also cross-checks determine() on every pair with equal slopes.

#include "oracles.hpp"

#include <metslope/determination.hpp>
#include <metslope/slope.hpp>

#include <cmath>
#include <map>
#include <string>
#include <vector>

namespace oracle {

struct UniquenessStats {
    std::size_t graphs = 0;
    std::size_t fields = 0;
    std::size_t collisions = 0;          // two fields with the same key
    std::size_t verdict_mismatches = 0;  // determine() disagreeing with the difference test
    std::string first_failure;
};

inline void check_uniqueness(std::size_t n, std::size_t base, UniquenessStats& stats) {
    std::size_t count = 1;
    for (std::size_t k = 0; k < n; ++k) count *= base;

    for (const auto& edges : connected_graphs(n)) {
        const auto space = metslope::build_graph(n, edges);
        ++stats.graphs;
        std::map<std::vector<double>, std::size_t> by_key;
        std::map<std::vector<double>, std::size_t> first_with_slopes;
        for (std::size_t index = 0; index < count; ++index) {
            const auto values = enumerate_field(index, n, base);
            const metslope::ScalarField f(space, values);
            const auto slopes = metslope::slope_field(space, f);
            std::vector<double> slope_key;
            std::vector<double> key;
            for (std::size_t x = 0; x < n; ++x) {
                slope_key.push_back(slopes.values[x].value());
                key.push_back(slopes.values[x].value());
            }
            for (std::size_t x = 0; x < n; ++x) {
                key.push_back(slopes.values[x].value() == 0.0 ? values[x] : -1.0);
            }
            ++stats.fields;
            const auto [it, fresh] = by_key.emplace(key, index);
            if (!fresh) {
                ++stats.collisions;
                if (stats.first_failure.empty()) {
                    stats.first_failure = "n=" + std::to_string(n) + " fields #" +
                                          std::to_string(it->second) + " and #" +
                                          std::to_string(index) + " share slopes and critical values";
                }
            }

            // Same slope field: determine must say EqualUpToConstant exactly
            // when the two fields differ by a constant.
            const auto [first, new_slopes] = first_with_slopes.emplace(slope_key, index);
            if (new_slopes) continue;
            const auto other = enumerate_field(first->second, n, base);
            const metslope::ScalarField g(space, other);
            bool shifted = true;
            for (std::size_t x = 1; x < n; ++x) {
                shifted = shifted && (other[x] - values[x] == other[0] - values[0]);
            }
            const auto report =
                metslope::determine(space, f, g, metslope::exact_graph_tolerances());
            const bool equal = report.verdict == metslope::Verdict::EqualUpToConstant;
            if (equal != shifted) {
                ++stats.verdict_mismatches;
                if (stats.first_failure.empty()) {
                    stats.first_failure = "n=" + std::to_string(n) + " determine disagrees on #" +
                                          std::to_string(first->second) + " vs #" +
                                          std::to_string(index);
                }
            }
        }
    }
}

}  // namespace oracle
