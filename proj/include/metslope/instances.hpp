#pragma once

// Seeded random instances for property checks.

#include "metslope/slope.hpp"

#include <random>

namespace metslope {

using Rng = std::mt19937_64;

struct RandomGraphOptions {
    double min_length = 0.1;
    double max_length = 2.0;
    double extra_edge_probability = 0.15;
    bool unit_lengths = false;
};

/// Random spanning tree plus independent extra edges.
MetricSpaceGraph random_connected_graph(Rng& rng, std::size_t n,
                                        const RandomGraphOptions& options = {});

/// Values uniform in [lo, hi).
ScalarField random_field(Rng& rng, const MetricSpaceGraph& space, double lo = -1.0,
                         double hi = 1.0);

/// Integer values uniform in [-bound, bound].
ScalarField random_integer_field(Rng& rng, const MetricSpaceGraph& space, int bound);

std::size_t uniform_index(Rng& rng, std::size_t lo, std::size_t hi);  // inclusive
double uniform_real(Rng& rng, double lo, double hi);

}  // namespace metslope
