#include "metslope/instances.hpp"

#include <algorithm>
#include <numeric>

namespace metslope {

std::size_t uniform_index(Rng& rng, std::size_t lo, std::size_t hi) {
    return std::uniform_int_distribution<std::size_t>(lo, hi)(rng);
}

double uniform_real(Rng& rng, double lo, double hi) {
    return std::uniform_real_distribution<double>(lo, hi)(rng);
}

MetricSpaceGraph random_connected_graph(Rng& rng, std::size_t n,
                                        const RandomGraphOptions& options) {
    if (n <= 1) return build_graph(1, {});
    const auto length = [&] {
        return options.unit_lengths ? 1.0 : uniform_real(rng, options.min_length, options.max_length);
    };
    std::vector<std::size_t> order(n);
    std::iota(order.begin(), order.end(), 0);
    std::shuffle(order.begin(), order.end(), rng);

    std::vector<char> linked(n * n, 0);
    std::vector<EdgeSpec> edges;
    for (std::size_t k = 1; k < n; ++k) {
        const std::size_t parent = order[uniform_index(rng, 0, k - 1)];
        const std::size_t child = order[k];
        linked[parent * n + child] = linked[child * n + parent] = 1;
        edges.push_back({parent, child, length()});
    }
    std::bernoulli_distribution extra(options.extra_edge_probability);
    for (std::size_t u = 0; u < n; ++u) {
        for (std::size_t v = u + 1; v < n; ++v) {
            if (!linked[u * n + v] && extra(rng)) edges.push_back({u, v, length()});
        }
    }
    return build_graph(n, edges);
}

ScalarField random_field(Rng& rng, const MetricSpaceGraph& space, double lo, double hi) {
    std::vector<double> values(space.size());
    for (auto& v : values) v = uniform_real(rng, lo, hi);
    return ScalarField(space, std::move(values));
}

ScalarField random_integer_field(Rng& rng, const MetricSpaceGraph& space, int bound) {
    std::uniform_int_distribution<int> dist(-bound, bound);
    std::vector<double> values(space.size());
    for (auto& v : values) v = dist(rng);
    return ScalarField(space, std::move(values));
}

}  // namespace metslope
