#include "metslope/space.hpp"

#include "metslope/error.hpp"

#include <algorithm>
#include <atomic>
#include <cmath>
#include <functional>
#include <limits>
#include <queue>
#include <set>
#include <tuple>
#include <string>
#include <utility>

namespace metslope {

namespace {

std::uint64_t next_space_id() {
    static std::atomic<std::uint64_t> counter{1};
    return counter.fetch_add(1, std::memory_order_relaxed);
}

void require_point(const MetricSpaceGraph& space, PointId x) {
    if (!space.contains(x)) {
        throw Error(ErrorCode::InvalidPoint, "point " + std::to_string(x.value) +
                                                 " outside space of size " +
                                                 std::to_string(space.size()));
    }
}

struct ShortestPathTree {
    std::vector<double> dist;
    std::vector<std::size_t> pred;
    std::vector<double> pred_length;
};

// Single-source Dijkstra over raw edge lengths, stopping once the frontier
// exceeds `bound`. Unreached points keep +inf.
ShortestPathTree bounded_dijkstra(const std::vector<std::vector<NeighborEntry>>& adjacency,
                                  std::size_t source, double bound) {
    constexpr double inf = std::numeric_limits<double>::infinity();
    ShortestPathTree tree{std::vector<double>(adjacency.size(), inf),
                          std::vector<std::size_t>(adjacency.size(), source),
                          std::vector<double>(adjacency.size(), 0.0)};
    using Item = std::pair<double, std::size_t>;
    std::priority_queue<Item, std::vector<Item>, std::greater<>> queue;
    tree.dist[source] = 0.0;
    queue.emplace(0.0, source);
    while (!queue.empty()) {
        const auto [d, u] = queue.top();
        queue.pop();
        if (d > tree.dist[u]) continue;
        if (d > bound) break;
        for (const auto& e : adjacency[u]) {
            const double candidate = d + e.distance;
            if (candidate < tree.dist[e.point.value]) {
                tree.dist[e.point.value] = candidate;
                tree.pred[e.point.value] = u;
                tree.pred_length[e.point.value] = e.distance;
                queue.emplace(candidate, e.point.value);
            }
        }
    }
    return tree;
}

// Path length summed from the endpoint with the smaller id, so that
// d(x,y) and d(y,x) round identically.
double canonical_distance(const ShortestPathTree& tree, std::size_t source, std::size_t y) {
    if (source < y || !std::isfinite(tree.dist[y])) return tree.dist[y];
    double sum = 0.0;
    for (std::size_t p = y; p != source; p = tree.pred[p]) sum += tree.pred_length[p];
    return sum;
}

}  // namespace

std::span<const NeighborEntry> MetricSpaceGraph::adjacent(PointId x) const {
    require_point(*this, x);
    return adjacency_[x.value];
}

std::span<const double> MetricSpaceGraph::coordinate(PointId x) const {
    require_point(*this, x);
    if (dimension_ == 0) return {};
    return std::span<const double>(coords_).subspan(x.value * dimension_, dimension_);
}

bool MetricSpaceGraph::is_connected() const {
    if (size() <= 1) return true;
    std::vector<char> seen(size(), 0);
    std::vector<std::size_t> stack{0};
    seen[0] = 1;
    std::size_t reached = 1;
    while (!stack.empty()) {
        const std::size_t u = stack.back();
        stack.pop_back();
        for (const auto& e : adjacency_[u]) {
            if (!seen[e.point.value]) {
                seen[e.point.value] = 1;
                ++reached;
                stack.push_back(e.point.value);
            }
        }
    }
    return reached == size();
}

MetricSpaceGraph MetricSpaceGraph::with_coordinates(std::size_t dimension,
                                                    std::vector<double> coords) const {
    if (dimension == 0 || coords.size() != dimension * size()) {
        throw Error(ErrorCode::ParseError, "coordinate table does not match point count");
    }
    if (!std::all_of(coords.begin(), coords.end(), [](double c) { return std::isfinite(c); })) {
        throw Error(ErrorCode::NonFiniteValue, "non-finite coordinate");
    }
    MetricSpaceGraph copy = *this;
    copy.dimension_ = dimension;
    copy.coords_ = std::move(coords);
    return copy;
}

MetricSpaceGraph build_graph(std::size_t n, std::span<const EdgeSpec> edges, MetricMode mode) {
    if (n == 0) throw Error(ErrorCode::TooFewPoints, "a space needs at least one point");
    if (edges.empty() && n != 1) {
        throw Error(ErrorCode::EmptyEdgeList, "empty edge list requires n = 1");
    }

    MetricSpaceGraph space;
    space.id_ = next_space_id();
    space.mode_ = mode;
    space.adjacency_.resize(n);

    std::set<std::pair<std::size_t, std::size_t>> seen;
    for (const auto& e : edges) {
        if (e.u >= n || e.v >= n) {
            throw Error(ErrorCode::DanglingEndpoint,
                        "edge (" + std::to_string(e.u) + "," + std::to_string(e.v) +
                            ") references a point >= " + std::to_string(n));
        }
        if (e.u == e.v) {
            throw Error(ErrorCode::SelfLoop, "self-loop at " + std::to_string(e.u));
        }
        if (!(e.length > 0.0) || !std::isfinite(e.length)) {
            throw Error(ErrorCode::NonPositiveLength,
                        "edge (" + std::to_string(e.u) + "," + std::to_string(e.v) +
                            ") has length " + std::to_string(e.length));
        }
        const auto key = std::minmax(e.u, e.v);
        if (!seen.insert(key).second) {
            throw Error(ErrorCode::DuplicateEdge, "duplicate edge (" + std::to_string(key.first) +
                                                      "," + std::to_string(key.second) + ")");
        }
        space.adjacency_[e.u].push_back({PointId{e.v}, e.length});
        space.adjacency_[e.v].push_back({PointId{e.u}, e.length});
        space.edges_.push_back({key.first, key.second, e.length});
    }
    std::sort(space.edges_.begin(), space.edges_.end(),
              [](const EdgeSpec& a, const EdgeSpec& b) {
                  return std::tie(a.u, a.v) < std::tie(b.u, b.v);
              });
    for (auto& list : space.adjacency_) {
        std::sort(list.begin(), list.end(),
                  [](const NeighborEntry& a, const NeighborEntry& b) { return a.point < b.point; });
    }

    if (mode == MetricMode::ShortestPathClosure) {
        // Replace each edge length by the geodesic distance so that the
        // adjacency distances obey the triangle inequality.
        auto closed = space.adjacency_;
        for (std::size_t u = 0; u < n; ++u) {
            double bound = 0.0;
            for (const auto& e : space.adjacency_[u]) bound = std::max(bound, e.distance);
            const auto tree = bounded_dijkstra(space.adjacency_, u, bound);
            for (auto& e : closed[u]) {
                e.distance = std::min(e.distance, canonical_distance(tree, u, e.point.value));
            }
        }
        space.adjacency_ = std::move(closed);
    }
    return space;
}

MetricSpaceGraph sample_interval(double a, double b, std::size_t n) {
    if (!std::isfinite(a) || !std::isfinite(b) || !(a < b)) {
        throw Error(ErrorCode::DegenerateInterval, "interval requires a < b");
    }
    if (n < 2) throw Error(ErrorCode::TooFewPoints, "sample_interval needs n >= 2");

    const double h = (b - a) / static_cast<double>(n - 1);
    std::vector<EdgeSpec> edges;
    edges.reserve(n - 1);
    for (std::size_t i = 0; i + 1 < n; ++i) edges.push_back({i, i + 1, h});
    auto space = build_graph(n, edges, MetricMode::EdgeLocal);

    // Weighted endpoint form keeps t_i = -t_{n-1-i} exactly when a = -b.
    std::vector<double> coords(n);
    const double span = static_cast<double>(n - 1);
    for (std::size_t i = 0; i < n; ++i) {
        const double w = static_cast<double>(i);
        coords[i] = ((span - w) * a + w * b) / span;
    }
    coords.front() = a;
    coords.back() = b;
    space.dimension_ = 1;
    space.coords_ = std::move(coords);
    space.spacing_ = h;
    return space;
}

MetricSpaceGraph sample_box(double ax, double bx, std::size_t nx, double ay, double by,
                            std::size_t ny) {
    if (!(ax < bx) || !(ay < by)) {
        throw Error(ErrorCode::DegenerateInterval, "box requires ax < bx and ay < by");
    }
    if (nx < 2 || ny < 2) throw Error(ErrorCode::TooFewPoints, "sample_box needs nx, ny >= 2");
    const double hx = (bx - ax) / static_cast<double>(nx - 1);
    const double hy = (by - ay) / static_cast<double>(ny - 1);
    if (std::abs(hx - hy) > 1e-12 * std::max(hx, hy)) {
        throw Error(ErrorCode::DegenerateInterval, "box sampling requires equal spacing");
    }

    std::vector<EdgeSpec> edges;
    const auto id = [nx](std::size_t i, std::size_t j) { return j * nx + i; };
    for (std::size_t j = 0; j < ny; ++j) {
        for (std::size_t i = 0; i < nx; ++i) {
            if (i + 1 < nx) edges.push_back({id(i, j), id(i + 1, j), hx});
            if (j + 1 < ny) edges.push_back({id(i, j), id(i, j + 1), hx});
        }
    }
    auto space = build_graph(nx * ny, edges, MetricMode::EdgeLocal);
    std::vector<double> coords(2 * nx * ny);
    for (std::size_t j = 0; j < ny; ++j) {
        for (std::size_t i = 0; i < nx; ++i) {
            coords[2 * id(i, j)] = ax + static_cast<double>(i) * hx;
            coords[2 * id(i, j) + 1] = ay + static_cast<double>(j) * hx;
        }
    }
    space.dimension_ = 2;
    space.coords_ = std::move(coords);
    space.spacing_ = hx;
    return space;
}

bool supports_radius_queries(const MetricSpaceGraph& space) noexcept {
    return space.mode() == MetricMode::ShortestPathClosure || space.has_coordinates();
}

namespace {

double coordinate_distance(const MetricSpaceGraph& space, PointId x, PointId y) {
    const auto cx = space.coordinate(x);
    const auto cy = space.coordinate(y);
    if (cx.size() == 1) return std::abs(cx[0] - cy[0]);
    double sum = 0.0;
    for (std::size_t k = 0; k < cx.size(); ++k) sum += (cx[k] - cy[k]) * (cx[k] - cy[k]);
    return std::sqrt(sum);
}

std::vector<double> geodesic_from(const MetricSpaceGraph& space, PointId x, double bound) {
    std::vector<std::vector<NeighborEntry>> adjacency(space.size());
    for (std::size_t u = 0; u < space.size(); ++u) {
        const auto adj = space.adjacent(PointId{u});
        adjacency[u].assign(adj.begin(), adj.end());
    }
    const auto tree = bounded_dijkstra(adjacency, x.value, bound);
    std::vector<double> dist(space.size());
    for (std::size_t y = 0; y < space.size(); ++y) dist[y] = canonical_distance(tree, x.value, y);
    return dist;
}

}  // namespace

Neighborhood neighbors(const MetricSpaceGraph& space, PointId x, std::optional<double> radius) {
    require_point(space, x);
    Neighborhood result{x, {}};
    if (!radius) {
        const auto adj = space.adjacent(x);
        result.members.assign(adj.begin(), adj.end());
        return result;
    }
    if (!(*radius > 0.0)) {
        throw Error(ErrorCode::NonPositiveLength, "radius must be positive");
    }
    if (space.mode() == MetricMode::ShortestPathClosure) {
        const auto dist = geodesic_from(space, x, *radius);
        for (std::size_t y = 0; y < space.size(); ++y) {
            if (y != x.value && dist[y] <= *radius) result.members.push_back({PointId{y}, dist[y]});
        }
        return result;
    }
    if (!space.has_coordinates()) {
        throw Error(ErrorCode::NoMetricClosure,
                    "radius queries need closure mode or point coordinates");
    }
    for (std::size_t y = 0; y < space.size(); ++y) {
        if (y == x.value) continue;
        const double d = coordinate_distance(space, x, PointId{y});
        if (d > 0.0 && d <= *radius) result.members.push_back({PointId{y}, d});
    }
    return result;
}

double metric_distance(const MetricSpaceGraph& space, PointId x, PointId y) {
    require_point(space, x);
    require_point(space, y);
    if (x == y) return 0.0;
    if (space.mode() == MetricMode::ShortestPathClosure) {
        return geodesic_from(space, x, std::numeric_limits<double>::infinity())[y.value];
    }
    if (!space.has_coordinates()) {
        throw Error(ErrorCode::NoMetricClosure,
                    "metric distance needs closure mode or point coordinates");
    }
    return coordinate_distance(space, x, y);
}

}  // namespace metslope
