#pragma once

// Finite metric spaces: edge-weighted graphs and regular samplings of
// intervals and boxes.
//
// Every space here is finite, so every sublevel set of every field is
// compact under any topology on the point set. Coercivity hypotheses are
// therefore discharged by construction and no topology parameter exists.

#include <compare>
#include <cstddef>
#include <cstdint>
#include <optional>
#include <span>
#include <vector>

namespace metslope {

struct PointId {
    std::size_t value = 0;

    constexpr auto operator<=>(const PointId&) const = default;
};

enum class MetricMode {
    EdgeLocal,           // d(x,y) is the edge length between adjacent vertices
    ShortestPathClosure  // d is the shortest-path metric
};

struct EdgeSpec {
    std::size_t u = 0;
    std::size_t v = 0;
    double length = 0.0;
};

struct NeighborEntry {
    PointId point;
    double distance = 0.0;
};

struct Neighborhood {
    PointId center;
    std::vector<NeighborEntry> members;  // sorted by point id
};

/// Immutable finite metric space. Copies share the identity used to bind
/// scalar fields to their space.
class MetricSpaceGraph {
public:
    [[nodiscard]] std::size_t size() const noexcept { return adjacency_.size(); }
    [[nodiscard]] std::uint64_t id() const noexcept { return id_; }
    [[nodiscard]] MetricMode mode() const noexcept { return mode_; }

    [[nodiscard]] bool contains(PointId x) const noexcept { return x.value < size(); }

    /// Adjacent vertices with their metric distance, sorted by point id.
    /// In closure mode the distance is the shortest-path length, which may
    /// be shorter than the raw edge length.
    [[nodiscard]] std::span<const NeighborEntry> adjacent(PointId x) const;

    /// Undirected edges as supplied (u < v), in canonical order.
    [[nodiscard]] const std::vector<EdgeSpec>& edges() const noexcept { return edges_; }

    [[nodiscard]] bool has_coordinates() const noexcept { return dimension_ > 0; }
    [[nodiscard]] std::size_t dimension() const noexcept { return dimension_; }
    [[nodiscard]] std::span<const double> coordinate(PointId x) const;

    /// Uniform spacing for sampled intervals and boxes.
    [[nodiscard]] std::optional<double> grid_spacing() const noexcept { return spacing_; }

    [[nodiscard]] bool is_connected() const;

    /// Returns a copy that carries coordinates (flat, dimension values per point).
    [[nodiscard]] MetricSpaceGraph with_coordinates(std::size_t dimension,
                                                    std::vector<double> coords) const;

    friend MetricSpaceGraph build_graph(std::size_t n, std::span<const EdgeSpec> edges,
                                        MetricMode mode);
    friend MetricSpaceGraph sample_interval(double a, double b, std::size_t n);
    friend MetricSpaceGraph sample_box(double ax, double bx, std::size_t nx, double ay,
                                       double by, std::size_t ny);

private:
    MetricSpaceGraph() = default;

    std::uint64_t id_ = 0;
    MetricMode mode_ = MetricMode::EdgeLocal;
    std::vector<std::vector<NeighborEntry>> adjacency_;
    std::vector<EdgeSpec> edges_;
    std::size_t dimension_ = 0;
    std::vector<double> coords_;
    std::optional<double> spacing_;
};

/// Builds a space on n points from an undirected edge list. Each edge may
/// be listed once in either orientation; the symmetric closure is applied.
MetricSpaceGraph build_graph(std::size_t n, std::span<const EdgeSpec> edges,
                             MetricMode mode = MetricMode::EdgeLocal);

/// n uniformly spaced points on [a, b] joined by consecutive edges.
/// Symmetric intervals give exactly mirrored coordinates.
MetricSpaceGraph sample_interval(double a, double b, std::size_t n);

/// Tensor grid on [ax,bx] x [ay,by] with 4-neighbour edges. Requires equal
/// spacing in both directions. Point (i, j) has id j * nx + i.
MetricSpaceGraph sample_box(double ax, double bx, std::size_t nx, double ay, double by,
                            std::size_t ny);

/// Without a radius: adjacent vertices. With a radius: every other point at
/// metric distance <= radius (shortest-path metric in closure mode,
/// coordinate distance for sampled domains).
Neighborhood neighbors(const MetricSpaceGraph& space, PointId x,
                       std::optional<double> radius = std::nullopt);

/// Metric distance between two points (shortest path or coordinates).
double metric_distance(const MetricSpaceGraph& space, PointId x, PointId y);

/// True when radius queries are available.
bool supports_radius_queries(const MetricSpaceGraph& space) noexcept;

}  // namespace metslope
