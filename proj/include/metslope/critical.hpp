#pragma once

#include "metslope/slope.hpp"

#include <optional>
#include <vector>

namespace metslope {

/// Points whose slope is Finite(s) with s <= tol. Infinite slopes are never
/// critical.
struct CriticalSet {
    std::vector<PointId> members;  // ascending
    double tol = 0.0;

    [[nodiscard]] bool contains(PointId x) const;
    [[nodiscard]] bool empty() const noexcept { return members.empty(); }
    [[nodiscard]] std::size_t size() const noexcept { return members.size(); }
};

struct SublevelSet {
    double threshold = 0.0;
    std::vector<PointId> members;  // ascending

    [[nodiscard]] bool contains(PointId x) const;
};

CriticalSet critical_set(const SlopeField& slopes, double tol = 0.0);

SublevelSet sublevel_set(const ScalarField& f, double alpha);

/// m(x) = min of (f - g)(z) over z in [f <= f(x)] intersected with crit.
/// nullopt when no critical point lies in the sublevel set of x.
std::optional<double> comparison_floor(const MetricSpaceGraph& space, const ScalarField& f,
                                       const ScalarField& g, PointId x,
                                       const CriticalSet& crit);

/// Tolerance calibration for sampled continuous data: 2 h L.
double sampled_critical_tolerance(double spacing, double lipschitz);

}  // namespace metslope
