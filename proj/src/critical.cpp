#include "metslope/critical.hpp"

#include "metslope/error.hpp"

#include <algorithm>
#include <cmath>

namespace metslope {

bool CriticalSet::contains(PointId x) const {
    return std::binary_search(members.begin(), members.end(), x);
}

bool SublevelSet::contains(PointId x) const {
    return std::binary_search(members.begin(), members.end(), x);
}

CriticalSet critical_set(const SlopeField& slopes, double tol) {
    if (!(tol >= 0.0)) throw Error(ErrorCode::NegativeTolerance, "critical tolerance must be >= 0");
    CriticalSet crit{{}, tol};
    for (std::size_t i = 0; i < slopes.size(); ++i) {
        const auto& s = slopes.values[i];
        if (s.is_finite() && s.value() <= tol) crit.members.push_back(PointId{i});
    }
    return crit;
}

SublevelSet sublevel_set(const ScalarField& f, double alpha) {
    SublevelSet level{alpha, {}};
    for (std::size_t i = 0; i < f.size(); ++i) {
        if (f.values()[i] <= alpha) level.members.push_back(PointId{i});
    }
    return level;
}

std::optional<double> comparison_floor(const MetricSpaceGraph& space, const ScalarField& f,
                                       const ScalarField& g, PointId x,
                                       const CriticalSet& crit) {
    if (!f.bound_to(space) || !g.bound_to(space)) {
        throw Error(ErrorCode::FieldSpaceMismatch, "fields are not bound to this space");
    }
    if (!space.contains(x)) throw Error(ErrorCode::InvalidPoint, "point outside space");
    const double level = f[x];
    std::optional<double> floor;
    for (const PointId z : crit.members) {
        if (f[z] > level) continue;
        const double diff = f[z] - g[z];
        floor = floor ? std::min(*floor, diff) : diff;
    }
    return floor;
}

double sampled_critical_tolerance(double spacing, double lipschitz) {
    if (!(spacing > 0.0) || !(lipschitz >= 0.0)) {
        throw Error(ErrorCode::NegativeTolerance, "spacing must be positive, Lipschitz >= 0");
    }
    return 2.0 * spacing * lipschitz;
}

}  // namespace metslope
