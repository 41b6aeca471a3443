#include "metslope/descent.hpp"

#include "metslope/error.hpp"

#include <algorithm>

namespace metslope {

namespace {

void require_bound(const MetricSpaceGraph& space, const ScalarField& f, const ScalarField& g) {
    if (!f.bound_to(space) || !g.bound_to(space)) {
        throw Error(ErrorCode::FieldSpaceMismatch, "fields are not bound to this space");
    }
}

bool dominates(const SlopeValue& sf, const SlopeValue& sg) {
    if (sg.is_infinite()) return false;
    if (sf.is_infinite()) return true;
    return sf.value() > sg.value();
}

std::string describe(PointId x) { return "point " + std::to_string(x.value); }

}  // namespace

StepResult descent_step(const MetricSpaceGraph& space, const ScalarField& f,
                        const ScalarField& g, PointId x, const CriticalSet& crit,
                        const SlopeOptions& options) {
    require_bound(space, f, g);
    if (!space.contains(x)) throw Error(ErrorCode::InvalidPoint, describe(x));
    if (crit.contains(x)) throw Error(ErrorCode::PointIsCritical, describe(x));

    const SlopeValue sf = local_slope(space, f, x, options);
    const SlopeValue sg = local_slope(space, g, x, options);
    if (!dominates(sf, sg)) {
        throw Error(ErrorCode::SlopeDominanceViolated,
                    describe(x) + ": slope of f " + std::to_string(sf.value()) +
                        " does not exceed slope of g " + std::to_string(sg.value()));
    }

    const double fx = f[x];
    const double dx = fx - g[x];
    std::optional<PointId> best;
    double best_rate = 0.0;
    for (const auto& e : space.adjacent(x)) {
        const double fz = f[e.point];
        const double dz = fz - g[e.point];
        if (!(fx > fz) || !(dx > dz)) continue;
        const double rate = (fx - fz) / e.distance;
        // adjacency is sorted by id, so strict > keeps the smallest id on ties
        if (!best || rate > best_rate) {
            best = e.point;
            best_rate = rate;
        }
    }
    if (best) return *best;
    return NoStep{describe(x) + ": no neighbour decreases both f and f-g (slope f " +
                  std::to_string(sf.value()) + ", slope g " + std::to_string(sg.value()) +
                  "); dominance holds only within floating-point tolerance"};
}

DescentPath descent_path(const MetricSpaceGraph& space, const ScalarField& f,
                         const ScalarField& g, PointId x0, const CriticalSet& crit,
                         std::size_t max_steps, const SlopeOptions& options) {
    require_bound(space, f, g);
    if (!space.contains(x0)) throw Error(ErrorCode::InvalidPoint, describe(x0));

    DescentPath path;
    const auto record = [&](PointId p) {
        path.points.push_back(p);
        path.f_values.push_back(f[p]);
        path.diff_values.push_back(f[p] - g[p]);
    };
    record(x0);
    PointId current = x0;
    std::size_t steps = 0;
    while (!crit.contains(current)) {
        if (steps == max_steps) {
            throw Error(ErrorCode::StepLimitExceeded,
                        "no critical point after " + std::to_string(max_steps) +
                            " steps; check tolerances");
        }
        auto step = descent_step(space, f, g, current, crit, options);
        if (auto* stop = std::get_if<NoStep>(&step)) {
            path.diagnostic = stop->diagnostic;
            return path;
        }
        current = std::get<PointId>(step);
        record(current);
        ++steps;
    }
    path.terminal_critical = true;
    return path;
}

std::optional<PointId> slope_dominance_witness(const MetricSpaceGraph& space,
                                               const ScalarField& f, const ScalarField& g,
                                               const CriticalSet& crit,
                                               const SlopeOptions& options) {
    require_bound(space, f, g);
    const SlopeField sf = slope_field(space, f, options);
    const SlopeField sg = slope_field(space, g, options);
    for (std::size_t i = 0; i < space.size(); ++i) {
        const PointId x{i};
        if (crit.contains(x)) continue;
        if (!dominates(sf[x], sg[x])) return x;
    }
    return std::nullopt;
}

StrictComparisonReport verify_strict_comparison(const MetricSpaceGraph& space,
                                                const ScalarField& f, const ScalarField& g,
                                                const CriticalSet& crit,
                                                const SlopeOptions& options) {
    StrictComparisonReport report;
    report.precondition_witness = slope_dominance_witness(space, f, g, crit, options);
    report.precondition_holds = !report.precondition_witness;
    if (!report.precondition_holds) return report;

    for (std::size_t i = 0; i < space.size(); ++i) {
        const PointId x{i};
        if (crit.contains(x)) continue;
        ++report.checked_points;
        const double diff = f[x] - g[x];
        const auto floor = comparison_floor(space, f, g, x, crit);
        if (!floor || !(diff > *floor)) {
            report.first_violation = ComparisonViolation{x, diff, floor};
            break;
        }
    }
    return report;
}

}  // namespace metslope
