#include "metslope/slope.hpp"

#include "metslope/error.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <thread>

namespace metslope {

namespace {

void require_bound(const MetricSpaceGraph& space, const ScalarField& f) {
    if (!f.bound_to(space)) {
        throw Error(ErrorCode::FieldSpaceMismatch, "field is not bound to this space");
    }
}

SlopeValue capped(double s, double cap) {
    return s > cap ? SlopeValue::infinite() : SlopeValue::finite(s);
}

double positive_part(double v) { return std::max(v, 0.0); }

}  // namespace

ScalarField::ScalarField(const MetricSpaceGraph& space, std::vector<double> values)
    : ScalarField(space.id(), std::move(values)) {
    if (values_.size() != space.size()) {
        throw Error(ErrorCode::FieldSpaceMismatch,
                    "field has " + std::to_string(values_.size()) + " values, space has " +
                        std::to_string(space.size()) + " points");
    }
}

ScalarField::ScalarField(std::uint64_t space_id, std::vector<double> values)
    : space_id_(space_id), values_(std::move(values)) {
    for (std::size_t i = 0; i < values_.size(); ++i) {
        if (!std::isfinite(values_[i])) {
            throw Error(ErrorCode::NonFiniteValue, "value at point " + std::to_string(i));
        }
    }
}

ScalarField difference(const ScalarField& f, const ScalarField& g) {
    if (f.space_id() != g.space_id() || f.size() != g.size()) {
        throw Error(ErrorCode::FieldSpaceMismatch, "fields live on different spaces");
    }
    std::vector<double> values(f.values().begin(), f.values().end());
    for (std::size_t i = 0; i < values.size(); ++i) values[i] -= g.values()[i];
    return f.with_values(std::move(values));
}

ScalarField ScalarField::with_values(std::vector<double> values) const {
    if (values.size() != values_.size()) {
        throw Error(ErrorCode::FieldSpaceMismatch, "value count differs from the space size");
    }
    return ScalarField(space_id_, std::move(values));
}

SlopeValue SlopeValue::finite(double s) {
    if (!(s >= 0.0) || !std::isfinite(s)) {
        throw Error(ErrorCode::NonFiniteValue, "finite slope must be a nonnegative real");
    }
    return SlopeValue(s, false);
}

double SlopeValue::value() const noexcept {
    return infinite_ ? std::numeric_limits<double>::infinity() : value_;
}

std::string to_string(SlopeProvenance p) {
    return p == SlopeProvenance::ExactGraph ? "exact-graph" : "delta-estimate";
}

SlopeValue local_slope(const MetricSpaceGraph& space, const ScalarField& f, PointId x,
                       const SlopeOptions& options) {
    require_bound(space, f);
    const auto adj = space.adjacent(x);
    if (adj.empty()) return SlopeValue::finite(0.0);
    const double fx = f[x];
    double best = 0.0;
    for (const auto& e : adj) best = std::max(best, positive_part(fx - f[e.point]) / e.distance);
    return capped(best, options.overflow_cap);
}

SlopeField slope_field(const MetricSpaceGraph& space, const ScalarField& f,
                       const SlopeOptions& options) {
    require_bound(space, f);
    const std::size_t n = space.size();
    std::vector<SlopeValue> values(n, SlopeValue::finite(0.0));

    // Each point is computed independently into its own slot, so the result
    // is identical for every partition of the index range.
    const auto fill = [&](std::size_t begin, std::size_t end) {
        for (std::size_t i = begin; i < end; ++i) {
            values[i] = local_slope(space, f, PointId{i}, options);
        }
    };
    const std::size_t workers = std::clamp<std::size_t>(options.threads, 1, std::max<std::size_t>(n, 1));
    if (workers == 1) {
        fill(0, n);
    } else {
        std::vector<std::jthread> pool;
        pool.reserve(workers);
        const std::size_t chunk = (n + workers - 1) / workers;
        for (std::size_t w = 0; w < workers; ++w) {
            const std::size_t begin = std::min(n, w * chunk);
            const std::size_t end = std::min(n, begin + chunk);
            pool.emplace_back(fill, begin, end);
        }
    }
    return SlopeField{std::move(values), SlopeProvenance::ExactGraph, 0.0, options.overflow_cap};
}

std::vector<DeltaSlopeEntry> delta_slope_profile(const MetricSpaceGraph& space,
                                                 const ScalarField& f, PointId x,
                                                 std::span<const double> deltas,
                                                 const SlopeOptions& options) {
    require_bound(space, f);
    if (deltas.empty()) throw Error(ErrorCode::EmptyDeltaList, "no radii given");
    if (!supports_radius_queries(space)) {
        throw Error(ErrorCode::NoMetricClosure,
                    "delta profile needs closure mode or point coordinates");
    }
    for (std::size_t k = 0; k < deltas.size(); ++k) {
        if (!(deltas[k] > 0.0)) throw Error(ErrorCode::NonPositiveLength, "radius must be positive");
        if (k > 0 && !(deltas[k] < deltas[k - 1])) {
            throw Error(ErrorCode::NonDecreasingDeltas, "radii must be strictly decreasing");
        }
    }

    // One query at the largest radius; smaller balls are filtered from it.
    const auto ball = neighbors(space, x, deltas.front());
    const double fx = f[x];
    std::vector<DeltaSlopeEntry> profile;
    profile.reserve(deltas.size());
    for (const double delta : deltas) {
        double best = 0.0;
        bool any = false;
        for (const auto& m : ball.members) {
            if (m.distance > delta) continue;
            any = true;
            best = std::max(best, positive_part(fx - f[m.point]) / m.distance);
        }
        profile.push_back({delta, capped(best, options.overflow_cap), !any});
    }
    return profile;
}

SlopeField delta_slope_field(const MetricSpaceGraph& space, const ScalarField& f, double delta,
                             const SlopeOptions& options) {
    SlopeField out{{}, SlopeProvenance::DeltaEstimate, delta, options.overflow_cap};
    out.values.reserve(space.size());
    const double radii[] = {delta};
    for (std::size_t i = 0; i < space.size(); ++i) {
        out.values.push_back(delta_slope_profile(space, f, PointId{i}, radii, options)[0].slope);
    }
    return out;
}

ScalarField scale_field(const ScalarField& f, double lambda) {
    if (!(lambda > 0.0) || !std::isfinite(lambda)) {
        throw Error(ErrorCode::NonPositiveScale, "scale must be a positive real");
    }
    std::vector<double> values(f.values().begin(), f.values().end());
    for (auto& v : values) v *= lambda;
    return f.with_values(std::move(values));
}

ScalarField shift_field(const ScalarField& f, double c) {
    std::vector<double> values(f.values().begin(), f.values().end());
    for (auto& v : values) v += c;
    return f.with_values(std::move(values));
}

}  // namespace metslope
