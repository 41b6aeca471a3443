#include "metslope/reconstruct.hpp"

#include "metslope/error.hpp"

#include <algorithm>
#include <cmath>
#include <functional>
#include <limits>
#include <queue>
#include <stdexcept>
#include <utility>

namespace metslope {

namespace {

constexpr double inf = std::numeric_limits<double>::infinity();

void validate(const MetricSpaceGraph& space, const SlopeData& data, double tol) {
    if (!(tol >= 0.0)) throw Error(ErrorCode::NegativeTolerance, "tolerance must be >= 0");
    if (data.slopes.size() != space.size()) {
        throw Error(ErrorCode::FieldSpaceMismatch, "slope data does not match the space size");
    }
    for (std::size_t i = 0; i < data.slopes.size(); ++i) {
        if (data.slopes.values[i].is_infinite()) {
            throw Error(ErrorCode::InfiniteSlopeData,
                        "infinite slope at point " + std::to_string(i));
        }
    }
    for (const auto& [p, v] : data.crit_values) {
        if (!space.contains(p)) {
            throw Error(ErrorCode::InvalidPoint,
                        "prescribed value at point " + std::to_string(p.value));
        }
        if (!std::isfinite(v)) throw Error(ErrorCode::NonFiniteValue, "prescribed value");
    }
    for (std::size_t i = 0; i < data.slopes.size(); ++i) {
        if (data.slopes.values[i].value() <= tol && !data.crit_values.count(PointId{i})) {
            throw Error(ErrorCode::UncoveredCriticalPoint,
                        "point " + std::to_string(i) + " has slope " +
                            std::to_string(data.slopes.values[i].value()) +
                            " but no prescribed value");
        }
    }
    if (!space.is_connected()) {
        throw Error(ErrorCode::DisconnectedSpace, "reconstruction needs a connected space");
    }
}

}  // namespace

SlopeData extract_slope_data(const MetricSpaceGraph& space, const ScalarField& f,
                             double crit_tol, const SlopeOptions& options) {
    SlopeData data{slope_field(space, f, options), {}};
    for (const PointId z : critical_set(data.slopes, crit_tol).members) data.crit_values[z] = f[z];
    return data;
}

ReconstructionResult reconstruct(const MetricSpaceGraph& space, const SlopeData& data, double tol,
                                 const SlopeOptions& options) {
    validate(space, data, tol);
    const std::size_t n = space.size();

    if (data.crit_values.empty()) {
        // A finite space always has a minimiser, whose slope is 0.
        std::size_t lowest = 0;
        for (std::size_t i = 1; i < n; ++i) {
            if (data.slopes.values[i].value() < data.slopes.values[lowest].value()) lowest = i;
        }
        return Inadmissible{{ReconstructionWitness{PointId{lowest},
                                                   data.slopes.values[lowest].value(), 0.0, 0.0}},
                            {}};
    }

    std::vector<double> value(n, inf);
    std::vector<char> fixed(n, 0);
    std::vector<char> done(n, 0);
    using Item = std::pair<double, std::size_t>;  // (value, id): ties go to the smaller id
    std::priority_queue<Item, std::vector<Item>, std::greater<>> queue;
    for (const auto& [p, v] : data.crit_values) {
        value[p.value] = v;
        fixed[p.value] = 1;
        queue.emplace(v, p.value);
    }

    double last = -inf;
    while (!queue.empty()) {
        const auto [v, u] = queue.top();
        queue.pop();
        if (done[u] || v > value[u]) continue;
        if (v < last) throw std::logic_error("label-setting sweep finalized a decreasing value");
        last = v;
        done[u] = 1;
        for (const auto& e : space.adjacent(PointId{u})) {
            const std::size_t y = e.point.value;
            if (done[y] || fixed[y]) continue;
            const double candidate = v + data.slopes.values[y].value() * e.distance;
            if (candidate < value[y]) {
                value[y] = candidate;
                queue.emplace(candidate, y);
            }
        }
    }

    // Connected space: every point was reached.
    const ScalarField result(space, value);
    const SlopeField recomputed = slope_field(space, result, options);
    Inadmissible failure;
    for (std::size_t i = 0; i < n; ++i) {
        const double expected = data.slopes.values[i].value();
        const double got = recomputed.values[i].value();
        if (!(std::abs(got - expected) <= tol)) {
            failure.witnesses.push_back({PointId{i}, expected, got, value[i]});
        }
    }
    if (failure.witnesses.empty()) return result;
    failure.candidate = std::move(value);
    return failure;
}

AdmissibilityReport admissible(const MetricSpaceGraph& space, const SlopeData& data, double tol,
                               const SlopeOptions& options) {
    auto result = reconstruct(space, data, tol, options);
    if (std::holds_alternative<ScalarField>(result)) return {true, {}};
    return {false, std::get<Inadmissible>(std::move(result)).witnesses};
}

}  // namespace metslope
