#pragma once

// Discrete metric slope.
//
//   |grad f|(x) = 0                                   if x is isolated
//               = max_{y ~ x} (f(x) - f(y))^+ / d(x,y)  otherwise
//
// The max runs over graph neighbours (edge-local). `delta_slope_profile`
// exposes the sup over shrinking metric balls for validation on sampled
// domains.

#include "metslope/space.hpp"

#include <cstdint>
#include <span>
#include <string>
#include <vector>

namespace metslope {

inline constexpr double default_overflow_cap = 1e12;

/// Finite real values bound to one space.
class ScalarField {
public:
    ScalarField(const MetricSpaceGraph& space, std::vector<double> values);

    [[nodiscard]] std::size_t size() const noexcept { return values_.size(); }
    [[nodiscard]] std::uint64_t space_id() const noexcept { return space_id_; }
    [[nodiscard]] double operator[](PointId x) const { return values_[x.value]; }
    [[nodiscard]] std::span<const double> values() const noexcept { return values_; }

    /// Field on the same space with different values.
    [[nodiscard]] ScalarField with_values(std::vector<double> values) const;

    [[nodiscard]] bool bound_to(const MetricSpaceGraph& space) const noexcept {
        return space_id_ == space.id() && values_.size() == space.size();
    }

private:
    ScalarField(std::uint64_t space_id, std::vector<double> values);

    std::uint64_t space_id_;
    std::vector<double> values_;
};

/// Pointwise f - g.
ScalarField difference(const ScalarField& f, const ScalarField& g);

/// Extended nonnegative real. Quotients above the overflow cap are
/// reported as Infinite.
class SlopeValue {
public:
    static SlopeValue finite(double s);
    static SlopeValue infinite() noexcept { return SlopeValue(0.0, true); }

    [[nodiscard]] bool is_infinite() const noexcept { return infinite_; }
    [[nodiscard]] bool is_finite() const noexcept { return !infinite_; }
    /// Finite value; +inf for the Infinite variant.
    [[nodiscard]] double value() const noexcept;

    friend bool operator==(const SlopeValue&, const SlopeValue&) = default;

private:
    SlopeValue(double s, bool inf) noexcept : value_(s), infinite_(inf) {}
    double value_;
    bool infinite_;
};

enum class SlopeProvenance { ExactGraph, DeltaEstimate };

std::string to_string(SlopeProvenance p);

struct SlopeField {
    std::vector<SlopeValue> values;
    SlopeProvenance provenance = SlopeProvenance::ExactGraph;
    double delta = 0.0;  // only meaningful for DeltaEstimate
    double overflow_cap = default_overflow_cap;

    [[nodiscard]] std::size_t size() const noexcept { return values.size(); }
    [[nodiscard]] const SlopeValue& operator[](PointId x) const { return values[x.value]; }
};

struct SlopeOptions {
    double overflow_cap = default_overflow_cap;
    unsigned threads = 1;  // slope_field work split; output independent of it
};

SlopeValue local_slope(const MetricSpaceGraph& space, const ScalarField& f, PointId x,
                       const SlopeOptions& options = {});

SlopeField slope_field(const MetricSpaceGraph& space, const ScalarField& f,
                       const SlopeOptions& options = {});

struct DeltaSlopeEntry {
    double delta = 0.0;
    SlopeValue slope = SlopeValue::finite(0.0);
    bool empty_ball = false;
};

/// sup of (f(x)-f(y))^+/d(x,y) over 0 < d(x,y) <= delta, for each delta of
/// a strictly decreasing list.
std::vector<DeltaSlopeEntry> delta_slope_profile(const MetricSpaceGraph& space,
                                                 const ScalarField& f, PointId x,
                                                 std::span<const double> deltas,
                                                 const SlopeOptions& options = {});

/// Slope field whose value at x is the sup over the ball of radius delta.
SlopeField delta_slope_field(const MetricSpaceGraph& space, const ScalarField& f, double delta,
                             const SlopeOptions& options = {});

ScalarField scale_field(const ScalarField& f, double lambda);

/// f + c pointwise.
ScalarField shift_field(const ScalarField& f, double c);

}  // namespace metslope
