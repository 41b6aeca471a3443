#pragma once

// Finite descent paths. Each step moves from a non-critical x to a
// neighbour z with f(z) < f(x) and (f-g)(z) < (f-g)(x), which exists
// whenever |grad f|(x) > |grad g|(x). On a finite space the sequence cannot
// revisit a point, so it reaches a critical point of f in fewer than n
// steps; no limit stage is ever needed. Every MetricSpaceGraph is finite,
// so there is no infinite space to refuse.

#include "metslope/critical.hpp"

#include <optional>
#include <string>
#include <variant>
#include <vector>

namespace metslope {

struct NoStep {
    std::string diagnostic;
};

using StepResult = std::variant<PointId, NoStep>;

/// Among neighbours z satisfying both strict decreases, picks the largest
/// (f(x)-f(z))/d(x,z), ties to the smallest id.
StepResult descent_step(const MetricSpaceGraph& space, const ScalarField& f,
                        const ScalarField& g, PointId x, const CriticalSet& crit,
                        const SlopeOptions& options = {});

struct DescentPath {
    std::vector<PointId> points;
    std::vector<double> f_values;
    std::vector<double> diff_values;  // (f - g) along the path
    bool terminal_critical = false;
    std::optional<std::string> diagnostic;  // set when a NoStep stopped the path
};

/// Iterates descent_step from x0 until a point of crit is reached.
/// max_steps bounds the number of moves; a finite space needs at most n - 1.
DescentPath descent_path(const MetricSpaceGraph& space, const ScalarField& f,
                         const ScalarField& g, PointId x0, const CriticalSet& crit,
                         std::size_t max_steps, const SlopeOptions& options = {});

/// First non-critical x with |grad f|(x) <= |grad g|(x), if any.
std::optional<PointId> slope_dominance_witness(const MetricSpaceGraph& space,
                                               const ScalarField& f, const ScalarField& g,
                                               const CriticalSet& crit,
                                               const SlopeOptions& options = {});

struct ComparisonViolation {
    PointId point;
    double diff = 0.0;                // (f - g)(x)
    std::optional<double> floor;      // m(x); nullopt when no critical point lies below
};

struct StrictComparisonReport {
    bool precondition_holds = false;
    std::optional<PointId> precondition_witness;
    std::size_t checked_points = 0;
    std::optional<ComparisonViolation> first_violation;

    [[nodiscard]] bool passed() const noexcept {
        return precondition_holds && !first_violation;
    }
};

/// Checks (f-g)(x) > m(x) at every x outside crit. Skips the check and
/// flags the precondition when slope dominance fails somewhere.
StrictComparisonReport verify_strict_comparison(const MetricSpaceGraph& space,
                                                const ScalarField& f, const ScalarField& g,
                                                const CriticalSet& crit,
                                                const SlopeOptions& options = {});

}  // namespace metslope
