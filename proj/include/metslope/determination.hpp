#pragma once

// Hypothesis checks and verdicts for the comparison principle and the
// determination of a function by its slope and critical values.
//
// Determination: if |grad f| = |grad g| < +inf everywhere and g - f = c on
// Crit(f), then g = f + c. The verdict applies the comparison principle in
// both directions (g <= f + c and f <= g - c) and then re-measures the
// residual max |g - f - c| independently.

#include "metslope/critical.hpp"
#include "metslope/error.hpp"

#include <optional>
#include <string>
#include <vector>

namespace metslope {

struct Tolerances {
    double slope = 1e-9;     // pointwise slope equality / dominance
    double crit = 0.0;       // critical-set cutoff and constancy of g - f on Crit(f)
    double residual = 1e-9;  // final |g - f - c|
};

/// Defaults for slopes computed exactly on a graph.
Tolerances exact_graph_tolerances();

/// Defaults for data sampled at spacing h from a function with Lipschitz
/// estimate L: slope 5hL, crit 2hL, residual 1e-9 + 2hL.
Tolerances sampled_tolerances(double spacing, double lipschitz);

enum class Hypothesis { SlopesFinite, SlopesEqual, CritSetsEqual, DiffConstantOnCrit, SlopeDominance };

std::string to_string(Hypothesis h);

struct Witness {
    PointId point;
    Hypothesis hypothesis = Hypothesis::SlopesFinite;
    double f_value = 0.0;
    double g_value = 0.0;
    double slope_f = 0.0;  // +inf for Infinite
    double slope_g = 0.0;
};

struct HypothesisDiagnostics {
    struct Finiteness {
        bool pass = true;
        std::optional<PointId> worst_point;  // first point with an Infinite slope
        std::string field;                   // "f" or "g"
    } slopes_finite;

    struct Equality {
        bool pass = true;
        double max_gap = 0.0;  // +inf when one side is Infinite and the other not
        std::optional<PointId> worst_point;
    } slopes_equal;

    // Derived: equal slope fields force equal critical sets. Reported, not a
    // verdict-bearing hypothesis.
    struct CritEquality {
        bool pass = true;
        std::vector<PointId> only_in_f;
        std::vector<PointId> only_in_g;
    } crit_sets_equal;

    struct Constancy {
        bool pass = true;
        double spread = 0.0;    // max - min of g - f over Crit(f)
        double constant = 0.0;  // mean of g - f over Crit(f)
        PointId min_point;
        PointId max_point;
        double min_value = 0.0;
        double max_value = 0.0;
    } diff_constant_on_crit;

    Tolerances tolerances;
    CriticalSet crit_f;
    CriticalSet crit_g;
    SlopeField slopes_f;
    SlopeField slopes_g;

    /// Verdict-bearing hypotheses that failed, in checking order.
    [[nodiscard]] std::vector<Hypothesis> violated() const;
    /// Offending points for the failed hypotheses, at most `limit` per hypothesis.
    [[nodiscard]] std::vector<Witness> witnesses(const ScalarField& f, const ScalarField& g,
                                                 std::size_t limit = 16) const;
};

/// Throws Error(EmptyCriticalSet) when Crit(f) is empty, which on a finite
/// space only happens when every minimiser has an Infinite slope.
HypothesisDiagnostics check_hypotheses(const MetricSpaceGraph& space, const ScalarField& f,
                                       const ScalarField& g, const Tolerances& tol,
                                       const SlopeOptions& options = {});

/// Raised when a comparison-principle precondition fails.
class PreconditionError : public Error {
public:
    PreconditionError(Hypothesis which, PointId witness, const std::string& message)
        : Error(ErrorCode::PreconditionViolated, to_string(which) + " at point " +
                                                     std::to_string(witness.value) + ": " +
                                                     message),
          which_(which),
          witness_(witness) {}

    [[nodiscard]] Hypothesis which() const noexcept { return which_; }
    [[nodiscard]] PointId witness() const noexcept { return witness_; }

private:
    Hypothesis which_;
    PointId witness_;
};

struct ComparisonResult {
    bool holds = false;
    PointId worst_point;
    double worst_excess = 0.0;  // max of g - f - c; holds iff <= tol.residual
};

/// Checks g <= f + c given |grad g| <= |grad f| < +inf and g - f <= c on Crit(f).
ComparisonResult comparison_principle(const MetricSpaceGraph& space, const ScalarField& f,
                                      const ScalarField& g, double c, const Tolerances& tol,
                                      const SlopeOptions& options = {});

struct EpsilonAuditRow {
    double epsilon = 0.0;
    bool crit_preserved = false;      // Crit((1+eps) f) == Crit(f)
    bool strict_dominance = false;    // |grad g| < |grad (1+eps) f| off Crit(f)
    bool bound_holds = false;         // g < f + eps * bracket + c off Crit(f)
    double max_bracket = 0.0;         // max over x of f(x) - min f on [f_eps <= f_eps(x)] cap Crit
    PointId worst_point;              // smallest slack
    double worst_slack = 0.0;         // f + eps * bracket + c - g at worst_point
    double worst_bracket = 0.0;
};

struct EpsilonAudit {
    bool trivial = false;  // Crit(f) is the whole space
    double constant = 0.0; // c = max of g - f over Crit(f)
    double range = 0.0;    // max f - min f
    std::vector<EpsilonAuditRow> rows;

    [[nodiscard]] bool passed() const;
};

/// Replays the scaling argument f_eps = (1+eps) f for each eps of a
/// strictly decreasing list.
EpsilonAudit epsilon_audit(const MetricSpaceGraph& space, const ScalarField& f,
                           const ScalarField& g, const std::vector<double>& epsilons,
                           const Tolerances& tol, const SlopeOptions& options = {});

enum class Verdict { EqualUpToConstant, HypothesisViolated, Inconclusive };

std::string to_string(Verdict v);

struct DeterminationReport {
    Verdict verdict = Verdict::Inconclusive;
    std::vector<Hypothesis> violated;
    std::optional<double> constant;
    double residual = 0.0;  // max |g - f - c|
    std::vector<Witness> witnesses;
    std::optional<HypothesisDiagnostics> diagnostics;  // absent if Crit(f) was empty
    std::string note;
    Tolerances tolerances;
    double overflow_cap = default_overflow_cap;
    std::string slope_provenance = "exact-graph";
};

DeterminationReport determine(const MetricSpaceGraph& space, const ScalarField& f,
                              const ScalarField& g, const Tolerances& tol,
                              const SlopeOptions& options = {});

/// max |g(x) - f(x) - c|.
double residual(const ScalarField& f, const ScalarField& g, double c);

}  // namespace metslope
