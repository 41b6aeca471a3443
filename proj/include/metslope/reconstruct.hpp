#pragma once

// Recover a field from its slope field and its values on the critical set.
//
// Label-setting sweep in increasing value order: prescribed points seed the
// queue; every other point takes v(x) = min over finalized neighbours y of
// v(y) + s(x) d(x,y). The result is always re-checked against the input
// slopes before it is returned.

#include "metslope/critical.hpp"

#include <map>
#include <variant>
#include <vector>

namespace metslope {

struct SlopeData {
    SlopeField slopes;                     // all Finite
    std::map<PointId, double> crit_values;  // prescribed values
};

/// Slope field of f plus f restricted to Crit(f) at the given tolerance.
SlopeData extract_slope_data(const MetricSpaceGraph& space, const ScalarField& f,
                             double crit_tol = 0.0, const SlopeOptions& options = {});

struct ReconstructionWitness {
    PointId point;
    double expected_slope = 0.0;
    double recomputed_slope = 0.0;
    double value = 0.0;  // reconstructed value at the point
};

struct Inadmissible {
    std::vector<ReconstructionWitness> witnesses;
    std::vector<double> candidate;  // the sweep output that failed verification
};

using ReconstructionResult = std::variant<ScalarField, Inadmissible>;

/// Throws DisconnectedSpace, UncoveredCriticalPoint (slope <= tol without a
/// prescribed value), InfiniteSlopeData or FieldSpaceMismatch.
ReconstructionResult reconstruct(const MetricSpaceGraph& space, const SlopeData& data,
                                 double tol, const SlopeOptions& options = {});

struct AdmissibilityReport {
    bool admissible = false;
    std::vector<ReconstructionWitness> witnesses;
};

AdmissibilityReport admissible(const MetricSpaceGraph& space, const SlopeData& data, double tol,
                               const SlopeOptions& options = {});

}  // namespace metslope
