#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

namespace metslope {

enum class ErrorCode {
    // space
    NonPositiveLength,
    DuplicateEdge,
    DanglingEndpoint,
    SelfLoop,
    EmptyEdgeList,
    DegenerateInterval,
    TooFewPoints,
    InvalidPoint,
    // slope
    FieldSpaceMismatch,
    NonFiniteValue,
    NoMetricClosure,
    EmptyDeltaList,
    NonDecreasingDeltas,
    NonPositiveScale,
    // critical
    NegativeTolerance,
    // descent
    PointIsCritical,
    SlopeDominanceViolated,
    StepLimitExceeded,
    // determination
    EmptyCriticalSet,
    PreconditionViolated,
    // reconstruct
    DisconnectedSpace,
    UncoveredCriticalPoint,
    InfiniteSlopeData,
    // gallery
    OutOfDomain,
    UnknownFigure,
    // io
    ParseError,
    IoFailure,
};

std::string_view to_string(ErrorCode code) noexcept;

class Error : public std::runtime_error {
public:
    Error(ErrorCode code, const std::string& message)
        : std::runtime_error(std::string(to_string(code)) + ": " + message), code_(code) {}

    [[nodiscard]] ErrorCode code() const noexcept { return code_; }

private:
    ErrorCode code_;
};

}  // namespace metslope
