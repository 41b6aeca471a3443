#include "metslope/error.hpp"

namespace metslope {

std::string_view to_string(ErrorCode code) noexcept {
    switch (code) {
        case ErrorCode::NonPositiveLength: return "NonPositiveLength";
        case ErrorCode::DuplicateEdge: return "DuplicateEdge";
        case ErrorCode::DanglingEndpoint: return "DanglingEndpoint";
        case ErrorCode::SelfLoop: return "SelfLoop";
        case ErrorCode::EmptyEdgeList: return "EmptyEdgeList";
        case ErrorCode::DegenerateInterval: return "DegenerateInterval";
        case ErrorCode::TooFewPoints: return "TooFewPoints";
        case ErrorCode::InvalidPoint: return "InvalidPoint";
        case ErrorCode::FieldSpaceMismatch: return "FieldSpaceMismatch";
        case ErrorCode::NonFiniteValue: return "NonFiniteValue";
        case ErrorCode::NoMetricClosure: return "NoMetricClosure";
        case ErrorCode::EmptyDeltaList: return "EmptyDeltaList";
        case ErrorCode::NonDecreasingDeltas: return "NonDecreasingDeltas";
        case ErrorCode::NonPositiveScale: return "NonPositiveScale";
        case ErrorCode::NegativeTolerance: return "NegativeTolerance";
        case ErrorCode::PointIsCritical: return "PointIsCritical";
        case ErrorCode::SlopeDominanceViolated: return "SlopeDominanceViolated";
        case ErrorCode::StepLimitExceeded: return "StepLimitExceeded";
        case ErrorCode::EmptyCriticalSet: return "EmptyCriticalSet";
        case ErrorCode::PreconditionViolated: return "PreconditionViolated";
        case ErrorCode::DisconnectedSpace: return "DisconnectedSpace";
        case ErrorCode::UncoveredCriticalPoint: return "UncoveredCriticalPoint";
        case ErrorCode::InfiniteSlopeData: return "InfiniteSlopeData";
        case ErrorCode::OutOfDomain: return "OutOfDomain";
        case ErrorCode::UnknownFigure: return "UnknownFigure";
        case ErrorCode::ParseError: return "ParseError";
        case ErrorCode::IoFailure: return "IoFailure";
    }
    return "Unknown";
}

}  // namespace metslope
