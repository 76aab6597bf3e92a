#include "fourvertex/errors.h"

namespace fourvertex {

std::string_view to_string(ErrorCode code) {
    switch (code) {
        case ErrorCode::InvalidInput: return "InvalidInput";
        case ErrorCode::TooFewPoints: return "TooFewPoints";
        case ErrorCode::PreconditionViolated: return "PreconditionViolated";
        case ErrorCode::NotBalanced: return "NotBalanced";
        case ErrorCode::NotSimple: return "NotSimple";
        case ErrorCode::NotCentrallySymmetric: return "NotCentrallySymmetric";
        case ErrorCode::NoInitialCombination: return "NoInitialCombination";
        case ErrorCode::GenerationExhausted: return "GenerationExhausted";
        case ErrorCode::DegenerateInput: return "DegenerateInput";
        case ErrorCode::DegenerateEdge: return "DegenerateEdge";
        case ErrorCode::AntipodalConsecutive: return "AntipodalConsecutive";
        case ErrorCode::AntipodalBridge: return "AntipodalBridge";
        case ErrorCode::DegenerateTriple: return "DegenerateTriple";
        case ErrorCode::DegenerateSequence: return "DegenerateSequence";
        case ErrorCode::DegenerateSign: return "DegenerateSign";
        case ErrorCode::DegenerateAngle: return "DegenerateAngle";
        case ErrorCode::NotGeneric: return "NotGeneric";
        case ErrorCode::CollinearTriple: return "CollinearTriple";
        case ErrorCode::ConsecutiveCollinear: return "ConsecutiveCollinear";
        case ErrorCode::GeneralPositionViolated: return "GeneralPositionViolated";
        case ErrorCode::SingularGenerators: return "SingularGenerators";
        case ErrorCode::ParallelPlanes: return "ParallelPlanes";
        case ErrorCode::NumericalBreakdown: return "NumericalBreakdown";
        case ErrorCode::PerturbationFailed: return "PerturbationFailed";
        case ErrorCode::ClosureResidualExceeded: return "ClosureResidualExceeded";
        case ErrorCode::TriangulationFailed: return "TriangulationFailed";
        case ErrorCode::NoEligibleVertex: return "NoEligibleVertex";
        case ErrorCode::TraceInvariantViolation: return "TraceInvariantViolation";
    }
    return "Unknown";
}

ErrorClass classify(ErrorCode code) {
    switch (code) {
        case ErrorCode::InvalidInput:
        case ErrorCode::TooFewPoints:
        case ErrorCode::PreconditionViolated:
        case ErrorCode::NotBalanced:
        case ErrorCode::NotSimple:
        case ErrorCode::NotCentrallySymmetric:
        case ErrorCode::NoInitialCombination:
        case ErrorCode::GenerationExhausted:
            return ErrorClass::InvalidInput;
        case ErrorCode::NoEligibleVertex:
        case ErrorCode::TraceInvariantViolation:
            return ErrorClass::Violation;
        default:
            return ErrorClass::Degenerate;
    }
}

}  // namespace fourvertex
