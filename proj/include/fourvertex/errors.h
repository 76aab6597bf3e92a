#pragma once

#include <stdexcept>
#include <string>
#include <string_view>
#include <utility>

namespace fourvertex {

enum class ErrorCode {
    // Malformed or out-of-contract input.
    InvalidInput,
    TooFewPoints,
    PreconditionViolated,
    NotBalanced,
    NotSimple,
    NotCentrallySymmetric,
    NoInitialCombination,
    GenerationExhausted,
    // Geometry that falls inside a degeneracy band.
    DegenerateInput,
    DegenerateEdge,
    AntipodalConsecutive,
    AntipodalBridge,
    DegenerateTriple,
    DegenerateSequence,
    DegenerateSign,
    DegenerateAngle,
    NotGeneric,
    CollinearTriple,
    ConsecutiveCollinear,
    GeneralPositionViolated,
    SingularGenerators,
    ParallelPlanes,
    NumericalBreakdown,
    PerturbationFailed,
    ClosureResidualExceeded,
    TriangulationFailed,
    // Outcomes that would contradict a proven statement.
    NoEligibleVertex,
    TraceInvariantViolation,
};

enum class ErrorClass { InvalidInput, Degenerate, Violation };

std::string_view to_string(ErrorCode code);
ErrorClass classify(ErrorCode code);

class GeometryError : public std::runtime_error {
public:
    GeometryError(ErrorCode code, const std::string& what)
        : std::runtime_error(std::string(to_string(code)) + ": " + what), code_(code) {}

    ErrorCode code() const noexcept { return code_; }
    ErrorClass error_class() const noexcept { return classify(code_); }

private:
    ErrorCode code_;
};

/// Raised when a computation would contradict one of the lemmas; carries the
/// offending instance serialized as JSON so it can be written out verbatim.
class FindingError : public GeometryError {
public:
    FindingError(ErrorCode code, const std::string& what, std::string instance_json)
        : GeometryError(code, what), instance_json_(std::move(instance_json)) {}

    const std::string& instance_json() const noexcept { return instance_json_; }

private:
    std::string instance_json_;
};

[[noreturn]] inline void fail(ErrorCode code, const std::string& what) {
    throw GeometryError(code, what);
}

}  // namespace fourvertex
