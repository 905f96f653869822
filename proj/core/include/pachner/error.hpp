#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

namespace pachner {

enum class ErrorKind {
    ParseError,
    NotPure,
    DuplicateFacet,
    BadVertexId,
    NotAFace,
    NotAFacet,
    NotABoundaryFace,
    VertexClash,
    NotPseudomanifold,
    DegenerateDouble,
    ClosedInput,
    NotClosed,
    BoundaryMismatch,
    BadType,
    DimensionMismatch,
    NonIntegralCoefficient,
    ChiMismatch,
    ChiBoundaryMismatch,
    ResidualNonzero,
    VerificationFailed,
    IllegalMove,
    IllegalShelling,
    EmptyResult,
    UnknownFixture,
    BudgetExhausted,
    UnsupportedDimension,
    NoExposedFacet,
    InternalAssertFailed,
    ReplayMismatch,
};

std::string_view to_string(ErrorKind kind);

/// Every failure raised by the library. `what()` starts with the kind name.
class Error : public std::runtime_error {
public:
    Error(ErrorKind kind, const std::string& detail);

    ErrorKind kind() const noexcept { return kind_; }
    const std::string& detail() const noexcept { return detail_; }

private:
    ErrorKind kind_;
    std::string detail_;
};

} // namespace pachner
