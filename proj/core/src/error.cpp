#include "pachner/error.hpp"

namespace pachner {

std::string_view to_string(ErrorKind kind)
{
    switch (kind) {
    case ErrorKind::ParseError: return "ParseError";
    case ErrorKind::NotPure: return "NotPure";
    case ErrorKind::DuplicateFacet: return "DuplicateFacet";
    case ErrorKind::BadVertexId: return "BadVertexId";
    case ErrorKind::NotAFace: return "NotAFace";
    case ErrorKind::NotAFacet: return "NotAFacet";
    case ErrorKind::NotABoundaryFace: return "NotABoundaryFace";
    case ErrorKind::VertexClash: return "VertexClash";
    case ErrorKind::NotPseudomanifold: return "NotPseudomanifold";
    case ErrorKind::DegenerateDouble: return "DegenerateDouble";
    case ErrorKind::ClosedInput: return "ClosedInput";
    case ErrorKind::NotClosed: return "NotClosed";
    case ErrorKind::BoundaryMismatch: return "BoundaryMismatch";
    case ErrorKind::BadType: return "BadType";
    case ErrorKind::DimensionMismatch: return "DimensionMismatch";
    case ErrorKind::NonIntegralCoefficient: return "NonIntegralCoefficient";
    case ErrorKind::ChiMismatch: return "ChiMismatch";
    case ErrorKind::ChiBoundaryMismatch: return "ChiBoundaryMismatch";
    case ErrorKind::ResidualNonzero: return "ResidualNonzero";
    case ErrorKind::VerificationFailed: return "VerificationFailed";
    case ErrorKind::IllegalMove: return "IllegalMove";
    case ErrorKind::IllegalShelling: return "IllegalShelling";
    case ErrorKind::EmptyResult: return "EmptyResult";
    case ErrorKind::UnknownFixture: return "UnknownFixture";
    case ErrorKind::BudgetExhausted: return "BudgetExhausted";
    case ErrorKind::UnsupportedDimension: return "UnsupportedDimension";
    case ErrorKind::NoExposedFacet: return "NoExposedFacet";
    case ErrorKind::InternalAssertFailed: return "InternalAssertFailed";
    case ErrorKind::ReplayMismatch: return "ReplayMismatch";
    }
    return "UnknownError";
}

Error::Error(ErrorKind kind, const std::string& detail)
    : std::runtime_error(std::string(to_string(kind)) + ": " + detail), kind_(kind), detail_(detail)
{
}

} // namespace pachner
