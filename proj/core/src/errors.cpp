#include "lipext/errors.hpp"

namespace lipext {

std::string_view to_string(ErrorCode code) {
  switch (code) {
    case ErrorCode::NotSquare: return "NotSquare";
    case ErrorCode::NonZeroDiagonal: return "NonZeroDiagonal";
    case ErrorCode::AsymmetricMatrix: return "AsymmetricMatrix";
    case ErrorCode::NegativeDistance: return "NegativeDistance";
    case ErrorCode::TriangleViolation: return "TriangleViolation";
    case ErrorCode::DuplicatePoints: return "DuplicatePoints";
    case ErrorCode::DimensionMismatch: return "DimensionMismatch";
    case ErrorCode::IndexOutOfRange: return "IndexOutOfRange";
    case ErrorCode::EmptySubset: return "EmptySubset";
    case ErrorCode::InvalidArgument: return "InvalidArgument";
    case ErrorCode::InvalidMidpointTable: return "InvalidMidpointTable";
    case ErrorCode::SearchBudgetExceeded: return "SearchBudgetExceeded";
    case ErrorCode::BaseNotNagata: return "BaseNotNagata";
    case ErrorCode::InternalCoverGap: return "InternalCoverGap";
    case ErrorCode::EnumerationTooLarge: return "EnumerationTooLarge";
    case ErrorCode::NotEnumerated: return "NotEnumerated";
    case ErrorCode::EmptyComplement: return "EmptyComplement";
    case ErrorCode::OracleNotNagata: return "OracleNotNagata";
    case ErrorCode::RTooSmall: return "RTooSmall";
    case ErrorCode::OracleNotColored: return "OracleNotColored";
    case ErrorCode::UncoveredPoint: return "UncoveredPoint";
    case ErrorCode::PointInDomain: return "PointInDomain";
    case ErrorCode::MixedTargetSpaces: return "MixedTargetSpaces";
    case ErrorCode::NotUniform: return "NotUniform";
    case ErrorCode::TooLarge: return "TooLarge";
    case ErrorCode::UnsupportedTarget: return "UnsupportedTarget";
    case ErrorCode::InvalidWeights: return "InvalidWeights";
    case ErrorCode::DifferentComplexes: return "DifferentComplexes";
    case ErrorCode::DisjointSimplices: return "DisjointSimplices";
    case ErrorCode::Disconnected: return "Disconnected";
    case ErrorCode::NotPure: return "NotPure";
    case ErrorCode::MissingVertexValue: return "MissingVertexValue";
    case ErrorCode::ZeroSamples: return "ZeroSamples";
    case ErrorCode::UnsupportedDimension: return "UnsupportedDimension";
    case ErrorCode::NonScalarTarget: return "NonScalarTarget";
    case ErrorCode::DomainTooSmall: return "DomainTooSmall";
    case ErrorCode::CoverNotVerified: return "CoverNotVerified";
    case ErrorCode::PropertyViolation: return "PropertyViolation";
    case ErrorCode::InternalError: return "InternalError";
  }
  return "Unknown";
}

Error::Error(ErrorCode code, const std::string& what)
    : std::runtime_error(std::string(to_string(code)) + ": " + what), code_(code) {}

void fail(ErrorCode code, const std::string& what) { throw Error(code, what); }

}  // namespace lipext
