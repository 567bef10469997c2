#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

namespace lipext {

enum class ErrorCode {
  NotSquare,
  NonZeroDiagonal,
  AsymmetricMatrix,
  NegativeDistance,
  TriangleViolation,
  DuplicatePoints,
  DimensionMismatch,
  IndexOutOfRange,
  EmptySubset,
  InvalidArgument,
  InvalidMidpointTable,
  SearchBudgetExceeded,
  BaseNotNagata,
  InternalCoverGap,
  EnumerationTooLarge,
  NotEnumerated,
  EmptyComplement,
  OracleNotNagata,
  RTooSmall,
  OracleNotColored,
  UncoveredPoint,
  PointInDomain,
  MixedTargetSpaces,
  NotUniform,
  TooLarge,
  UnsupportedTarget,
  InvalidWeights,
  DifferentComplexes,
  DisjointSimplices,
  Disconnected,
  NotPure,
  MissingVertexValue,
  ZeroSamples,
  UnsupportedDimension,
  NonScalarTarget,
  DomainTooSmall,
  CoverNotVerified,
  PropertyViolation,
  InternalError,
};

std::string_view to_string(ErrorCode code);

class Error : public std::runtime_error {
 public:
  Error(ErrorCode code, const std::string& what);
  ErrorCode code() const noexcept { return code_; }

 private:
  ErrorCode code_;
};

[[noreturn]] void fail(ErrorCode code, const std::string& what);

}  // namespace lipext
