#ifndef TSQ_ERRORS_HPP
#define TSQ_ERRORS_HPP

#include <stdexcept>
#include <string>

namespace tsq {

/// Every failure mode the library can report. The CLI surfaces these names
/// verbatim in its JSON error output, so the spelling is part of the contract.
enum class ErrorKind {
    EmptyQuiver,
    VertexGap,
    LengthMismatch,
    SelfLoop,
    NonPositiveArgument,
    IndexOutOfRange,
    WeightNotBalanced,
    Infeasible,
    Disconnected,
    NotSpanningTree,
    WeightNotInCone,
    NonConvergence,
    TooManyVertices,
    TooManyTrees,
    TooLarge,
    ZeroAmbientDim,
    OriginNotInterior,
    NotFullDimensional,
    NoUniqueInteriorPoint,
    Indeterminate,
    DimensionTooHigh,
    UsageError,
};

const char* errorKindName(ErrorKind kind);

class Error : public std::runtime_error {
  public:
    Error(ErrorKind kind, const std::string& message)
        : std::runtime_error(message), kind_(kind) {}

    ErrorKind kind() const { return kind_; }
    const char* kindName() const { return errorKindName(kind_); }

  private:
    ErrorKind kind_;
};

} // namespace tsq

#endif
