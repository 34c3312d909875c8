#include "tsq/errors.hpp"

namespace tsq {

const char* errorKindName(ErrorKind kind) {
    switch (kind) {
        case ErrorKind::EmptyQuiver: return "EmptyQuiver";
        case ErrorKind::VertexGap: return "VertexGap";
        case ErrorKind::LengthMismatch: return "LengthMismatch";
        case ErrorKind::SelfLoop: return "SelfLoop";
        case ErrorKind::NonPositiveArgument: return "NonPositiveArgument";
        case ErrorKind::IndexOutOfRange: return "IndexOutOfRange";
        case ErrorKind::WeightNotBalanced: return "WeightNotBalanced";
        case ErrorKind::Infeasible: return "Infeasible";
        case ErrorKind::Disconnected: return "Disconnected";
        case ErrorKind::NotSpanningTree: return "NotSpanningTree";
        case ErrorKind::WeightNotInCone: return "WeightNotInCone";
        case ErrorKind::NonConvergence: return "NonConvergence";
        case ErrorKind::TooManyVertices: return "TooManyVertices";
        case ErrorKind::TooManyTrees: return "TooManyTrees";
        case ErrorKind::TooLarge: return "TooLarge";
        case ErrorKind::ZeroAmbientDim: return "ZeroAmbientDim";
        case ErrorKind::OriginNotInterior: return "OriginNotInterior";
        case ErrorKind::NotFullDimensional: return "NotFullDimensional";
        case ErrorKind::NoUniqueInteriorPoint: return "NoUniqueInteriorPoint";
        case ErrorKind::Indeterminate: return "Indeterminate";
        case ErrorKind::DimensionTooHigh: return "DimensionTooHigh";
        case ErrorKind::UsageError: return "UsageError";
    }
    return "Unknown";
}

} // namespace tsq
