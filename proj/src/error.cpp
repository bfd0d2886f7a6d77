#include "seaidx/error.hpp"

namespace seaidx {

std::string_view to_string(ErrorCode code) {
    switch (code) {
        case ErrorCode::kConstantSeries: return "ConstantSeries";
        case ErrorCode::kLengthMismatch: return "LengthMismatch";
        case ErrorCode::kSizeMismatch: return "SizeMismatch";
        case ErrorCode::kMalformedMeta: return "MalformedMeta";
        case ErrorCode::kBadSegmentCount: return "BadSegmentCount";
        case ErrorCode::kShapeMismatch: return "ShapeMismatch";
        case ErrorCode::kBadBits: return "BadBits";
        case ErrorCode::kDegenerateEmbedding: return "DegenerateEmbedding";
        case ErrorCode::kBadBudget: return "BadBudget";
        case ErrorCode::kBadSampleSize: return "BadSampleSize";
        case ErrorCode::kEmptyTree: return "EmptyTree";
        case ErrorCode::kUnsupportedSummarization: return "UnsupportedSummarization";
        case ErrorCode::kBadK: return "BadK";
        case ErrorCode::kIo: return "IoError";
        case ErrorCode::kInvalidArgument: return "InvalidArgument";
    }
    return "Unknown";
}

}  // namespace seaidx
