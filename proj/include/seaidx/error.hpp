#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

namespace seaidx {

enum class ErrorCode {
    kConstantSeries,
    kLengthMismatch,
    kSizeMismatch,
    kMalformedMeta,
    kBadSegmentCount,
    kShapeMismatch,
    kBadBits,
    kDegenerateEmbedding,
    kBadBudget,
    kBadSampleSize,
    kEmptyTree,
    kUnsupportedSummarization,
    kBadK,
    kIo,
    kInvalidArgument,
};

std::string_view to_string(ErrorCode code);

// Every contract violation in the library is reported through this type; the
// code lets callers (and the CLI) branch without string matching.
class Error : public std::runtime_error {
public:
    Error(ErrorCode code, const std::string& what)
        : std::runtime_error(std::string(to_string(code)) + ": " + what), code_(code) {}

    ErrorCode code() const noexcept { return code_; }

private:
    ErrorCode code_;
};

}  // namespace seaidx
