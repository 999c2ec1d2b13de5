#pragma once

#include <stdexcept>
#include <string>

namespace biasgauge {

// Every failure the library can report. The CLI maps these to exit codes and
// the shared-library layer maps them one-to-one onto bg_status values.
enum class ErrorCode {
    FileNotReadable,
    ColumnNotFound,
    TargetNotBinary,
    EmptyAfterFiltering,
    DegenerateTarget,
    DegenerateMarginal,
    NegativeProbability,
    RowNotNormalized,
    UnknownFixture,
    InvalidArgument,
    IoError,
};

const char* to_string(ErrorCode code) noexcept;

class Error : public std::runtime_error {
public:
    Error(ErrorCode code, const std::string& message)
        : std::runtime_error(message), code_(code) {}

    ErrorCode code() const noexcept { return code_; }

private:
    ErrorCode code_;
};

[[noreturn]] inline void raise(ErrorCode code, const std::string& message) {
    throw Error(code, message);
}

}  // namespace biasgauge
