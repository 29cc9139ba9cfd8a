#pragma once

#include <stdexcept>
#include <string>

namespace busca {

enum class ErrorKind {
    kInvalidArgument,
    kEmptySeries,
    kNonFiniteTimestamp,
    kDuplicateTimestamp,
    kTimestampOutsideWindow,
    kNumericalUnderflow,
    kRefinementFailed,
    kFitFailed,
    kDegenerateScale,
    kCalibrationFailed,
    kIoError,
};

/// All library failures carry a kind so callers can branch without
/// string-matching messages.
class Error : public std::runtime_error {
public:
    Error(ErrorKind kind, const std::string& message)
        : std::runtime_error(message), kind_(kind) {}

    [[nodiscard]] ErrorKind kind() const noexcept { return kind_; }

private:
    ErrorKind kind_;
};

[[noreturn]] inline void throw_error(ErrorKind kind, const std::string& message) {
    throw Error(kind, message);
}

} // namespace busca
