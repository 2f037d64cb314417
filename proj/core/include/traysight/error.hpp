#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

namespace traysight {

/// Distinguishes failure classes so callers (and the CLI) can react without
/// parsing message text.
enum class ErrorCode {
    FileNotFound,
    Io,
    MalformedHeader,
    UnsupportedMaxval,
    TruncatedData,
    OutOfBounds,
    InvalidArgument,
    EmptyInput,
    InsufficientSamples,
    MissingKey,
    UnknownKey,
    DuplicateKey,
    InvalidValue,
    InvariantViolation,
    DegenerateCalibration,
    FingerprintMismatch,
    VersionMismatch,
    SlotCountMismatch,
    MalformedLine,
    LengthMismatch,
    UnmatchedId,
};

std::string_view to_string(ErrorCode code) noexcept;

class Error : public std::runtime_error {
public:
    Error(ErrorCode code, const std::string& message);

    ErrorCode code() const noexcept { return code_; }
    /// The message without the error-class prefix.
    const std::string& detail() const noexcept { return detail_; }

private:
    ErrorCode code_;
    std::string detail_;
};

}  // namespace traysight
