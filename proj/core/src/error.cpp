#include "traysight/error.hpp"

namespace traysight {

std::string_view to_string(ErrorCode code) noexcept {
    switch (code) {
        case ErrorCode::FileNotFound: return "file not found";
        case ErrorCode::Io: return "i/o error";
        case ErrorCode::MalformedHeader: return "malformed header";
        case ErrorCode::UnsupportedMaxval: return "unsupported maxval";
        case ErrorCode::TruncatedData: return "truncated data";
        case ErrorCode::OutOfBounds: return "out of bounds";
        case ErrorCode::InvalidArgument: return "invalid argument";
        case ErrorCode::EmptyInput: return "empty input";
        case ErrorCode::InsufficientSamples: return "insufficient samples";
        case ErrorCode::MissingKey: return "missing key";
        case ErrorCode::UnknownKey: return "unknown key";
        case ErrorCode::DuplicateKey: return "duplicate key";
        case ErrorCode::InvalidValue: return "invalid value";
        case ErrorCode::InvariantViolation: return "invariant violation";
        case ErrorCode::DegenerateCalibration: return "degenerate calibration";
        case ErrorCode::FingerprintMismatch: return "fingerprint mismatch";
        case ErrorCode::VersionMismatch: return "version mismatch";
        case ErrorCode::SlotCountMismatch: return "slot count mismatch";
        case ErrorCode::MalformedLine: return "malformed line";
        case ErrorCode::LengthMismatch: return "length mismatch";
        case ErrorCode::UnmatchedId: return "unmatched id";
    }
    return "unknown error";
}

Error::Error(ErrorCode code, const std::string& message)
    : std::runtime_error(std::string(to_string(code)) + ": " + message), code_(code), detail_(message) {}

}  // namespace traysight
