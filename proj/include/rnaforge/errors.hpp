#pragma once

#include <stdexcept>
#include <string>

namespace rnaforge {

// Every failure mode surfaced by the library. CLI exit codes group these:
// usage errors -> 2, data errors -> 3, numerical failures -> 4.
enum class ErrorCode {
    InvalidArgument,
    UnbalancedBrackets,
    IllegalCharacter,
    HairpinTooSmall,
    LengthMismatch,
    EmptyTestSet,
    TooLong,
    ParseError,
    UnknownKey,
    MissingPairType,
    InvalidDesign,
    ContextOverflow,
    IoError,
    BadMagic,
    VersionMismatch,
    ShapeMismatch,
    AllMaskedLogitsNonFinite,
    EvaluationFailed,
    DivergenceDetected,
};

const char* error_code_name(ErrorCode code);

class Error : public std::runtime_error {
  public:
    Error(ErrorCode code, const std::string& message)
        : std::runtime_error(std::string(error_code_name(code)) + ": " + message),
          code_(code) {}

    ErrorCode code() const { return code_; }

  private:
    ErrorCode code_;
};

inline const char* error_code_name(ErrorCode code) {
    switch (code) {
        case ErrorCode::InvalidArgument: return "InvalidArgument";
        case ErrorCode::UnbalancedBrackets: return "UnbalancedBrackets";
        case ErrorCode::IllegalCharacter: return "IllegalCharacter";
        case ErrorCode::HairpinTooSmall: return "HairpinTooSmall";
        case ErrorCode::LengthMismatch: return "LengthMismatch";
        case ErrorCode::EmptyTestSet: return "EmptyTestSet";
        case ErrorCode::TooLong: return "TooLong";
        case ErrorCode::ParseError: return "ParseError";
        case ErrorCode::UnknownKey: return "UnknownKey";
        case ErrorCode::MissingPairType: return "MissingPairType";
        case ErrorCode::InvalidDesign: return "InvalidDesign";
        case ErrorCode::ContextOverflow: return "ContextOverflow";
        case ErrorCode::IoError: return "IoError";
        case ErrorCode::BadMagic: return "BadMagic";
        case ErrorCode::VersionMismatch: return "VersionMismatch";
        case ErrorCode::ShapeMismatch: return "ShapeMismatch";
        case ErrorCode::AllMaskedLogitsNonFinite: return "AllMaskedLogitsNonFinite";
        case ErrorCode::EvaluationFailed: return "EvaluationFailed";
        case ErrorCode::DivergenceDetected: return "DivergenceDetected";
    }
    return "UnknownError";
}

}  // namespace rnaforge
