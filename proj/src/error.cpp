#include "semsig/error.hpp"

namespace semsig {

std::string_view to_string(ErrorCode code) noexcept {
  switch (code) {
    case ErrorCode::NonFiniteSample: return "NonFiniteSample";
    case ErrorCode::NonPositiveRate: return "NonPositiveRate";
    case ErrorCode::AliasedFrequency: return "AliasedFrequency";
    case ErrorCode::DegeneratePhase: return "DegeneratePhase";
    case ErrorCode::InconsistentTriple: return "InconsistentTriple";
    case ErrorCode::TooShort: return "TooShort";
    case ErrorCode::EmptySymbols: return "EmptySymbols";
    case ErrorCode::BadWindow: return "BadWindow";
    case ErrorCode::BadRange: return "BadRange";
    case ErrorCode::BadArgument: return "BadArgument";
    case ErrorCode::ParseError: return "ParseError";
    case ErrorCode::MissingColumn: return "MissingColumn";
    case ErrorCode::UnsupportedFormat: return "UnsupportedFormat";
    case ErrorCode::CorruptHeader: return "CorruptHeader";
    case ErrorCode::IoError: return "IoError";
  }
  return "Unknown";
}

bool is_input_error(ErrorCode code) noexcept {
  switch (code) {
    case ErrorCode::InconsistentTriple:
    case ErrorCode::DegeneratePhase:
    case ErrorCode::AliasedFrequency:
    case ErrorCode::EmptySymbols:
      return false;
    default:
      return true;
  }
}

Error::Error(ErrorCode code, const std::string& message,
             std::optional<std::size_t> index)
    : std::runtime_error(message), code_(code), index_(index) {}

}  // namespace semsig
