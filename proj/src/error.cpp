#include "chainring/error.hpp"

namespace chainring {

std::string_view to_string(ErrorCode code) {
  switch (code) {
    case ErrorCode::NotPrime: return "NotPrime";
    case ErrorCode::NotPrimePower: return "NotPrimePower";
    case ErrorCode::TooLarge: return "TooLarge";
    case ErrorCode::UnsupportedCombination: return "UnsupportedCombination";
    case ErrorCode::RingMismatch: return "RingMismatch";
    case ErrorCode::SizeMismatch: return "SizeMismatch";
    case ErrorCode::NotAUnit: return "NotAUnit";
    case ErrorCode::BadIndex: return "BadIndex";
    case ErrorCode::NoRoot: return "NoRoot";
    case ErrorCode::BadRoot: return "BadRoot";
    case ErrorCode::NotInvertible: return "NotInvertible";
    case ErrorCode::NotCoprime: return "NotCoprime";
    case ErrorCode::InvalidArgument: return "InvalidArgument";
    case ErrorCode::ParseError: return "ParseError";
    case ErrorCode::InternalConsistency: return "InternalConsistency";
  }
  return "Unknown";
}

Error::Error(ErrorCode code, const std::string& message)
    : std::runtime_error(std::string(to_string(code)) + ": " + message), code_(code) {}

namespace {

std::string parse_message(const std::string& input, std::size_t position, const std::string& expected) {
  return "at position " + std::to_string(position) + " in \"" + input + "\": expected " + expected;
}

}  // namespace

ParseError::ParseError(std::string input, std::size_t position, std::string expected)
    : Error(ErrorCode::ParseError, parse_message(input, position, expected)),
      input_(std::move(input)),
      position_(position),
      expected_(std::move(expected)) {}

}  // namespace chainring
