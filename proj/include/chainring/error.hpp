#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

namespace chainring {

enum class ErrorCode {
  NotPrime,
  NotPrimePower,
  TooLarge,
  UnsupportedCombination,
  RingMismatch,
  SizeMismatch,
  NotAUnit,
  BadIndex,
  NoRoot,
  BadRoot,
  NotInvertible,
  NotCoprime,
  InvalidArgument,
  ParseError,
  InternalConsistency,
};

std::string_view to_string(ErrorCode code);

/// Every failure raised by the library carries one of the codes above.
class Error : public std::runtime_error {
 public:
  Error(ErrorCode code, const std::string& message);

  ErrorCode code() const noexcept { return code_; }

 private:
  ErrorCode code_;
};

/// Ring-spec parse failure with the byte offset and the token that was expected there.
class ParseError : public Error {
 public:
  ParseError(std::string input, std::size_t position, std::string expected);

  std::size_t position() const noexcept { return position_; }
  const std::string& expected() const noexcept { return expected_; }
  const std::string& input() const noexcept { return input_; }

 private:
  std::string input_;
  std::size_t position_;
  std::string expected_;
};

}  // namespace chainring
