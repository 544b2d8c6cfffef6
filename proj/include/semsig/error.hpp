#ifndef SEMSIG_ERROR_HPP
#define SEMSIG_ERROR_HPP

#include <cstddef>
#include <optional>
#include <stdexcept>
#include <string>
#include <string_view>

namespace semsig {

enum class ErrorCode {
  NonFiniteSample,
  NonPositiveRate,
  AliasedFrequency,
  DegeneratePhase,
  InconsistentTriple,
  TooShort,
  EmptySymbols,
  BadWindow,
  BadRange,
  BadArgument,
  ParseError,
  MissingColumn,
  UnsupportedFormat,
  CorruptHeader,
  IoError,
};

std::string_view to_string(ErrorCode code) noexcept;

// Errors caused by what the caller handed in (files, flags, ranges) as
// opposed to failures of a computation on otherwise valid input.
bool is_input_error(ErrorCode code) noexcept;

class Error : public std::runtime_error {
 public:
  Error(ErrorCode code, const std::string& message,
        std::optional<std::size_t> index = std::nullopt);

  ErrorCode code() const noexcept { return code_; }

  // Sample index, symbol position or 1-based line number, depending on code.
  std::optional<std::size_t> index() const noexcept { return index_; }

 private:
  ErrorCode code_;
  std::optional<std::size_t> index_;
};

}  // namespace semsig

#endif  // SEMSIG_ERROR_HPP
