#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>
#include <string_view>

namespace reembed {

enum class ErrorCode {
  DivisionByZero,
  NotHomogeneous,
  Precondition,
  NotSeparating,
  NoSeparatingInDegree,
  NotUnimodular,
  QsIncomplete,
  RowspaceNotFreeBasis,
  VerificationFailed,
};

std::string_view to_string(ErrorCode code);

/// A mathematical refusal or failed precondition. The CLI maps these to
/// exit status 2.
class MathError : public std::runtime_error {
 public:
  MathError(ErrorCode code, const std::string& what) : std::runtime_error(what), code_(code) {}
  [[nodiscard]] ErrorCode code() const { return code_; }

 private:
  ErrorCode code_;
};

/// Malformed polynomial text or problem file. `position` is a byte offset
/// into the parsed text.
class ParseError : public std::runtime_error {
 public:
  ParseError(const std::string& what, std::size_t position)
      : std::runtime_error(what), position_(position) {}
  [[nodiscard]] std::size_t position() const { return position_; }

 private:
  std::size_t position_;
};

}  // namespace reembed
