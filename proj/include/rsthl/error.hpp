#ifndef RSTHL_ERROR_HPP
#define RSTHL_ERROR_HPP

#include <stdexcept>
#include <string>
#include <string_view>

namespace rsthl {

enum class ErrorCode {
  ParseError,
  DivisionByZero,
  EvaluationAtPole,
  DegenerateMetric,
  InconsistentSystem,
  UnderdeterminedSystem,
  DimensionMismatch,
  NoTotallyRealSection,
  RadicalRankNotOne,
  ScreenDegenerate,
  NoSuchN,
  InvalidFrame,
  NotRSTHL,
  NotAscreen,
  MuZero,
  DecompositionInconsistent,
  NotEtaEinstein,
  NotEinstein,
  CrossCheckMismatch,
  SchemaViolation,
  IoError,
};

std::string_view to_string(ErrorCode code) noexcept;

/// Base exception carrying a machine-readable code.
class Error : public std::runtime_error {
public:
  Error(ErrorCode code, const std::string& message)
      : std::runtime_error(std::string(to_string(code)) + ": " + message), code_(code) {}

  ErrorCode code() const noexcept { return code_; }

private:
  ErrorCode code_;
};

/// Syntax error in a scalar expression; `position` is a 0-based byte offset
/// and `field` the location of the expression inside a model file, if any.
class ParseError : public Error {
public:
  ParseError(std::size_t position, const std::string& message) : ParseError({}, position, message) {}
  ParseError(const std::string& field, std::size_t position, const std::string& message)
      : Error(ErrorCode::ParseError, (field.empty() ? std::string() : field + ": ") + "at position " +
                                         std::to_string(position) + ": " + message),
        field_(field),
        position_(position),
        message_(message) {}

  const std::string& field() const noexcept { return field_; }
  std::size_t position() const noexcept { return position_; }
  const std::string& message() const noexcept { return message_; }

private:
  std::string field_;
  std::size_t position_;
  std::string message_;
};

}  // namespace rsthl

#endif  // RSTHL_ERROR_HPP
