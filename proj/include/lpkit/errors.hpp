#pragma once

#include <stdexcept>
#include <string>

namespace lpkit {

// Typed failure vocabulary shared by the whole library.  The CLI maps each
// kind onto the JSON error document, so names here are part of the output
// contract.
enum class ErrorKind {
  DivisionByZero,
  FieldMismatch,
  ParseError,
  NotConstantRatio,
  DiameterTooSmall,
  InvalidArray,
  SeedInconsistent,
  ZeroParameter,
  ZeroDenominator,
  CharacteristicDividesD,
  DegenerateCoefficient,
  DegenerateDelta,
  MissingQ,
  UnsupportedType,
  ValidationFailed,
  ZeroZeta,
  WrongCase,
  PropertyViolation,
  Internal,
};

const char* to_string(ErrorKind kind);

class Error : public std::runtime_error {
 public:
  Error(ErrorKind kind, std::string detail);

  ErrorKind kind() const noexcept { return kind_; }
  const std::string& detail() const noexcept { return detail_; }

 private:
  ErrorKind kind_;
  std::string detail_;
};

[[noreturn]] void fail(ErrorKind kind, std::string detail = "");

// For conditions that are mathematically impossible on data that passed the
// advertised preconditions; trips only on library bugs.
void internal_check(bool ok, const char* what);

}  // namespace lpkit
