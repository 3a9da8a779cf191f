#include "lpkit/errors.hpp"

namespace lpkit {

const char* to_string(ErrorKind kind) {
  switch (kind) {
    case ErrorKind::DivisionByZero: return "DivisionByZero";
    case ErrorKind::FieldMismatch: return "FieldMismatch";
    case ErrorKind::ParseError: return "ParseError";
    case ErrorKind::NotConstantRatio: return "NotConstantRatio";
    case ErrorKind::DiameterTooSmall: return "DiameterTooSmall";
    case ErrorKind::InvalidArray: return "InvalidArray";
    case ErrorKind::SeedInconsistent: return "SeedInconsistent";
    case ErrorKind::ZeroParameter: return "ZeroParameter";
    case ErrorKind::ZeroDenominator: return "ZeroDenominator";
    case ErrorKind::CharacteristicDividesD: return "CharacteristicDividesD";
    case ErrorKind::DegenerateCoefficient: return "DegenerateCoefficient";
    case ErrorKind::DegenerateDelta: return "DegenerateDelta";
    case ErrorKind::MissingQ: return "MissingQ";
    case ErrorKind::UnsupportedType: return "UnsupportedType";
    case ErrorKind::ValidationFailed: return "ValidationFailed";
    case ErrorKind::ZeroZeta: return "ZeroZeta";
    case ErrorKind::WrongCase: return "WrongCase";
    case ErrorKind::PropertyViolation: return "PropertyViolation";
    case ErrorKind::Internal: return "Internal";
  }
  return "Internal";
}

Error::Error(ErrorKind kind, std::string detail)
    : std::runtime_error(std::string(to_string(kind)) +
                         (detail.empty() ? "" : ": " + detail)),
      kind_(kind),
      detail_(std::move(detail)) {}

void fail(ErrorKind kind, std::string detail) {
  throw Error(kind, std::move(detail));
}

void internal_check(bool ok, const char* what) {
  if (!ok) throw Error(ErrorKind::Internal, what);
}

}  // namespace lpkit
