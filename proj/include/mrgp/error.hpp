#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

namespace mrgp {

enum class ErrorKind {
  non_squarefree,
  invalid_d,
  field_mismatch,
  division_by_zero,
  not_divisible,
  imaginary_embedding,
  not_real_quadratic,
  zero_modulus,
  zero_coefficient,
  not_integral,
  not_units,
  parse_error,
  internal,
};

inline std::string_view error_kind_name(ErrorKind k) {
  switch (k) {
    case ErrorKind::non_squarefree: return "NonSquarefree";
    case ErrorKind::invalid_d: return "InvalidD";
    case ErrorKind::field_mismatch: return "FieldMismatch";
    case ErrorKind::division_by_zero: return "DivisionByZero";
    case ErrorKind::not_divisible: return "NotDivisible";
    case ErrorKind::imaginary_embedding: return "ImaginaryEmbedding";
    case ErrorKind::not_real_quadratic: return "NotRealQuadratic";
    case ErrorKind::zero_modulus: return "ZeroModulus";
    case ErrorKind::zero_coefficient: return "ZeroCoefficient";
    case ErrorKind::not_integral: return "NotIntegral";
    case ErrorKind::not_units: return "NotUnits";
    case ErrorKind::parse_error: return "ParseError";
    case ErrorKind::internal: return "Internal";
  }
  return "Unknown";
}

/// Every failure raised by the library carries one of the kinds above so
/// callers (and tests) can branch on it without parsing messages.
class MathError : public std::runtime_error {
 public:
  MathError(ErrorKind kind, const std::string& what)
      : std::runtime_error(std::string(error_kind_name(kind)) + ": " + what), kind_(kind) {}

  ErrorKind kind() const noexcept { return kind_; }

 private:
  ErrorKind kind_;
};

}  // namespace mrgp
