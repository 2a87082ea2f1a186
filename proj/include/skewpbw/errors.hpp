#ifndef SKEWPBW_ERRORS_HPP
#define SKEWPBW_ERRORS_HPP

#include <stdexcept>
#include <string>

namespace skewpbw {

/// Error categories raised by the engine. Domain failures that callers are
/// expected to branch on (validation, gradedness, ...) carry one of these
/// codes; programming errors use the standard logic_error family instead.
enum class Errc {
  field_mismatch,
  division_by_zero,
  ring_mismatch,
  zero_input,
  not_locally_finite,
  not_invertible,
  not_affine_linear,
  not_graded_restrictable,
  not_validated,
  algebra_mismatch,
  not_graded,
  nu_not_compatible,
  nakayama_inconsistent,
  not_connected,
  automorphism_invalid,
  syntax_error,
  unknown_identifier,
  schema_error,
  validation_failed,
};

inline const char* errc_name(Errc code) {
  switch (code) {
    case Errc::field_mismatch: return "FieldMismatch";
    case Errc::division_by_zero: return "DivisionByZero";
    case Errc::ring_mismatch: return "RingMismatch";
    case Errc::zero_input: return "ZeroInput";
    case Errc::not_locally_finite: return "NotLocallyFinite";
    case Errc::not_invertible: return "NotInvertible";
    case Errc::not_affine_linear: return "NotAffineLinear";
    case Errc::not_graded_restrictable: return "NotGradedRestrictable";
    case Errc::not_validated: return "NotValidated";
    case Errc::algebra_mismatch: return "AlgebraMismatch";
    case Errc::not_graded: return "NotGraded";
    case Errc::nu_not_compatible: return "NuNotCompatible";
    case Errc::nakayama_inconsistent: return "NakayamaInconsistent";
    case Errc::not_connected: return "NotConnected";
    case Errc::automorphism_invalid: return "AutomorphismInvalid";
    case Errc::syntax_error: return "SyntaxError";
    case Errc::unknown_identifier: return "UnknownIdentifier";
    case Errc::schema_error: return "SchemaError";
    case Errc::validation_failed: return "ValidationFailed";
  }
  return "Error";
}

class Error : public std::runtime_error {
public:
  Error(Errc code, const std::string& message)
      : std::runtime_error(std::string(errc_name(code)) + ": " + message), code_(code) {}

  Errc code() const { return code_; }

private:
  Errc code_;
};

[[noreturn]] inline void fail(Errc code, const std::string& message) {
  throw Error(code, message);
}

}  // namespace skewpbw

#endif
