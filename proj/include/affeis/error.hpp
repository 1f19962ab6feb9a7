#pragma once

#include <stdexcept>
#include <string>

namespace affeis {

enum class ErrorKind {
  InvalidType,
  NotARoot,
  CapExceeded,
  ImaginaryRoot,
  FieldMismatch,
  NonDominant,
  IdentityElement,
  PoleProximity,
  OutOfRegime,
  NonpositiveArgument,
  GodementViolated,
  NonCosetRep,
  QNotExpanding,
  DivergentRegion,
  ZeroInput,
  InsufficientPrecision,
  DimensionMismatch,
  SingularMatrix,
  InvalidArgument,
};

inline const char* kind_name(ErrorKind k) {
  switch (k) {
    case ErrorKind::InvalidType: return "invalid-type";
    case ErrorKind::NotARoot: return "not-a-root";
    case ErrorKind::CapExceeded: return "cap-exceeded";
    case ErrorKind::ImaginaryRoot: return "imaginary-root";
    case ErrorKind::FieldMismatch: return "field-mismatch";
    case ErrorKind::NonDominant: return "non-dominant";
    case ErrorKind::IdentityElement: return "identity-element";
    case ErrorKind::PoleProximity: return "pole-proximity";
    case ErrorKind::OutOfRegime: return "out-of-regime";
    case ErrorKind::NonpositiveArgument: return "nonpositive-argument";
    case ErrorKind::GodementViolated: return "godement-violated";
    case ErrorKind::NonCosetRep: return "non-coset-rep";
    case ErrorKind::QNotExpanding: return "q-not-expanding";
    case ErrorKind::DivergentRegion: return "divergent-region";
    case ErrorKind::ZeroInput: return "zero-input";
    case ErrorKind::InsufficientPrecision: return "insufficient-precision";
    case ErrorKind::DimensionMismatch: return "dimension-mismatch";
    case ErrorKind::SingularMatrix: return "singular-matrix";
    case ErrorKind::InvalidArgument: return "invalid-argument";
  }
  return "unknown";
}

class Error : public std::runtime_error {
 public:
  Error(ErrorKind kind, const std::string& what)
      : std::runtime_error(std::string(kind_name(kind)) + ": " + what), kind_(kind) {}
  ErrorKind kind() const noexcept { return kind_; }

 private:
  ErrorKind kind_;
};

// Numeric kinds map to exit code 4 in the CLI, the rest to 3.
inline bool is_numeric_failure(ErrorKind k) {
  return k == ErrorKind::InsufficientPrecision || k == ErrorKind::CapExceeded;
}

}  // namespace affeis
