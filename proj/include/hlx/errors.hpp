#pragma once

#include <stdexcept>
#include <string>

namespace hlx {

enum class Errc {
  InvalidField,
  FieldMismatch,
  DimensionMismatch,
  NotContained,
  NotInvariant,
  NotAnIdeal,
  NotAbelian,
  NotInKernel,
  NotASubalgebra,
  DoesNotCover,
  NotIso,
  TargetMismatch,
  InvalidWitness,
  InvalidFactorSet,
  NoInvariantComplement,
  NotStem,
  DimMismatch,
  InconsistentD,
  TwistObstructed,
  CertificationFailed,
  DomainMismatch,
  SchemaError,
};

const char* errc_name(Errc c);

class Error : public std::runtime_error {
 public:
  Error(Errc code, const std::string& msg)
      : std::runtime_error(std::string(errc_name(code)) + ": " + msg), code_(code) {}
  Errc code() const { return code_; }

 private:
  Errc code_;
};

[[noreturn]] inline void fail(Errc code, const std::string& msg) { throw Error(code, msg); }

inline void require(bool cond, Errc code, const std::string& msg) {
  if (!cond) fail(code, msg);
}

}  // namespace hlx
