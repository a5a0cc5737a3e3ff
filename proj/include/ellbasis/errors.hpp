#pragma once

#include <stdexcept>
#include <string>

namespace ellbasis {

enum class Errc {
  DivisionByZero,
  NotInvertible,
  LengthMismatch,
  PointNotOnCurve,
  SingularCurve,
  BoundExceeded,
  NoSuchPoint,
  KernelNotCyclic,
  EqualPoints,
  TooFewDistinctPoints,
  PoleEvaluation,
  NoSuitableA,
  NotIrreducible,
  FrobeniusMismatch,
  BadR,
  EvenDegree,
  TwoTorsionObstruction,
  SingularSystem,
  InexactDivision,
  ZeroInversion,
  NotPrimePower,
  SearchCapExceeded,
  NotPrime,
  InvalidArgument,
  FormatError,
  InvariantViolation,
};

const char* errc_name(Errc c) noexcept;

class Error : public std::runtime_error {
 public:
  Error(Errc code, const std::string& what);
  Errc code() const noexcept { return code_; }
  const char* name() const noexcept { return errc_name(code_); }

 private:
  Errc code_;
};

[[noreturn]] void raise(Errc code, const std::string& what);

}  // namespace ellbasis
