#include "ellbasis/errors.hpp"

namespace ellbasis {

const char* errc_name(Errc c) noexcept {
  switch (c) {
    case Errc::DivisionByZero: return "DivisionByZero";
    case Errc::NotInvertible: return "NotInvertible";
    case Errc::LengthMismatch: return "LengthMismatch";
    case Errc::PointNotOnCurve: return "PointNotOnCurve";
    case Errc::SingularCurve: return "SingularCurve";
    case Errc::BoundExceeded: return "BoundExceeded";
    case Errc::NoSuchPoint: return "NoSuchPoint";
    case Errc::KernelNotCyclic: return "KernelNotCyclic";
    case Errc::EqualPoints: return "EqualPoints";
    case Errc::TooFewDistinctPoints: return "TooFewDistinctPoints";
    case Errc::PoleEvaluation: return "PoleEvaluation";
    case Errc::NoSuitableA: return "NoSuitableA";
    case Errc::NotIrreducible: return "NotIrreducible";
    case Errc::FrobeniusMismatch: return "FrobeniusMismatch";
    case Errc::BadR: return "BadR";
    case Errc::EvenDegree: return "EvenDegree";
    case Errc::TwoTorsionObstruction: return "TwoTorsionObstruction";
    case Errc::SingularSystem: return "SingularSystem";
    case Errc::InexactDivision: return "InexactDivision";
    case Errc::ZeroInversion: return "ZeroInversion";
    case Errc::NotPrimePower: return "NotPrimePower";
    case Errc::SearchCapExceeded: return "SearchCapExceeded";
    case Errc::NotPrime: return "NotPrime";
    case Errc::InvalidArgument: return "InvalidArgument";
    case Errc::FormatError: return "FormatError";
    case Errc::InvariantViolation: return "InvariantViolation";
  }
  return "Unknown";
}

Error::Error(Errc code, const std::string& what) : std::runtime_error(what), code_(code) {}

void raise(Errc code, const std::string& what) { throw Error(code, what); }

}  // namespace ellbasis
