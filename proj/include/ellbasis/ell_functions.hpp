#pragma once

#include <optional>
#include <utility>

#include "ellbasis/curve.hpp"

namespace ellbasis {

/// Rational function (n0(x) + y n1(x)) / den(x) on a curve over F_q.
struct EllFunction {
  FqPoly n0, n1, den;
  // the two poles when the function is some u_{A,B}
  std::optional<std::pair<FqPoint, FqPoint>> poles;
};

EllFunction constant_function(const BaseField& K, Fq c);
/// a f + b.
EllFunction affine(const BaseField& K, const EllFunction& f, Fq a, Fq b);

/// The degree-2 function with polar divisor [A] + [B]; EqualPoints when A = B.
EllFunction u_func(const FqCurve& E, const FqPoint& A, const FqPoint& B);

/// Gamma(A, B, C) = u_{A,B}(C); nullopt marks the infinite value (exactly two
/// distinct points). TooFewDistinctPoints when A = B = C.
std::optional<Fq> gamma(const FqCurve& E, const FqPoint& A, const FqPoint& B, const FqPoint& C);
std::optional<ExtElement> gamma(const LCurve& E, const LPoint& A, const LPoint& B, const LPoint& C);

/// f(P); PoleEvaluation when P is a pole.
Fq eval_function(const FqCurve& E, const EllFunction& f, const FqPoint& P);
ExtElement eval_function(const LCurve& E, const EllFunction& f, const LPoint& P);

/// x_A(P) = x(P - A), y_A(P) = y(P - A).
Fq x_translate(const FqCurve& E, const FqPoint& A, const FqPoint& P);
Fq y_translate(const FqCurve& E, const FqPoint& A, const FqPoint& P);

}  // namespace ellbasis
