#include "ellbasis/ell_functions.hpp"

namespace ellbasis {

namespace {

template <class G>
typename G::Element lift_to(const G& L, Fq a);

template <>
Fq lift_to<BaseField>(const BaseField&, Fq a) {
  return a;
}

template <>
ExtElement lift_to<ExtField>(const ExtField& L, Fq a) {
  return L.lift(a);
}

template <class G>
typename G::Element eval_lifted(const G& L, const FqPoly& f, const typename G::Element& x) {
  auto r = L.zero();
  for (size_t i = f.c.size(); i-- > 0;) r = L.add(L.mul(r, x), lift_to(L, f.c[i]));
  return r;
}

// Gamma(O, B, C) for B, C distinct and nonzero.
template <class G>
typename G::Element gamma_origin(const Curve<G>& E, const Point<G>& B, const Point<G>& C) {
  const G& K = E.field();
  if (K.equal(B.x, C.x)) {
    // C = -B: tangent branch
    auto den = K.add(K.add(K.add(B.y, B.y), K.mul(E.a1(), B.x)), E.a3());
    auto num = K.mul(K.from_int(3), K.mul(B.x, B.x));
    num = K.add(num, K.mul(E.a1(), K.add(K.add(B.y, K.mul(E.a1(), B.x)), E.a3())));
    num = K.add(num, K.mul(K.from_int(2), K.mul(E.a2(), B.x)));
    num = K.add(num, E.a4());
    return K.neg(K.div(num, den));
  }
  auto num = K.add(K.add(K.add(C.y, B.y), K.mul(E.a1(), B.x)), E.a3());
  return K.div(num, K.sub(C.x, B.x));
}

template <class G>
std::optional<typename G::Element> gamma_impl(const Curve<G>& E, const Point<G>& A, const Point<G>& B,
                                              const Point<G>& C) {
  int distinct = 1 + !(B == A) + !(C == A || C == B);
  if (distinct < 2) raise(Errc::TooFewDistinctPoints, "Gamma needs at least two distinct points");
  if (distinct == 2) return std::nullopt;
  return gamma_origin(E, E.sub(B, A), E.sub(C, A));
}

template <class G>
typename G::Element eval_impl(const Curve<G>& E, const EllFunction& f, const Point<G>& P,
                              const std::optional<std::pair<Point<G>, Point<G>>>& poles) {
  const G& K = E.field();
  if (poles && (P == poles->first || P == poles->second)) raise(Errc::PoleEvaluation, "evaluation at a pole");
  if (P.inf) {
    int dd = 2 * f.den.degree();
    int d0 = f.n0.is_zero() ? -1 : 2 * f.n0.degree();
    int d1 = f.n1.is_zero() ? -1 : 3 + 2 * f.n1.degree();
    if (d0 > dd || d1 > dd) raise(Errc::PoleEvaluation, "evaluation at a pole");
    if (d0 < dd) return K.zero();
    return K.div(lift_to(K, f.n0.c.back()), lift_to(K, f.den.c.back()));
  }
  auto den = eval_lifted(K, f.den, P.x);
  auto num = K.add(eval_lifted(K, f.n0, P.x), K.mul(P.y, eval_lifted(K, f.n1, P.x)));
  if (!K.is_zero(den)) return K.div(num, den);
  if (K.is_zero(num) && poles) {
    // removable: u_{A,B}(P) = Gamma(A, B, P)
    auto g = gamma_impl(E, poles->first, poles->second, P);
    if (g) return *g;
  }
  raise(Errc::PoleEvaluation, "evaluation at a pole");
}

}  // namespace

EllFunction constant_function(const BaseField& K, Fq c) {
  return {poly::constant(K, c), FqPoly{}, poly::constant(K, K.one()), std::nullopt};
}

EllFunction affine(const BaseField& K, const EllFunction& f, Fq a, Fq b) {
  EllFunction r;
  r.n0 = poly::add(K, poly::scale(K, f.n0, a), poly::scale(K, f.den, b));
  r.n1 = poly::scale(K, f.n1, a);
  r.den = f.den;
  if (!K.is_zero(a)) r.poles = f.poles;
  return r;
}

EllFunction u_func(const FqCurve& E, const FqPoint& A, const FqPoint& B) {
  if (A == B) raise(Errc::EqualPoints, "u_{A,B} needs distinct points");
  E.check(A);
  E.check(B);
  const BaseField& K = E.field();
  const Fq a1 = E.a1(), a2 = E.a2(), a3 = E.a3(), a4 = E.a4();
  auto lin = [&](Fq r) { return poly::make(K, {K.neg(r), K.one()}); };
  EllFunction f;
  f.poles = std::make_pair(A, B);
  if (B.inf) {
    // -u_{O,A} - a1
    f.n1 = poly::constant(K, K.neg(K.one()));
    f.n0 = poly::sub(K, poly::constant(K, K.neg(K.add(K.add(A.y, K.mul(a1, A.x)), a3))),
                     poly::scale(K, lin(A.x), a1));
    f.den = lin(A.x);
    return f;
  }
  if (A.inf) {
    f.n1 = poly::constant(K, K.one());
    f.n0 = poly::constant(K, K.add(K.add(B.y, K.mul(a1, B.x)), a3));
    f.den = lin(B.x);
    return f;
  }
  if (B == E.neg(A)) {
    Fq num = K.sub(K.sub(K.sub(K.mul(a1, A.y), K.mul(K.from_int(3), K.mul(A.x, A.x))),
                         K.mul(K.from_int(2), K.mul(a2, A.x))),
                   a4);
    Fq c = K.div(num, K.add(K.add(K.add(A.y, A.y), K.mul(a1, A.x)), a3));
    f.n1 = {};
    f.n0 = poly::sub(K, poly::scale(K, lin(A.x), c), poly::make(K, {K.add(a3, K.add(A.y, A.y)), a1}));
    f.den = lin(A.x);
    return f;
  }
  Fq dx = K.sub(B.x, A.x);
  Fq c = K.div(K.add(K.add(K.add(B.y, A.y), K.mul(a1, A.x)), a3), dx);
  f.den = poly::mul(K, lin(A.x), lin(B.x));
  f.n1 = poly::constant(K, dx);
  FqPoly rest = poly::make(K, {K.sub(K.mul(A.y, B.x), K.mul(B.y, A.x)), K.sub(B.y, A.y)});
  rest = poly::add(K, rest, poly::scale(K, poly::make(K, {a3, a1}), dx));
  f.n0 = poly::add(K, poly::scale(K, f.den, c), rest);
  return f;
}

std::optional<Fq> gamma(const FqCurve& E, const FqPoint& A, const FqPoint& B, const FqPoint& C) {
  return gamma_impl(E, A, B, C);
}

std::optional<ExtElement> gamma(const LCurve& E, const LPoint& A, const LPoint& B, const LPoint& C) {
  return gamma_impl(E, A, B, C);
}

Fq eval_function(const FqCurve& E, const EllFunction& f, const FqPoint& P) {
  return eval_impl<BaseField>(E, f, P, f.poles);
}

ExtElement eval_function(const LCurve& E, const EllFunction& f, const LPoint& P) {
  std::optional<std::pair<LPoint, LPoint>> poles;
  if (f.poles) poles = std::make_pair(lift_point(E.field(), f.poles->first), lift_point(E.field(), f.poles->second));
  return eval_impl<ExtField>(E, f, P, poles);
}

Fq x_translate(const FqCurve& E, const FqPoint& A, const FqPoint& P) {
  auto Q = E.sub(P, A);
  if (Q.inf) raise(Errc::PoleEvaluation, "x_A has a pole at A");
  return Q.x;
}

Fq y_translate(const FqCurve& E, const FqPoint& A, const FqPoint& P) {
  auto Q = E.sub(P, A);
  if (Q.inf) raise(Errc::PoleEvaluation, "y_A has a pole at A");
  return Q.y;
}

}  // namespace ellbasis
