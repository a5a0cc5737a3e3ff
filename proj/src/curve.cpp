#include "ellbasis/curve.hpp"

#include <numeric>
#include <unordered_map>

#include "ellbasis/arith.hpp"

namespace ellbasis {

FqPoint point_op(const FqCurve& E, const FqPoint& P, const FqPoint& Q, PointOp op) {
  E.check(P);
  switch (op) {
    case PointOp::Neg: return E.neg(P);
    case PointOp::Add: E.check(Q); return E.add(P, Q);
    case PointOp::Sub: E.check(Q); return E.sub(P, Q);
  }
  return P;
}

FqPoint scalar_mul(const FqCurve& E, const FqPoint& P, int64_t n) {
  E.check(P);
  return E.mul(P, n);
}

std::pair<uint64_t, uint64_t> hasse_interval(uint64_t q) {
  uint64_t w = isqrt(4 * q);
  return {q + 1 - w, q + 1 + w};
}

namespace {

// Number of y with y^2 + h y = f in F_q.
int count_y(const BaseField& K, Fq h, Fq f) {
  if (K.p() == 2) {
    if (K.is_zero(h)) return 1;
    Fq c = K.div(f, K.mul(h, h));
    return K.is_zero(trace_f2(K, c)) ? 2 : 0;
  }
  Fq disc = K.add(K.mul(h, h), K.mul(K.from_int(4), f));
  if (K.is_zero(disc)) return 1;
  Fq chi = K.pow(disc, (K.q() - 1) / 2);
  return K.is_one(chi) ? 2 : 0;
}

uint64_t order_by_enumeration(const FqCurve& E) {
  const BaseField& K = E.field();
  uint64_t n = 1;
  for (uint64_t i = 0; i < K.q(); ++i) {
    Fq x = K.from_index(i);
    n += count_y(K, E.h(x), E.rhs(x));
  }
  return n;
}

uint64_t point_key(const FqPoint& P) { return P.inf ? ~0ull : P.x.v * 0x9E3779B97F4A7C15ull ^ P.y.v; }

// All n in [lo, hi] with nP = O.
std::vector<uint64_t> annihilators(const FqCurve& E, const FqPoint& P, uint64_t lo, uint64_t hi) {
  uint64_t width = hi - lo + 1;
  uint64_t m = isqrt(width) + 1;
  std::unordered_multimap<uint64_t, std::pair<uint64_t, FqPoint>> baby;
  FqPoint jP = FqPoint::infinity();
  for (uint64_t j = 0; j < m; ++j) {
    baby.emplace(point_key(jP), std::make_pair(j, jP));
    jP = E.add(jP, P);
  }
  FqPoint step = E.mul(P, static_cast<int64_t>(m));
  FqPoint R = E.mul(P, static_cast<int64_t>(lo));
  std::vector<uint64_t> out;
  for (uint64_t i = 0; lo + i * m <= hi; ++i) {
    FqPoint target = E.neg(R);
    auto range = baby.equal_range(point_key(target));
    for (auto it = range.first; it != range.second; ++it) {
      if (!(it->second.second == target)) continue;
      uint64_t n = lo + i * m + it->second.first;
      if (n <= hi) out.push_back(n);
    }
    R = E.add(R, step);
  }
  return out;
}

uint64_t order_by_bsgs(const FqCurve& E, uint64_t seed) {
  const BaseField& K = E.field();
  auto [lo, hi] = hasse_interval(K.q());
  Rng rng(seed);
  uint64_t l = 1;
  for (int tries = 0; tries < 64; ++tries) {
    FqPoint P = E.random_point(rng);
    auto ns = annihilators(E, P, lo, hi);
    if (ns.empty()) raise(Errc::BoundExceeded, "no multiple of the point order in the Hasse interval");
    uint64_t o = point_order(E, P, ns[0]);
    l = std::lcm(l, o);
    uint64_t first = (lo + l - 1) / l * l;
    if (first <= hi && first + l > hi) return first;
  }
  raise(Errc::BoundExceeded, "group order not determined by sampled point orders");
}

}  // namespace

uint64_t group_order(const FqCurve& E, const OrderOptions& opt) {
  uint64_t q = E.field().q();
  if (q > opt.bound) raise(Errc::BoundExceeded, "field too large for point counting");
  if (q <= opt.enumeration_limit) return order_by_enumeration(E);
  return order_by_bsgs(E, opt.seed);
}

std::vector<FqPoint> enumerate_points(const FqCurve& E) {
  const BaseField& K = E.field();
  if (K.q() > (1ull << 20)) raise(Errc::BoundExceeded, "field too large for enumeration");
  Rng rng(7);
  std::vector<FqPoint> pts{FqPoint::infinity()};
  for (uint64_t i = 0; i < K.q(); ++i) {
    for (auto& P : E.lift_x(K.from_index(i), rng)) pts.push_back(P);
  }
  return pts;
}

uint64_t point_order(const FqCurve& E, const FqPoint& P, uint64_t M) {
  if (!E.mul(P, static_cast<int64_t>(M)).inf) raise(Errc::InvalidArgument, "M is not a multiple of the point order");
  uint64_t n = M;
  for (auto [l, e] : factor(M)) {
    for (int i = 0; i < e; ++i) {
      if (E.mul(P, static_cast<int64_t>(n / l)).inf) n /= l;
      else break;
    }
  }
  return n;
}

bool has_exact_order(const FqCurve& E, const FqPoint& P, uint64_t n) {
  if (!E.mul(P, static_cast<int64_t>(n)).inf) return false;
  for (uint64_t l : prime_divisors(n))
    if (E.mul(P, static_cast<int64_t>(n / l)).inf) return false;
  return true;
}

FqPoint find_point_of_order(const FqCurve& E, uint64_t n, Rng& rng, std::optional<uint64_t> M) {
  if (n == 1) return FqPoint::infinity();
  uint64_t order = M ? *M : group_order(E);
  if (order % n) raise(Errc::NoSuchPoint, "n does not divide the group order");
  for (int i = 0; i < 64; ++i) {
    FqPoint Q = E.mul(E.random_point(rng), static_cast<int64_t>(order / n));
    if (has_exact_order(E, Q, n)) return Q;
  }
  if (E.field().q() <= (1ull << 16)) {
    for (auto& P : enumerate_points(E))
      if (has_exact_order(E, P, n)) return P;
  }
  raise(Errc::NoSuchPoint, "no point of the requested order found");
}

LCurve base_change(const FqCurve& E, const ExtFieldPtr& L) {
  return LCurve(L, L->lift(E.a1()), L->lift(E.a2()), L->lift(E.a3()), L->lift(E.a4()), L->lift(E.a6()));
}

LPoint lift_point(const ExtField& L, const FqPoint& P) {
  if (P.inf) return LPoint::infinity();
  return LPoint::affine(L.lift(P.x), L.lift(P.y));
}

FqPoint Isogeny::image(const FqPoint& P) const {
  domain.check(P);
  if (P.inf) return FqPoint::infinity();
  const BaseField& K = domain.field();
  Fq dx = poly::eval(K, x_den, P.x);
  if (K.is_zero(dx)) return FqPoint::infinity();
  Fq X = K.div(poly::eval(K, x_num, P.x), dx);
  Fq Y = K.div(K.add(K.mul(poly::eval(K, y_num1, P.x), P.y), poly::eval(K, y_num0, P.x)), poly::eval(K, y_den, P.x));
  return FqPoint::affine(X, Y);
}

LPoint Isogeny::image(const ExtField& L, const LPoint& P) const {
  if (P.inf) return LPoint::infinity();
  auto ev = [&](const FqPoly& f) {
    auto r = L.zero();
    for (size_t i = f.c.size(); i-- > 0;) r = L.add(L.mul(r, P.x), L.lift(f.c[i]));
    return r;
  };
  auto dx = ev(x_den);
  if (L.is_zero(dx)) return LPoint::infinity();
  auto X = L.div(ev(x_num), dx);
  auto Y = L.div(L.add(L.mul(ev(y_num1), P.y), ev(y_num0)), ev(y_den));
  return LPoint::affine(X, Y);
}

Isogeny velu_isogeny(const FqCurve& E, const FqPoint& t) {
  E.check(t);
  const BaseField& K = E.field();
  if (t.inf) raise(Errc::InvalidArgument, "kernel generator must have order >= 2");
  auto [lo, hi] = hasse_interval(K.q());
  std::vector<FqPoint> kernel{FqPoint::infinity()};
  FqPoint cur = t;
  while (!cur.inf) {
    if (kernel.size() > hi) raise(Errc::KernelNotCyclic, "kernel generator order exceeds the Hasse bound");
    kernel.push_back(cur);
    cur = E.add(cur, t);
  }
  int d = static_cast<int>(kernel.size());
  for (int i = 1; i < d; ++i)
    for (int j = i + 1; j < d; ++j)
      if (kernel[i] == kernel[j]) raise(Errc::KernelNotCyclic, "kernel points are not distinct");

  const Fq a1 = E.a1(), a2 = E.a2(), a3 = E.a3(), a4 = E.a4(), a6 = E.a6();
  struct Term {
    Fq x, y, gx, gy, v, u;
    int e;  // pole order of the x-map term
  };
  std::vector<Term> S;
  Fq v = K.zero(), w = K.zero();
  for (int k = 1; k < d; ++k) {
    bool two_torsion = 2 * k == d;
    if (!two_torsion && k > d - k) continue;
    const FqPoint& Q = kernel[k];
    Term T{Q.x, Q.y, {}, {}, {}, {}, two_torsion ? 1 : 2};
    T.gx = K.sub(K.add(K.add(K.mul(K.from_int(3), K.mul(Q.x, Q.x)), K.mul(K.from_int(2), K.mul(a2, Q.x))), a4),
                 K.mul(a1, Q.y));
    T.gy = K.neg(K.add(K.add(K.add(Q.y, Q.y), K.mul(a1, Q.x)), a3));
    T.v = two_torsion ? T.gx : K.sub(K.add(T.gx, T.gx), K.mul(a1, T.gy));
    T.u = K.mul(T.gy, T.gy);
    v = K.add(v, T.v);
    w = K.add(w, K.add(T.u, K.mul(Q.x, T.v)));
    S.push_back(T);
  }
  Fq A4 = K.sub(a4, K.mul(K.from_int(5), v));
  Fq A6 = K.sub(K.sub(a6, K.mul(K.add(K.mul(a1, a1), K.mul(K.from_int(4), a2)), v)), K.mul(K.from_int(7), w));
  FqCurve Ep(E.field_ptr(), a1, a2, a3, A4, A6);

  auto lin = [&](Fq r) { return poly::make(K, {K.neg(r), K.one()}); };
  auto pw = [&](const FqPoly& f, int e) {
    FqPoly r = poly::constant(K, K.one());
    for (int i = 0; i < e; ++i) r = poly::mul(K, r, f);
    return r;
  };
  FqPoly X = poly::x(K);
  FqPoly xden = poly::constant(K, K.one()), yden = poly::constant(K, K.one());
  for (auto& T : S) {
    xden = poly::mul(K, xden, pw(lin(T.x), T.e));
    yden = poly::mul(K, yden, pw(lin(T.x), T.e + 1));
  }
  // X = x + sum v/(x-xq) + u/(x-xq)^2
  FqPoly xnum = poly::mul(K, X, xden);
  for (auto& T : S) {
    xnum = poly::add(K, xnum, poly::scale(K, poly::exact_quo(K, xden, lin(T.x)), T.v));
    if (T.e == 2) xnum = poly::add(K, xnum, poly::scale(K, poly::exact_quo(K, xden, pw(lin(T.x), 2)), T.u));
  }
  // Y = y - sum [ u (2y + a1 x + a3)/(x-xq)^3 + v (a1 (x-xq) + y - yq)/(x-xq)^2 + (a1 u - gx gy)/(x-xq)^2 ]
  FqPoly n1 = yden, n0{};
  FqPoly h = poly::make(K, {a3, a1});
  for (auto& T : S) {
    FqPoly c2 = poly::exact_quo(K, yden, pw(lin(T.x), 2));
    n1 = poly::sub(K, n1, poly::scale(K, c2, T.v));
    if (T.e == 2) {
      FqPoly c3 = poly::exact_quo(K, yden, pw(lin(T.x), 3));
      n1 = poly::sub(K, n1, poly::scale(K, c3, K.add(T.u, T.u)));
      n0 = poly::sub(K, n0, poly::mul(K, poly::scale(K, h, T.u), c3));
    }
    FqPoly lin2 = poly::sub(K, poly::scale(K, lin(T.x), a1), poly::constant(K, T.y));
    n0 = poly::sub(K, n0, poly::mul(K, poly::scale(K, lin2, T.v), c2));
    n0 = poly::sub(K, n0, poly::scale(K, c2, K.sub(K.mul(a1, T.u), K.mul(T.gx, T.gy))));
  }
  return Isogeny{E, Ep, d, xnum, xden, n1, n0, yden};
}

}  // namespace ellbasis
