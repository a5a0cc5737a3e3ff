#pragma once

#include <cstdint>
#include <memory>
#include <optional>
#include <vector>

#include "ellbasis/base_field.hpp"
#include "ellbasis/errors.hpp"
#include "ellbasis/ext_field.hpp"
#include "ellbasis/poly.hpp"
#include "ellbasis/roots.hpp"
#include "ellbasis/rng.hpp"

namespace ellbasis {

template <class F>
struct Point {
  using E = typename F::Element;
  bool inf = true;
  E x{}, y{};

  static Point infinity() { return {}; }
  static Point affine(E x, E y) { return {false, std::move(x), std::move(y)}; }
  bool is_infinity() const { return inf; }
  friend bool operator==(const Point& a, const Point& b) {
    if (a.inf || b.inf) return a.inf == b.inf;
    return a.x == b.x && a.y == b.y;
  }
};

/// y^2 + a1 x y + a3 y = x^3 + a2 x^2 + a4 x + a6 over F.
template <class F>
class Curve {
 public:
  using E = typename F::Element;
  using P = Point<F>;

  Curve(std::shared_ptr<const F> K, E a1, E a2, E a3, E a4, E a6)
      : K_(std::move(K)), a1_(a1), a2_(a2), a3_(a3), a4_(a4), a6_(a6) {
    if (K_->is_zero(discriminant())) raise(Errc::SingularCurve, "curve discriminant is zero");
  }

  const F& field() const { return *K_; }
  const std::shared_ptr<const F>& field_ptr() const { return K_; }
  const E& a1() const { return a1_; }
  const E& a2() const { return a2_; }
  const E& a3() const { return a3_; }
  const E& a4() const { return a4_; }
  const E& a6() const { return a6_; }

  E b2() const { return K_->add(K_->mul(a1_, a1_), K_->mul(K_->from_int(4), a2_)); }
  E b4() const { return K_->add(K_->mul(K_->from_int(2), a4_), K_->mul(a1_, a3_)); }
  E b6() const { return K_->add(K_->mul(a3_, a3_), K_->mul(K_->from_int(4), a6_)); }
  E b8() const {
    const F& K = *K_;
    E t = K.mul(K.mul(a1_, a1_), a6_);
    t = K.add(t, K.mul(K.from_int(4), K.mul(a2_, a6_)));
    t = K.sub(t, K.mul(K.mul(a1_, a3_), a4_));
    t = K.add(t, K.mul(a2_, K.mul(a3_, a3_)));
    return K.sub(t, K.mul(a4_, a4_));
  }
  E discriminant() const {
    const F& K = *K_;
    E B2 = b2(), B4 = b4(), B6 = b6(), B8 = b8();
    E t = K.neg(K.mul(K.mul(B2, B2), B8));
    t = K.sub(t, K.mul(K.from_int(8), K.mul(B4, K.mul(B4, B4))));
    t = K.sub(t, K.mul(K.from_int(27), K.mul(B6, B6)));
    return K.add(t, K.mul(K.from_int(9), K.mul(B2, K.mul(B4, B6))));
  }

  /// a1 x + a3, the y-coefficient of the equation.
  E h(const E& x) const { return K_->add(K_->mul(a1_, x), a3_); }
  /// x^3 + a2 x^2 + a4 x + a6.
  E rhs(const E& x) const {
    const F& K = *K_;
    return K.add(K.mul(K.add(K.mul(K.add(x, a2_), x), a4_), x), a6_);
  }

  bool on_curve(const P& Q) const {
    if (Q.inf) return true;
    const F& K = *K_;
    E lhs = K.mul(K.add(Q.y, h(Q.x)), Q.y);
    return K.equal(lhs, rhs(Q.x));
  }
  void check(const P& Q) const {
    if (!on_curve(Q)) raise(Errc::PointNotOnCurve, "point is not on the curve");
  }

  P neg(const P& Q) const {
    if (Q.inf) return Q;
    return P::affine(Q.x, K_->neg(K_->add(Q.y, h(Q.x))));
  }

  P add(const P& A, const P& B) const {
    if (A.inf) return B;
    if (B.inf) return A;
    const F& K = *K_;
    E lambda;
    if (K.equal(A.x, B.x)) {
      E den = K.add(K.add(Q2(A.y), K.mul(a1_, A.x)), a3_);
      if (!K.equal(A.y, B.y) || K.is_zero(den)) return P::infinity();
      E num = K.add(K.mul(K.from_int(3), K.mul(A.x, A.x)), K.mul(K.mul(K.from_int(2), a2_), A.x));
      num = K.sub(K.add(num, a4_), K.mul(a1_, A.y));
      lambda = K.div(num, den);
    } else {
      lambda = K.div(K.sub(B.y, A.y), K.sub(B.x, A.x));
    }
    E x3 = K.sub(K.sub(K.sub(K.add(K.mul(lambda, lambda), K.mul(a1_, lambda)), a2_), A.x), B.x);
    E nu = K.sub(A.y, K.mul(lambda, A.x));
    E y3 = K.sub(K.sub(K.neg(K.mul(K.add(lambda, a1_), x3)), nu), a3_);
    return P::affine(x3, y3);
  }

  P sub(const P& A, const P& B) const { return add(A, neg(B)); }
  P dbl(const P& A) const { return add(A, A); }

  P mul(const P& A, int64_t n) const {
    P base = n < 0 ? neg(A) : A;
    uint64_t k = n < 0 ? static_cast<uint64_t>(-(n + 1)) + 1 : static_cast<uint64_t>(n);
    P r = P::infinity();
    while (k) {
      if (k & 1) r = add(r, base);
      k >>= 1;
      if (k) base = dbl(base);
    }
    return r;
  }

  /// Points with the given x-coordinate.
  std::vector<P> lift_x(const E& x, Rng& rng) const {
    std::vector<P> out;
    for (auto& y : quadratic_roots(*K_, K_->one(), h(x), K_->neg(rhs(x)), rng)) out.push_back(P::affine(x, y));
    return out;
  }

  P random_point(Rng& rng) const {
    for (;;) {
      auto pts = lift_x(K_->random(rng), rng);
      if (pts.empty()) continue;
      return pts[uniform_below(rng, pts.size())];
    }
  }

  friend bool operator==(const Curve& a, const Curve& b) {
    return a.a1_ == b.a1_ && a.a2_ == b.a2_ && a.a3_ == b.a3_ && a.a4_ == b.a4_ && a.a6_ == b.a6_;
  }

 private:
  E Q2(const E& y) const { return K_->add(y, y); }

  std::shared_ptr<const F> K_;
  E a1_, a2_, a3_, a4_, a6_;
};

using FqCurve = Curve<BaseField>;
using FqPoint = Point<BaseField>;
using LCurve = Curve<ExtField>;
using LPoint = Point<ExtField>;

enum class PointOp { Add, Neg, Sub };

/// Checked group law.
FqPoint point_op(const FqCurve& E, const FqPoint& P, const FqPoint& Q, PointOp op);
FqPoint scalar_mul(const FqCurve& E, const FqPoint& P, int64_t n);

/// Hasse interval bounds [q+1-floor(2 sqrt q), q+1+floor(2 sqrt q)].
std::pair<uint64_t, uint64_t> hasse_interval(uint64_t q);

struct OrderOptions {
  uint64_t enumeration_limit = 1ull << 16;
  uint64_t bound = 1ull << 32;
  uint64_t seed = 1;
};

uint64_t group_order(const FqCurve& E, const OrderOptions& opt = {});
std::vector<FqPoint> enumerate_points(const FqCurve& E);

/// Smallest n >= 1 with nP = O, given a multiple M of the order.
uint64_t point_order(const FqCurve& E, const FqPoint& P, uint64_t M);
bool has_exact_order(const FqCurve& E, const FqPoint& P, uint64_t n);

FqPoint find_point_of_order(const FqCurve& E, uint64_t n, Rng& rng, std::optional<uint64_t> M = std::nullopt);

LCurve base_change(const FqCurve& E, const ExtFieldPtr& L);
LPoint lift_point(const ExtField& L, const FqPoint& P);

/// Quotient isogeny E -> E/<t> in Velu's normalization.
struct Isogeny {
  FqCurve domain;
  FqCurve codomain;
  int degree;
  FqPoly x_num, x_den;
  // y-map = (y_num1 * y + y_num0) / y_den
  FqPoly y_num1, y_num0, y_den;

  FqPoint image(const FqPoint& P) const;
  LPoint image(const ExtField& L, const LPoint& P) const;
};

Isogeny velu_isogeny(const FqCurve& E, const FqPoint& t);

}  // namespace ellbasis
