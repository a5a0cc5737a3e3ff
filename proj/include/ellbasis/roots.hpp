#pragma once

#include <optional>
#include <vector>

#include "ellbasis/arith.hpp"
#include "ellbasis/linalg.hpp"
#include "ellbasis/poly.hpp"
#include "ellbasis/rng.hpp"

namespace ellbasis {

/// Rabin's test over the field K: x^{|K|^n} = x mod f and
/// gcd(x^{|K|^{n/l}} - x, f) = 1 for every prime l | n.
template <class F>
bool is_irreducible(const F& K, const Poly<F>& f) {
  int n = f.degree();
  if (n < 1) raise(Errc::InvalidArgument, "irreducibility test needs degree >= 1");
  if (n == 1) return true;
  auto X = poly::x(K);
  std::vector<Poly<F>> pw(n + 1);
  pw[0] = poly::rem(K, X, f);
  for (int i = 1; i <= n; ++i) pw[i] = poly::pow_field_order(K, pw[i - 1], f);
  if (!(pw[n] == pw[0])) return false;
  for (uint64_t l : prime_divisors(static_cast<uint64_t>(n))) {
    auto g = poly::gcd(K, poly::sub(K, pw[n / l], X), f);
    if (g.degree() != 0) return false;
  }
  return true;
}

template <class F>
typename F::Element frobenius_p(const F& K, const typename F::Element& a) {
  return K.pow(a, K.characteristic());
}

/// Absolute trace to F_2 (characteristic 2 only), returned as an element.
template <class F>
typename F::Element trace_f2(const F& K, const typename F::Element& a) {
  auto s = a, t = a;
  for (int i = 1; i < K.abs_degree(); ++i) {
    t = K.mul(t, t);
    s = K.add(s, t);
  }
  return s;
}

/// Solutions z of z^2 + z = c in characteristic 2, through the F_2-linear
/// map z -> z^2 + z on absolute coordinates.
template <class F>
std::vector<typename F::Element> artin_schreier(const F& K, const typename F::Element& c) {
  int n = K.abs_degree();
  std::vector<std::vector<uint64_t>> cols;
  for (int i = 0; i < n; ++i) {
    std::vector<uint64_t> e(n, 0);
    e[i] = 1;
    auto z = K.from_fp(e);
    cols.push_back(K.to_fp(K.add(K.mul(z, z), z)));
  }
  Mat2 A(n, std::vector<uint64_t>(n));
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) A[i][j] = cols[j][i];
  auto sol = solve_gf2_any(A, K.to_fp(c));
  if (!sol) return {};
  auto z = K.from_fp(*sol);
  return {z, K.add(z, K.one())};
}

/// Square root in characteristic 2: the inverse of the absolute Frobenius.
template <class F>
typename F::Element sqrt_char2(const F& K, const typename F::Element& a) {
  auto r = a;
  for (int i = 1; i < K.abs_degree(); ++i) r = K.mul(r, r);
  return r;
}

namespace detail {

// (x + delta)^((|K|-1)/2) mod g for odd characteristic; the exponent has all
// base-p digits equal to (p-1)/2.
template <class F>
Poly<F> half_order_power(const F& K, const Poly<F>& base, const Poly<F>& g) {
  uint64_t h = (K.characteristic() - 1) / 2;
  Poly<F> acc = poly::rem(K, poly::constant(K, K.one()), g);
  Poly<F> z = poly::rem(K, base, g);
  for (int i = 0; i < K.abs_degree(); ++i) {
    acc = poly::mulmod(K, acc, poly::powmod(K, z, h, g), g);
    if (i + 1 < K.abs_degree()) z = poly::powmod(K, z, K.characteristic(), g);
  }
  return acc;
}

template <class F>
Poly<F> trace_poly(const F& K, const Poly<F>& base, const Poly<F>& g) {
  Poly<F> t = poly::rem(K, base, g), s = t;
  for (int i = 1; i < K.abs_degree(); ++i) {
    t = poly::mulmod(K, t, t, g);
    s = poly::add(K, s, t);
  }
  return s;
}

template <class F>
void split_linear(const F& K, const Poly<F>& g, Rng& rng, std::vector<typename F::Element>& out) {
  if (g.degree() <= 0) return;
  if (g.degree() == 1) {
    out.push_back(K.neg(K.div(g.c[0], g.c[1])));
    return;
  }
  for (;;) {
    auto delta = K.random(rng);
    Poly<F> h;
    if (K.characteristic() == 2) {
      auto base = poly::make(K, {K.zero(), delta});
      h = trace_poly(K, base, g);
    } else {
      auto base = poly::make(K, {delta, K.one()});
      h = poly::sub(K, half_order_power(K, base, g), poly::constant(K, K.one()));
    }
    auto d = poly::gcd(K, h, g);
    if (d.degree() > 0 && d.degree() < g.degree()) {
      split_linear(K, d, rng, out);
      split_linear(K, poly::exact_quo(K, g, d), rng, out);
      return;
    }
  }
}

}  // namespace detail

/// Distinct roots of f in K.
template <class F>
std::vector<typename F::Element> find_roots(const F& K, const Poly<F>& f, Rng& rng) {
  if (f.degree() < 1) return {};
  auto fm = poly::monic(K, f);
  auto X = poly::x(K);
  auto xq = poly::pow_field_order(K, X, fm);
  auto g = poly::gcd(K, poly::sub(K, xq, poly::rem(K, X, fm)), fm);
  std::vector<typename F::Element> out;
  detail::split_linear(K, g, rng, out);
  return out;
}

/// Roots of a y^2 + b y + c in K, without multiplicity.
template <class F>
std::vector<typename F::Element> quadratic_roots(const F& K, const typename F::Element& a,
                                                 const typename F::Element& b,
                                                 const typename F::Element& c, Rng& rng) {
  using E = typename F::Element;
  if (K.is_zero(a)) {
    if (K.is_zero(b)) return {};
    return {K.neg(K.div(c, b))};
  }
  if (K.characteristic() == 2) {
    if (K.is_zero(b)) return {sqrt_char2(K, K.div(c, a))};
    // y = (b/a) z turns the equation into z^2 + z = a c / b^2
    auto s = K.div(b, a);
    auto zs = artin_schreier(K, K.div(K.mul(a, c), K.mul(b, b)));
    std::vector<E> out;
    for (auto& z : zs) out.push_back(K.mul(s, z));
    return out;
  }
  auto two = K.from_int(2);
  auto disc = K.sub(K.mul(b, b), K.mul(K.from_int(4), K.mul(a, c)));
  auto den = K.inv(K.mul(two, a));
  if (K.is_zero(disc)) return {K.mul(K.neg(b), den)};
  auto sq = find_roots(K, poly::make(K, {K.neg(disc), K.zero(), K.one()}), rng);
  if (sq.empty()) return {};
  E r1 = K.mul(K.sub(sq[0], b), den);
  E r2 = K.mul(K.sub(K.neg(sq[0]), b), den);
  return {r1, r2};
}

}  // namespace ellbasis
