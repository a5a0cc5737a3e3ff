#pragma once

#include <algorithm>
#include <cstdint>
#include <tuple>
#include <utility>
#include <vector>

#include "ellbasis/errors.hpp"

namespace ellbasis {

/// Dense univariate polynomial over a field F, coefficients low-to-high,
/// trailing zeros trimmed (the zero polynomial is empty).
template <class F>
struct Poly {
  using E = typename F::Element;
  std::vector<E> c;

  int degree() const { return static_cast<int>(c.size()) - 1; }
  bool is_zero() const { return c.empty(); }
  friend bool operator==(const Poly&, const Poly&) = default;
};

namespace poly {

template <class F>
void trim(const F& K, Poly<F>& a) {
  while (!a.c.empty() && K.is_zero(a.c.back())) a.c.pop_back();
}

template <class F>
Poly<F> make(const F& K, std::vector<typename F::Element> c) {
  Poly<F> r{std::move(c)};
  trim(K, r);
  return r;
}

template <class F>
Poly<F> constant(const F& K, const typename F::Element& e) {
  return make(K, {e});
}

template <class F>
Poly<F> monomial(const F& K, const typename F::Element& e, int n) {
  std::vector<typename F::Element> c(n + 1, K.zero());
  c[n] = e;
  return make(K, std::move(c));
}

template <class F>
Poly<F> x(const F& K) {
  return monomial(K, K.one(), 1);
}

template <class F>
typename F::Element coeff(const F& K, const Poly<F>& a, int i) {
  return i >= 0 && i < static_cast<int>(a.c.size()) ? a.c[i] : K.zero();
}

template <class F>
typename F::Element lead(const F& K, const Poly<F>& a) {
  return a.c.empty() ? K.zero() : a.c.back();
}

template <class F>
Poly<F> add(const F& K, const Poly<F>& a, const Poly<F>& b) {
  Poly<F> r;
  size_t n = std::max(a.c.size(), b.c.size());
  r.c.reserve(n);
  for (size_t i = 0; i < n; ++i) {
    if (i >= a.c.size()) r.c.push_back(b.c[i]);
    else if (i >= b.c.size()) r.c.push_back(a.c[i]);
    else r.c.push_back(K.add(a.c[i], b.c[i]));
  }
  trim(K, r);
  return r;
}

template <class F>
Poly<F> neg(const F& K, const Poly<F>& a) {
  Poly<F> r = a;
  for (auto& e : r.c) e = K.neg(e);
  return r;
}

template <class F>
Poly<F> sub(const F& K, const Poly<F>& a, const Poly<F>& b) {
  return add(K, a, neg(K, b));
}

template <class F>
Poly<F> scale(const F& K, const Poly<F>& a, const typename F::Element& s) {
  Poly<F> r = a;
  for (auto& e : r.c) e = K.mul(e, s);
  trim(K, r);
  return r;
}

template <class F>
Poly<F> mul(const F& K, const Poly<F>& a, const Poly<F>& b) {
  if (a.is_zero() || b.is_zero()) return {};
  std::vector<typename F::Element> c(a.c.size() + b.c.size() - 1, K.zero());
  for (size_t i = 0; i < a.c.size(); ++i) {
    if (K.is_zero(a.c[i])) continue;
    for (size_t j = 0; j < b.c.size(); ++j) c[i + j] = K.add(c[i + j], K.mul(a.c[i], b.c[j]));
  }
  return make(K, std::move(c));
}

/// (quotient, remainder); DivisionByZero when b = 0.
template <class F>
std::pair<Poly<F>, Poly<F>> divrem(const F& K, const Poly<F>& a, const Poly<F>& b) {
  if (b.is_zero()) raise(Errc::DivisionByZero, "polynomial division by zero");
  if (a.degree() < b.degree()) return {Poly<F>{}, a};
  auto r = a.c;
  int db = b.degree();
  auto il = K.inv(b.c.back());
  std::vector<typename F::Element> q(a.degree() - db + 1, K.zero());
  for (int i = a.degree(); i >= db; --i) {
    if (K.is_zero(r[i])) continue;
    auto f = K.mul(r[i], il);
    q[i - db] = f;
    for (int j = 0; j <= db; ++j) r[i - db + j] = K.sub(r[i - db + j], K.mul(f, b.c[j]));
  }
  r.resize(db);
  return {make(K, std::move(q)), make(K, std::move(r))};
}

template <class F>
Poly<F> rem(const F& K, const Poly<F>& a, const Poly<F>& b) {
  if (a.degree() < b.degree() && !b.is_zero()) return a;
  return divrem(K, a, b).second;
}

/// Exact quotient; InexactDivision when b does not divide a.
template <class F>
Poly<F> exact_quo(const F& K, const Poly<F>& a, const Poly<F>& b) {
  auto [q, r] = divrem(K, a, b);
  if (!r.is_zero()) raise(Errc::InexactDivision, "polynomial division is not exact");
  return q;
}

template <class F>
Poly<F> monic(const F& K, const Poly<F>& a) {
  if (a.is_zero()) return a;
  return scale(K, a, K.inv(a.c.back()));
}

template <class F>
Poly<F> gcd(const F& K, Poly<F> a, Poly<F> b) {
  while (!b.is_zero()) {
    auto r = rem(K, a, b);
    a = std::move(b);
    b = std::move(r);
  }
  return monic(K, a);
}

/// (g, u, v) with u a + v b = g, g monic (or zero when a = b = 0).
template <class F>
std::tuple<Poly<F>, Poly<F>, Poly<F>> xgcd(const F& K, const Poly<F>& a, const Poly<F>& b) {
  Poly<F> r0 = a, r1 = b;
  Poly<F> u0 = constant(K, K.one()), u1{};
  Poly<F> v0{}, v1 = constant(K, K.one());
  while (!r1.is_zero()) {
    auto [qt, r] = divrem(K, r0, r1);
    r0 = std::move(r1);
    r1 = std::move(r);
    auto u = sub(K, u0, mul(K, qt, u1));
    u0 = std::move(u1);
    u1 = std::move(u);
    auto v = sub(K, v0, mul(K, qt, v1));
    v0 = std::move(v1);
    v1 = std::move(v);
  }
  if (r0.is_zero()) return {r0, u0, v0};
  auto s = K.inv(r0.c.back());
  return {scale(K, r0, s), scale(K, u0, s), scale(K, v0, s)};
}

template <class F>
Poly<F> derivative(const F& K, const Poly<F>& a) {
  if (a.c.size() <= 1) return {};
  std::vector<typename F::Element> c(a.c.size() - 1, K.zero());
  for (size_t i = 1; i < a.c.size(); ++i) c[i - 1] = K.mul(a.c[i], K.from_int(static_cast<int64_t>(i)));
  return make(K, std::move(c));
}

template <class F>
typename F::Element eval(const F& K, const Poly<F>& a, const typename F::Element& x) {
  auto r = K.zero();
  for (size_t i = a.c.size(); i-- > 0;) r = K.add(K.mul(r, x), a.c[i]);
  return r;
}

template <class F>
Poly<F> mulmod(const F& K, const Poly<F>& a, const Poly<F>& b, const Poly<F>& m) {
  return rem(K, mul(K, a, b), m);
}

template <class F>
Poly<F> powmod(const F& K, Poly<F> base, uint64_t e, const Poly<F>& m) {
  Poly<F> r = rem(K, constant(K, K.one()), m);
  base = rem(K, base, m);
  while (e) {
    if (e & 1) r = mulmod(K, r, base, m);
    e >>= 1;
    if (e) base = mulmod(K, base, base, m);
  }
  return r;
}

/// Inverse of a modulo m; NotInvertible when gcd(a, m) != 1.
template <class F>
Poly<F> invmod(const F& K, const Poly<F>& a, const Poly<F>& m) {
  auto [g, u, v] = xgcd(K, rem(K, a, m), m);
  if (g.degree() != 0) raise(Errc::NotInvertible, "polynomial not invertible modulo m");
  return rem(K, u, m);
}

template <class F>
Poly<F> from_roots(const F& K, const std::vector<typename F::Element>& roots) {
  Poly<F> r = constant(K, K.one());
  for (const auto& z : roots) r = mul(K, r, make(K, {K.neg(z), K.one()}));
  return r;
}

/// Raise to the power |K| modulo m, i.e. apply the |K|-Frobenius of K[x]/m.
template <class F>
Poly<F> pow_field_order(const F& K, const Poly<F>& a, const Poly<F>& m) {
  Poly<F> r = rem(K, a, m);
  for (int i = 0; i < K.abs_degree(); ++i) r = powmod(K, r, K.characteristic(), m);
  return r;
}

}  // namespace poly
}  // namespace ellbasis
