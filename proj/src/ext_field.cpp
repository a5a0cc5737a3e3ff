#include "ellbasis/ext_field.hpp"

#include "ellbasis/errors.hpp"

namespace ellbasis {

ExtField::ExtField(BaseFieldPtr K, FqPoly modulus) : K_(std::move(K)), mod_(std::move(modulus)) {
  d_ = mod_.degree();
  if (d_ < 1 || !K_->is_one(mod_.c.back())) raise(Errc::InvalidArgument, "extension modulus must be monic");
}

ExtElement ExtField::zero() const { return {std::vector<Fq>(d_, K_->zero())}; }

ExtElement ExtField::lift(Fq a) const {
  auto r = zero();
  r.c[0] = a;
  return r;
}

ExtElement ExtField::gen() const {
  if (d_ == 1) return lift(K_->neg(mod_.c[0]));
  auto r = zero();
  r.c[1] = K_->one();
  return r;
}

ExtElement ExtField::from_poly(const FqPoly& f) const {
  auto r = poly::rem(*K_, f, mod_);
  auto e = zero();
  for (size_t i = 0; i < r.c.size(); ++i) e.c[i] = r.c[i];
  return e;
}

FqPoly ExtField::to_poly(const ExtElement& a) const { return poly::make(*K_, a.c); }

ExtElement ExtField::from_coords(const std::vector<Fq>& c) const {
  if (static_cast<int>(c.size()) != d_) raise(Errc::LengthMismatch, "coordinate vector length differs from d");
  return {c};
}

bool ExtField::is_zero(const ExtElement& a) const {
  for (auto x : a.c)
    if (!K_->is_zero(x)) return false;
  return true;
}

ExtElement ExtField::add(const ExtElement& a, const ExtElement& b) const {
  ExtElement r{std::vector<Fq>(d_)};
  for (int i = 0; i < d_; ++i) r.c[i] = K_->add(a.c[i], b.c[i]);
  return r;
}

ExtElement ExtField::sub(const ExtElement& a, const ExtElement& b) const {
  ExtElement r{std::vector<Fq>(d_)};
  for (int i = 0; i < d_; ++i) r.c[i] = K_->sub(a.c[i], b.c[i]);
  return r;
}

ExtElement ExtField::neg(const ExtElement& a) const {
  ExtElement r{std::vector<Fq>(d_)};
  for (int i = 0; i < d_; ++i) r.c[i] = K_->neg(a.c[i]);
  return r;
}

ExtElement ExtField::mul(const ExtElement& a, const ExtElement& b) const {
  const BaseField& K = *K_;
  std::vector<Fq> prod(2 * d_ - 1, K.zero());
  for (int i = 0; i < d_; ++i) {
    if (K.is_zero(a.c[i])) continue;
    for (int j = 0; j < d_; ++j) prod[i + j] = K.add(prod[i + j], K.mul(a.c[i], b.c[j]));
  }
  for (int k = 2 * d_ - 2; k >= d_; --k) {
    Fq f = prod[k];
    if (K.is_zero(f)) continue;
    for (int j = 0; j < d_; ++j) prod[k - d_ + j] = K.sub(prod[k - d_ + j], K.mul(f, mod_.c[j]));
  }
  prod.resize(d_);
  return {prod};
}

ExtElement ExtField::inv(const ExtElement& a) const {
  if (is_zero(a)) raise(Errc::DivisionByZero, "inverse of zero in L");
  return from_poly(poly::invmod(*K_, to_poly(a), mod_));
}

ExtElement ExtField::pow(ExtElement a, uint64_t e) const {
  auto r = one();
  while (e) {
    if (e & 1) r = mul(r, a);
    e >>= 1;
    if (e) a = mul(a, a);
  }
  return r;
}

ExtElement ExtField::frobenius(const ExtElement& a, int times) const {
  times %= d_;
  if (times < 0) times += d_;
  auto r = a;
  for (int i = 0; i < times; ++i) r = pow(r, K_->q());
  return r;
}

ExtElement ExtField::random(Rng& rng) const {
  ExtElement r{std::vector<Fq>(d_)};
  for (auto& x : r.c) x = K_->random(rng);
  return r;
}

std::vector<uint64_t> ExtField::to_fp(const ExtElement& a) const {
  std::vector<uint64_t> r;
  r.reserve(abs_degree());
  for (auto x : a.c)
    for (auto v : K_->digits(x)) r.push_back(v);
  return r;
}

ExtElement ExtField::from_fp(const std::vector<uint64_t>& c) const {
  int m = K_->m();
  ExtElement r{std::vector<Fq>(d_)};
  for (int i = 0; i < d_; ++i) r.c[i] = K_->from_digits({c.begin() + i * m, c.begin() + (i + 1) * m});
  return r;
}

}  // namespace ellbasis
