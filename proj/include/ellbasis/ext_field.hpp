#pragma once

#include <memory>
#include <vector>

#include "ellbasis/base_field.hpp"
#include "ellbasis/poly.hpp"

namespace ellbasis {

using FqPoly = Poly<BaseField>;

/// Element of L = F_q[x]/Pi: exactly d coefficients, low-to-high.
struct ExtElement {
  std::vector<Fq> c;
  friend bool operator==(const ExtElement&, const ExtElement&) = default;
};

/// The oracle field L = F_q[x]/Pi, Pi monic irreducible of degree d.
class ExtField {
 public:
  using Element = ExtElement;

  ExtField(BaseFieldPtr K, FqPoly modulus);

  const BaseField& base() const { return *K_; }
  const BaseFieldPtr& base_ptr() const { return K_; }
  const FqPoly& modulus() const { return mod_; }
  int degree() const { return d_; }
  uint64_t characteristic() const { return K_->p(); }
  int abs_degree() const { return K_->m() * d_; }

  ExtElement zero() const;
  ExtElement one() const { return lift(K_->one()); }
  ExtElement from_int(int64_t n) const { return lift(K_->from_int(n)); }
  ExtElement lift(Fq a) const;
  ExtElement gen() const;  // the class of x
  ExtElement from_poly(const FqPoly& f) const;
  FqPoly to_poly(const ExtElement& a) const;
  ExtElement from_coords(const std::vector<Fq>& c) const;

  bool is_zero(const ExtElement& a) const;
  bool equal(const ExtElement& a, const ExtElement& b) const { return a == b; }

  ExtElement add(const ExtElement& a, const ExtElement& b) const;
  ExtElement sub(const ExtElement& a, const ExtElement& b) const;
  ExtElement neg(const ExtElement& a) const;
  ExtElement mul(const ExtElement& a, const ExtElement& b) const;
  ExtElement inv(const ExtElement& a) const;  // DivisionByZero
  ExtElement div(const ExtElement& a, const ExtElement& b) const { return mul(a, inv(b)); }
  ExtElement pow(ExtElement a, uint64_t e) const;
  ExtElement frobenius(const ExtElement& a, int times = 1) const;  // a^(q^times)

  ExtElement random(Rng& rng) const;

  std::vector<uint64_t> to_fp(const ExtElement& a) const;
  ExtElement from_fp(const std::vector<uint64_t>& c) const;

 private:
  BaseFieldPtr K_;
  FqPoly mod_;
  int d_;
};

using ExtFieldPtr = std::shared_ptr<const ExtField>;

}  // namespace ellbasis
