#pragma once

#include <compare>
#include <cstdint>
#include <memory>
#include <string>
#include <vector>

#include "ellbasis/rng.hpp"

namespace ellbasis {

/// An element of F_q. For q = p the value is the residue; for m > 1 the m
/// coefficients over F_p are bit-packed, low coefficient in the low bits.
struct Fq {
  uint64_t v = 0;
  friend bool operator==(Fq, Fq) = default;
  friend auto operator<=>(Fq, Fq) = default;
};

/// F_q = F_p[w]/g(w).
class BaseField {
 public:
  using Element = Fq;

  /// F_p, with modulus g = w.
  static std::shared_ptr<const BaseField> prime(uint64_t p);
  /// F_p[w]/g; g is monic (low-to-high) and must be irreducible.
  static std::shared_ptr<const BaseField> create(uint64_t p, const std::vector<uint64_t>& g);
  /// F_q with the first irreducible modulus in lexicographic order.
  static std::shared_ptr<const BaseField> of_order(uint64_t q);

  uint64_t p() const { return p_; }
  int m() const { return m_; }
  uint64_t q() const { return q_; }
  uint64_t characteristic() const { return p_; }
  int abs_degree() const { return m_; }
  const std::vector<uint64_t>& modulus() const { return g_; }

  Fq zero() const { return {0}; }
  Fq one() const { return {1}; }
  Fq from_int(int64_t n) const;
  Fq from_digits(const std::vector<uint64_t>& c) const;
  std::vector<uint64_t> digits(Fq a) const;
  /// Bijection [0, q) <-> F_q through base-p digits.
  Fq from_index(uint64_t i) const;
  uint64_t index(Fq a) const;

  bool is_zero(Fq a) const { return a.v == 0; }
  bool is_one(Fq a) const { return a.v == 1; }
  bool equal(Fq a, Fq b) const { return a.v == b.v; }

  Fq add(Fq a, Fq b) const;
  Fq sub(Fq a, Fq b) const;
  Fq neg(Fq a) const;
  Fq mul(Fq a, Fq b) const;
  Fq inv(Fq a) const;  // DivisionByZero on zero
  Fq div(Fq a, Fq b) const { return mul(a, inv(b)); }
  Fq pow(Fq a, uint64_t e) const;

  Fq random(Rng& rng) const;
  Fq random_nonzero(Rng& rng) const;

  /// Absolute coordinates over F_p.
  std::vector<uint64_t> to_fp(Fq a) const { return digits(a); }
  Fq from_fp(const std::vector<uint64_t>& c) const { return from_digits(c); }

  std::string to_string(Fq a) const;
  bool same_as(const BaseField& o) const { return p_ == o.p_ && g_ == o.g_; }

 private:
  BaseField(uint64_t p, std::vector<uint64_t> g);
  uint64_t digit(uint64_t v, int i) const { return (v >> (i * width_)) & mask_; }
  Fq mul_school(Fq a, Fq b) const;
  void build_tables();

  uint64_t p_;
  int m_;
  uint64_t q_;
  std::vector<uint64_t> g_;
  int width_ = 64;
  uint64_t mask_ = ~0ull;
  std::vector<uint32_t> log_;
  std::vector<uint64_t> exp_;
};

using BaseFieldPtr = std::shared_ptr<const BaseField>;

}  // namespace ellbasis
