#include "ellbasis/base_field.hpp"

#include <bit>
#include <sstream>

#include "ellbasis/arith.hpp"
#include "ellbasis/errors.hpp"
#include "ellbasis/poly.hpp"
#include "ellbasis/roots.hpp"

namespace ellbasis {

namespace {

constexpr uint64_t kTableLimit = 1ull << 20;

bool modulus_irreducible(uint64_t p, const std::vector<uint64_t>& g) {
  auto Fp = BaseField::prime(p);
  std::vector<Fq> c;
  for (uint64_t v : g) c.push_back(Fp->from_int(static_cast<int64_t>(v % p)));
  auto f = poly::make(*Fp, c);
  return is_irreducible(*Fp, f);
}

}  // namespace

BaseField::BaseField(uint64_t p, std::vector<uint64_t> g) : p_(p), g_(std::move(g)) {
  m_ = static_cast<int>(g_.size()) - 1;
  q_ = ipow(p_, m_);
  if (m_ > 1) {
    width_ = std::bit_width(p_ - 1);
    if (width_ * m_ > 64) raise(Errc::BoundExceeded, "packed F_q element does not fit 64 bits");
    mask_ = (1ull << width_) - 1;
    build_tables();
  }
}

std::shared_ptr<const BaseField> BaseField::prime(uint64_t p) {
  if (!is_prime(p)) raise(Errc::NotPrime, "characteristic is not prime");
  if (p >> 63) raise(Errc::BoundExceeded, "p must be below 2^63");
  return std::shared_ptr<const BaseField>(new BaseField(p, {0, 1}));
}

std::shared_ptr<const BaseField> BaseField::create(uint64_t p, const std::vector<uint64_t>& g) {
  if (!is_prime(p)) raise(Errc::NotPrime, "characteristic is not prime");
  if (g.size() < 2 || g.back() != 1) raise(Errc::InvalidArgument, "modulus must be monic of degree >= 1");
  for (uint64_t c : g)
    if (c >= p) raise(Errc::InvalidArgument, "modulus coefficient out of range");
  if (g.size() == 2) {
    if (g[0] != 0) raise(Errc::InvalidArgument, "degree-1 modulus must be w");
    return prime(p);
  }
  if (!modulus_irreducible(p, g)) raise(Errc::NotIrreducible, "modulus is reducible");
  return std::shared_ptr<const BaseField>(new BaseField(p, g));
}

std::shared_ptr<const BaseField> BaseField::of_order(uint64_t q) {
  auto pm = prime_power(q);
  if (!pm) raise(Errc::NotPrimePower, "q is not a prime power");
  auto [p, m] = *pm;
  if (m == 1) return prime(p);
  // enumerate monic polynomials of degree m by the integer of their low coefficients
  uint64_t count = ipow(p, m);
  for (uint64_t i = 0; i < count; ++i) {
    std::vector<uint64_t> g(m + 1, 0);
    uint64_t v = i;
    for (int k = 0; k < m; ++k) {
      g[k] = v % p;
      v /= p;
    }
    g[m] = 1;
    if (g[0] == 0) continue;
    if (modulus_irreducible(p, g)) return std::shared_ptr<const BaseField>(new BaseField(p, g));
  }
  raise(Errc::NotIrreducible, "no irreducible modulus found");
}

void BaseField::build_tables() {
  uint64_t space = 1ull << (width_ * m_);
  if (q_ > kTableLimit || space > kTableLimit) return;
  auto order = q_ - 1;
  auto primes = prime_divisors(order);
  for (uint64_t i = 1; i < q_; ++i) {
    Fq gcand = from_index(i);
    bool ok = true;
    for (uint64_t l : primes) {
      // exponentiation without tables
      Fq r = one(), b = gcand;
      uint64_t e = order / l;
      while (e) {
        if (e & 1) r = mul_school(r, b);
        b = mul_school(b, b);
        e >>= 1;
      }
      if (r == one()) {
        ok = false;
        break;
      }
    }
    if (!ok) continue;
    exp_.assign(order, 0);
    log_.assign(space, 0);
    Fq cur = one();
    for (uint64_t k = 0; k < order; ++k) {
      exp_[k] = cur.v;
      log_[cur.v] = static_cast<uint32_t>(k);
      cur = mul_school(cur, gcand);
    }
    return;
  }
}

Fq BaseField::from_int(int64_t n) const {
  int64_t r = n % static_cast<int64_t>(p_);
  if (r < 0) r += static_cast<int64_t>(p_);
  return from_digits({static_cast<uint64_t>(r)});
}

Fq BaseField::from_digits(const std::vector<uint64_t>& c) const {
  if (static_cast<int>(c.size()) > m_) raise(Errc::FormatError, "too many coefficients for F_q element");
  if (m_ == 1) {
    uint64_t v = c.empty() ? 0 : c[0];
    if (v >= p_) raise(Errc::FormatError, "coefficient out of range");
    return {v};
  }
  uint64_t v = 0;
  for (size_t i = 0; i < c.size(); ++i) {
    if (c[i] >= p_) raise(Errc::FormatError, "coefficient out of range");
    v |= c[i] << (i * width_);
  }
  return {v};
}

std::vector<uint64_t> BaseField::digits(Fq a) const {
  if (m_ == 1) return {a.v};
  std::vector<uint64_t> r(m_);
  for (int i = 0; i < m_; ++i) r[i] = digit(a.v, i);
  return r;
}

Fq BaseField::from_index(uint64_t i) const {
  if (m_ == 1) return {i % p_};
  uint64_t v = 0;
  for (int k = 0; k < m_; ++k) {
    v |= (i % p_) << (k * width_);
    i /= p_;
  }
  return {v};
}

uint64_t BaseField::index(Fq a) const {
  if (m_ == 1) return a.v;
  uint64_t r = 0;
  for (int k = m_ - 1; k >= 0; --k) r = r * p_ + digit(a.v, k);
  return r;
}

Fq BaseField::add(Fq a, Fq b) const {
  if (m_ == 1) {
    uint64_t s = a.v + b.v;
    if (s >= p_) s -= p_;
    return {s};
  }
  if (p_ == 2) return {a.v ^ b.v};
  uint64_t v = 0;
  for (int i = 0; i < m_; ++i) {
    uint64_t s = digit(a.v, i) + digit(b.v, i);
    if (s >= p_) s -= p_;
    v |= s << (i * width_);
  }
  return {v};
}

Fq BaseField::neg(Fq a) const {
  if (m_ == 1) return {a.v ? p_ - a.v : 0};
  if (p_ == 2) return a;
  uint64_t v = 0;
  for (int i = 0; i < m_; ++i) {
    uint64_t d = digit(a.v, i);
    v |= (d ? p_ - d : 0) << (i * width_);
  }
  return {v};
}

Fq BaseField::sub(Fq a, Fq b) const { return add(a, neg(b)); }

Fq BaseField::mul_school(Fq a, Fq b) const {
  uint64_t prod[128] = {0};
  uint64_t da[64], db[64];
  for (int i = 0; i < m_; ++i) {
    da[i] = digit(a.v, i);
    db[i] = digit(b.v, i);
  }
  for (int i = 0; i < m_; ++i) {
    if (!da[i]) continue;
    for (int j = 0; j < m_; ++j) prod[i + j] = (prod[i + j] + mulmod(da[i], db[j], p_)) % p_;
  }
  for (int k = 2 * m_ - 2; k >= m_; --k) {
    uint64_t f = prod[k];
    if (!f) continue;
    prod[k] = 0;
    for (int j = 0; j < m_; ++j) prod[k - m_ + j] = (prod[k - m_ + j] + p_ - mulmod(f, g_[j], p_)) % p_;
  }
  uint64_t v = 0;
  for (int i = 0; i < m_; ++i) v |= prod[i] << (i * width_);
  return {v};
}

Fq BaseField::mul(Fq a, Fq b) const {
  if (m_ == 1) return {mulmod(a.v, b.v, p_)};
  if (a.v == 0 || b.v == 0) return zero();
  if (!exp_.empty()) {
    uint64_t k = static_cast<uint64_t>(log_[a.v]) + log_[b.v];
    if (k >= q_ - 1) k -= q_ - 1;
    return {exp_[k]};
  }
  return mul_school(a, b);
}

Fq BaseField::inv(Fq a) const {
  if (a.v == 0) raise(Errc::DivisionByZero, "inverse of zero in F_q");
  if (m_ == 1) return {invmod(a.v, p_)};
  if (!exp_.empty()) {
    uint64_t k = log_[a.v];
    return {exp_[k ? q_ - 1 - k : 0]};
  }
  return pow(a, q_ - 2);
}

Fq BaseField::pow(Fq a, uint64_t e) const {
  Fq r = one();
  while (e) {
    if (e & 1) r = mul(r, a);
    e >>= 1;
    if (e) a = mul(a, a);
  }
  return r;
}

Fq BaseField::random(Rng& rng) const { return from_index(uniform_below(rng, q_)); }

Fq BaseField::random_nonzero(Rng& rng) const { return from_index(1 + uniform_below(rng, q_ - 1)); }

std::string BaseField::to_string(Fq a) const {
  if (m_ == 1) return std::to_string(a.v);
  std::ostringstream os;
  auto d = digits(a);
  for (int i = 0; i < m_; ++i) {
    if (i) os << '/';
    os << d[i];
  }
  return os.str();
}

}  // namespace ellbasis
