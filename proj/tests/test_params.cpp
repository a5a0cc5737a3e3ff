#include <cmath>
#include <numeric>

#include "doctest.h"
#include "ellbasis/params.hpp"
#include "helpers.hpp"

using namespace ellbasis;
using namespace testing_util;

namespace {

std::vector<uint64_t> small_prime_powers() {
  std::vector<uint64_t> r;
  for (uint64_t q = 2; q <= 64; ++q)
    if (prime_power(q)) r.push_back(q);
  return r;
}

bool squarefree(uint64_t n) {
  for (auto [p, e] : factor(n))
    if (e > 1) return false;
  return true;
}

}  // namespace

TEST_CASE("d_q examples") {
  CHECK(compute_dq(654323, 14).dq == 56);
  CHECK(compute_dq(7, 5).dq == 5);
  CHECK(compute_dq(7, 6).dq == 216);
  auto p = compute_dq(7, 6);
  REQUIRE(p.primes.size() == 2);
  CHECK(p.primes[0].ell == 2);
  CHECK(p.primes[0].v_dq == 3);
  CHECK(p.primes[1].v_dq == 3);
  CHECK(throws_code(Errc::NotPrimePower, [] { compute_dq(12, 5); }));
  CHECK(throws_code(Errc::InvalidArgument, [] { compute_dq(7, 1); }));
}

TEST_CASE("existence flags") {
  auto a = existence_check(7, 5);
  CHECK(a.dq == 5);
  CHECK(a.omega_guaranteed);
  CHECK_FALSE(a.theta_guaranteed);
  auto b = existence_check(654323, 14);
  CHECK(b.omega_guaranteed);
  CHECK(b.theta_guaranteed);
  auto c = existence_check(2, 3);
  CHECK_FALSE(c.omega_guaranteed);
  CHECK_FALSE(c.theta_guaranteed);
  for (uint64_t q : small_prime_powers())
    for (int d = 2; d <= 30; ++d) {
      auto e = existence_check(q, d);
      CHECK(e.theta_guaranteed == (static_cast<double>(e.dq) <= std::sqrt(static_cast<double>(q)) + 1e-9));
      CHECK(e.omega_guaranteed == (static_cast<double>(e.dq) <= 2 * std::sqrt(static_cast<double>(q)) + 1e-9));
    }
}

TEST_CASE("d_q properties") {
  for (uint64_t q : small_prime_powers()) {
    for (int d = 2; d <= 30; ++d) {
      CAPTURE(q);
      CAPTURE(d);
      auto p = compute_dq(q, d);
      if (std::gcd(static_cast<uint64_t>(d), q - 1) == 1) CHECK(p.dq == static_cast<uint64_t>(d));
      CHECK(p.dq <= static_cast<uint64_t>(d) * d * (q - 1) * (q - 1));
      if (squarefree(q - 1)) CHECK(p.dq <= static_cast<uint64_t>(d) * d * d);
      CHECK(p.dq % d == 0);
      for (auto [ell, e] : factor(p.dq)) CHECK(d % ell == 0);
      for (const auto& v : p.primes) CHECK(v.v_dq > 0);
      uint64_t dphi = static_cast<uint64_t>(d) * euler_phi(d);
      for (int f = 1; f <= 9; ++f) {
        if (std::gcd(static_cast<uint64_t>(f), dphi) != 1) continue;
        if (std::log2(static_cast<double>(q)) * f > 62) break;
        CHECK(compute_dq(ipow(q, f), d).dq == p.dq);
      }
    }
  }
}

TEST_CASE("base change search") {
  auto a = find_base_change(2, 3);
  CHECK(a.f == 5);
  CHECK(a.F == 2);
  CHECK(a.Q == 32);
  auto b = find_base_change(7, 5);
  CHECK(b.f == 3);
  CHECK(b.F == 2);
  CHECK(b.Q == 343);
  auto c = find_base_change(654323, 14);
  CHECK(c.f == 1);
  CHECK(c.F == 1);
  CHECK(throws_code(Errc::SearchCapExceeded, [] { find_base_change(2, 3, 4); }));
  CHECK(default_base_change_cap(8) == 80);
  CHECK(decimal_power(10, 20) == "100000000000000000000");
  auto big = find_base_change(64, 21);
  CHECK(big.f == 11);
  CHECK(big.Q == 0);
  CHECK(big.Q_decimal == "73786976294838206464");
  CHECK(throws_code(Errc::BoundExceeded, [] { build_xi_model(64, 21); }));
  for (uint64_t q : small_prime_powers())
    for (int d = 2; d <= 30; ++d) {
      auto p = find_base_change(q, d);
      uint64_t dphi = static_cast<uint64_t>(d) * euler_phi(d);
      CHECK(std::gcd(static_cast<uint64_t>(p.f), dphi) == 1);
      CHECK(le_sqrt_power(p.dq, q, p.f));
      if (p.Q) CHECK(std::to_string(p.Q) == p.Q_decimal);
      CHECK((static_cast<uint64_t>(p.f) * p.F) % d == 1 % d);
      CHECK(p.F >= 1);
      CHECK(p.F <= std::max(1, d - 1));
      for (int g = 1; g < p.f; ++g)
        CHECK((std::gcd(static_cast<uint64_t>(g), dphi) != 1 || !le_sqrt_power(p.dq, q, g)));
      if (existence_check(q, d).theta_guaranteed) CHECK(p.f == 1);
    }
}

TEST_CASE("composite model") {
  for (auto [q, d, f] : {std::tuple{7, 5, 3}, std::tuple{2, 3, 5}, std::tuple{4, 3, 5}, std::tuple{3, 4, 7}}) {
    CAPTURE(q);
    CAPTURE(d);
    XiModel m = build_xi_model(q, d, 3);
    CHECK(m.plan.f == f);
    CHECK(m.blowup() == f);
    CHECK(m.big().q() == ipow(q, f));
    CHECK(m.theta->d() == d);
    const ExtField& Lq = *m.Lq;
    Rng rng(17);
    // F_q embeds as a subfield
    for (int i = 0; i < 20; ++i) {
      Fq a = m.Kq->random(rng), b = m.Kq->random(rng);
      CHECK(embed_base(m, m.Kq->mul(a, b)) == m.big().mul(embed_base(m, a), embed_base(m, b)));
      CHECK(embed_base(m, m.Kq->add(a, b)) == m.big().add(embed_base(m, a), embed_base(m, b)));
    }
    for (int i = 0; i < 50; ++i) {
      ExtElement a = Lq.random(rng), b = Lq.random(rng);
      FqVec ia = xi_import(m, a), ib = xi_import(m, b);
      CHECK(ia.size() == static_cast<size_t>(d));
      CHECK(xi_export(m, ia) == a);
      CHECK(xi_export(m, xi_multiply(m, ia, ib)) == Lq.mul(a, b));
      CHECK(xi_frobenius_q(m, ia, d) == ia);
      CHECK(xi_export(m, xi_frobenius_q(m, ia)) == Lq.frobenius(a));
    }
    CHECK(xi_import(m, Lq.one()) == FqVec(d, m.big().one()));
  }
  // an element of F_{Q^d} outside F_{q^d}
  XiModel m = build_xi_model(7, 5, 3);
  FqVec v(5, m.big().zero());
  v[0] = m.big().one();
  CHECK(throws_code(Errc::InvalidArgument, [&] { xi_export(m, v); }));
}
