#include <set>

#include "doctest.h"
#include "ellbasis/convolution.hpp"
#include "ellbasis/ext_field.hpp"
#include "ellbasis/multipoint.hpp"
#include "ellbasis/roots.hpp"
#include "helpers.hpp"

using namespace ellbasis;
using namespace testing_util;

TEST_CASE("prime field arithmetic") {
  auto K = BaseField::prime(7);
  CHECK(K->mul(K->from_int(3), K->from_int(5)) == K->one());
  CHECK(K->is_zero(K->add(K->zero(), K->zero())));
  Fq five = K->from_int(5);
  Fq brute{};
  for (uint64_t y = 1; y < 7; ++y)
    if (K->mul(five, K->from_int(y)) == K->one()) brute = K->from_int(y);
  CHECK(K->inv(five) == brute);
  CHECK(K->inv(five) == K->from_int(3));
  CHECK(throws_code(Errc::DivisionByZero, [&] { K->inv(K->zero()); }));
  CHECK(throws_code(Errc::NotPrime, [&] { BaseField::prime(9); }));
}

TEST_CASE("inverse and division identities over several fields") {
  Rng rng(11);
  for (uint64_t q : {7ull, 1009ull, 81ull, 32ull, 4ull, 343ull, 3486784401ull, 4294967291ull}) {
    auto K = BaseField::of_order(q);
    CHECK(K->q() == q);
    for (int i = 0; i < 1000; ++i) {
      Fq a = K->random_nonzero(rng), b = K->random_nonzero(rng);
      CHECK(K->mul(a, K->inv(a)) == K->one());
      CHECK(K->mul(K->mul(a, b), K->inv(b)) == a);
      CHECK(K->add(a, K->neg(a)) == K->zero());
    }
  }
}

TEST_CASE("index and digits round trip") {
  auto K = BaseField::of_order(81);
  std::set<uint64_t> seen;
  for (uint64_t i = 0; i < 81; ++i) {
    Fq a = K->from_index(i);
    CHECK(K->index(a) == i);
    CHECK(K->from_digits(K->digits(a)) == a);
    seen.insert(a.v);
  }
  CHECK(seen.size() == 81);
  CHECK(throws_code(Errc::FormatError, [&] { K->from_digits({3, 0, 0, 0}); }));
}

TEST_CASE("reducible modulus rejected") {
  CHECK(throws_code(Errc::NotIrreducible, [] { BaseField::create(3, {2, 0, 1}); }));  // w^2 - 1
  auto K = BaseField::create(3, {1, 0, 1});  // w^2 + 1
  CHECK(K->q() == 9);
}

TEST_CASE("polynomial arithmetic") {
  auto K = BaseField::prime(7);
  auto g = poly::gcd(*K, pol(*K, {-1, 0, 1}), pol(*K, {-1, 1}));
  CHECK(g == pol(*K, {-1, 1}));
  auto Pi = pol(*K, {4, 5, 4, 0, 3, 1});
  CHECK(poly::derivative(*K, Pi) == pol(*K, {5, 1, 0, 5, 5}));
  CHECK(poly::eval(*K, Pi, K->zero()) == K->from_int(4));
  CHECK(throws_code(Errc::DivisionByZero, [&] { poly::rem(*K, Pi, FqPoly{}); }));

  Rng rng(3);
  for (int it = 0; it < 200; ++it) {
    std::vector<Fq> ca(1 + it % 7), cb(1 + it % 5);
    for (auto& x : ca) x = K->random(rng);
    for (auto& x : cb) x = K->random(rng);
    auto a = poly::make(*K, ca), b = poly::make(*K, cb);
    auto [gg, u, v] = poly::xgcd(*K, a, b);
    CHECK(poly::add(*K, poly::mul(*K, u, a), poly::mul(*K, v, b)) == gg);
    if (!gg.is_zero()) {
      CHECK(poly::rem(*K, a, gg).is_zero());
      CHECK(poly::rem(*K, b, gg).is_zero());
    }
    if (!b.is_zero()) {
      auto [qq, r] = poly::divrem(*K, a, b);
      CHECK(poly::add(*K, poly::mul(*K, qq, b), r) == a);
      CHECK(r.degree() < b.degree());
    }
  }
}

namespace {

// Exhaustive: f of degree n is reducible iff it has a monic factor of degree 1..n/2.
bool brute_irreducible(const BaseField& K, const FqPoly& f) {
  int n = f.degree();
  for (int k = 1; 2 * k <= n; ++k) {
    uint64_t count = ipow(K.q(), k);
    for (uint64_t i = 0; i < count; ++i) {
      std::vector<Fq> c(k + 1);
      uint64_t v = i;
      for (int j = 0; j < k; ++j) {
        c[j] = K.from_index(v % K.q());
        v /= K.q();
      }
      c[k] = K.one();
      if (poly::rem(K, f, poly::make(K, c)).is_zero()) return false;
    }
  }
  return true;
}

}  // namespace

TEST_CASE("irreducibility test") {
  auto K7 = BaseField::prime(7);
  CHECK(is_irreducible(*K7, pol(*K7, {4, 5, 4, 0, 3, 1})));
  CHECK_FALSE(is_irreducible(*K7, pol(*K7, {-1, 0, 1})));
  Rng rng(5);
  for (int i = 0; i < 50; ++i) {
    std::vector<Fq> c(5);
    for (auto& x : c) x = K7->random(rng);
    c[4] = K7->one();
    auto f = poly::make(*K7, c);
    CHECK(is_irreducible(*K7, f) == brute_irreducible(*K7, f));
  }
  auto K5 = BaseField::prime(5);
  for (int n = 1; n <= 4; ++n) {
    uint64_t count = ipow(5, n);
    for (uint64_t i = 0; i < count; ++i) {
      std::vector<Fq> c(n + 1);
      uint64_t v = i;
      for (int j = 0; j < n; ++j) {
        c[j] = K5->from_int(static_cast<int64_t>(v % 5));
        v /= 5;
      }
      c[n] = K5->one();
      auto f = poly::make(*K5, c);
      CHECK(is_irreducible(*K5, f) == brute_irreducible(*K5, f));
    }
  }
  auto K4 = BaseField::of_order(4);
  for (uint64_t i = 0; i < 64; ++i) {
    std::vector<Fq> c{K4->from_index(i % 4), K4->from_index(i / 4 % 4), K4->from_index(i / 16), K4->one()};
    auto f = poly::make(*K4, c);
    CHECK(is_irreducible(*K4, f) == brute_irreducible(*K4, f));
  }
}

TEST_CASE("quadratic roots") {
  Rng rng(9);
  auto K = BaseField::prime(7);
  auto r = quadratic_roots(*K, K->one(), K->zero(), K->from_int(-2), rng);
  std::set<uint64_t> got;
  for (auto x : r) got.insert(x.v);
  CHECK(got == std::set<uint64_t>{3, 4});
  auto dbl = quadratic_roots(*K, K->one(), K->from_int(-2), K->one(), rng);
  REQUIRE(dbl.size() == 1);
  CHECK(dbl[0] == K->one());
  CHECK(quadratic_roots(*K, K->one(), K->zero(), K->from_int(-3), rng).empty());

  for (uint64_t q : {4ull, 8ull, 9ull, 25ull, 32ull}) {
    auto F = BaseField::of_order(q);
    for (int it = 0; it < 100; ++it) {
      Fq a = F->random_nonzero(rng), b = F->random(rng), c = F->random(rng);
      std::set<uint64_t> brute;
      for (uint64_t i = 0; i < q; ++i) {
        Fq y = F->from_index(i);
        if (F->is_zero(F->add(F->mul(F->add(F->mul(a, y), b), y), c))) brute.insert(y.v);
      }
      std::set<uint64_t> got2;
      for (auto y : quadratic_roots(*F, a, b, c, rng)) got2.insert(y.v);
      CHECK(got2 == brute);
    }
  }
}

TEST_CASE("quadratic roots in an extension") {
  Rng rng(21);
  for (uint64_t q : {7ull, 32ull, 9ull, 2ull}) {
    auto K = BaseField::of_order(q);
    FqPoly f;
    for (;;) {
      std::vector<Fq> c(4);
      for (auto& x : c) x = K->random(rng);
      c[3] = K->one();
      f = poly::make(*K, c);
      if (is_irreducible(*K, f)) break;
    }
    ExtField L(K, f);
    for (int it = 0; it < 30; ++it) {
      auto y0 = L.random(rng), b = L.random(rng);
      // (y - y0)(y - y1) with y1 = -b - y0
      auto c = L.mul(y0, L.neg(L.add(b, y0)));
      auto roots = quadratic_roots(L, L.one(), b, c, rng);
      bool found = false;
      for (auto& y : roots) {
        CHECK(L.is_zero(L.add(L.mul(L.add(y, b), y), c)));
        if (y == y0) found = true;
      }
      CHECK(found);
    }
  }
}

TEST_CASE("cyclic convolution") {
  auto K = BaseField::prime(7);
  auto iota = vec(*K, {0, 5, 5, 1, 0});
  auto w = hadamard(*K, vec(*K, {4, 4, 4, 4, 4}), vec(*K, {0, 2, 0, 3, 5}));
  CHECK(cyclic_convolution(*K, iota, w) == vec(*K, {6, 0, 4, 5, 5}));
  auto a = vec(*K, {1, 2, 3, 4, 5});
  CHECK(cyclic_convolution(*K, a, vec(*K, {1, 0, 0, 0, 0})) == a);
  CHECK(throws_code(Errc::LengthMismatch, [&] { cyclic_convolution(*K, a, vec(*K, {1, 0})); }));

  Rng rng(2);
  KaratsubaConvolution kara(2);
  for (uint64_t q : {7ull, 81ull}) {
    auto F = BaseField::of_order(q);
    for (int d = 3; d <= 12; ++d) {
      auto m = poly::monomial(*F, F->one(), d);
      m = poly::sub(*F, m, poly::constant(*F, F->one()));
      for (int it = 0; it < 200; ++it) {
        FqVec x(d), y(d), z(d);
        for (int i = 0; i < d; ++i) {
          x[i] = F->random(rng);
          y[i] = F->random(rng);
          z[i] = F->random(rng);
        }
        auto c = cyclic_convolution(*F, x, y);
        auto prod = poly::rem(*F, poly::mul(*F, poly::make(*F, x), poly::make(*F, y)), m);
        FqVec expect(d, F->zero());
        for (size_t i = 0; i < prod.c.size(); ++i) expect[i] = prod.c[i];
        CHECK(c == expect);
        CHECK(c == cyclic_convolution(*F, y, x));
        CHECK(c == kara.convolve(*F, x, y));
        if (it < 20) {
          CHECK(cyclic_convolution(*F, c, z) == cyclic_convolution(*F, x, cyclic_convolution(*F, y, z)));
          FqVec yz(d);
          for (int i = 0; i < d; ++i) yz[i] = F->add(y[i], z[i]);
          auto lhs = cyclic_convolution(*F, x, yz);
          auto r1 = cyclic_convolution(*F, x, z);
          for (int i = 0; i < d; ++i) CHECK(lhs[i] == F->add(c[i], r1[i]));
        }
      }
    }
  }
}

TEST_CASE("convolution inverse") {
  auto K = BaseField::prime(7);
  CHECK(convolution_inverse(*K, vec(*K, {4, 1, 5, 1, 4})) == vec(*K, {2, 2, 0, 4, 0}));
  auto e0 = vec(*K, {1, 0, 0, 0, 0});
  CHECK(convolution_inverse(*K, e0) == e0);
  CHECK(throws_code(Errc::NotInvertible, [&] { convolution_inverse(*K, vec(*K, {1, 1, 1, 1, 1})); }));
  Rng rng(8);
  int inverted = 0;
  for (int it = 0; it < 100; ++it) {
    FqVec a(6);
    for (auto& x : a) x = K->random(rng);
    try {
      auto b = convolution_inverse(*K, a);
      CHECK(cyclic_convolution(*K, a, b) == vec(*K, {1, 0, 0, 0, 0, 0}));
      ++inverted;
    } catch (const Error& e) {
      CHECK(e.code() == Errc::NotInvertible);
    }
  }
  CHECK(inverted > 0);
}

TEST_CASE("multipoint evaluation") {
  auto K = BaseField::prime(7);
  CHECK(multipoint_eval(*K, pol(*K, {0, 0, 1}), vec(*K, {0, 1, 2})) == vec(*K, {0, 1, 4}));
  CHECK(multipoint_eval(*K, pol(*K, {3}), vec(*K, {0, 1, 2, 5})) == vec(*K, {3, 3, 3, 3}));
  auto F = BaseField::prime(1009);
  Rng rng(4);
  std::vector<Fq> pts(50);
  for (auto& p : pts) p = F->random(rng);
  std::vector<Fq> c(40);
  for (auto& x : c) x = F->random(rng);
  auto f = poly::make(*F, c);
  SubproductTree tree(*F, pts);
  auto ev = tree.evaluate(f);
  for (size_t i = 0; i < pts.size(); ++i) CHECK(ev[i] == poly::eval(*F, f, pts[i]));
  CHECK(multipoint_eval(*F, f, pts) == ev);
  // linear combination against direct products
  std::vector<Fq> w(pts.size());
  for (auto& x : w) x = F->random(rng);
  auto comb = tree.linear_combination(w);
  FqPoly direct;
  for (size_t i = 0; i < pts.size(); ++i) {
    FqPoly prod = poly::constant(*F, w[i]);
    for (size_t j = 0; j < pts.size(); ++j)
      if (j != i) prod = poly::mul(*F, prod, poly::make(*F, {F->neg(pts[j]), F->one()}));
    direct = poly::add(*F, direct, prod);
  }
  CHECK(comb == direct);
}

TEST_CASE("oracle field") {
  auto K = BaseField::prime(7);
  ExtField L(K, pol(*K, {4, 5, 4, 0, 3, 1}));
  Rng rng(6);
  for (int it = 0; it < 200; ++it) {
    auto a = L.random(rng), b = L.random(rng);
    if (L.is_zero(a)) continue;
    CHECK(L.mul(a, L.inv(a)) == L.one());
    CHECK(L.frobenius(L.mul(a, b)) == L.mul(L.frobenius(a), L.frobenius(b)));
    CHECK(L.frobenius(a, 5) == a);
    CHECK(L.from_fp(L.to_fp(a)) == a);
  }
  CHECK(!(L.frobenius(L.gen()) == L.gen()));
}
