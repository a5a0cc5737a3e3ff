#include "ellbasis/arith.hpp"

#include <algorithm>
#include <bit>
#include <map>
#include <numeric>

#include "ellbasis/errors.hpp"

namespace ellbasis {

uint64_t mulmod(uint64_t a, uint64_t b, uint64_t n) {
  return static_cast<uint64_t>(static_cast<unsigned __int128>(a) * b % n);
}

uint64_t powmod(uint64_t a, uint64_t e, uint64_t n) {
  uint64_t r = 1 % n;
  a %= n;
  while (e) {
    if (e & 1) r = mulmod(r, a, n);
    a = mulmod(a, a, n);
    e >>= 1;
  }
  return r;
}

uint64_t invmod(uint64_t a, uint64_t n) {
  __int128 t = 0, nt = 1;
  uint64_t r = n, nr = a % n;
  while (nr) {
    uint64_t qt = r / nr;
    __int128 tmp = t - static_cast<__int128>(qt) * nt;
    t = nt;
    nt = tmp;
    uint64_t rr = r - qt * nr;
    r = nr;
    nr = rr;
  }
  if (r != 1) raise(Errc::NotInvertible, "no inverse modulo n");
  if (t < 0) t += n;
  return static_cast<uint64_t>(t);
}

bool is_prime(uint64_t n) {
  if (n < 2) return false;
  for (uint64_t p : {2ull, 3ull, 5ull, 7ull, 11ull, 13ull, 17ull, 19ull, 23ull, 29ull, 31ull, 37ull}) {
    if (n % p == 0) return n == p;
  }
  uint64_t d = n - 1;
  int s = 0;
  while ((d & 1) == 0) {
    d >>= 1;
    ++s;
  }
  for (uint64_t a : {2ull, 3ull, 5ull, 7ull, 11ull, 13ull, 17ull, 19ull, 23ull, 29ull, 31ull, 37ull}) {
    uint64_t x = powmod(a, d, n);
    if (x == 1 || x == n - 1) continue;
    bool composite = true;
    for (int i = 1; i < s; ++i) {
      x = mulmod(x, x, n);
      if (x == n - 1) {
        composite = false;
        break;
      }
    }
    if (composite) return false;
  }
  return true;
}

namespace {

uint64_t rho(uint64_t n) {
  if (n % 2 == 0) return 2;
  for (uint64_t c = 1;; ++c) {
    uint64_t x = 2, y = 2, g = 1;
    auto f = [&](uint64_t v) { return (mulmod(v, v, n) + c) % n; };
    while (g == 1) {
      x = f(x);
      y = f(f(y));
      g = std::gcd(x > y ? x - y : y - x, n);
    }
    if (g != n) return g;
  }
}

void factor_into(uint64_t n, std::map<uint64_t, int>& out) {
  if (n == 1) return;
  if (is_prime(n)) {
    ++out[n];
    return;
  }
  uint64_t g = rho(n);
  factor_into(g, out);
  factor_into(n / g, out);
}

}  // namespace

std::vector<std::pair<uint64_t, int>> factor(uint64_t n) {
  std::map<uint64_t, int> out;
  for (uint64_t p = 2; p < 1000 && p * p <= n; ++p) {
    while (n % p == 0) {
      ++out[p];
      n /= p;
    }
  }
  factor_into(n, out);
  return {out.begin(), out.end()};
}

std::vector<uint64_t> prime_divisors(uint64_t n) {
  std::vector<uint64_t> r;
  for (auto& [p, e] : factor(n)) r.push_back(p);
  return r;
}

std::optional<std::pair<uint64_t, int>> prime_power(uint64_t q) {
  if (q < 2) return std::nullopt;
  auto f = factor(q);
  if (f.size() != 1) return std::nullopt;
  return f[0];
}

uint64_t euler_phi(uint64_t n) {
  uint64_t r = n;
  for (auto& [p, e] : factor(n)) r = r / p * (p - 1);
  return r;
}

int valuation(uint64_t n, uint64_t l) {
  if (n == 0) return 0;
  int v = 0;
  while (n % l == 0) {
    n /= l;
    ++v;
  }
  return v;
}

uint64_t isqrt(uint64_t n) {
  uint64_t r = static_cast<uint64_t>(__builtin_sqrtl(static_cast<long double>(n)));
  while (r * r > n) --r;
  while ((r + 1) * (r + 1) <= n) ++r;
  return r;
}

uint64_t ipow(uint64_t b, int e) {
  unsigned __int128 r = 1;
  for (int i = 0; i < e; ++i) {
    r *= b;
    if (r >> 64) raise(Errc::BoundExceeded, "integer power overflows 64 bits");
  }
  return static_cast<uint64_t>(r);
}

int popcount64(uint64_t x) { return std::popcount(x); }

int floor_log2(uint64_t x) { return 63 - std::countl_zero(x); }

}  // namespace ellbasis
