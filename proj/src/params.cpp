#include "ellbasis/params.hpp"

#include <cmath>
#include <numeric>

#include "ellbasis/roots.hpp"
#include "ellbasis/search.hpp"

namespace ellbasis {

namespace {

uint64_t mul_checked(uint64_t a, uint64_t b) {
  unsigned __int128 r = static_cast<unsigned __int128>(a) * b;
  if (r >> 64) raise(Errc::BoundExceeded, "d_q overflows 64 bits");
  return static_cast<uint64_t>(r);
}

void check_q(uint64_t q) {
  if (!prime_power(q)) raise(Errc::NotPrimePower, "q is not a prime power");
}

}  // namespace

DqProfile compute_dq(uint64_t q, int d) {
  check_q(q);
  if (d < 2) raise(Errc::InvalidArgument, "d must be at least 2");
  DqProfile p;
  p.q = q;
  p.d = d;
  p.dq = 1;
  for (auto [ell, e] : factor(static_cast<uint64_t>(d))) {
    PrimeValuation v{ell, e, valuation(q - 1, ell), 0};
    v.v_dq = v.v_qm1 == 0 ? v.v_d : std::max(2 * v.v_qm1 + 1, 2 * v.v_d);
    for (int i = 0; i < v.v_dq; ++i) p.dq = mul_checked(p.dq, ell);
    p.primes.push_back(v);
  }
  return p;
}

bool le_sqrt_power(uint64_t a, uint64_t q, uint64_t e) {
  // a^2 <= q^e
  unsigned __int128 a2 = static_cast<unsigned __int128>(a) * a;
  unsigned __int128 r = 1;
  for (uint64_t i = 0; i < e; ++i) {
    r *= q;
    if (r >= a2) return true;
  }
  return r >= a2;
}

Existence existence_check(uint64_t q, int d) {
  Existence x;
  x.dq = compute_dq(q, d).dq;
  unsigned __int128 a2 = static_cast<unsigned __int128>(x.dq) * x.dq;
  x.omega_guaranteed = a2 <= static_cast<unsigned __int128>(4) * q;
  x.theta_guaranteed = a2 <= q;
  return x;
}

std::string decimal_power(uint64_t q, int e) {
  std::vector<uint32_t> dg{1};  // base 10^9, little endian
  for (int i = 0; i < e; ++i) {
    unsigned __int128 carry = 0;
    for (auto& x : dg) {
      unsigned __int128 v = static_cast<unsigned __int128>(x) * q + carry;
      x = static_cast<uint32_t>(v % 1000000000u);
      carry = v / 1000000000u;
    }
    while (carry) {
      dg.push_back(static_cast<uint32_t>(carry % 1000000000u));
      carry /= 1000000000u;
    }
  }
  std::string s = std::to_string(dg.back());
  for (size_t i = dg.size() - 1; i-- > 0;) {
    std::string part = std::to_string(dg[i]);
    s += std::string(9 - part.size(), '0') + part;
  }
  return s;
}

int default_base_change_cap(int d) {
  double l = std::log2(static_cast<double>(d)) + 1.0;
  return static_cast<int>(std::floor(4.0 * l * l)) + 16;
}

BaseChangePlan find_base_change(uint64_t q, int d, std::optional<int> cap) {
  DqProfile p = compute_dq(q, d);
  const uint64_t dphi = static_cast<uint64_t>(d) * euler_phi(static_cast<uint64_t>(d));
  const int lim = cap.value_or(default_base_change_cap(d));
  for (int f = 1; f <= lim; ++f) {
    if (std::gcd(static_cast<uint64_t>(f), dphi) != 1) continue;
    if (!le_sqrt_power(p.dq, q, f)) continue;
    BaseChangePlan b;
    b.q = q;
    b.d = d;
    b.f = f;
    b.dq = p.dq;
    b.F = static_cast<int>(invmod(static_cast<uint64_t>(f) % d, d));
    b.Q_decimal = decimal_power(q, f);
    try {
      b.Q = ipow(q, f);
    } catch (const Error&) {
      b.Q = 0;
    }
    return b;
  }
  raise(Errc::SearchCapExceeded, "no auxiliary degree within the cap");
}

Fq embed_base(const XiModel& m, Fq a) {
  if (!m.embed_table.empty()) return m.embed_table[m.Kq->index(a)];
  const BaseField& KQ = m.big();
  Fq r = KQ.zero();
  auto dg = m.Kq->digits(a);
  for (size_t j = dg.size(); j-- > 0;) r = KQ.add(KQ.mul(r, m.z_image), KQ.from_int(static_cast<int64_t>(dg[j])));
  return r;
}

XiModel build_xi_model(uint64_t q, int d, uint64_t seed) {
  XiModel m;
  m.plan = find_base_change(q, d);
  if (m.plan.Q == 0) raise(Errc::BoundExceeded, "Q = q^f exceeds 64 bits");
  m.Kq = BaseField::of_order(q);
  BaseFieldPtr KQ = BaseField::of_order(m.plan.Q);
  Rng rng(seed);
  const BaseField& Kq = *m.Kq;
  // generator of F_q inside F_Q
  if (Kq.m() == 1) {
    m.z_image = KQ->from_int(0);
  } else {
    const auto& g = Kq.modulus();
    FqPoly gQ;
    for (auto c : g) gQ.c.push_back(KQ->from_int(static_cast<int64_t>(c)));
    poly::trim(*KQ, gQ);
    auto roots = find_roots(*KQ, gQ, rng);
    if (roots.empty()) raise(Errc::InvariantViolation, "F_q does not embed in F_Q");
    m.z_image = roots.front();
  }
  SearchOptions so;
  so.seed = seed;
  auto om = std::make_shared<const OmegaContext>(search_omega_context(KQ, d, so));
  m.omega = om;
  ThetaOptions to;
  to.seed = seed;
  m.theta = std::make_shared<const ThetaContext>(build_theta_context(om, to));
  if (Kq.m() > 1 && q <= (1u << 16)) {
    m.embed_table.resize(q);
    XiModel tmp;
    tmp.Kq = m.Kq;
    tmp.omega = om;
    tmp.z_image = m.z_image;
    for (uint64_t i = 0; i < q; ++i) m.embed_table[i] = embed_base(tmp, Kq.from_index(i));
  }
  // F_{q^d} = F_q[x]/P
  FqPoly P;
  for (;;) {
    FqVec c(d + 1);
    for (int i = 0; i < d; ++i) c[i] = Kq.random(rng);
    c[d] = Kq.one();
    P = poly::make(Kq, c);
    if (is_irreducible(Kq, P)) break;
  }
  m.Lq = std::make_shared<const ExtField>(m.Kq, P);
  const ExtField& L = *om->L;
  Poly<ExtField> PL;
  for (auto c : P.c) PL.c.push_back(L.lift(embed_base(m, c)));
  auto hs = find_roots(L, PL, rng);
  if (hs.empty()) raise(Errc::InvariantViolation, "P has no root in F_{Q^d}");
  m.h = hs.front();
  // columns z^j h^i over F_p
  const int mq = Kq.m();
  const size_t rows = static_cast<size_t>(L.abs_degree());
  m.export_matrix.assign(rows, std::vector<uint64_t>(static_cast<size_t>(d * mq), 0));
  ExtElement hp = L.one();
  for (int i = 0; i < d; ++i) {
    Fq zj = KQ->one();
    for (int j = 0; j < mq; ++j) {
      auto col = L.to_fp(L.mul(hp, L.lift(zj)));
      for (size_t r = 0; r < rows; ++r) m.export_matrix[r][i * mq + j] = col[r];
      zj = KQ->mul(zj, m.z_image);
    }
    hp = L.mul(hp, m.h);
  }
  return m;
}

FqVec xi_import(const XiModel& m, const ExtElement& a) {
  const ExtField& L = *m.omega->L;
  ExtElement r = L.zero();
  for (size_t i = a.c.size(); i-- > 0;) r = L.add(L.mul(r, m.h), L.lift(embed_base(m, a.c[i])));
  return element_to_theta(*m.theta, r);
}

ExtElement xi_export(const XiModel& m, const FqVec& theta) {
  const ExtField& L = *m.omega->L;
  auto rhs = L.to_fp(theta_to_element(*m.theta, theta));
  auto sol = solve_mod_p_any(m.export_matrix, rhs, L.characteristic());
  if (!sol) raise(Errc::InvalidArgument, "element is not in F_{q^d}");
  const int mq = m.Kq->m();
  std::vector<Fq> c(m.d());
  for (int i = 0; i < m.d(); ++i)
    c[i] = m.Kq->from_digits(std::vector<uint64_t>(sol->begin() + i * mq, sol->begin() + (i + 1) * mq));
  return m.Lq->from_coords(c);
}

FqVec xi_multiply(const XiModel& m, const FqVec& a, const FqVec& b) { return theta_multiply(*m.theta, a, b); }

FqVec xi_frobenius_q(const XiModel& m, const FqVec& a, int64_t power) {
  return theta_frobenius(*m.theta, a, power * m.plan.F);
}

}  // namespace ellbasis
