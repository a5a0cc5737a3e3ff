#include "ellbasis/omega_basis.hpp"

#include <algorithm>
#include <numeric>

#include "ellbasis/ell_functions.hpp"

namespace ellbasis {

OpCounts& OpCounts::operator+=(const OpCounts& o) {
  adds += o.adds;
  mults += o.mults;
  invs += o.invs;
  a1_adds += o.a1_adds;
  a1_mults += o.a1_mults;
  a3_adds += o.a3_adds;
  return *this;
}

namespace {

int mod(int a, int d) { return ((a % d) + d) % d; }

uint64_t walk_order(const FqCurve& E, const FqPoint& t) {
  FqPoint cur = t;
  for (uint64_t n = 1; n <= 100000; ++n) {
    if (cur.inf) return n;
    cur = E.add(cur, t);
  }
  raise(Errc::BoundExceeded, "order of t too large");
}

Fq gamma_formula(const OmegaContext& ctx, int k, int l) {
  const BaseField& K = *ctx.K;
  Fq num = K.add(K.add(K.add(ctx.rho[l], ctx.rho[k]), K.mul(ctx.E.a1(), ctx.nu[k])), ctx.E.a3());
  return K.div(num, K.sub(ctx.nu[l], ctx.nu[k]));
}

// Gamma_{k,l} with k, l nonzero distinct and l != -k, tallied.
Fq gamma_tallied(const OmegaContext& ctx, Tally& T, int k, int l) {
  if (ctx.cache_gamma) return ctx.gamma_cache[k][l];
  const FqCurve& E = ctx.E;
  Fq num = T.add(ctx.rho[l], ctx.rho[k]);
  if (!ctx.K->is_zero(E.a1())) num = T.add(num, T.mul(E.a1(), ctx.nu[k], Cause::A1), Cause::A1);
  if (!ctx.K->is_zero(E.a3())) num = T.add(num, E.a3(), Cause::A3);
  Fq den = T.sub(ctx.nu[l], ctx.nu[k]);
  return T.mul(num, T.inv(den));
}

void fill_tables(OmegaContext& c) {
  const BaseField& K = *c.K;
  const int d = c.d;
  const ExtField& L = *c.L;
  const FqCurve& E = c.E;
  c.nu.assign(d, K.zero());
  c.rho.assign(d, K.zero());
  std::vector<FqPoint> mult(d);
  mult[0] = FqPoint::infinity();
  for (int k = 1; k < d; ++k) {
    mult[k] = E.add(mult[k - 1], c.t);
    if (mult[k].inf) raise(Errc::InvalidArgument, "t does not have exact order d");
    c.nu[k] = mult[k].x;
    c.rho[k] = mult[k].y;
  }
  if (!E.add(mult[d - 1], c.t).inf) raise(Errc::InvalidArgument, "t does not have exact order d");

  // omega_k = (y(b) + y(kt) + a1 x(kt) + a3) / (x(b) - x(kt))
  c.omega.assign(d, L.one());
  ExtElement xb = L.gen();
  for (int k = 1; k < d; ++k) {
    Fq s = K.add(K.add(c.rho[k], K.mul(E.a1(), c.nu[k])), E.a3());
    c.omega[k] = L.div(L.add(c.y_b, L.lift(s)), L.sub(xb, L.lift(c.nu[k])));
  }
  c.psi_of_omega.assign(d, FqVec(d, K.zero()));
  for (int k = 0; k < d; ++k)
    for (int i = 0; i < d; ++i) c.psi_of_omega[i][k] = c.omega[k].c[i];
  c.omega_of_psi = mat_inverse(K, c.psi_of_omega);

  c.kappa = element_to_omega(c, xb);
  c.kappa_sum = K.zero();
  for (int l = 1; l < d; ++l) c.kappa_sum = K.add(c.kappa_sum, c.kappa[l]);

  auto G = [&](int k, int l) {
    auto g = gamma(E, FqPoint::infinity(), mult[mod(k, d)], mult[mod(l, d)]);
    if (!g) raise(Errc::InvalidArgument, "Gamma index collision");
    return *g;
  };
  c.gamma_last_row.assign(d, K.zero());
  c.gamma_last_col.assign(d, K.zero());
  for (int j = 1; j <= d - 2; ++j) {
    c.gamma_last_row[j] = G(d - 1, j);
    c.gamma_last_col[j] = G(j, d - 1);
  }
  c.gamma_exc.reset();
  if (d % 3 == 0) c.gamma_exc = G(2 * d / 3, d / 3);
  if (c.cache_gamma) {
    c.gamma_cache.assign(d, FqVec(d, K.zero()));
    for (int k = 1; k < d; ++k)
      for (int l = 1; l < d; ++l)
        if (k != l) c.gamma_cache[k][l] = G(k, l);
  }

  // (Phi^{-k}(xi_0))_0
  c.phi_xi0_first.assign(d, K.zero());
  FqVec xi = c.kappa;
  for (int k = 0; k < d; ++k) {
    c.phi_xi0_first[k] = xi[0];
    xi = omega_frobenius_inverse(c, xi);
  }
}

OmegaContext assemble(const FqCurve& E, const FqPoint& t, int d, const Isogeny& iso, const FqPoint& a,
                      const FqPoly& Pi, bool cache_gamma) {
  OmegaContext c{E.field_ptr(), E, t, d, iso.codomain, iso, a, Pi, nullptr, {}, {}, {}, {}, {}, {}, {}, {},
                 {}, cache_gamma, {}, {}, {}, {}};
  c.L = std::make_shared<const ExtField>(c.K, Pi);
  return c;
}

}  // namespace

Fq gamma_kl(const OmegaContext& ctx, int k, int l) {
  const int d = ctx.d;
  k = mod(k, d);
  l = mod(l, d);
  if (k == 0 || l == 0 || k == l) raise(Errc::InvalidArgument, "Gamma_{k,l} needs distinct nonzero indices");
  if (mod(k + l, d) != 0) return gamma_formula(ctx, k, l);
  auto g = gamma(ctx.E, FqPoint::infinity(), ctx.E.mul(ctx.t, k), ctx.E.mul(ctx.t, l));
  return *g;
}

OmegaContext rebuild_omega_context(const FqCurve& E, const FqPoint& t, const FqPoint& a, const FqPoly& Pi,
                                    const ExtElement& y_b, bool cache_gamma) {
  E.check(t);
  uint64_t d = walk_order(E, t);
  Isogeny iso = velu_isogeny(E, t);
  iso.codomain.check(a);
  OmegaContext c = assemble(E, t, static_cast<int>(d), iso, a, Pi, cache_gamma);
  c.y_b = y_b;
  fill_tables(c);
  return c;
}

OmegaContext build_omega_context(const FqCurve& E, const FqPoint& t, const OmegaOptions& opt) {
  const BaseFieldPtr& Kp = E.field_ptr();
  const BaseField& K = *Kp;
  E.check(t);
  uint64_t dd = walk_order(E, t);
  if (dd < 2) raise(Errc::InvalidArgument, "t must have order at least 2");
  const int d = static_cast<int>(dd);
  Isogeny iso = velu_isogeny(E, t);
  const FqCurve& Ep = iso.codomain;
  Rng rng(opt.seed);

  std::vector<FqPoint> candidates;
  if (opt.a) {
    Ep.check(*opt.a);
    candidates.push_back(*opt.a);
  } else if (K.q() <= 4096) {
    candidates = enumerate_points(Ep);
    std::shuffle(candidates.begin(), candidates.end(), rng);
  } else {
    for (int i = 0; i < opt.max_candidates; ++i) candidates.push_back(Ep.random_point(rng));
  }

  auto pi_of = [&](const FqPoint& a) {
    return poly::monic(K, poly::sub(K, iso.x_num, poly::scale(K, iso.x_den, a.x)));
  };
  // lifts x(b) and fixes y(b) with phi(b) = b + k0 t; returns 0 when d b = O, 1 when 2d b = O, else 2
  auto try_candidate = [&](OmegaContext& c) -> int {
    const ExtField& L = *c.L;
    auto EL = base_change(E, c.L);
    LPoint tl = lift_point(L, t);
    ExtElement xb = L.gen();
    auto ys = quadratic_roots(L, L.one(), EL.h(xb), L.neg(EL.rhs(xb)), rng);
    if (ys.empty()) raise(Errc::FrobeniusMismatch, "x(b) does not lift to the curve over L");
    int best_k0 = 0;
    ExtElement best_y;
    for (const auto& y : ys) {
      LPoint b = LPoint::affine(xb, y);
      LPoint fb = LPoint::affine(L.frobenius(xb), L.frobenius(y));
      LPoint cur = b;
      for (int k = 1; k < d; ++k) {
        cur = EL.add(cur, tl);
        if (cur == fb) {
          if (std::gcd(k, d) == 1 && (best_k0 == 0 || (k == 1 && best_k0 != 1))) {
            best_k0 = k;
            best_y = y;
          }
          break;
        }
      }
    }
    if (best_k0 == 0) raise(Errc::FrobeniusMismatch, "neither lift of x(b) satisfies phi(b) = b + k t");
    c.y_b = best_y;
    if (best_k0 != 1) c.t = E.mul(t, best_k0);
    LPoint db = EL.mul(LPoint::affine(xb, best_y), d);
    if (db.inf) return 0;
    return EL.dbl(db).inf ? 1 : 2;
  };

  std::optional<OmegaContext> chosen, fallback;
  bool any_irreducible = false;
  for (const auto& a : candidates) {
    if (a.inf) continue;
    FqPoly Pi = pi_of(a);
    if (!is_irreducible(K, Pi)) continue;
    any_irreducible = true;
    OmegaContext c = assemble(E, t, d, iso, a, Pi, opt.cache_gamma);
    int grade = try_candidate(c);
    if (grade == 2) {
      chosen = std::move(c);
      break;
    }
    if (grade == 1 && !fallback) fallback = std::move(c);
  }
  if (!chosen) chosen = std::move(fallback);
  if (!any_irreducible) raise(Errc::NotIrreducible, "no candidate a gives an irreducible Pi");
  if (!chosen) raise(Errc::NoSuitableA, "every candidate b has d b = O");
  OmegaContext c = std::move(*chosen);
  fill_tables(c);
  return c;
}

ExtElement omega_to_element(const OmegaContext& ctx, const FqVec& alpha) {
  if (static_cast<int>(alpha.size()) != ctx.d) raise(Errc::LengthMismatch, "coordinate vector length");
  return ctx.L->from_coords(mat_vec(*ctx.K, ctx.psi_of_omega, alpha));
}

FqVec element_to_omega(const OmegaContext& ctx, const ExtElement& w) {
  return mat_vec(*ctx.K, ctx.omega_of_psi, w.c);
}

FqVec omega_frobenius(const OmegaContext& ctx, const FqVec& alpha, OpCounts* counts) {
  const int d = ctx.d;
  if (static_cast<int>(alpha.size()) != d) raise(Errc::LengthMismatch, "coordinate vector length");
  Tally T(*ctx.K, counts);
  const Fq a1 = ctx.E.a1();
  FqVec g(d);
  Fq g0 = alpha[0];
  if (!ctx.K->is_zero(a1)) g0 = T.sub(g0, T.mul(a1, alpha[1], Cause::A1), Cause::A1);
  for (int j = 2; j < d; ++j) g0 = T.add(g0, T.mul(alpha[j], ctx.gamma_last_row[j - 1]));
  g[0] = g0;
  for (int i = 1; i + 1 < d; ++i) g[i] = alpha[i + 1];
  Fq s = alpha[1];
  for (int j = 2; j < d; ++j) s = T.add(s, alpha[j]);
  g[d - 1] = T.neg(s);
  return g;
}

FqVec omega_frobenius_inverse(const OmegaContext& ctx, const FqVec& alpha, OpCounts* counts) {
  const int d = ctx.d;
  if (static_cast<int>(alpha.size()) != d) raise(Errc::LengthMismatch, "coordinate vector length");
  Tally T(*ctx.K, counts);
  const Fq a1 = ctx.E.a1();
  FqVec g(d);
  Fq g0 = alpha[0];
  for (int j = 1; j <= d - 2; ++j) g0 = T.add(g0, T.mul(alpha[j], ctx.gamma_last_col[j]));
  if (!ctx.K->is_zero(a1)) g0 = T.sub(g0, T.mul(a1, alpha[d - 1], Cause::A1), Cause::A1);
  g[0] = g0;
  Fq s = alpha[1];
  for (int j = 2; j < d; ++j) s = T.add(s, alpha[j]);
  g[1] = T.neg(s);
  for (int i = 2; i < d; ++i) g[i] = alpha[i - 1];
  return g;
}

FqVec omega_multiply(const OmegaContext& ctx, const FqVec& A, const FqVec& B, OpCounts* counts) {
  const int d = ctx.d;
  if (static_cast<int>(A.size()) != d || static_cast<int>(B.size()) != d)
    raise(Errc::LengthMismatch, "coordinate vector length");
  const BaseField& K = *ctx.K;
  Tally T(K, counts);
  const Fq a1 = ctx.E.a1(), a2 = ctx.E.a2();
  const bool has_a1 = !K.is_zero(a1);
  FqVec g(d, K.zero());

  // steps 1-2: a1 accumulation
  Fq sa = K.zero(), sb = B[1];
  if (has_a1) g[1] = T.neg(T.mul(a1, T.mul(sb, A[1], Cause::A1), Cause::A1));
  for (int k = 2; k < d; ++k) {
    sa = (k == 2) ? A[1] : T.add(sa, A[k - 1]);
    sb = T.add(sb, B[k]);
    if (has_a1) {
      Fq s = T.add(T.mul(sb, A[k], Cause::A1), T.mul(sa, B[k], Cause::A1), Cause::A1);
      g[k] = T.neg(T.mul(a1, s, Cause::A1));
    }
  }
  // step 3
  sa = (d == 2) ? A[1] : T.add(sa, A[d - 1]);
  Fq sab = T.mul(sa, sb);
  g[0] = T.add(g[0], T.mul(sab, K.add(ctx.kappa[0], a2)));
  for (int i = 1; i < d; ++i) g[i] = T.add(g[i], T.mul(sab, ctx.kappa[i]));
  // step 4
  Fq san = T.mul(A[1], ctx.nu[1]), sbn = T.mul(B[1], ctx.nu[1]);
  for (int i = 2; i < d; ++i) {
    san = T.add(san, T.mul(A[i], ctx.nu[i]));
    sbn = T.add(sbn, T.mul(B[i], ctx.nu[i]));
  }
  g[0] = T.add(g[0], T.add(T.mul(sa, sbn), T.mul(san, sb)));
  // steps 5-8: diagonal terms Phi^{-k}(xi_0)
  for (int k = 1; k < d; ++k) {
    Fq delta = T.mul(A[k], B[k]);
    g[0] = T.add(g[0], T.mul(delta, K.sub(ctx.phi_xi0_first[k], ctx.nu[k])));
    g[k] = T.sub(g[k], T.mul(delta, ctx.kappa_sum));
    for (int l = 1; l < d; ++l) {
      if (l == k) continue;
      g[l] = T.add(g[l], T.mul(delta, ctx.kappa[mod(l - k, d)]));
    }
  }
  // step 9
  g[0] = T.add(g[0], T.mul(A[0], B[0]));
  for (int i = 1; i < d; ++i) g[i] = T.add(g[i], T.add(T.mul(A[i], B[0]), T.mul(A[0], B[i])));

  auto cross = [&](Fq gg, int i, int j) { return T.mul(gg, T.add(T.mul(A[i], B[j]), T.mul(A[j], B[i]))); };
  // steps 10-12: exceptional orbit
  if (d % 3 == 0) {
    const int i = 2 * d / 3, j = d / 3;
    Fq delta = cross(*ctx.gamma_exc, i, j);
    g[i] = T.sub(g[i], delta);
    g[j] = T.add(g[j], delta);
  }
  const int kmax = (2 * d - 1) / 3;
  // steps 13-17: k = 2l
  for (int k = 2; k <= kmax; k += 2) {
    const int l = k / 2;
    Fq gg = gamma_tallied(ctx, T, k, l);
    const int i1 = 2 * l, i2 = d - l, j1 = d - 2 * l, j2 = l;
    Fq d12 = cross(gg, i1, j2), d21 = cross(gg, i2, j1), d22 = cross(gg, i2, j2);
    g[i1] = T.sub(g[i1], d12);
    g[i2] = T.sub(g[i2], T.add(d21, d22));
    g[j1] = T.add(g[j1], d21);
    g[j2] = T.add(g[j2], T.add(d12, d22));
  }
  // steps 18-22: l = 2k
  for (int k = 1 + d / 2; k <= kmax; ++k) {
    const int l = mod(2 * k, d);
    Fq gg = gamma_tallied(ctx, T, k, l);
    const int i1 = k, i2 = mod(2 * d - 2 * k, d), j1 = mod(2 * k, d), j2 = d - k;
    Fq d11 = cross(gg, i1, j1), d22 = cross(gg, i2, j2), d12 = cross(gg, i1, j2);
    g[i1] = T.sub(g[i1], T.add(d11, d12));
    g[i2] = T.sub(g[i2], d22);
    g[j1] = T.add(g[j1], d11);
    g[j2] = T.add(g[j2], T.add(d22, d12));
  }
  // steps 23-30: 12-point orbits
  for (int k = 3; k <= kmax; ++k) {
    for (int l = std::max(1, 2 * k - d + 1); l <= (k - 1) / 2; ++l) {
      Fq gg = gamma_tallied(ctx, T, k, l);
      const int i1 = k, i2 = d - l, i3 = d - k + l, j1 = d - k, j2 = l, j3 = k - l;
      Fq d12 = cross(gg, i1, j2), d13 = cross(gg, i1, j3), d21 = cross(gg, i2, j1);
      Fq d23 = cross(gg, i2, j3), d31 = cross(gg, i3, j1), d32 = cross(gg, i3, j2);
      g[i1] = T.sub(g[i1], T.add(d12, d13));
      g[i2] = T.sub(g[i2], T.add(d21, d23));
      g[i3] = T.sub(g[i3], T.add(d31, d32));
      g[j1] = T.add(g[j1], T.add(d21, d31));
      g[j2] = T.add(g[j2], T.add(d12, d32));
      g[j3] = T.add(g[j3], T.add(d13, d23));
    }
  }
  return g;
}

OrbitCounts orbit_counts(int d) {
  OrbitCounts o;
  const int kmax = (2 * d - 1) / 3;
  o.exceptional = d % 3 == 0 ? 1 : 0;
  for (int k = 2; k <= kmax; k += 2) ++o.circle_half;
  for (int k = 1 + d / 2; k <= kmax; ++k) ++o.circle_double;
  for (int k = 3; k <= kmax; ++k)
    for (int l = std::max(1, 2 * k - d + 1); l <= (k - 1) / 2; ++l) ++o.fundamental;
  return o;
}

int epsilon(int d) {
  static const int eps[6] = {12, 1, 4, 9, 4, 1};
  return eps[d % 6];
}

const char* model_name(CurveModel m) {
  switch (m) {
    case CurveModel::General: return "general";
    case CurveModel::Short: return "short";
    case CurveModel::Char3Ordinary: return "char3-ordinary";
    case CurveModel::Char2Ordinary: return "char2-ordinary";
    case CurveModel::Char2Supersingular: return "char2-supersingular";
  }
  return "?";
}

OpCounts closed_form_counts(CurveModel m, int d) {
  const int64_t e = epsilon(d), D = d;
  OpCounts g;
  g.adds = (37 * D * D + 30 * D - 7 * e - 60) / 12;
  g.mults = (32 * D * D + 42 * D - 2 * e - 48) / 12;
  g.invs = (D * D - e) / 12;
  g.a1_adds = (D * D + 12 * D - e - 24) / 12;
  g.a1_mults = (D * D + 36 * D - e - 48) / 12;
  g.a3_adds = (D * D - e) / 12;
  OpCounts r = g;
  switch (m) {
    case CurveModel::General: break;
    case CurveModel::Short:
    case CurveModel::Char3Ordinary:
      r.adds = (35 * D * D + 18 * D - 5 * e - 36) / 12;
      r.mults = (31 * D * D + 6 * D - e) / 12;
      r.a1_adds = r.a1_mults = r.a3_adds = 0;
      break;
    case CurveModel::Char2Ordinary:
      r.adds = (6 * D * D + 5 * D - e - 10) / 2;
      r.mults = (31 * D * D + 6 * D - e) / 12;
      r.a1_mults = 0;
      r.a3_adds = 0;
      break;
    case CurveModel::Char2Supersingular:
      r.adds = (6 * D * D + 3 * D - e - 6) / 2;
      r.mults = (31 * D * D + 6 * D - e) / 12;
      r.a1_adds = r.a1_mults = 0;
      break;
  }
  return r;
}

OpCounts frobenius_closed_form(int d, bool a1_nonzero) {
  OpCounts r;
  r.mults = d - 1;
  r.adds = 2 * d - 3;
  if (a1_nonzero) {
    r.a1_mults = r.a1_adds = 1;
  } else {
    --r.mults;
    --r.adds;
  }
  return r;
}

OpCounts multiply_step_counts(int d, bool a1_nonzero, bool a3_nonzero) {
  const OrbitCounts o = orbit_counts(d);
  const uint64_t D = d, S = o.circle_half + o.circle_double, F = o.fundamental, X = o.exceptional;
  OpCounts r;
  // steps 1-2, 3, 4, 5-8, 9
  r.mults = (3 * D - 4) + (D + 1) + 2 * D + (D - 1) * (D + 1) + (2 * D - 1);
  r.adds = (3 * D - 7) + (D + 1) + (2 * D - 2) + D * (D - 1) + (2 * D - 1);
  r.mults += 3 * X + 11 * S + 20 * F;
  r.adds += 3 * X + 13 * S + 22 * F;
  r.invs = S + F;
  r.a1_adds = (D - 2) + S + F;
  r.a1_mults = (3 * D - 4) + S + F;
  r.a3_adds = S + F;
  if (!a1_nonzero) {
    r.adds -= r.a1_adds;
    r.mults -= r.a1_mults;
    r.a1_adds = r.a1_mults = 0;
  }
  if (!a3_nonzero) {
    r.adds -= r.a3_adds;
    r.a3_adds = 0;
  }
  return r;
}

std::vector<CurveModel> applicable_models(const FqCurve& E) {
  const BaseField& K = E.field();
  const bool z1 = K.is_zero(E.a1()), z2 = K.is_zero(E.a2()), z3 = K.is_zero(E.a3()), z4 = K.is_zero(E.a4());
  std::vector<CurveModel> r;
  if (!z1 && !z3) r.push_back(CurveModel::General);
  if (K.p() != 2 && z1 && z2 && z3) r.push_back(CurveModel::Short);
  if (K.p() == 3 && z1 && z3 && z4) r.push_back(CurveModel::Char3Ordinary);
  if (K.p() == 2 && K.is_one(E.a1()) && z3 && z4) r.push_back(CurveModel::Char2Ordinary);
  if (K.p() == 2 && z1 && z2 && !z3) r.push_back(CurveModel::Char2Supersingular);
  return r;
}

}  // namespace ellbasis
