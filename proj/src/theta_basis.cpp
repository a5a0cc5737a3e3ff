#include "ellbasis/theta_basis.hpp"

#include "ellbasis/ell_functions.hpp"

namespace ellbasis {

namespace {

FqVec scaled(const BaseField& K, const FqVec& v, Fq s) {
  FqVec r(v.size());
  for (size_t i = 0; i < v.size(); ++i) r[i] = K.mul(s, v[i]);
  return r;
}

FqVec sub_vec(const BaseField& K, const FqVec& a, const FqVec& b) {
  FqVec r(a.size());
  for (size_t i = 0; i < a.size(); ++i) r[i] = K.sub(a[i], b[i]);
  return r;
}

FqVec add_vec(const BaseField& K, const FqVec& a, const FqVec& b) {
  FqVec r(a.size());
  for (size_t i = 0; i < a.size(); ++i) r[i] = K.add(a[i], b[i]);
  return r;
}

void check_len(const ThetaContext& tc, const FqVec& v) {
  if (static_cast<int>(v.size()) != tc.d()) raise(Errc::LengthMismatch, "coordinate vector length");
}

bool in_subgroup(const OmegaContext& ctx, const FqPoint& P) {
  FqPoint cur = FqPoint::infinity();
  for (int k = 0; k < ctx.d; ++k) {
    if (cur == P) return true;
    cur = ctx.E.add(cur, ctx.t);
  }
  return false;
}

std::vector<EllFunction> successive_u(const OmegaContext& ctx) {
  std::vector<EllFunction> us;
  FqPoint cur = FqPoint::infinity();
  for (int k = 0; k < ctx.d; ++k) {
    FqPoint next = ctx.E.add(cur, ctx.t);
    us.push_back(u_func(ctx.E, cur, next));
    cur = next;
  }
  return us;
}

}  // namespace

std::pair<Fq, Fq> select_ab(const BaseField& K, Fq frak_c, int d) {
  if (!K.is_zero(frak_c)) return {K.inv(frak_c), K.zero()};
  Fq dd = K.from_int(d);
  if (K.is_zero(dd)) raise(Errc::InvariantViolation, "frak_c vanishes while p divides d");
  return {K.one(), K.div(K.sub(K.one(), frak_c), dd)};
}

Fq theta_constant_at(const OmegaContext& ctx, const FqPoint& P) {
  const BaseField& K = *ctx.K;
  Fq s = K.zero();
  for (const auto& u : successive_u(ctx)) s = K.add(s, eval_function(ctx.E, u, P));
  return s;
}

ExtElement theta_constant_at(const OmegaContext& ctx, const LCurve& EL, const LPoint& P) {
  const ExtField& L = EL.field();
  ExtElement s = L.zero();
  for (const auto& u : successive_u(ctx)) s = L.add(s, eval_function(EL, u, P));
  return s;
}

ThetaContext build_theta_context(std::shared_ptr<const OmegaContext> omega, const ThetaOptions& opt) {
  const OmegaContext& c = *omega;
  const BaseField& K = *c.K;
  const int d = c.d;
  ThetaContext tc;
  tc.parent = omega;
  tc.conv = make_convolution(opt.convolution);
  Rng rng(opt.seed);

  tc.gamma_succ.assign(d, K.zero());
  tc.lambda.assign(d, K.zero());
  for (int k = 1; k <= d - 2; ++k) {
    tc.gamma_succ[k] = gamma_kl(c, k, k + 1);
    tc.lambda[k] = K.add(tc.lambda[k - 1], tc.gamma_succ[k]);
  }
  tc.frak_c = K.sub(tc.lambda[d - 2 >= 0 ? d - 2 : 0], c.E.a1());

  // the sum of the u_{kt,(k+1)t} is constant
  int checked = 0;
  for (int i = 0; i < 64 && checked < 2; ++i) {
    FqPoint P = c.E.random_point(rng);
    if (in_subgroup(c, P)) continue;
    if (theta_constant_at(c, P) != tc.frak_c) raise(Errc::InvariantViolation, "sum of u_{kt,(k+1)t} is not constant");
    ++checked;
  }
  if (checked < 2) {
    auto EL = base_change(c.E, c.L);
    const ExtField& L = *c.L;
    while (checked < 2) {
      LPoint P = EL.random_point(rng);
      if (L.to_poly(P.x).degree() < 1) continue;
      if (theta_constant_at(c, EL, P) != L.lift(tc.frak_c))
        raise(Errc::InvariantViolation, "sum of u_{kt,(k+1)t} is not constant");
      ++checked;
    }
  }
  auto [fa, fb] = select_ab(K, tc.frak_c, d);
  tc.frak_a = fa;
  tc.frak_b = fb;

  EllFunction u0 = u_func(c.E, FqPoint::infinity(), c.t);
  auto fill_R = [&](const FqPoint& R) {
    tc.R = R;
    tc.uR.assign(d, K.zero());
    tc.xR.assign(d, K.zero());
    FqPoint cur = R;
    for (int k = 0; k < d; ++k) {
      tc.uR[k] = K.add(K.mul(tc.frak_a, eval_function(c.E, u0, cur)), tc.frak_b);
      tc.xR[k] = cur.x;
      cur = c.E.add(cur, c.t);
    }
    tc.uR_inv = convolution_inverse(K, tc.uR);
  };
  if (opt.R) {
    c.E.check(*opt.R);
    if (c.E.mul(*opt.R, d).inf) raise(Errc::BadR, "d R = O");
    fill_R(*opt.R);
  } else {
    std::vector<FqPoint> cands;
    if (K.q() <= 4096) {
      cands = enumerate_points(c.E);
      std::shuffle(cands.begin(), cands.end(), rng);
    } else {
      for (int i = 0; i < 128; ++i) cands.push_back(c.E.random_point(rng));
    }
    bool found = false;
    for (const auto& R : cands) {
      if (c.E.mul(R, d).inf) continue;
      try {
        fill_R(R);
        found = true;
        break;
      } catch (const Error& e) {
        if (e.code() != Errc::NotInvertible) throw;
      }
    }
    if (!found) raise(Errc::BadR, "no rational R with d R != O and invertible u_R");
  }
  tc.iota = omega_to_theta(tc, c.kappa);
  return tc;
}

FqVec omega_to_theta(const ThetaContext& tc, const FqVec& alpha, OpCounts* counts) {
  check_len(tc, alpha);
  const int d = tc.d();
  Tally T(tc.field(), counts);
  const BaseField& K = tc.field();
  const Fq ainv = K.inv(tc.frak_a);
  const Fq ba = K.mul(tc.frak_b, ainv);
  // S = alpha_0 - sum_k alpha_k (k frak_b / frak_a + lambda_{k-1})
  Fq S = alpha[0];
  const bool has_b = !K.is_zero(tc.frak_b);
  for (int k = 1; k < d; ++k) {
    Fq w = tc.lambda[k - 1];
    if (has_b) w = T.add(w, T.mul(K.from_int(k), ba));
    S = T.sub(S, T.mul(alpha[k], w));
  }
  FqVec beta(d);
  Fq tail = K.zero();
  beta[d - 1] = S;
  for (int j = d - 2; j >= 0; --j) {
    tail = (j == d - 2) ? alpha[d - 1] : T.add(tail, alpha[j + 1]);
    beta[j] = T.add(S, T.mul(ainv, tail));
  }
  return beta;
}

FqVec theta_to_omega(const ThetaContext& tc, const FqVec& beta, OpCounts* counts) {
  check_len(tc, beta);
  const int d = tc.d();
  Tally T(tc.field(), counts);
  const BaseField& K = tc.field();
  FqVec alpha(d);
  Fq sum = beta[0];
  for (int j = 1; j < d; ++j) sum = T.add(sum, beta[j]);
  Fq g = K.zero();
  for (int j = 1; j <= d - 2; ++j) g = T.add(g, T.mul(beta[j], tc.gamma_succ[j]));
  Fq a0 = T.mul(tc.frak_a, g);
  if (!K.is_zero(tc.frak_b)) a0 = T.add(a0, T.mul(tc.frak_b, sum));
  if (!K.is_zero(tc.parent->E.a1()))
    a0 = T.sub(a0, T.mul(T.mul(tc.parent->E.a1(), tc.frak_a, Cause::A1), beta[d - 1], Cause::A1), Cause::A1);
  alpha[0] = a0;
  for (int j = 1; j < d; ++j) alpha[j] = T.mul(tc.frak_a, T.sub(beta[j - 1], beta[j]));
  return alpha;
}

FqVec theta_frobenius(const ThetaContext& tc, const FqVec& alpha, int64_t power) {
  check_len(tc, alpha);
  const int64_t d = tc.d();
  const int64_t s = ((power % d) + d) % d;
  FqVec g(d);
  for (int64_t k = 0; k < d; ++k) g[k] = alpha[(k + s) % d];
  return g;
}

FqVec theta_multiply(const ThetaContext& tc, const FqVec& alpha, const FqVec& beta, ThetaTrace* trace) {
  check_len(tc, alpha);
  check_len(tc, beta);
  const BaseField& K = tc.field();
  const ConvolutionStrategy& cs = *tc.conv;
  int convs = 0, hads = 0;
  auto conv = [&](const FqVec& a, const FqVec& b) {
    ++convs;
    return cyclic_convolution(K, a, b, cs);
  };
  auto had = [&](const FqVec& a, const FqVec& b) {
    ++hads;
    return hadamard(K, a, b);
  };
  const Fq a2 = K.mul(tc.frak_a, tc.frak_a);
  FqVec da = sub_vec(K, alpha, cyclic_shift(alpha));
  FqVec db = sub_vec(K, beta, cyclic_shift(beta));
  FqVec dp = had(da, db);
  FqVec iota_term = conv(scaled(K, tc.iota, a2), dp);
  FqVec eval_prod = had(conv(tc.uR, alpha), conv(tc.uR, beta));
  FqVec x_term = conv(scaled(K, tc.xR, a2), dp);
  FqVec interp = conv(tc.uR_inv, sub_vec(K, eval_prod, x_term));
  FqVec r = add_vec(K, iota_term, interp);
  if (trace) *trace = {da, db, dp, iota_term, eval_prod, x_term, interp, convs, hads};
  return r;
}

FqVec reduce_xi_combination(const ThetaContext& tc, const FqVec& alpha) {
  check_len(tc, alpha);
  return cyclic_convolution(tc.field(), tc.iota, alpha, *tc.conv);
}

FqVec evaluate_at_orbit(const ThetaContext& tc, const FqVec& alpha, OrbitKind kind) {
  check_len(tc, alpha);
  return cyclic_convolution(tc.field(), kind == OrbitKind::U ? tc.uR : tc.xR, alpha, *tc.conv);
}

FqVec interpolate_from_orbit(const ThetaContext& tc, const FqVec& values) {
  check_len(tc, values);
  return cyclic_convolution(tc.field(), tc.uR_inv, values, *tc.conv);
}

ExtElement theta_to_element(const ThetaContext& tc, const FqVec& beta) {
  return omega_to_element(*tc.parent, theta_to_omega(tc, beta));
}

FqVec element_to_theta(const ThetaContext& tc, const ExtElement& w) {
  return omega_to_theta(tc, element_to_omega(*tc.parent, w));
}

}  // namespace ellbasis
