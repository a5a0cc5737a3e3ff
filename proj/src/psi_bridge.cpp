#include "ellbasis/psi_bridge.hpp"

#include <bit>

namespace ellbasis {

namespace {

using namespace poly;

void check_len(int d, const FqVec& v) {
  if (static_cast<int>(v.size()) != d) raise(Errc::LengthMismatch, "coordinate vector length");
}

bool all_zero(const BaseField& K, const FqVec& v) {
  for (auto x : v)
    if (!K.is_zero(x)) return false;
  return true;
}

FqVec padded(const BaseField& K, const FqPoly& f, int d) {
  FqVec r(d, K.zero());
  for (int i = 0; i < d && i <= f.degree(); ++i) r[i] = f.c[i];
  return r;
}

void solve_y(PsiContext& pc) {
  const OmegaContext& c = *pc.parent;
  const BaseField& K = *c.K;
  const ExtField& L = *c.L;
  const int d = c.d, h = pc.half();
  // sum_{i<=h} y1_i tau^i - sum_{i<h} y0_i y_b tau^i = -tau^{h+1}
  Matrix<Fq> A(d, FqVec(d, K.zero()));
  ExtElement tau = L.gen(), p = L.one();
  for (int i = 0; i <= h; ++i) {
    for (int r = 0; r < d; ++r) A[r][i] = p.c[r];
    if (i < h) {
      ExtElement yp = L.mul(c.y_b, p);
      for (int r = 0; r < d; ++r) A[r][h + 1 + i] = K.neg(yp.c[r]);
    }
    p = L.mul(p, tau);
  }
  FqVec rhs(d);
  for (int r = 0; r < d; ++r) rhs[r] = K.neg(p.c[r]);
  FqVec sol = mat_solve(K, A, rhs);
  FqVec y1(sol.begin(), sol.begin() + h + 1);
  y1.push_back(K.one());
  pc.Y1 = make(K, y1);
  pc.Y0 = make(K, FqVec(sol.begin() + h + 1, sol.end()));
}

void fill_derived(PsiContext& pc) {
  const OmegaContext& c = *pc.parent;
  const BaseField& K = *c.K;
  const ExtField& L = *c.L;
  const int d = c.d, h = pc.half();
  if (pc.Y0.is_zero() || gcd(K, pc.Y1, pc.Y0).degree() != 0)
    raise(Errc::SingularSystem, "Y1 and Y0 share a root");
  pc.Y0_inv = invmod(K, pc.Y0, pc.Y1);
  pc.M = mulmod(K, pc.Y1, invmod(K, pc.Y0, L.modulus()), L.modulus());
  if (L.from_poly(pc.M) != c.y_b) raise(Errc::InvariantViolation, "Y1/Y0 differs from y(b)");
  pc.s.assign(d, K.zero());
  for (int k = 1; k < d; ++k) pc.s[k] = K.add(K.add(c.rho[k], K.mul(c.E.a1(), c.nu[k])), c.E.a3());
  for (int k = 1; k <= h; ++k)
    if (pc.s[k] == pc.s[d - k]) raise(Errc::TwoTorsionObstruction, "s_k = s_{-k}");
  FqVec nus(c.nu.begin() + 1, c.nu.begin() + 1 + h);
  pc.tree = std::make_shared<const SubproductTree>(K, nus);
  pc.D = pc.tree->root();
  pc.D_inv = invmod(K, pc.D, L.modulus());
  FqVec dv = pc.tree->evaluate(derivative(K, pc.D));
  pc.Dk_at_nuk.assign(h + 1, K.zero());
  for (int k = 1; k <= h; ++k) pc.Dk_at_nuk[k] = dv[k - 1];
}

}  // namespace

const char* basis_name(Basis b) {
  switch (b) {
    case Basis::Omega:
      return "omega";
    case Basis::Theta:
      return "theta";
    case Basis::Psi:
      return "psi";
  }
  return "?";
}

PsiContext build_psi_context(std::shared_ptr<const OmegaContext> omega) {
  const OmegaContext& c = *omega;
  if (c.d % 2 == 0) raise(Errc::EvenDegree, "fast Psi bridge needs odd d");
  if (c.d < 3) raise(Errc::InvalidArgument, "fast Psi bridge needs d >= 3");
  auto EL = base_change(c.E, c.L);
  LPoint b = LPoint::affine(c.L->gen(), c.y_b);
  if (EL.mul(b, 2 * c.d).inf) raise(Errc::TwoTorsionObstruction, "2 d b = O");
  PsiContext pc;
  pc.parent = std::move(omega);
  solve_y(pc);
  fill_derived(pc);
  return pc;
}

PsiContext rebuild_psi_context(std::shared_ptr<const OmegaContext> omega, const FqPoly& Y1, const FqPoly& Y0) {
  const OmegaContext& c = *omega;
  if (c.d % 2 == 0) raise(Errc::EvenDegree, "fast Psi bridge needs odd d");
  PsiContext pc;
  pc.parent = std::move(omega);
  const int h = pc.half();
  if (Y1.degree() != h + 1 || lead(*c.K, Y1) != c.K->one() || Y0.degree() > h - 1)
    raise(Errc::InvariantViolation, "Y1, Y0 degrees");
  const ExtField& L = *c.L;
  if (!L.is_zero(L.sub(L.from_poly(Y1), L.mul(c.y_b, L.from_poly(Y0)))))
    raise(Errc::InvariantViolation, "Y1 - y Y0 does not vanish at b");
  pc.Y1 = Y1;
  pc.Y0 = Y0;
  fill_derived(pc);
  return pc;
}

FqVec generic_convert(const OmegaContext& ctx, const FqVec& alpha, Basis from, Basis to) {
  check_len(ctx.d, alpha);
  if (from == Basis::Theta || to == Basis::Theta) raise(Errc::InvalidArgument, "generic_convert handles Omega and Psi");
  if (from == to) return alpha;
  return mat_vec(*ctx.K, from == Basis::Omega ? ctx.psi_of_omega : ctx.omega_of_psi, alpha);
}

FqVec omega_to_psi_fast(const PsiContext& pc, const FqVec& alpha) {
  const OmegaContext& c = *pc.parent;
  const BaseField& K = *c.K;
  const int d = c.d, h = pc.half();
  check_len(d, alpha);
  FqVec ak(h), ck(h);
  for (int k = 1; k <= h; ++k) {
    ak[k - 1] = K.add(K.mul(alpha[k], pc.s[k]), K.mul(alpha[d - k], pc.s[d - k]));
    ck[k - 1] = K.add(alpha[k], alpha[d - k]);
  }
  FqPoly U = add(K, scale(K, pc.D, alpha[0]), pc.tree->linear_combination(ak));
  FqPoly V = pc.tree->linear_combination(ck);
  const FqPoly& Pi = c.L->modulus();
  FqPoly W = mulmod(K, add(K, U, mulmod(K, pc.M, V, Pi)), pc.D_inv, Pi);
  return padded(K, W, d);
}

FqVec psi_to_omega_fast(const PsiContext& pc, const FqVec& w) {
  const OmegaContext& c = *pc.parent;
  const BaseField& K = *c.K;
  const int d = c.d, h = pc.half();
  check_len(d, w);
  const FqPoly& Pi = c.L->modulus();
  FqPoly N = mulmod(K, mulmod(K, make(K, w), pc.D, Pi), pc.Y0, Pi);
  FqPoly Nh = mulmod(K, N, pc.Y0_inv, pc.Y1);
  if (Nh.degree() > h) raise(Errc::InvariantViolation, "deg N^ exceeds (d-1)/2");
  Fq a0 = coeff(K, Nh, h);
  FqPoly A0 = sub(K, Nh, scale(K, pc.D, a0));
  if (A0.degree() > h - 1) raise(Errc::InvariantViolation, "alpha_0 extraction");
  FqPoly A1 = exact_quo(K, sub(K, N, mul(K, Nh, pc.Y0)), pc.Y1);
  FqVec v0 = pc.tree->evaluate(A0), v1 = pc.tree->evaluate(A1);
  FqVec alpha(d, K.zero());
  alpha[0] = a0;
  for (int k = 1; k <= h; ++k) {
    Fq inv_dk = K.inv(pc.Dk_at_nuk[k]);
    Fq ak = K.mul(v0[k - 1], inv_dk), ck = K.mul(v1[k - 1], inv_dk);
    // alpha_k s_k + alpha_{-k} s_{-k} = a_k, alpha_k + alpha_{-k} = c_k
    Fq x = K.div(K.sub(ak, K.mul(pc.s[d - k], ck)), K.sub(pc.s[k], pc.s[d - k]));
    alpha[k] = x;
    alpha[d - k] = K.sub(ck, x);
  }
  return alpha;
}

FqVec omega_to_psi(const OmegaContext& ctx, const PsiContext* pc, const FqVec& alpha) {
  return pc ? omega_to_psi_fast(*pc, alpha) : generic_convert(ctx, alpha, Basis::Omega, Basis::Psi);
}

FqVec psi_to_omega(const OmegaContext& ctx, const PsiContext* pc, const FqVec& w) {
  return pc ? psi_to_omega_fast(*pc, w) : generic_convert(ctx, w, Basis::Psi, Basis::Omega);
}

FqVec psi_multiply(const OmegaContext& ctx, const FqVec& a, const FqVec& b) {
  check_len(ctx.d, a);
  check_len(ctx.d, b);
  const BaseField& K = *ctx.K;
  return padded(K, mulmod(K, make(K, a), make(K, b), ctx.L->modulus()), ctx.d);
}

FqVec psi_invert(const OmegaContext& ctx, const FqVec& w) {
  check_len(ctx.d, w);
  const BaseField& K = *ctx.K;
  if (all_zero(K, w)) raise(Errc::ZeroInversion, "inverse of zero");
  return padded(K, invmod(K, make(K, w), ctx.L->modulus()), ctx.d);
}

FqVec invert_omega(const OmegaContext& ctx, const PsiContext* pc, const FqVec& alpha) {
  check_len(ctx.d, alpha);
  if (all_zero(*ctx.K, alpha)) raise(Errc::ZeroInversion, "inverse of zero");
  return psi_to_omega(ctx, pc, psi_invert(ctx, omega_to_psi(ctx, pc, alpha)));
}

FqVec invert_theta(const ThetaContext& tc, const PsiContext* pc, const FqVec& beta) {
  check_len(tc.d(), beta);
  if (all_zero(tc.field(), beta)) raise(Errc::ZeroInversion, "inverse of zero");
  return omega_to_theta(tc, invert_omega(*tc.parent, pc, theta_to_omega(tc, beta)));
}

FqVec lagrange_invert(const ThetaContext& tc, const FqVec& beta, LagrangeStats* stats) {
  const BaseField& K = tc.field();
  const int d = tc.d();
  check_len(d, beta);
  if (all_zero(K, beta)) raise(Errc::ZeroInversion, "inverse of zero");
  LagrangeStats st;
  auto mul = [&](const FqVec& a, const FqVec& b) {
    ++st.multiplies;
    return theta_multiply(tc, a, b);
  };
  auto frob = [&](const FqVec& a, int64_t e) {
    ++st.frobenius;
    return theta_frobenius(tc, a, e);
  };
  // e_m = beta^{1 + q + ... + q^{m-1}}, e_{m+n} = e_m^{q^n} e_n
  const unsigned n = static_cast<unsigned>(d - 1);
  const int top = std::bit_width(n) - 1;
  FqVec e = beta;
  int m = 1;
  for (int i = top - 1; i >= 0; --i) {
    e = mul(frob(e, m), e);
    m *= 2;
    if ((n >> i) & 1u) {
      e = mul(frob(e, 1), beta);
      m += 1;
    }
  }
  st.chain_length = st.multiplies;
  FqVec r = frob(e, 1);  // beta^{r-1}
  FqVec norm = mul(beta, r);
  for (int k = 1; k < d; ++k)
    if (norm[k] != norm[0]) raise(Errc::InvariantViolation, "norm is not in the base field");
  Fq ni = K.inv(norm[0]);
  for (auto& x : r) x = K.mul(x, ni);
  if (stats) *stats = st;
  return r;
}

}  // namespace ellbasis
