#pragma once

#include <memory>

#include "ellbasis/multipoint.hpp"
#include "ellbasis/theta_basis.hpp"

namespace ellbasis {

enum class Basis { Omega, Theta, Psi };
const char* basis_name(Basis b);

/// Polynomial basis (1, x(b), ..., x(b)^{d-1}) and the fast bridge to Omega (odd d).
struct PsiContext {
  std::shared_ptr<const OmegaContext> parent;
  FqPoly Y1, Y0;  // Y1 monic of degree (d+1)/2, deg Y0 <= (d-3)/2
  FqPoly M;  // Y1 / Y0 mod Pi
  FqPoly D;  // prod_{k=1}^{(d-1)/2} (x - nu_k)
  FqVec s;  // s_k = y(kt) + a1 x(kt) + a3, k = 1..d-1, index 0 unused
  FqVec Dk_at_nuk;  // D'(nu_k), k = 1..(d-1)/2, index 0 unused
  FqPoly D_inv;  // D^{-1} mod Pi
  FqPoly Y0_inv;  // Y0^{-1} mod Y1
  std::shared_ptr<const SubproductTree> tree;

  int d() const { return parent->d; }
  int half() const { return (parent->d - 1) / 2; }
  const BaseField& field() const { return *parent->K; }
};

/// EvenDegree, TwoTorsionObstruction (2 d b = O), SingularSystem.
PsiContext build_psi_context(std::shared_ptr<const OmegaContext> omega);

/// Recomputes the derived tables from stored Y1, Y0; InvariantViolation when they do not fit.
PsiContext rebuild_psi_context(std::shared_ptr<const OmegaContext> omega, const FqPoly& Y1, const FqPoly& Y0);

/// Change of basis through the precomputed matrices (any d).
FqVec generic_convert(const OmegaContext& ctx, const FqVec& alpha, Basis from, Basis to);

FqVec omega_to_psi_fast(const PsiContext& pc, const FqVec& alpha);
/// InexactDivision when the context is inconsistent.
FqVec psi_to_omega_fast(const PsiContext& pc, const FqVec& w);

/// Fast path when pc is given, matrix path otherwise.
FqVec omega_to_psi(const OmegaContext& ctx, const PsiContext* pc, const FqVec& alpha);
FqVec psi_to_omega(const OmegaContext& ctx, const PsiContext* pc, const FqVec& w);

/// Product of Psi coordinate vectors modulo Pi.
FqVec psi_multiply(const OmegaContext& ctx, const FqVec& a, const FqVec& b);
/// ZeroInversion.
FqVec psi_invert(const OmegaContext& ctx, const FqVec& w);

/// Inverse in Omega coordinates via Psi; ZeroInversion.
FqVec invert_omega(const OmegaContext& ctx, const PsiContext* pc, const FqVec& alpha);
/// Inverse in Theta coordinates via Psi; ZeroInversion.
FqVec invert_theta(const ThetaContext& tc, const PsiContext* pc, const FqVec& beta);

struct LagrangeStats {
  int multiplies = 0;
  int frobenius = 0;
  int chain_length = 0;  // multiplies spent on the chain for d - 1
};

/// alpha^{-1} = alpha^{r-1} / N(alpha), r = (q^d - 1)/(q - 1); ZeroInversion.
FqVec lagrange_invert(const ThetaContext& tc, const FqVec& beta, LagrangeStats* stats = nullptr);

}  // namespace ellbasis
