#pragma once

#include <memory>
#include <optional>

#include "ellbasis/omega_basis.hpp"

namespace ellbasis {

/// Elliptic normal basis theta_k = (frak_a u_{kt,(k+1)t} + frak_b)(b).
struct ThetaContext {
  std::shared_ptr<const OmegaContext> parent;
  FqPoint R;
  Fq frak_c{}, frak_a{}, frak_b{};
  FqVec gamma_succ;  // Gamma_{k,k+1}, k = 1..d-2 at index k
  FqVec lambda;  // lambda_k = sum_{i=1}^{k} Gamma_{i,i+1}, lambda_0 = 0
  FqVec iota, uR, uR_inv, xR;
  std::shared_ptr<const ConvolutionStrategy> conv;

  int d() const { return parent->d; }
  const BaseField& field() const { return *parent->K; }
};

struct ThetaOptions {
  std::optional<FqPoint> R;
  uint64_t seed = 1;
  std::string convolution = "karatsuba";
};

/// BadR when d R = O; NotInvertible when u_R has no convolution inverse.
ThetaContext build_theta_context(std::shared_ptr<const OmegaContext> omega, const ThetaOptions& opt = {});

/// (frak_a, frak_b) with frak_a frak_c + d frak_b = 1.
std::pair<Fq, Fq> select_ab(const BaseField& K, Fq frak_c, int d);

/// Sum of u_{kt,(k+1)t} evaluated at P (P outside <t>).
Fq theta_constant_at(const OmegaContext& ctx, const FqPoint& P);
ExtElement theta_constant_at(const OmegaContext& ctx, const LCurve& EL, const LPoint& P);

FqVec omega_to_theta(const ThetaContext& tc, const FqVec& alpha, OpCounts* counts = nullptr);
FqVec theta_to_omega(const ThetaContext& tc, const FqVec& beta, OpCounts* counts = nullptr);

/// gamma_k = alpha_{k + power}; Phi^power.
FqVec theta_frobenius(const ThetaContext& tc, const FqVec& alpha, int64_t power = 1);

struct ThetaTrace {
  FqVec diff_a, diff_b, diff_prod;  // alpha - sigma alpha, beta - sigma beta, their product
  FqVec iota_term, eval_prod, x_term, interp;
  int convolutions = 0, hadamards = 0;
};

FqVec theta_multiply(const ThetaContext& tc, const FqVec& alpha, const FqVec& beta, ThetaTrace* trace = nullptr);

/// Theta coordinates of sum alpha_i xi_i.
FqVec reduce_xi_combination(const ThetaContext& tc, const FqVec& alpha);

enum class OrbitKind { U, X };
/// (f(R + jt))_j for f = sum alpha_i u_i or sum alpha_i x_i.
FqVec evaluate_at_orbit(const ThetaContext& tc, const FqVec& alpha, OrbitKind kind);
/// Inverse of evaluate_at_orbit for kind U.
FqVec interpolate_from_orbit(const ThetaContext& tc, const FqVec& values);

ExtElement theta_to_element(const ThetaContext& tc, const FqVec& beta);
FqVec element_to_theta(const ThetaContext& tc, const ExtElement& w);

}  // namespace ellbasis
