#pragma once

#include <cstdint>
#include <memory>
#include <optional>
#include <string>
#include <vector>

#include "ellbasis/theta_basis.hpp"

namespace ellbasis {

struct PrimeValuation {
  uint64_t ell;
  int v_d, v_qm1, v_dq;
};

struct DqProfile {
  uint64_t q = 0;
  int d = 0;
  std::vector<PrimeValuation> primes;  // primes dividing d
  uint64_t dq = 0;
};

/// NotPrimePower, InvalidArgument (d < 2), BoundExceeded when d_q overflows.
DqProfile compute_dq(uint64_t q, int d);

struct Existence {
  uint64_t dq = 0;
  bool omega_guaranteed = false;  // d_q <= 2 sqrt(q)
  bool theta_guaranteed = false;  // d_q <= sqrt(q)
};

Existence existence_check(uint64_t q, int d);

/// a <= q^{e/2}, exactly.
bool le_sqrt_power(uint64_t a, uint64_t q, uint64_t e);

struct BaseChangePlan {
  uint64_t q = 0;
  int d = 0;
  int f = 1;
  int F = 1;
  uint64_t Q = 0;  // 0 when q^f exceeds 64 bits
  std::string Q_decimal;
  uint64_t dq = 0;
};

/// Decimal digits of q^e.
std::string decimal_power(uint64_t q, int e);

/// 4 (log2 d + 1)^2 + 16.
int default_base_change_cap(int d);

/// Smallest f with gcd(f, d phi(d)) = 1 and d_q <= q^{f/2}; SearchCapExceeded.
BaseChangePlan find_base_change(uint64_t q, int d, std::optional<int> cap = std::nullopt);

/// F_{q^d} represented by Theta coordinates over F_Q, Q = q^f.
struct XiModel {
  BaseChangePlan plan;
  BaseFieldPtr Kq;  // F_q
  std::shared_ptr<const ExtField> Lq;  // F_{q^d} = F_q[x]/P, the subfield being modelled
  std::shared_ptr<const OmegaContext> omega;  // degree d over F_Q
  std::shared_ptr<const ThetaContext> theta;
  Fq z_image{};  // image in F_Q of the generator of F_q
  ExtElement h;  // a root of P in F_Q[x]/Pi
  Matrix<uint64_t> export_matrix;  // columns: F_p digits of z^j h^i
  std::vector<Fq> embed_table;  // image of every F_q element when q is small

  const BaseField& big() const { return *omega->K; }
  int d() const { return plan.d; }
  /// F_q values per stored coordinate divided by F_q values per element.
  int blowup() const { return plan.f; }
};

XiModel build_xi_model(uint64_t q, int d, uint64_t seed = 1);

Fq embed_base(const XiModel& m, Fq a);
FqVec xi_import(const XiModel& m, const ExtElement& a);
/// InvalidArgument when the element lies outside F_{q^d}.
ExtElement xi_export(const XiModel& m, const FqVec& theta);
FqVec xi_multiply(const XiModel& m, const FqVec& a, const FqVec& b);
/// Phi_q = Phi_Q^F on F_{q^d}.
FqVec xi_frobenius_q(const XiModel& m, const FqVec& a, int64_t power = 1);

}  // namespace ellbasis
