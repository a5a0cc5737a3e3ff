#pragma once

#include <cstdint>
#include <memory>
#include <optional>
#include <string>
#include <vector>

#include "ellbasis/convolution.hpp"
#include "ellbasis/curve.hpp"
#include "ellbasis/linalg.hpp"

namespace ellbasis {

/// Operation tallies; the a1/a3 fields are subsets of the totals.
struct OpCounts {
  uint64_t adds = 0, mults = 0, invs = 0;
  uint64_t a1_adds = 0, a1_mults = 0, a3_adds = 0;

  OpCounts& operator+=(const OpCounts& o);
  friend bool operator==(const OpCounts&, const OpCounts&) = default;
};

enum class Cause { Generic, A1, A3 };

/// Field arithmetic that also tallies every operation it performs.
class Tally {
 public:
  Tally(const BaseField& K, OpCounts* c) : K_(K), c_(c) {}
  Fq add(Fq a, Fq b, Cause why = Cause::Generic) {
    count_add(why);
    return K_.add(a, b);
  }
  Fq sub(Fq a, Fq b, Cause why = Cause::Generic) {
    count_add(why);
    return K_.sub(a, b);
  }
  Fq mul(Fq a, Fq b, Cause why = Cause::Generic) {
    if (c_) {
      ++c_->mults;
      if (why == Cause::A1) ++c_->a1_mults;
    }
    return K_.mul(a, b);
  }
  Fq inv(Fq a) {
    if (c_) ++c_->invs;
    return K_.inv(a);
  }
  Fq neg(Fq a) const { return K_.neg(a); }

 private:
  void count_add(Cause why) {
    if (!c_) return;
    ++c_->adds;
    if (why == Cause::A1) ++c_->a1_adds;
    if (why == Cause::A3) ++c_->a3_adds;
  }
  const BaseField& K_;
  OpCounts* c_;
};

/// Elliptic basis omega_0 = 1, omega_k = u_{O,kt}(b) of L = F_q[x]/Pi over F_q.
struct OmegaContext {
  BaseFieldPtr K;
  FqCurve E;
  FqPoint t;
  int d = 0;
  FqCurve Ep;  // E / <t>
  Isogeny iso;
  FqPoint a;
  FqPoly Pi;
  ExtFieldPtr L;
  ExtElement y_b;  // x(b) is the class of x
  // index 0 unused in nu, rho
  FqVec nu, rho;
  FqVec kappa;
  Fq kappa_sum{};
  FqVec phi_xi0_first;  // omega_0 coordinate of Phi^{-k}(xi_0)
  FqVec gamma_last_row;  // Gamma_{d-1,j}, j = 1..d-2 at index j
  FqVec gamma_last_col;  // Gamma_{j,d-1}, j = 1..d-2 at index j
  std::optional<Fq> gamma_exc;  // Gamma_{2d/3,d/3} when 3 | d
  bool cache_gamma = false;
  Matrix<Fq> gamma_cache;  // filled only when cache_gamma
  // omega_k as elements of L and the change of basis to the powers of x(b)
  std::vector<ExtElement> omega;
  Matrix<Fq> psi_of_omega;  // column k = coordinates of omega_k
  Matrix<Fq> omega_of_psi;

  const BaseField& field() const { return *K; }
};

struct OmegaOptions {
  std::optional<FqPoint> a;
  uint64_t seed = 1;
  int max_candidates = 256;
  bool cache_gamma = false;
};

/// Requires t of exact order d >= 2. Picks a in E'(F_q) with Pi irreducible
/// and d b != O (2d b != O when possible).
OmegaContext build_omega_context(const FqCurve& E, const FqPoint& t, const OmegaOptions& opt = {});

/// Recomputes every table from E, t, a, Pi and y(b).
OmegaContext rebuild_omega_context(const FqCurve& E, const FqPoint& t, const FqPoint& a, const FqPoly& Pi,
                                    const ExtElement& y_b, bool cache_gamma = false);

/// Gamma_{k,l} = Gamma(O, kt, lt) for distinct nonzero k, l.
Fq gamma_kl(const OmegaContext& ctx, int k, int l);

/// Matrix converters between Omega coordinates and L.
ExtElement omega_to_element(const OmegaContext& ctx, const FqVec& alpha);
FqVec element_to_omega(const OmegaContext& ctx, const ExtElement& w);

FqVec omega_frobenius(const OmegaContext& ctx, const FqVec& alpha, OpCounts* counts = nullptr);
FqVec omega_frobenius_inverse(const OmegaContext& ctx, const FqVec& alpha, OpCounts* counts = nullptr);
FqVec omega_multiply(const OmegaContext& ctx, const FqVec& alpha, const FqVec& beta, OpCounts* counts = nullptr);

/// Loop structure of the multiplication.
struct OrbitCounts {
  int exceptional = 0;  // 1 when 3 | d
  int circle_half = 0;  // k = 2l
  int circle_double = 0;  // l = 2k
  int fundamental = 0;
};
OrbitCounts orbit_counts(int d);

int epsilon(int d);

/// Closed-form multiplication cost models.
enum class CurveModel { General, Short, Char3Ordinary, Char2Ordinary, Char2Supersingular };
const char* model_name(CurveModel m);
OpCounts closed_form_counts(CurveModel m, int d);
OpCounts frobenius_closed_form(int d, bool a1_nonzero);
/// Step-by-step tallies of omega_multiply as implemented.
OpCounts multiply_step_counts(int d, bool a1_nonzero, bool a3_nonzero);
/// Models whose coefficient pattern E satisfies.
std::vector<CurveModel> applicable_models(const FqCurve& E);

}  // namespace ellbasis
