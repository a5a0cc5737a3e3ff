#include "ellbasis/search.hpp"

namespace ellbasis {

std::optional<FqCurve> random_model_curve(const BaseFieldPtr& Kp, CurveModel m, Rng& rng) {
  const BaseField& K = *Kp;
  const uint64_t p = K.p();
  auto nz = [&] { return K.random_nonzero(rng); };
  auto any = [&] { return K.random(rng); };
  const Fq z = K.zero();
  for (int attempt = 0; attempt < 1000; ++attempt) {
    try {
      switch (m) {
        case CurveModel::General:
          return FqCurve(Kp, nz(), any(), nz(), any(), any());
        case CurveModel::Short:
          if (p == 2) return std::nullopt;
          return FqCurve(Kp, z, z, z, any(), any());
        case CurveModel::Char3Ordinary:
          if (p != 3) return std::nullopt;
          return FqCurve(Kp, z, nz(), z, z, any());
        case CurveModel::Char2Ordinary:
          if (p != 2) return std::nullopt;
          return FqCurve(Kp, K.one(), any(), z, z, any());
        case CurveModel::Char2Supersingular:
          if (p != 2) return std::nullopt;
          return FqCurve(Kp, z, z, nz(), any(), any());
      }
    } catch (const Error& e) {
      if (e.code() != Errc::SingularCurve) throw;
    }
  }
  return std::nullopt;
}

OmegaContext search_omega_context(const BaseFieldPtr& K, int d, const SearchOptions& opt) {
  Rng rng(opt.seed);
  for (int i = 0; i < opt.max_curves; ++i) {
    auto E = random_model_curve(K, opt.model, rng);
    if (!E) break;
    uint64_t N = group_order(*E);
    if (N % static_cast<uint64_t>(d)) continue;
    try {
      FqPoint t = find_point_of_order(*E, d, rng, N);
      OmegaOptions oo;
      oo.seed = rng();
      auto ctx = build_omega_context(*E, t, oo);
      if (opt.need_psi && ctx.Ep.mul(ctx.a, 2 * d).inf) continue;
      return ctx;
    } catch (const Error& e) {
      switch (e.code()) {
        case Errc::NoSuchPoint:
        case Errc::NoSuitableA:
        case Errc::NotIrreducible:
          continue;
        default:
          throw;
      }
    }
  }
  raise(Errc::SearchCapExceeded, "no curve with a suitable point of order d found");
}

}  // namespace ellbasis
