#pragma once

#include <optional>

#include "ellbasis/omega_basis.hpp"

namespace ellbasis {

struct SearchOptions {
  CurveModel model = CurveModel::General;
  uint64_t seed = 1;
  int max_curves = 400;
  bool need_psi = false;  // also require 2d a != O
};

/// Random curve of the given coefficient pattern, or nullopt when the pattern is
/// impossible over K.
std::optional<FqCurve> random_model_curve(const BaseFieldPtr& K, CurveModel m, Rng& rng);

/// Searches curves of the pattern with a point of order d whose Omega context
/// builds. SearchCapExceeded when none is found.
OmegaContext search_omega_context(const BaseFieldPtr& K, int d, const SearchOptions& opt = {});

}  // namespace ellbasis
