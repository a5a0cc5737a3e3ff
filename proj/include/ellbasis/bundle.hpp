#pragma once

#include <memory>
#include <optional>
#include <string>
#include <vector>

#include "ellbasis/io.hpp"
#include "ellbasis/params.hpp"
#include "ellbasis/psi_bridge.hpp"

namespace ellbasis {

inline constexpr int kBundleVersion = 1;

/// Field, curve and the Omega/Theta/Psi contexts of one construction.
struct Bundle {
  std::shared_ptr<const OmegaContext> omega;
  std::shared_ptr<const ThetaContext> theta;  // null when Theta did not build
  std::shared_ptr<const PsiContext> psi;  // null for even d
  uint64_t q = 0;  // the requested base field order
  Existence existence;
  std::optional<BaseChangePlan> base_change;  // set when the contexts live over F_Q
  uint64_t seed = 1;
  std::vector<std::string> notes;
  std::optional<io::json> source;  // the document this bundle was loaded from
};

struct ConstructOptions {
  uint64_t q = 0;
  int d = 0;
  // CSV in the vector format: a1,a2,a3,a4,a6 and x,y
  std::optional<std::string> curve, t, a, R;
  uint64_t seed = 1;
  bool allow_base_change = true;
};

/// Curve given: validates it and the points. Otherwise searches.
Bundle construct_bundle(const ConstructOptions& opt);

io::json omega_to_json(const OmegaContext& c);
io::json theta_to_json(const ThetaContext& t);
io::json psi_to_json(const PsiContext& p);
io::json bundle_to_json(const Bundle& b);
io::json plan_to_json(const BaseChangePlan& p);
io::json dq_to_json(const DqProfile& p, const Existence& e);

/// Keeps every stored table as is; FormatError on malformed or mismatched versions.
Bundle bundle_from_json(const io::json& j);

void save_bundle(const Bundle& b, const std::string& path);
Bundle load_bundle(const std::string& path);

struct GroupResult {
  std::string name;
  int passed = 0, total = 0;
  std::string first_failure;
  bool ok() const { return passed == total; }
};

/// Invariant groups: structural, tables, reduction, omega, theta, psi, inversion.
/// trials = 0 runs the structural group only.
std::vector<GroupResult> verify_bundle(const Bundle& b, int trials, uint64_t seed = 1);

}  // namespace ellbasis
