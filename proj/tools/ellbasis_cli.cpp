#include <cstdlib>
#include <iostream>
#include <string>

#include "CLI11.hpp"

#include "ellbasis/bench.hpp"
#include "ellbasis/bundle.hpp"

using namespace ellbasis;
using io::json;

namespace {

constexpr int kOk = 0, kInvariant = 1, kUsage = 2, kDomain = 3;

const char* kFooter =
    "Exit codes: 0 ok, 1 invariant or construction failure, 2 usage or malformed input, "
    "3 arithmetic domain error (zero inversion).\n"
    "ELLBASIS_SEED overrides --seed.\n"
    "Vectors are comma-separated, low index first; over F_{p^m} each coordinate is a /-separated digit list.";

int exit_code(Errc c) {
  switch (c) {
    case Errc::FormatError:
    case Errc::LengthMismatch:
    case Errc::InvalidArgument:
    case Errc::NotPrimePower:
    case Errc::NotPrime:
    case Errc::PointNotOnCurve:
    case Errc::SingularCurve:
      return kUsage;
    case Errc::ZeroInversion:
    case Errc::DivisionByZero:
    case Errc::NotInvertible:
    case Errc::PoleEvaluation:
    case Errc::EqualPoints:
    case Errc::TooFewDistinctPoints:
      return kDomain;
    default:
      return kInvariant;
  }
}

int report(const Error& e) {
  std::cerr << json{{"error", e.name()}, {"message", e.what()}}.dump() << '\n';
  return exit_code(e.code());
}

uint64_t effective_seed(uint64_t seed) {
  if (const char* s = std::getenv("ELLBASIS_SEED")) return io::parse_u64(s);
  return seed;
}

FqVec repeat_frob(const OmegaContext& c, FqVec a, int64_t power, OpCounts* counts) {
  const int64_t d = c.d;
  int64_t s = ((power % d) + d) % d;
  for (int64_t i = 0; i < s; ++i) a = omega_frobenius(c, a, counts);
  return a;
}

struct OpArgs {
  std::string ctx, basis = "theta", op, a, b, method = "psi";
  int64_t power = 1;
  bool counters = false;
};

int cmd_op(const OpArgs& o) {
  Bundle bd = load_bundle(o.ctx);
  const OmegaContext& c = *bd.omega;
  const BaseField& K = *c.K;
  const int d = c.d;
  auto parse = [&](const std::string& s, const char* what) {
    if (s.empty()) raise(Errc::InvalidArgument, std::string("--") + what + " is required");
    FqVec v = io::vec_from_csv(K, s);
    if (static_cast<int>(v.size()) != d) raise(Errc::FormatError, std::string("--") + what + " must have d coordinates");
    return v;
  };
  const bool binary = o.op == "mul" || o.op == "div";
  if (!binary && !o.b.empty()) raise(Errc::InvalidArgument, "--b is only used by mul and div");
  FqVec a = parse(o.a, "a");
  FqVec b = binary ? parse(o.b, "b") : FqVec{};
  const PsiContext* pc = bd.psi.get();
  json counters = json::object();
  FqVec r;
  if (o.basis == "omega") {
    OpCounts cnt;
    if (o.op == "mul") r = omega_multiply(c, a, b, &cnt);
    else if (o.op == "frob") r = repeat_frob(c, a, o.power, &cnt);
    else if (o.op == "frobinv") r = repeat_frob(c, a, -o.power, &cnt);
    else if (o.op == "inv") r = invert_omega(c, pc, a);
    else if (o.op == "div") r = omega_multiply(c, a, invert_omega(c, pc, b), &cnt);
    counters = io::counts_to_json(cnt);
  } else if (o.basis == "theta") {
    if (!bd.theta) raise(Errc::InvalidArgument, "bundle has no theta section");
    const ThetaContext& t = *bd.theta;
    auto inverse = [&](const FqVec& x) {
      if (o.method == "lagrange") {
        LagrangeStats st;
        FqVec y = lagrange_invert(t, x, &st);
        counters["lagrange_multiplies"] = st.multiplies;
        counters["lagrange_frobenius"] = st.frobenius;
        return y;
      }
      if (o.method != "psi") raise(Errc::InvalidArgument, "--method is psi or lagrange");
      return invert_theta(t, pc, x);
    };
    if (o.op == "mul" || o.op == "div") {
      FqVec bb = o.op == "div" ? inverse(b) : b;
      ThetaTrace tr;
      r = theta_multiply(t, a, bb, &tr);
      counters["convolutions"] = tr.convolutions;
      counters["hadamards"] = tr.hadamards;
    } else if (o.op == "frob") {
      r = theta_frobenius(t, a, o.power);
    } else if (o.op == "frobinv") {
      r = theta_frobenius(t, a, -o.power);
    } else if (o.op == "inv") {
      r = inverse(a);
    }
  } else if (o.basis == "psi") {
    const ExtField& L = *c.L;
    const int64_t s = ((o.power % d) + d) % d;
    if (o.op == "mul") r = psi_multiply(c, a, b);
    else if (o.op == "frob") r = L.frobenius(L.from_coords(a), static_cast<int>(s)).c;
    else if (o.op == "frobinv") r = L.frobenius(L.from_coords(a), static_cast<int>((d - s) % d)).c;
    else if (o.op == "inv") r = psi_invert(c, a);
    else if (o.op == "div") r = psi_multiply(c, a, psi_invert(c, b));
  } else {
    raise(Errc::InvalidArgument, "--basis is omega, theta or psi");
  }
  if (r.empty()) raise(Errc::InvalidArgument, "--op is mul, frob, frobinv, inv or div");
  std::cout << io::vec_to_csv(K, r) << '\n';
  if (o.counters) std::cout << counters.dump() << '\n';
  return kOk;
}

int cmd_verify(const std::string& path, int trials, uint64_t seed) {
  Bundle bd = load_bundle(path);
  bool ok = true;
  for (const auto& g : verify_bundle(bd, trials, seed)) {
    std::cout << g.name << ": " << (g.ok() ? "PASS" : "FAIL") << ' ' << g.passed << '/' << g.total;
    if (!g.ok()) std::cout << " first failure: " << g.first_failure;
    std::cout << '\n';
    ok = ok && g.ok();
  }
  return ok ? kOk : kInvariant;
}

json info_json(const Bundle& bd) {
  const OmegaContext& c = *bd.omega;
  json models = json::array();
  for (CurveModel m : applicable_models(c.E)) models.push_back(model_name(m));
  return {{"q", std::to_string(bd.q)},
          {"field_order", std::to_string(c.K->q())},
          {"d", c.d},
          {"curve", io::curve_to_json(c.E)},
          {"t", io::point_to_json(*c.K, c.t)},
          {"Pi", io::poly_to_json(*c.K, c.Pi)},
          {"models", models},
          {"theta", static_cast<bool>(bd.theta)},
          {"psi", static_cast<bool>(bd.psi)},
          {"base_change", bd.base_change ? plan_to_json(*bd.base_change) : json(nullptr)},
          {"notes", bd.notes}};
}

std::pair<int, int> parse_range(const std::string& s) {
  auto pos = s.find("..");
  if (pos == std::string::npos) {
    int v = static_cast<int>(io::parse_i64(s));
    return {v, v};
  }
  return {static_cast<int>(io::parse_i64(s.substr(0, pos))), static_cast<int>(io::parse_i64(s.substr(pos + 2)))};
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Elliptic bases for finite field extensions"};
  app.footer(kFooter);
  app.require_subcommand(1);

  uint64_t q = 0, seed = 1;
  int d = 0;
  std::string out, curve, t, a, R, ctx;
  bool no_base_change = false;
  auto* construct = app.add_subcommand("construct", "build Omega, Theta and Psi contexts and write a bundle");
  construct->add_option("--q", q, "field order")->required();
  construct->add_option("--d", d, "extension degree")->required();
  construct->add_option("--curve", curve, "a1,a2,a3,a4,a6");
  construct->add_option("--t", t, "point of order d, x,y");
  construct->add_option("--a", a, "point of the quotient curve, x,y");
  construct->add_option("--R", R, "Theta evaluation point, x,y");
  construct->add_option("--seed", seed, "random seed");
  construct->add_option("--out", out, "bundle file")->required();
  construct->add_flag("--no-base-change", no_base_change, "fail instead of moving to F_{q^f}");

  OpArgs oa;
  auto* op = app.add_subcommand("op", "arithmetic on coordinate vectors");
  op->add_option("--ctx", oa.ctx, "bundle file")->required();
  op->add_option("--basis", oa.basis, "omega, theta or psi");
  op->add_option("--op", oa.op, "mul, frob, frobinv, inv or div")->required();
  op->add_option("--a", oa.a, "first operand");
  op->add_option("--b", oa.b, "second operand");
  op->add_option("--power", oa.power, "Frobenius power");
  op->add_option("--method", oa.method, "theta inversion: psi or lagrange");
  op->add_flag("--counters", oa.counters, "also print operation counts as JSON");

  int trials = 20;
  auto* verify = app.add_subcommand("verify", "run the invariant groups against a bundle");
  verify->add_option("--ctx", ctx, "bundle file")->required();
  verify->add_option("--trials", trials, "random trials per group; 0 for structural checks only");
  verify->add_option("--seed", seed, "random seed");

  std::string range = "5..13", models = "all";
  int reps = 10, threads = 1;
  bool no_timing = false;
  auto* bench = app.add_subcommand("bench", "operation counts against the closed forms, as CSV");
  bench->add_option("--q", q, "field order")->required();
  bench->add_option("--d-range", range, "A..B");
  bench->add_option("--reps", reps, "timed multiplications per cell");
  bench->add_option("--models", models, "all or a comma-separated list");
  bench->add_option("--threads", threads, "parallel cells");
  bench->add_option("--seed", seed, "random seed");
  bench->add_flag("--no-timing", no_timing, "leave the timing columns empty");

  auto* dq = app.add_subcommand("dq", "d_q with per-prime valuations and existence flags");
  dq->add_option("--q", q, "field order")->required();
  dq->add_option("--d", d, "extension degree")->required();

  int cap = 0;
  auto* bc = app.add_subcommand("basechange", "auxiliary degree f and F = f^{-1} mod d");
  bc->add_option("--q", q, "field order")->required();
  bc->add_option("--d", d, "extension degree")->required();
  bc->add_option("--cap", cap, "largest f tried");

  auto* info = app.add_subcommand("info", "summary of a bundle, or of the tool");
  info->add_option("--ctx", ctx, "bundle file");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    int rc = app.exit(e);
    return rc == 0 ? kOk : kUsage;
  }

  try {
    seed = effective_seed(seed);
    if (*construct) {
      ConstructOptions co;
      co.q = q;
      co.d = d;
      if (!curve.empty()) co.curve = curve;
      if (!t.empty()) co.t = t;
      if (!a.empty()) co.a = a;
      if (!R.empty()) co.R = R;
      co.seed = seed;
      co.allow_base_change = !no_base_change;
      Bundle bd = construct_bundle(co);
      save_bundle(bd, out);
      json s = {{"out", out},
                {"dq", std::to_string(bd.existence.dq)},
                {"omega_guaranteed", bd.existence.omega_guaranteed},
                {"theta_guaranteed", bd.existence.theta_guaranteed},
                {"base_change_applied", static_cast<bool>(bd.base_change)},
                {"theta", static_cast<bool>(bd.theta)},
                {"psi", static_cast<bool>(bd.psi)},
                {"notes", bd.notes}};
      std::cout << s.dump() << '\n';
      return kOk;
    }
    if (*op) return cmd_op(oa);
    if (*verify) return cmd_verify(ctx, trials, seed);
    if (*bench) {
      BenchOptions bo;
      bo.q = q;
      std::tie(bo.d_lo, bo.d_hi) = parse_range(range);
      bo.reps = reps;
      bo.models = parse_models(models);
      bo.seed = seed;
      bo.threads = threads;
      bo.timing = !no_timing;
      auto rows = run_bench(bo);
      std::cout << bench_csv_header() << '\n';
      for (const auto& r : rows) std::cout << bench_csv_line(r) << '\n';
      return kOk;
    }
    if (*dq) {
      std::cout << dq_to_json(compute_dq(q, d), existence_check(q, d)).dump() << '\n';
      return kOk;
    }
    if (*bc) {
      auto plan = cap > 0 ? find_base_change(q, d, cap) : find_base_change(q, d);
      std::cout << plan_to_json(plan).dump() << '\n';
      return kOk;
    }
    if (*info) {
      if (ctx.empty()) {
        json models_j = json::array();
        for (CurveModel m : all_models()) models_j.push_back(model_name(m));
        std::cout << json{{"bundle_version", kBundleVersion},
                          {"models", models_j},
                          {"exit_codes", {{"ok", 0}, {"invariant", 1}, {"usage", 2}, {"domain", 3}}}}
                         .dump()
                  << '\n';
      } else {
        std::cout << info_json(load_bundle(ctx)).dump() << '\n';
      }
      return kOk;
    }
  } catch (const Error& e) {
    return report(e);
  }
  return kUsage;
}
