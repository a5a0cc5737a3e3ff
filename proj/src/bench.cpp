#include "ellbasis/bench.hpp"

#include <atomic>
#include <chrono>
#include <sstream>
#include <thread>

#include "ellbasis/search.hpp"
#include "ellbasis/theta_basis.hpp"

namespace ellbasis {

namespace {

BenchRow run_cell(uint64_t q, int d, CurveModel m, int reps, uint64_t seed, bool timing) {
  BenchRow r;
  r.timed = timing;
  r.q = q;
  r.d = d;
  r.model = m;
  r.eps = epsilon(d);
  r.closed = closed_form_counts(m, d);
  BaseFieldPtr K = BaseField::of_order(q);
  SearchOptions so;
  so.model = m;
  so.seed = seed ^ (static_cast<uint64_t>(d) << 8) ^ static_cast<uint64_t>(m);
  Rng probe(1);
  if (!random_model_curve(K, m, probe)) {
    r.skipped = true;
    r.reason = "model impossible in this characteristic";
    return r;
  }
  std::shared_ptr<const OmegaContext> c;
  try {
    c = std::make_shared<const OmegaContext>(search_omega_context(K, d, so));
  } catch (const Error& e) {
    r.skipped = true;
    r.reason = std::string("not constructible: ") + e.name();
    return r;
  }
  const bool a1 = !K->is_zero(c->E.a1()), a3 = !K->is_zero(c->E.a3());
  r.step = multiply_step_counts(d, a1, a3);
  r.frob_closed = frobenius_closed_form(d, a1);
  Rng rng(so.seed);
  auto rv = [&] {
    FqVec v(d);
    for (auto& x : v) x = K->random(rng);
    return v;
  };
  FqVec a = rv(), b = rv();
  omega_multiply(*c, a, b, &r.measured);
  omega_frobenius(*c, a, &r.frob_measured);
  using clock = std::chrono::steady_clock;
  const int n = timing ? std::max(1, reps) : 0;
  auto t0 = clock::now();
  for (int i = 0; i < n; ++i) a = omega_multiply(*c, a, b);
  r.omega_us = std::chrono::duration<double, std::micro>(clock::now() - t0).count() / std::max(n, 1);
  try {
    ThetaOptions to;
    to.seed = so.seed;
    ThetaContext tc = build_theta_context(c, to);
    ThetaTrace tr;
    FqVec x = rv(), y = rv();
    theta_multiply(tc, x, y, &tr);
    r.theta_convolutions = tr.convolutions;
    t0 = clock::now();
    for (int i = 0; i < n; ++i) x = theta_multiply(tc, x, y);
    r.theta_us = std::chrono::duration<double, std::micro>(clock::now() - t0).count() / std::max(n, 1);
  } catch (const Error& e) {
    r.reason = std::string("theta unavailable: ") + e.name();
  }
  return r;
}

}  // namespace

bool BenchRow::match_closed() const {
  return measured.adds == closed.adds && measured.mults == closed.mults && measured.invs == closed.invs &&
         measured.a1_adds == closed.a1_adds && measured.a1_mults == closed.a1_mults &&
         measured.a3_adds == closed.a3_adds;
}

std::vector<CurveModel> all_models() {
  return {CurveModel::General, CurveModel::Short, CurveModel::Char3Ordinary, CurveModel::Char2Ordinary,
          CurveModel::Char2Supersingular};
}

std::vector<CurveModel> parse_models(const std::string& s) {
  if (s == "all") return all_models();
  std::vector<CurveModel> out;
  std::istringstream is(s);
  std::string tok;
  while (std::getline(is, tok, ',')) {
    bool found = false;
    for (CurveModel m : all_models())
      if (tok == model_name(m)) {
        out.push_back(m);
        found = true;
      }
    if (!found) raise(Errc::InvalidArgument, "unknown model " + tok);
  }
  if (out.empty()) raise(Errc::InvalidArgument, "no model given");
  return out;
}

std::vector<BenchRow> run_bench(const BenchOptions& opt) {
  if (opt.d_lo < 2 || opt.d_hi < opt.d_lo) raise(Errc::InvalidArgument, "bad d range");
  BaseField::of_order(opt.q);
  const auto models = opt.models.empty() ? all_models() : opt.models;
  struct Job {
    int d;
    CurveModel m;
  };
  std::vector<Job> jobs;
  for (int d = opt.d_lo; d <= opt.d_hi; ++d)
    for (CurveModel m : models) jobs.push_back({d, m});
  std::vector<BenchRow> rows(jobs.size());
  std::atomic<size_t> next{0};
  auto worker = [&] {
    for (size_t i; (i = next.fetch_add(1)) < jobs.size();)
      rows[i] = run_cell(opt.q, jobs[i].d, jobs[i].m, opt.reps, opt.seed, opt.timing);
  };
  const int nt = std::max(1, opt.threads);
  std::vector<std::thread> pool;
  for (int i = 1; i < nt; ++i) pool.emplace_back(worker);
  worker();
  for (auto& t : pool) t.join();
  return rows;
}

std::string bench_csv_header() {
  return "q,d,model,epsilon,status,adds,adds_closed,adds_step,mults,mults_closed,mults_step,invs,invs_closed,"
         "a1_adds,a1_mults,a3_adds,match_closed,match_step,frob_adds,frob_mults,frob_match,theta_convolutions,"
         "omega_us,theta_us,note";
}

std::string bench_csv_line(const BenchRow& r) {
  std::ostringstream os;
  os << r.q << ',' << r.d << ',' << model_name(r.model) << ',' << r.eps << ',';
  if (r.skipped) {
    os << "skip" << std::string(20, ',') << r.reason;
    return os.str();
  }
  auto b = [](bool x) { return x ? "true" : "false"; };
  os << "ok," << r.measured.adds << ',' << r.closed.adds << ',' << r.step.adds << ',' << r.measured.mults << ','
     << r.closed.mults << ',' << r.step.mults << ',' << r.measured.invs << ',' << r.closed.invs << ','
     << r.measured.a1_adds << ',' << r.measured.a1_mults << ',' << r.measured.a3_adds << ',' << b(r.match_closed())
     << ',' << b(r.match_step()) << ',' << r.frob_measured.adds << ',' << r.frob_measured.mults << ','
     << b(r.match_frobenius()) << ',' << r.theta_convolutions << ',';
  if (r.timed) {
    os.setf(std::ios::fixed);
    os.precision(2);
    os << r.omega_us << ',' << r.theta_us;
  } else {
    os << ',';
  }
  os << ',' << r.reason;
  return os.str();
}

}  // namespace ellbasis
