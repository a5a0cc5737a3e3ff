#pragma once

#include <string>
#include <vector>

#include "ellbasis/omega_basis.hpp"

namespace ellbasis {

struct BenchRow {
  uint64_t q = 0;
  int d = 0;
  CurveModel model = CurveModel::General;
  int eps = 0;
  bool skipped = false;
  std::string reason;
  OpCounts measured, closed, step;
  OpCounts frob_measured, frob_closed;
  int theta_convolutions = -1;  // per multiply, -1 when Theta did not build
  double omega_us = 0, theta_us = 0;  // wall time per multiply
  bool timed = true;

  bool match_closed() const;  // adds, mults, invs and the a1/a3 shares
  bool match_step() const { return measured == step; }
  bool match_frobenius() const { return frob_measured == frob_closed; }
};

struct BenchOptions {
  uint64_t q = 1009;
  int d_lo = 5, d_hi = 13;
  int reps = 10;
  std::vector<CurveModel> models;  // empty: every model
  uint64_t seed = 1;
  int threads = 1;
  bool timing = true;
};

std::vector<BenchRow> run_bench(const BenchOptions& opt);

/// The CSV header and one line per row.
std::string bench_csv_header();
std::string bench_csv_line(const BenchRow& r);

std::vector<CurveModel> all_models();
/// "all" or a comma-separated list of model names; InvalidArgument otherwise.
std::vector<CurveModel> parse_models(const std::string& s);

}  // namespace ellbasis
