#pragma once

#include <vector>

#include "ellbasis/ext_field.hpp"

namespace ellbasis {

/// Balanced subproduct tree over the linear factors (x - p_i).
class SubproductTree {
 public:
  static constexpr size_t kNaiveThreshold = 16;

  SubproductTree(const BaseField& K, const std::vector<Fq>& pts);

  const FqPoly& root() const { return nodes_[1]; }
  size_t size() const { return n_; }

  /// f(p_i) for every point.
  std::vector<Fq> evaluate(const FqPoly& f) const;
  /// sum_i c_i * prod_{j != i}(x - p_j).
  FqPoly linear_combination(const std::vector<Fq>& c) const;

 private:
  void build(size_t node, size_t lo, size_t hi);
  void eval_rec(size_t node, size_t lo, size_t hi, const FqPoly& f, std::vector<Fq>& out) const;
  FqPoly comb_rec(size_t node, size_t lo, size_t hi, const std::vector<Fq>& c) const;

  const BaseField* K_;
  std::vector<Fq> pts_;
  size_t n_;
  std::vector<FqPoly> nodes_;
};

/// Subproduct-tree evaluation, naive Horner below the threshold.
std::vector<Fq> multipoint_eval(const BaseField& K, const FqPoly& f, const std::vector<Fq>& pts);

}  // namespace ellbasis
