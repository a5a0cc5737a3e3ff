#include "ellbasis/multipoint.hpp"

namespace ellbasis {

SubproductTree::SubproductTree(const BaseField& K, const std::vector<Fq>& pts) : K_(&K), pts_(pts), n_(pts.size()) {
  nodes_.resize(4 * (n_ ? n_ : 1));
  if (n_ == 0) {
    nodes_[1] = poly::constant(K, K.one());
    return;
  }
  build(1, 0, n_);
}

void SubproductTree::build(size_t node, size_t lo, size_t hi) {
  if (hi - lo == 1) {
    nodes_[node] = poly::make(*K_, {K_->neg(pts_[lo]), K_->one()});
    return;
  }
  size_t mid = (lo + hi) / 2;
  build(2 * node, lo, mid);
  build(2 * node + 1, mid, hi);
  nodes_[node] = poly::mul(*K_, nodes_[2 * node], nodes_[2 * node + 1]);
}

void SubproductTree::eval_rec(size_t node, size_t lo, size_t hi, const FqPoly& f, std::vector<Fq>& out) const {
  if (hi - lo <= kNaiveThreshold) {
    for (size_t i = lo; i < hi; ++i) out[i] = poly::eval(*K_, f, pts_[i]);
    return;
  }
  size_t mid = (lo + hi) / 2;
  eval_rec(2 * node, lo, mid, poly::rem(*K_, f, nodes_[2 * node]), out);
  eval_rec(2 * node + 1, mid, hi, poly::rem(*K_, f, nodes_[2 * node + 1]), out);
}

std::vector<Fq> SubproductTree::evaluate(const FqPoly& f) const {
  std::vector<Fq> out(n_, K_->zero());
  if (n_) eval_rec(1, 0, n_, poly::rem(*K_, f, nodes_[1]), out);
  return out;
}

FqPoly SubproductTree::comb_rec(size_t node, size_t lo, size_t hi, const std::vector<Fq>& c) const {
  if (hi - lo == 1) return poly::constant(*K_, c[lo]);
  size_t mid = (lo + hi) / 2;
  auto left = comb_rec(2 * node, lo, mid, c);
  auto right = comb_rec(2 * node + 1, mid, hi, c);
  return poly::add(*K_, poly::mul(*K_, left, nodes_[2 * node + 1]), poly::mul(*K_, right, nodes_[2 * node]));
}

FqPoly SubproductTree::linear_combination(const std::vector<Fq>& c) const {
  if (n_ == 0) return {};
  return comb_rec(1, 0, n_, c);
}

std::vector<Fq> multipoint_eval(const BaseField& K, const FqPoly& f, const std::vector<Fq>& pts) {
  if (pts.size() <= SubproductTree::kNaiveThreshold) {
    std::vector<Fq> out;
    out.reserve(pts.size());
    for (auto p : pts) out.push_back(poly::eval(K, f, p));
    return out;
  }
  return SubproductTree(K, pts).evaluate(f);
}

}  // namespace ellbasis
