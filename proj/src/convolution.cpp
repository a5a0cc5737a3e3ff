#include "ellbasis/convolution.hpp"

#include <string>

#include "ellbasis/errors.hpp"
#include "ellbasis/poly.hpp"

namespace ellbasis {

namespace {

void check_lengths(const FqVec& a, const FqVec& b) {
  if (a.size() != b.size()) raise(Errc::LengthMismatch, "convolution operands differ in length");
}

void karatsuba(const BaseField& K, const Fq* a, const Fq* b, size_t n, Fq* out, size_t threshold) {
  // out has 2n-1 entries, zero-initialized by caller
  if (n <= threshold) {
    for (size_t i = 0; i < n; ++i)
      for (size_t j = 0; j < n; ++j) out[i + j] = K.add(out[i + j], K.mul(a[i], b[j]));
    return;
  }
  size_t h = n / 2, hi = n - h;
  FqVec z0(2 * h - 1, K.zero()), z2(2 * hi - 1, K.zero()), z1(2 * hi - 1, K.zero());
  karatsuba(K, a, b, h, z0.data(), threshold);
  karatsuba(K, a + h, b + h, hi, z2.data(), threshold);
  FqVec sa(hi), sb(hi);
  for (size_t i = 0; i < hi; ++i) {
    sa[i] = i < h ? K.add(a[i], a[h + i]) : a[h + i];
    sb[i] = i < h ? K.add(b[i], b[h + i]) : b[h + i];
  }
  karatsuba(K, sa.data(), sb.data(), hi, z1.data(), threshold);
  for (size_t i = 0; i < z0.size(); ++i) z1[i] = K.sub(z1[i], z0[i]);
  for (size_t i = 0; i < z2.size(); ++i) z1[i] = K.sub(z1[i], z2[i]);
  for (size_t i = 0; i < z0.size(); ++i) out[i] = K.add(out[i], z0[i]);
  for (size_t i = 0; i < z1.size(); ++i) out[h + i] = K.add(out[h + i], z1[i]);
  for (size_t i = 0; i < z2.size(); ++i) out[2 * h + i] = K.add(out[2 * h + i], z2[i]);
}

}  // namespace

FqVec NaiveConvolution::convolve(const BaseField& K, const FqVec& a, const FqVec& b) const {
  check_lengths(a, b);
  size_t d = a.size();
  FqVec c(d, K.zero());
  for (size_t i = 0; i < d; ++i) {
    if (K.is_zero(a[i])) continue;
    for (size_t j = 0; j < d; ++j) {
      size_t k = i + j < d ? i + j : i + j - d;
      c[k] = K.add(c[k], K.mul(a[i], b[j]));
    }
  }
  return c;
}

FqVec KaratsubaConvolution::convolve(const BaseField& K, const FqVec& a, const FqVec& b) const {
  check_lengths(a, b);
  size_t d = a.size();
  if (d == 0) return {};
  FqVec full(2 * d - 1, K.zero());
  karatsuba(K, a.data(), b.data(), d, full.data(), threshold_);
  FqVec c(full.begin(), full.begin() + d);
  for (size_t i = d; i < full.size(); ++i) c[i - d] = K.add(c[i - d], full[i]);
  return c;
}

const ConvolutionStrategy& default_convolution() {
  static const NaiveConvolution naive;
  return naive;
}

std::shared_ptr<const ConvolutionStrategy> make_convolution(const std::string& name) {
  if (name == "naive") return std::make_shared<NaiveConvolution>();
  if (name == "karatsuba") return std::make_shared<KaratsubaConvolution>();
  raise(Errc::InvalidArgument, "unknown convolution strategy: " + name);
}

FqVec cyclic_convolution(const BaseField& K, const FqVec& a, const FqVec& b, const ConvolutionStrategy& s) {
  return s.convolve(K, a, b);
}

FqVec convolution_inverse(const BaseField& K, const FqVec& a) {
  size_t d = a.size();
  auto A = poly::make(K, a);
  auto m = poly::make(K, FqVec(d + 1, K.zero()));
  m.c.assign(d + 1, K.zero());
  m.c[0] = K.neg(K.one());
  m.c[d] = K.one();
  auto [g, u, v] = poly::xgcd(K, A, m);
  if (g.degree() != 0) raise(Errc::NotInvertible, "vector is not invertible for cyclic convolution");
  auto r = poly::rem(K, u, m);
  FqVec out(d, K.zero());
  for (size_t i = 0; i < r.c.size(); ++i) out[i] = r.c[i];
  return out;
}

FqVec hadamard(const BaseField& K, const FqVec& a, const FqVec& b) {
  check_lengths(a, b);
  FqVec c(a.size());
  for (size_t i = 0; i < a.size(); ++i) c[i] = K.mul(a[i], b[i]);
  return c;
}

FqVec cyclic_shift(const FqVec& a, int by) {
  int d = static_cast<int>(a.size());
  FqVec r(d);
  for (int i = 0; i < d; ++i) r[((i + by) % d + d) % d] = a[i];
  return r;
}

}  // namespace ellbasis
