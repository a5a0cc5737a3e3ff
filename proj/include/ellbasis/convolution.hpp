#pragma once

#include <memory>
#include <vector>

#include "ellbasis/base_field.hpp"

namespace ellbasis {

using FqVec = std::vector<Fq>;

/// Cyclic convolution c_j = sum_i a_i b_{(j-i) mod d}.
class ConvolutionStrategy {
 public:
  virtual ~ConvolutionStrategy() = default;
  virtual FqVec convolve(const BaseField& K, const FqVec& a, const FqVec& b) const = 0;
  virtual const char* name() const = 0;
};

class NaiveConvolution : public ConvolutionStrategy {
 public:
  FqVec convolve(const BaseField& K, const FqVec& a, const FqVec& b) const override;
  const char* name() const override { return "naive"; }
};

/// Karatsuba linear product folded modulo x^d - 1.
class KaratsubaConvolution : public ConvolutionStrategy {
 public:
  explicit KaratsubaConvolution(size_t threshold = 8) : threshold_(threshold) {}
  FqVec convolve(const BaseField& K, const FqVec& a, const FqVec& b) const override;
  const char* name() const override { return "karatsuba"; }

 private:
  size_t threshold_;
};

const ConvolutionStrategy& default_convolution();
std::shared_ptr<const ConvolutionStrategy> make_convolution(const std::string& name);

/// LengthMismatch on unequal lengths.
FqVec cyclic_convolution(const BaseField& K, const FqVec& a, const FqVec& b,
                         const ConvolutionStrategy& s = default_convolution());

/// b with a * b = e_0; NotInvertible when gcd(sum a_i x^i, x^d - 1) != 1.
FqVec convolution_inverse(const BaseField& K, const FqVec& a);

/// Componentwise product.
FqVec hadamard(const BaseField& K, const FqVec& a, const FqVec& b);

/// sigma(a)_i = a_{i-1}.
FqVec cyclic_shift(const FqVec& a, int by = 1);

}  // namespace ellbasis
