#pragma once

#include <optional>
#include <utility>
#include <vector>

#include "ellbasis/arith.hpp"
#include "ellbasis/errors.hpp"

namespace ellbasis {

template <class E>
using Matrix = std::vector<std::vector<E>>;

using Mat2 = Matrix<uint64_t>;

/// Some solution x of A x = b over F_p (residue matrices), or nullopt.
inline std::optional<std::vector<uint64_t>> solve_mod_p_any(Mat2 A, std::vector<uint64_t> b, uint64_t p) {
  size_t rows = A.size(), cols = rows ? A[0].size() : 0;
  std::vector<int> pivot_col;
  size_t r = 0;
  for (size_t c = 0; c < cols && r < rows; ++c) {
    size_t piv = r;
    while (piv < rows && A[piv][c] % p == 0) ++piv;
    if (piv == rows) continue;
    std::swap(A[piv], A[r]);
    std::swap(b[piv], b[r]);
    uint64_t iv = invmod(A[r][c], p);
    for (size_t j = c; j < cols; ++j) A[r][j] = mulmod(A[r][j], iv, p);
    b[r] = mulmod(b[r], iv, p);
    for (size_t i = 0; i < rows; ++i) {
      if (i == r || A[i][c] == 0) continue;
      uint64_t f = A[i][c];
      for (size_t j = c; j < cols; ++j) A[i][j] = (A[i][j] + p - mulmod(f, A[r][j], p)) % p;
      b[i] = (b[i] + p - mulmod(f, b[r], p)) % p;
    }
    pivot_col.push_back(static_cast<int>(c));
    ++r;
  }
  for (size_t i = r; i < rows; ++i)
    if (b[i] % p) return std::nullopt;
  std::vector<uint64_t> x(cols, 0);
  for (size_t i = 0; i < r; ++i) x[pivot_col[i]] = b[i];
  return x;
}

inline std::optional<std::vector<uint64_t>> solve_gf2_any(const Mat2& A, const std::vector<uint64_t>& b) {
  return solve_mod_p_any(A, b, 2);
}

/// Inverse of a square matrix over K; SingularSystem when singular.
template <class F>
Matrix<typename F::Element> mat_inverse(const F& K, Matrix<typename F::Element> A) {
  size_t n = A.size();
  Matrix<typename F::Element> I(n, std::vector<typename F::Element>(n, K.zero()));
  for (size_t i = 0; i < n; ++i) I[i][i] = K.one();
  for (size_t c = 0; c < n; ++c) {
    size_t piv = c;
    while (piv < n && K.is_zero(A[piv][c])) ++piv;
    if (piv == n) raise(Errc::SingularSystem, "matrix is singular");
    std::swap(A[piv], A[c]);
    std::swap(I[piv], I[c]);
    auto iv = K.inv(A[c][c]);
    for (size_t j = 0; j < n; ++j) {
      A[c][j] = K.mul(A[c][j], iv);
      I[c][j] = K.mul(I[c][j], iv);
    }
    for (size_t i = 0; i < n; ++i) {
      if (i == c || K.is_zero(A[i][c])) continue;
      auto f = A[i][c];
      for (size_t j = 0; j < n; ++j) {
        A[i][j] = K.sub(A[i][j], K.mul(f, A[c][j]));
        I[i][j] = K.sub(I[i][j], K.mul(f, I[c][j]));
      }
    }
  }
  return I;
}

template <class F>
std::vector<typename F::Element> mat_vec(const F& K, const Matrix<typename F::Element>& A,
                                         const std::vector<typename F::Element>& v) {
  std::vector<typename F::Element> r(A.size(), K.zero());
  for (size_t i = 0; i < A.size(); ++i)
    for (size_t j = 0; j < v.size(); ++j) r[i] = K.add(r[i], K.mul(A[i][j], v[j]));
  return r;
}

/// Solve A x = b for square nonsingular A; SingularSystem otherwise.
template <class F>
std::vector<typename F::Element> mat_solve(const F& K, const Matrix<typename F::Element>& A,
                                           const std::vector<typename F::Element>& b) {
  auto Ai = mat_inverse(K, A);
  return mat_vec(K, Ai, b);
}

template <class F>
size_t mat_rank(const F& K, Matrix<typename F::Element> A) {
  size_t rows = A.size(), cols = rows ? A[0].size() : 0, r = 0;
  for (size_t c = 0; c < cols && r < rows; ++c) {
    size_t piv = r;
    while (piv < rows && K.is_zero(A[piv][c])) ++piv;
    if (piv == rows) continue;
    std::swap(A[piv], A[r]);
    auto iv = K.inv(A[r][c]);
    for (size_t i = r + 1; i < rows; ++i) {
      if (K.is_zero(A[i][c])) continue;
      auto f = K.mul(A[i][c], iv);
      for (size_t j = c; j < cols; ++j) A[i][j] = K.sub(A[i][j], K.mul(f, A[r][j]));
    }
    ++r;
  }
  return r;
}

}  // namespace ellbasis
