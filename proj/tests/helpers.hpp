#pragma once

#include <functional>
#include <vector>

#include "doctest.h"
#include "ellbasis/base_field.hpp"
#include "ellbasis/errors.hpp"

namespace testing_util {

using namespace ellbasis;

inline std::vector<Fq> vec(const BaseField& K, std::initializer_list<int64_t> xs) {
  std::vector<Fq> r;
  for (auto x : xs) r.push_back(K.from_int(x));
  return r;
}

inline FqPoly pol(const BaseField& K, std::initializer_list<int64_t> xs) { return poly::make(K, vec(K, xs)); }

inline bool throws_code(Errc code, const std::function<void()>& fn) {
  try {
    fn();
  } catch (const Error& e) {
    return e.code() == code;
  }
  return false;
}

}  // namespace testing_util
