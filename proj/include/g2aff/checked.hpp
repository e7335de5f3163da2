#pragma once

#include <cstdint>
#include <limits>
#include <string>

#include "g2aff/errors.hpp"

namespace g2aff {

// Character coefficients and dimensions.
using Int128 = __int128;

namespace checked {

template <typename T>
T add(T a, T b) {
  T out;
  if (__builtin_add_overflow(a, b, &out)) throw OverflowError("integer overflow in addition");
  return out;
}

template <typename T>
T sub(T a, T b) {
  T out;
  if (__builtin_sub_overflow(a, b, &out)) throw OverflowError("integer overflow in subtraction");
  return out;
}

template <typename T>
T mul(T a, T b) {
  T out;
  if (__builtin_mul_overflow(a, b, &out)) throw OverflowError("integer overflow in multiplication");
  return out;
}

}  // namespace checked

std::string to_string(Int128 value);

inline bool fits_int64(Int128 value) {
  return value >= std::numeric_limits<std::int64_t>::min() &&
         value <= std::numeric_limits<std::int64_t>::max();
}

}  // namespace g2aff
