#pragma once

#include <Eigen/Core>
#include <cstdint>
#include <stdexcept>

namespace tricap {

// All arithmetic in this library is exact integer arithmetic. Torsion
// coefficients and parities are meaningless under rounding, so no routine
// ever touches floating point.
using Int = std::int64_t;
using IntMatrix = Eigen::Matrix<Int, Eigen::Dynamic, Eigen::Dynamic>;
using IntVector = Eigen::Matrix<Int, Eigen::Dynamic, 1>;

inline Int checked_add(Int a, Int b) {
  Int r;
  if (__builtin_add_overflow(a, b, &r))
    throw std::overflow_error("integer overflow in exact arithmetic");
  return r;
}

inline Int checked_sub(Int a, Int b) {
  Int r;
  if (__builtin_sub_overflow(a, b, &r))
    throw std::overflow_error("integer overflow in exact arithmetic");
  return r;
}

inline Int checked_mul(Int a, Int b) {
  Int r;
  if (__builtin_mul_overflow(a, b, &r))
    throw std::overflow_error("integer overflow in exact arithmetic");
  return r;
}

inline Int checked_neg(Int a) { return checked_sub(0, a); }

}  // namespace tricap
