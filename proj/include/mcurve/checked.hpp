#pragma once

#include <cstdint>
#include <limits>

#include "mcurve/error.hpp"

// Overflow-checked 64-bit integer arithmetic. Every invariant formula in the
// library goes through these helpers so that a wrap-around surfaces as
// ErrorKind::Overflow instead of a silently wrong degree.

namespace mcurve::checked {

using Int = std::int64_t;
using Wide = __int128;

inline Int add(Int a, Int b) {
  Int out;
  if (__builtin_add_overflow(a, b, &out)) {
    throw Error(ErrorKind::Overflow, "integer overflow in addition");
  }
  return out;
}

inline Int sub(Int a, Int b) {
  Int out;
  if (__builtin_sub_overflow(a, b, &out)) {
    throw Error(ErrorKind::Overflow, "integer overflow in subtraction");
  }
  return out;
}

inline Int mul(Int a, Int b) {
  Int out;
  if (__builtin_mul_overflow(a, b, &out)) {
    throw Error(ErrorKind::Overflow, "integer overflow in multiplication");
  }
  return out;
}

inline Int neg(Int a) { return sub(0, a); }

template <typename... Rest>
Int add(Int a, Int b, Int c, Rest... rest) {
  return add(add(a, b), c, rest...);
}

template <typename... Rest>
Int mul(Int a, Int b, Int c, Rest... rest) {
  return mul(mul(a, b), c, rest...);
}

/// Narrow a 128-bit intermediate back to 64 bits.
inline Int narrow(Wide v) {
  if (v > std::numeric_limits<Int>::max() ||
      v < std::numeric_limits<Int>::min()) {
    throw Error(ErrorKind::Overflow, "value exceeds 64-bit range");
  }
  return static_cast<Int>(v);
}

/// Exact division; the caller guarantees divisibility (parity arguments).
inline Int exact_div(Int a, Int b) {
  if (b == 0 || a % b != 0) {
    throw Error(ErrorKind::InconsistentInput, "inexact integer division");
  }
  return a / b;
}

}  // namespace mcurve::checked
