// Overflow-checked 64-bit arithmetic and the error taxonomy shared across
// the library. All counting is exact integer arithmetic; overflow raises
// instead of wrapping.
#pragma once

#include <cstdint>
#include <stdexcept>

namespace postulation {

using i64 = std::int64_t;
using u64 = std::uint64_t;

struct OverflowError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

struct RangeError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

struct SamplingError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

struct UnsupportedSplitError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

inline i64 checked_add(i64 a, i64 b) {
  i64 r;
  if (__builtin_add_overflow(a, b, &r)) throw OverflowError("integer overflow in addition");
  return r;
}

inline i64 checked_sub(i64 a, i64 b) {
  i64 r;
  if (__builtin_sub_overflow(a, b, &r)) throw OverflowError("integer overflow in subtraction");
  return r;
}

inline i64 checked_mul(i64 a, i64 b) {
  i64 r;
  if (__builtin_mul_overflow(a, b, &r)) throw OverflowError("integer overflow in multiplication");
  return r;
}

// Floor-division helpers with well-defined behavior for negative numerators.
// The divisor must be positive; the remainder always lands in [0, b).
inline i64 floor_div(i64 a, i64 b) {
  i64 q = a / b;
  i64 r = a % b;
  return (r != 0 && r < 0) ? q - 1 : q;
}

inline i64 floor_mod(i64 a, i64 b) { return a - floor_div(a, b) * b; }

}  // namespace postulation
