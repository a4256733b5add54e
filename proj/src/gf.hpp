// Arithmetic in the prime field Z/p. The modulus is validated by a
// deterministic Miller-Rabin test at construction. The default modulus
// 2^31 - 1 gets a branch-free reduction in the hot elimination kernels.
#pragma once

#include "checked.hpp"

namespace postulation {

inline constexpr u64 kDefaultPrime = 2147483647ull;  // 2^31 - 1

// Deterministic primality test, valid for all 64-bit inputs.
bool is_prime(u64 n);

struct Gf {
  u64 p = kDefaultPrime;
  bool mersenne31 = true;

  explicit Gf(u64 prime);

  u64 reduce(u64 x) const { return x % p; }
  u64 add(u64 a, u64 b) const {
    u64 s = a + b;
    return s >= p ? s - p : s;
  }
  u64 sub(u64 a, u64 b) const { return a >= b ? a - b : a + p - b; }
  u64 neg(u64 a) const { return a == 0 ? 0 : p - a; }
  u64 mul(u64 a, u64 b) const {
    return static_cast<u64>(static_cast<unsigned __int128>(a) * b % p);
  }
  u64 pow(u64 a, u64 e) const;
  // Multiplicative inverse; raises RangeError on zero.
  u64 inv(u64 a) const;
};

}  // namespace postulation
