// Deterministic sampling. Every randomized routine takes one 64-bit seed;
// independent substreams (per trial, per stage) come from derive_seed, a
// splitmix64 step over seed + (index + 1) * golden-ratio increment. The same
// seed therefore reproduces the same geometry on any platform.
#pragma once

#include <random>

#include "gf.hpp"

namespace postulation {

inline u64 derive_seed(u64 base, u64 index) {
  u64 z = base + 0x9E3779B97F4A7C15ull * (index + 1);
  z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ull;
  z = (z ^ (z >> 27)) * 0x94D049BB133111EBull;
  return z ^ (z >> 31);
}

class SeedStream {
 public:
  explicit SeedStream(u64 seed) : eng_(seed) {}

  u64 next() { return eng_(); }

  // Unbiased draw from [0, bound) by rejection; bound must be positive.
  u64 below(u64 bound) {
    const u64 limit = bound * (~0ull / bound);
    u64 x;
    do {
      x = eng_();
    } while (x >= limit);
    return x % bound;
  }

  u64 field_element(const Gf& gf) { return below(gf.p); }

  u64 nonzero_field_element(const Gf& gf) {
    u64 x;
    do {
      x = below(gf.p);
    } while (x == 0);
    return x;
  }

 private:
  std::mt19937_64 eng_;
};

}  // namespace postulation
