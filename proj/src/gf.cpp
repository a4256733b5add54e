#include "gf.hpp"

namespace postulation {

namespace {

u64 mulmod(u64 a, u64 b, u64 m) {
  return static_cast<u64>(static_cast<unsigned __int128>(a) * b % m);
}

u64 powmod(u64 a, u64 e, u64 m) {
  u64 r = 1 % m;
  a %= m;
  while (e) {
    if (e & 1) r = mulmod(r, a, m);
    a = mulmod(a, a, m);
    e >>= 1;
  }
  return r;
}

}  // namespace

bool is_prime(u64 n) {
  if (n < 2) return false;
  for (u64 q : {2ull, 3ull, 5ull, 7ull, 11ull, 13ull, 17ull, 19ull, 23ull, 29ull, 31ull, 37ull}) {
    if (n % q == 0) return n == q;
  }
  u64 d = n - 1;
  int s = 0;
  while ((d & 1) == 0) {
    d >>= 1;
    ++s;
  }
  // This witness set is deterministic for every 64-bit integer.
  for (u64 a : {2ull, 3ull, 5ull, 7ull, 11ull, 13ull, 17ull, 19ull, 23ull, 29ull, 31ull, 37ull}) {
    u64 x = powmod(a, d, n);
    if (x == 1 || x == n - 1) continue;
    bool composite = true;
    for (int i = 1; i < s; ++i) {
      x = mulmod(x, x, n);
      if (x == n - 1) {
        composite = false;
        break;
      }
    }
    if (composite) return false;
  }
  return true;
}

Gf::Gf(u64 prime) : p(prime), mersenne31(prime == kDefaultPrime) {
  if (p < 2 || p >= (1ull << 62)) throw RangeError("field modulus out of supported range");
  if (!is_prime(p)) throw RangeError("field modulus must be prime");
}

u64 Gf::pow(u64 a, u64 e) const { return powmod(a % p, e, p); }

u64 Gf::inv(u64 a) const {
  a %= p;
  if (a == 0) throw RangeError("zero has no multiplicative inverse");
  return powmod(a, p - 2, p);
}

}  // namespace postulation
