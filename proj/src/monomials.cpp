#include "monomials.hpp"

#include "combinatorics.hpp"

namespace postulation {

u64 pack_exponents(const std::vector<int>& e) {
  // FNV-1a over the exponent entries; collisions are resolved by the caller
  // comparing exponent vectors via the index it maps to.
  u64 h = 1469598103934665603ull;
  for (int x : e) {
    h ^= static_cast<u64>(x) + 0x9E3779B9ull;
    h *= 1099511628211ull;
  }
  return h;
}

i64 MonomialBasis::index_of(const std::vector<int>& e) const {
  auto it = lookup.find(pack_exponents(e));
  if (it == lookup.end()) return -1;
  // Verify against the stored vector in case of a hash collision.
  if (exponents[static_cast<size_t>(it->second)] == e) return it->second;
  for (size_t i = 0; i < exponents.size(); ++i)
    if (exponents[i] == e) return static_cast<i64>(i);
  return -1;
}

MonomialBasis enumerate_basis(int n, int d) {
  if (n < 1) throw RangeError("enumerate_basis: need n >= 1");
  if (d < 0) throw RangeError("enumerate_basis: need d >= 0");
  (void)binomial(static_cast<i64>(n) + d, n);  // overflow signal before allocating
  MonomialBasis b;
  b.ambient_dim = n;
  b.degree = d;
  std::vector<int> cur(static_cast<size_t>(n) + 1, 0);
  // Lexicographic descent: assign the leading variables the largest
  // exponents first, recursing over the remaining budget.
  auto emit = [&](auto&& self, int pos, int remaining) -> void {
    if (pos == n) {
      cur[static_cast<size_t>(pos)] = remaining;
      b.exponents.push_back(cur);
      return;
    }
    for (int e = remaining; e >= 0; --e) {
      cur[static_cast<size_t>(pos)] = e;
      self(self, pos + 1, remaining - e);
    }
    cur[static_cast<size_t>(pos)] = 0;
  };
  emit(emit, 0, d);
  b.lookup.reserve(b.exponents.size());
  for (size_t i = 0; i < b.exponents.size(); ++i)
    b.lookup.emplace(pack_exponents(b.exponents[i]), static_cast<i64>(i));
  return b;
}

BasisTower::BasisTower(int n, int d) : n_(n), d_(d) {
  if (d < 0) throw RangeError("BasisTower: need d >= 0");
  bases_.reserve(static_cast<size_t>(d) + 1);
  for (int k = 0; k <= d; ++k) bases_.push_back(enumerate_basis(n, k));
  raise_.resize(static_cast<size_t>(d));
  for (int k = 0; k + 1 <= d; ++k) {
    const MonomialBasis& lo = bases_[static_cast<size_t>(k)];
    const MonomialBasis& hi = bases_[static_cast<size_t>(k) + 1];
    std::vector<i64>& table = raise_[static_cast<size_t>(k)];
    table.assign(static_cast<size_t>(lo.size()) * (n_ + 1), -1);
    std::vector<int> e;
    for (i64 m = 0; m < lo.size(); ++m) {
      for (int v = 0; v <= n_; ++v) {
        e = lo.exponents[static_cast<size_t>(m)];
        ++e[static_cast<size_t>(v)];
        table[static_cast<size_t>(m) * (n_ + 1) + static_cast<size_t>(v)] = hi.index_of(e);
      }
    }
  }
}

}  // namespace postulation
