// Monomial bookkeeping: the degree-d monomials in n + 1 variables in
// graded-lexicographic order (earlier variables get the larger exponents
// first), plus a tower of bases across degrees with multiply-by-variable
// index tables, which is what exact polynomial substitution runs on.
#pragma once

#include <unordered_map>
#include <vector>

#include "checked.hpp"

namespace postulation {

struct MonomialBasis {
  int ambient_dim = 0;  // projective dimension n; n + 1 variables
  int degree = 0;
  std::vector<std::vector<int>> exponents;  // graded-lex, stable across runs

  i64 size() const { return static_cast<i64>(exponents.size()); }
  // Index of an exponent vector, -1 when absent.
  i64 index_of(const std::vector<int>& e) const;

  std::unordered_map<u64, i64> lookup;  // packed-exponent hash -> index
};

u64 pack_exponents(const std::vector<int>& e);

// All monomials of total degree d in n + 1 variables; n >= 1, d >= 0.
MonomialBasis enumerate_basis(int n, int d);

// Bases of every degree 0..d for fixed n, with i64 tables mapping
// (monomial of degree k, variable) -> index of the product in degree k + 1.
class BasisTower {
 public:
  BasisTower(int n, int d);

  int ambient_dim() const { return n_; }
  int top_degree() const { return d_; }
  const MonomialBasis& at(int k) const { return bases_[static_cast<size_t>(k)]; }
  const MonomialBasis& top() const { return bases_.back(); }

  // Index in degree k + 1 of x_var times the degree-k monomial `mono`.
  i64 raise_index(int k, i64 mono, int var) const {
    return raise_[static_cast<size_t>(k)]
                 [static_cast<size_t>(mono) * (n_ + 1) + static_cast<size_t>(var)];
  }

 private:
  int n_;
  int d_;
  std::vector<MonomialBasis> bases_;
  std::vector<std::vector<i64>> raise_;
};

}  // namespace postulation
