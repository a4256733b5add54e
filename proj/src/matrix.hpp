// Dense matrices over a prime field and exact rank computation by Gaussian
// elimination with the first nonzero entry as pivot. RowBasis keeps a
// reduced row-space basis so rows can be appended incrementally and the rank
// queried after every batch.
#pragma once

#include <span>
#include <vector>

#include "gf.hpp"

namespace postulation {

struct DenseMatrix {
  i64 rows = 0;
  i64 cols = 0;
  std::vector<u64> a;  // row-major

  DenseMatrix() = default;
  DenseMatrix(i64 r, i64 c) : rows(r), cols(c), a(static_cast<size_t>(r) * c, 0) {}

  u64& at(i64 r, i64 c) { return a[static_cast<size_t>(r) * cols + c]; }
  u64 at(i64 r, i64 c) const { return a[static_cast<size_t>(r) * cols + c]; }
  u64* row(i64 r) { return a.data() + static_cast<size_t>(r) * cols; }
  const u64* row(i64 r) const { return a.data() + static_cast<size_t>(r) * cols; }

  void append_rows(const DenseMatrix& other);
};

class RowBasis {
 public:
  RowBasis(i64 cols, const Gf& gf) : cols_(cols), gf_(&gf) {}

  // Returns true when the row enlarged the span.
  bool add_row(std::span<const u64> row);
  i64 add_matrix(const DenseMatrix& m);
  i64 rank() const { return static_cast<i64>(rows_.size()); }
  i64 cols() const { return cols_; }

 private:
  void reduce(std::vector<u64>& v) const;

  i64 cols_;
  const Gf* gf_;
  std::vector<std::vector<u64>> rows_;  // each scaled to leading entry 1
  std::vector<i64> pivots_;             // strictly increasing pivot columns
};

// Rank of m; the input is not modified.
i64 rank_of(const DenseMatrix& m, const Gf& gf);

DenseMatrix transpose(const DenseMatrix& m);
DenseMatrix mat_mul(const DenseMatrix& a, const DenseMatrix& b, const Gf& gf);
std::vector<u64> mat_vec(const DenseMatrix& m, std::span<const u64> v, const Gf& gf);

// Uniformly sampled invertible size x size matrix (resamples until the rank
// is full; the expected number of attempts is barely above one).
DenseMatrix random_invertible(i64 size, u64 seed, const Gf& gf);

}  // namespace postulation
