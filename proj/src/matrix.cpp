#include "matrix.hpp"

#include <algorithm>

#include "rng.hpp"

namespace postulation {

namespace {

constexpr u64 kM31 = 2147483647ull;

// Reduces any x < 2^63 modulo 2^31 - 1.
inline u64 m31_reduce(u64 x) {
  x = (x & kM31) + (x >> 31);
  x = (x & kM31) + (x >> 31);
  return x >= kM31 ? x - kM31 : x;
}

}  // namespace

void DenseMatrix::append_rows(const DenseMatrix& other) {
  if (cols == 0 && rows == 0) cols = other.cols;
  if (other.cols != cols) throw RangeError("column mismatch when stacking rows");
  a.insert(a.end(), other.a.begin(), other.a.end());
  rows += other.rows;
}

void RowBasis::reduce(std::vector<u64>& v) const {
  const size_t k = rows_.size();
  if (gf_->mersenne31) {
    for (size_t i = 0; i < k; ++i) {
      const i64 c = pivots_[i];
      const u64 f = v[static_cast<size_t>(c)];
      if (f == 0) continue;
      const u64 g = kM31 - f;  // add g * pivot row == subtract f * pivot row
      const u64* src = rows_[i].data();
      u64* dst = v.data();
      for (i64 j = c; j < cols_; ++j)
        dst[j] = m31_reduce(dst[j] + g * src[j]);
    }
  } else {
    for (size_t i = 0; i < k; ++i) {
      const i64 c = pivots_[i];
      const u64 f = v[static_cast<size_t>(c)];
      if (f == 0) continue;
      const u64 g = gf_->p - f;
      const u64* src = rows_[i].data();
      u64* dst = v.data();
      for (i64 j = c; j < cols_; ++j)
        dst[j] = gf_->add(dst[j], gf_->mul(g, src[j]));
    }
  }
}

bool RowBasis::add_row(std::span<const u64> row) {
  if (static_cast<i64>(row.size()) != cols_) throw RangeError("row length mismatch");
  std::vector<u64> v(row.begin(), row.end());
  reduce(v);
  i64 lead = -1;
  for (i64 j = 0; j < cols_; ++j) {
    if (v[static_cast<size_t>(j)] != 0) {
      lead = j;
      break;
    }
  }
  if (lead < 0) return false;
  const u64 scale = gf_->inv(v[static_cast<size_t>(lead)]);
  for (i64 j = lead; j < cols_; ++j)
    v[static_cast<size_t>(j)] = gf_->mul(v[static_cast<size_t>(j)], scale);
  auto pos = std::upper_bound(pivots_.begin(), pivots_.end(), lead);
  const size_t idx = static_cast<size_t>(pos - pivots_.begin());
  pivots_.insert(pos, lead);
  rows_.insert(rows_.begin() + static_cast<std::ptrdiff_t>(idx), std::move(v));
  return true;
}

i64 RowBasis::add_matrix(const DenseMatrix& m) {
  i64 grew = 0;
  for (i64 r = 0; r < m.rows; ++r)
    if (add_row(std::span<const u64>(m.row(r), static_cast<size_t>(m.cols)))) ++grew;
  return grew;
}

i64 rank_of(const DenseMatrix& m, const Gf& gf) {
  RowBasis basis(m.cols, gf);
  basis.add_matrix(m);
  return basis.rank();
}

DenseMatrix transpose(const DenseMatrix& m) {
  DenseMatrix t(m.cols, m.rows);
  for (i64 r = 0; r < m.rows; ++r)
    for (i64 c = 0; c < m.cols; ++c) t.at(c, r) = m.at(r, c);
  return t;
}

DenseMatrix mat_mul(const DenseMatrix& a, const DenseMatrix& b, const Gf& gf) {
  if (a.cols != b.rows) throw RangeError("dimension mismatch in matrix product");
  DenseMatrix c(a.rows, b.cols);
  for (i64 i = 0; i < a.rows; ++i) {
    for (i64 k = 0; k < a.cols; ++k) {
      const u64 f = a.at(i, k);
      if (f == 0) continue;
      for (i64 j = 0; j < b.cols; ++j)
        c.at(i, j) = gf.add(c.at(i, j), gf.mul(f, b.at(k, j)));
    }
  }
  return c;
}

std::vector<u64> mat_vec(const DenseMatrix& m, std::span<const u64> v, const Gf& gf) {
  if (static_cast<i64>(v.size()) != m.cols) throw RangeError("dimension mismatch");
  std::vector<u64> out(static_cast<size_t>(m.rows), 0);
  for (i64 r = 0; r < m.rows; ++r) {
    u64 acc = 0;
    for (i64 c = 0; c < m.cols; ++c) acc = gf.add(acc, gf.mul(m.at(r, c), v[static_cast<size_t>(c)]));
    out[static_cast<size_t>(r)] = acc;
  }
  return out;
}

DenseMatrix random_invertible(i64 size, u64 seed, const Gf& gf) {
  if (size < 1) throw RangeError("matrix size must be positive");
  SeedStream rng(seed);
  for (int attempt = 0; attempt < 256; ++attempt) {
    DenseMatrix m(size, size);
    for (u64& x : m.a) x = rng.field_element(gf);
    if (rank_of(m, gf) == size) return m;
  }
  throw SamplingError("failed to sample an invertible matrix; the field may be too small");
}

}  // namespace postulation
