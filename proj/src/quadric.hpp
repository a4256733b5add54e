// Conditions on the smooth quadric surface, worked in its product-of-lines
// coordinates: forms of bidegree (a, b) in (u0, u1; v0, v1). Supports the
// union shapes that show up as traces: lines of the first ruling, free
// simple points, simple points aligned on one further first-ruling line, and
// double points.
#pragma once

#include "combinatorics.hpp"
#include "matrix.hpp"

namespace postulation {

struct QuadricSpec {
  i64 ruling_lines = 0;   // lines of the first ruling
  i64 free_points = 0;    // generic simple points
  i64 aligned_points = 0; // simple points on one extra first-ruling line
  i64 double_points = 0;  // generic double points
  bool empty() const {
    return ruling_lines == 0 && free_points == 0 && aligned_points == 0 && double_points == 0;
  }
};

// The (a+1)(b+1) bidegree-(a, b) monomials are ordered by (i, j) where i is
// the u0-exponent and j the v0-exponent, i major.
i64 quadric_basis_size(int a, int b);

// Condition rows for the given layout against bidegree-(a, b) forms: b + 1
// coefficient rows per ruling line, one evaluation row per simple point,
// three rows (value plus the two chart derivatives) per double point.
// Sampling is deterministic per seed and screened for genericity.
DenseMatrix quadric_rows(const QuadricSpec& spec, int a, int b, u64 seed, const Gf& gf);

i64 quadric_rank(const QuadricSpec& spec, int a, int b, u64 seed, const Gf& gf);

}  // namespace postulation
