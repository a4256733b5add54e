// Random geometric realizations of a configuration over the prime field,
// together with the genericity screening (distinct supports, lines meeting
// only where the configuration says they do, sundial spans of full
// dimension). Sampling is deterministic per seed and resamples a bounded
// number of times before giving up.
#pragma once

#include "config.hpp"
#include "matrix.hpp"
#include "rng.hpp"

namespace postulation {

// Point lists per kind:
//   Line             {A, B}
//   FatLinearSpace   the space_dim + 1 spanning points
//   FatPoint         {P}
//   CollinearPoints  {A, B, P_1, ..., P_count} with P_i on the line AB
//   Sundial          {P, U, V, W}: lines PU and PV, embedded double point at P
//                    spread across the 3-space spanned by P, U, V, W
//   DegenerateConic  {P, U, V}: lines PU and PV
struct SampledComponent {
  ComponentSpec spec;
  std::vector<std::vector<u64>> points;
};

struct SampledConfig {
  int n = 0;
  int d = 0;
  std::vector<SampledComponent> components;
};

SampledConfig sample_config(const SchemeConfig& cfg, u64 seed, const Gf& gf);

// Applies one change of coordinates to every sampled point (directions
// transform the same way). Used to check that ranks are invariant under a
// projective change of coordinates.
void transform_geometry(SampledConfig& sc, const DenseMatrix& change, const Gf& gf);

// The fixed auxiliary hyperplane is {x_n = 0}; the fixed quadric surface in
// P^3 is the rank-4 quadric x0*x3 = x1*x2, carrying the two rulings of the
// product-of-lines parametrization below.
std::vector<u64> segre_point(u64 u0, u64 u1, u64 v0, u64 v1, const Gf& gf);

}  // namespace postulation
