// Condition rows: every component turns into linear conditions on the
// coefficient vector of a degree-d form, one row per condition. Restrictions
// to lines become binary-form coefficient rows; fat structures go through an
// exact change of coordinates followed by polynomial substitution; points
// become evaluation rows, optionally with directional derivatives.
#pragma once

#include "monomials.hpp"
#include "sampling.hpp"

namespace postulation {

// d + 1 coefficient rows of the restriction to the line through a and b.
// Degenerate spans are rejected.
DenseMatrix rows_for_line(const std::vector<u64>& a, const std::vector<u64>& b,
                          const MonomialBasis& basis, const Gf& gf);

// Conditions for vanishing to order `multiplicity` along the span of
// `points`. The span is carried to a coordinate subspace by an invertible
// change of coordinates whose completion is drawn from `rng`; the row space
// does not depend on the completion. Emits exactly
// fat_space_conditions(n, d, r, multiplicity) rows.
DenseMatrix rows_for_fat_space(const std::vector<std::vector<u64>>& points, int multiplicity,
                               const BasisTower& tower, SeedStream& rng, const Gf& gf);

// One evaluation row per point.
DenseMatrix evaluation_rows(const std::vector<const std::vector<u64>*>& points,
                            const MonomialBasis& basis, const Gf& gf);

// Evaluation at p followed by one directional-derivative row per direction.
DenseMatrix point_with_directions_rows(const std::vector<u64>& p,
                                       const std::vector<const std::vector<u64>*>& directions,
                                       const MonomialBasis& basis, const Gf& gf);

// All rows of one sampled component. Sundials emit the rows of both lines
// plus the embedded double point (value and three derivatives spanning its
// 3-space); the overlap with the line rows is deliberate and absorbed by
// rank. A sundial whose four spanning points fail to span a 3-space is
// rejected here rather than silently computed.
DenseMatrix rows_for_component(const SampledComponent& c, const BasisTower& tower,
                               SeedStream& rng, const Gf& gf);

// Stacks the component rows in configuration order.
DenseMatrix assemble_from_sampled(const SampledConfig& sc, const BasisTower& tower,
                                  u64 aux_seed, const Gf& gf);

// Samples geometry for cfg and assembles the full condition matrix
// (rows x C(n+d, n)). Deterministic per seed.
DenseMatrix assemble_matrix(const SchemeConfig& cfg, u64 seed, const Gf& gf);

}  // namespace postulation
