#include "engine.hpp"

#include <algorithm>
#include <stdexcept>

#include "matrix.hpp"
#include "rows.hpp"
#include "rng.hpp"

namespace postulation {

namespace {

Verdict aggregate(const ExpectedCounts& expected, std::vector<i64> ranks) {
  const i64 max_rank = std::min(expected.ambient, expected.conditions);
  Verdict v;
  v.expected = expected;
  v.trials_run = static_cast<int>(ranks.size());
  v.trial_ranks = std::move(ranks);
  v.best_rank = 0;
  for (i64 r : v.trial_ranks) {
    if (r > max_rank)
      throw std::logic_error("rank exceeded the condition count: row generation is broken");
    v.best_rank = std::max(v.best_rank, r);
  }
  v.observed_h0 = expected.ambient - v.best_rank;
  v.observed_h1 = expected.conditions - v.best_rank;
  v.defect = v.observed_h0 - expected.expected_h0;
  v.virtual_defect = v.observed_h0 - expected.virtual_h0;
  v.certified = v.best_rank == max_rank;
  return v;
}

}  // namespace

Verdict verify_postulation(const SchemeConfig& cfg, int trials, u64 seed, const Gf& gf) {
  if (trials < 1) throw RangeError("at least one trial is required");
  const ExpectedCounts expected = expected_counts(cfg);
  std::vector<i64> ranks;
  ranks.reserve(static_cast<size_t>(trials));
  for (int t = 0; t < trials; ++t) {
    const DenseMatrix m = assemble_matrix(cfg, derive_seed(seed, static_cast<u64>(t)), gf);
    ranks.push_back(rank_of(m, gf));
  }
  return aggregate(expected, std::move(ranks));
}

CastelnuovoReport castelnuovo_audit(const SchemeConfig& cfg, const HoraceSplit& split,
                                    int trials, u64 seed, const Gf& gf) {
  CastelnuovoReport rep;
  rep.lhs_h0 = verify_postulation(cfg, trials, derive_seed(seed, 0), gf).observed_h0;
  rep.residual_h0 = verify_postulation(split.residual, trials, derive_seed(seed, 1), gf).observed_h0;
  if (split.trace_on_quadric) {
    const int d = cfg.d;
    i64 best = 0;
    for (int t = 0; t < trials; ++t) {
      const u64 ts = derive_seed(derive_seed(seed, 2), static_cast<u64>(t));
      best = std::max(best, quadric_rank(split.trace_quadric, d, d, ts, gf));
    }
    rep.trace_h0 = quadric_basis_size(d, d) - best;
  } else {
    rep.trace_h0 =
        verify_postulation(split.trace_config, trials, derive_seed(seed, 2), gf).observed_h0;
  }
  rep.inequality_holds = rep.lhs_h0 <= rep.residual_h0 + rep.trace_h0;
  return rep;
}

QuadricCrossCheck hh_cross_check(i64 ruling_lines, i64 free_points, i64 aligned_points,
                                 i64 double_points, int d, int trials, u64 seed, const Gf& gf) {
  if (ruling_lines < 0 || free_points < 0 || aligned_points < 0 || double_points < 0 || d < 1)
    throw RangeError("quadric cross-check arguments must be nonnegative with d >= 1");
  QuadricCrossCheck out;
  out.admissible =
      quadric_fill_admissible(ruling_lines, free_points, aligned_points, double_points, d);
  QuadricSpec spec;
  spec.ruling_lines = ruling_lines;
  spec.free_points = free_points;
  spec.aligned_points = aligned_points;
  spec.double_points = double_points;
  for (int t = 0; t < trials; ++t)
    out.best_rank =
        std::max(out.best_rank, quadric_rank(spec, d, d, derive_seed(seed, static_cast<u64>(t)), gf));
  out.certified_vanishing = out.best_rank == quadric_basis_size(d, d);
  return out;
}

Verdict sundial_audit(i64 sundials, i64 lines, int n, int d, int trials, u64 seed, const Gf& gf) {
  if (sundials < 0 || lines < 0) throw RangeError("component counts must be nonnegative");
  SchemeConfig cfg;
  cfg.n = n;
  cfg.d = d;
  cfg.add(ComponentSpec::sundial(), sundials);
  cfg.add(ComponentSpec::line(), lines);
  return verify_postulation(cfg, trials, seed, gf);
}

ProjectionReport projection_audit_d2(int n, i64 s, int trials, u64 seed, const Gf& gf) {
  if (n < 4) throw RangeError("the degree-2 projection needs ambient dimension at least 4");
  if (s < 0) throw RangeError("line count must be nonnegative");
  SchemeConfig full;
  full.n = n;
  full.d = 2;
  full.add(ComponentSpec::fat_space(1, 2));
  full.add(ComponentSpec::line(), s);
  SchemeConfig projected;
  projected.n = n - 2;
  projected.d = 2;
  projected.add(ComponentSpec::line(), s);

  ProjectionReport rep;
  rep.h0_full = verify_postulation(full, trials, derive_seed(seed, 0), gf).observed_h0;
  rep.h0_projected = verify_postulation(projected, trials, derive_seed(seed, 1), gf).observed_h0;
  rep.equal = rep.h0_full == rep.h0_projected;
  return rep;
}

ConjectureReport conjecture_audit(int n, int r, int m, i64 s, int trials, u64 seed, const Gf& gf) {
  if (r < 1 || n < r + 2 || m < 2 || s < 0)
    throw RangeError("degree = multiplicity audit needs n >= r + 2 >= 3, m >= 2, s >= 0");
  SchemeConfig cfg;
  cfg.n = n;
  cfg.d = m;
  cfg.add(ComponentSpec::fat_space(r, m));
  cfg.add(ComponentSpec::line(), s);

  ConjectureReport rep;
  rep.verdict = verify_postulation(cfg, trials, seed, gf);
  rep.classification = classify_exception(n, m, r, m, s);
  if (rep.classification.exceptional) {
    rep.matches = true;
    for (i64 rank : rep.verdict.trial_ranks) {
      // Per-trial virtual defect: conditions minus the rank of that trial.
      if (rep.verdict.expected.conditions - rank != rep.classification.virtual_defect)
        rep.matches = false;
    }
  } else {
    rep.matches = rep.verdict.certified && rep.verdict.defect == 0;
  }
  return rep;
}

std::vector<i64> incremental_line_ranks(int n, int d, i64 s_max, bool with_double_line,
                                        int trials, u64 seed, const Gf& gf) {
  if (s_max < 0) throw RangeError("line count must be nonnegative");
  if (trials < 1) throw RangeError("at least one trial is required");
  SchemeConfig cfg;
  cfg.n = n;
  cfg.d = d;
  if (with_double_line) cfg.add(ComponentSpec::fat_space(1, 2));
  cfg.add(ComponentSpec::line(), s_max);
  cfg.validate();

  const BasisTower tower(n, d);
  std::vector<i64> best(static_cast<size_t>(s_max) + 1, 0);
  for (int t = 0; t < trials; ++t) {
    const u64 trial_seed = derive_seed(seed, static_cast<u64>(t));
    const SampledConfig sc = sample_config(cfg, derive_seed(trial_seed, 0), gf);
    SeedStream aux(derive_seed(trial_seed, 1));
    RowBasis basis(tower.top().size(), gf);
    size_t next = 0;
    if (with_double_line)
      basis.add_matrix(rows_for_component(sc.components[next++], tower, aux, gf));
    best[0] = std::max(best[0], basis.rank());
    for (i64 s = 1; s <= s_max; ++s) {
      basis.add_matrix(rows_for_component(sc.components[next++], tower, aux, gf));
      best[static_cast<size_t>(s)] = std::max(best[static_cast<size_t>(s)], basis.rank());
    }
  }
  return best;
}

}  // namespace postulation
