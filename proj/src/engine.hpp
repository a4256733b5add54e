// Trial orchestration: sample, assemble, rank, and aggregate into verdicts,
// plus the cross-checking audits (residual/trace inequality, quadric
// criterion, sundial counts, projection identity at degree 2, and the
// defect classifier for a fat space plus lines at degree = multiplicity).
#pragma once

#include <vector>

#include "combinatorics.hpp"
#include "config.hpp"
#include "gf.hpp"
#include "horace.hpp"
#include "quadric.hpp"

namespace postulation {

// One successful trial certifies maximal rank (rank is maximized on a dense
// open set, so any witness suffices); apparent defects instead need
// repetition to rule out unlucky samples.
inline constexpr int kCertifyTrials = 3;
inline constexpr int kEvidenceTrials = 7;

struct Verdict {
  ExpectedCounts expected;
  i64 best_rank = 0;
  i64 observed_h0 = 0;  // ambient - best_rank
  i64 observed_h1 = 0;  // conditions - best_rank
  i64 defect = 0;       // observed_h0 - expected_h0 (never negative)
  i64 virtual_defect = 0;  // observed_h0 - virtual_h0 = conditions - best_rank
  int trials_run = 0;
  bool certified = false;  // some trial reached rank = min(ambient, conditions)
  std::vector<i64> trial_ranks;
};

// Runs `trials` independent samplings (seeds derived per trial) and
// aggregates on the best rank. A certified verdict proves maximal rank for
// the generic configuration over this field; a non-certified verdict is
// evidence of a defect, not a proof.
Verdict verify_postulation(const SchemeConfig& cfg, int trials, u64 seed, const Gf& gf);

struct CastelnuovoReport {
  i64 lhs_h0 = 0;       // full configuration at degree d
  i64 residual_h0 = 0;  // residual at degree d - degree_drop
  i64 trace_h0 = 0;     // trace at degree d on the surface
  bool inequality_holds = false;  // lhs <= residual + trace
};

// Checks the residual/trace upper bound h0(X, d) <= h0(Res, d - e) + h0(Tr, d)
// with all three sides measured by independent rank trials. The trace side is
// computed in the surface's own coordinates: one dimension down for the
// hyperplane, bidegree (d, d) for the quadric.
CastelnuovoReport castelnuovo_audit(const SchemeConfig& cfg, const HoraceSplit& split,
                                    int trials, u64 seed, const Gf& gf);

struct QuadricCrossCheck {
  bool admissible = false;
  bool certified_vanishing = false;  // best rank filled all (d+1)^2 conditions
  i64 best_rank = 0;
};

// Admissibility of (ruling lines, free points, aligned points, double
// points) at bidegree (d, d) against the rank actually achieved; whenever
// the combinatorial test accepts, the rank certification must succeed.
QuadricCrossCheck hh_cross_check(i64 ruling_lines, i64 free_points, i64 aligned_points,
                                 i64 double_points, int d, int trials, u64 seed, const Gf& gf);

// Verdict for `sundials` sundials plus `lines` free lines in P^n at degree d;
// the expected condition count is (2*sundials + lines)*(d+1).
Verdict sundial_audit(i64 sundials, i64 lines, int n, int d, int trials, u64 seed, const Gf& gf);

struct ProjectionReport {
  i64 h0_full = 0;       // double line + s lines at degree 2 in P^n
  i64 h0_projected = 0;  // s lines at degree 2 in P^(n-2)
  bool equal = false;
};

// Degree-2 projection identity: forms singular along a line correspond to
// forms two dimensions down, carrying the s generic lines along. Requires
// n >= 4.
ProjectionReport projection_audit_d2(int n, i64 s, int trials, u64 seed, const Gf& gf);

struct ConjectureReport {
  Verdict verdict;
  ExceptionInfo classification;
  // In the exceptional family: every trial's virtual defect equals
  // C(lines, 2). Outside it: certified with defect 0.
  bool matches = false;
};

// Audits the degree = multiplicity family: an m-fold r-dimensional linear
// space plus s generic lines at d = m. Requires n >= r + 2 >= 3 and m >= 2.
ConjectureReport conjecture_audit(int n, int r, int m, i64 s, int trials, u64 seed, const Gf& gf);

// Best rank over `trials` for every nested prefix of a bundle of s_max
// generic lines (optionally preceded by a double line): result[s] is the
// best stacked rank of the first s lines (plus the double line when asked).
// One growing row basis per trial makes the whole sweep one elimination.
std::vector<i64> incremental_line_ranks(int n, int d, i64 s_max, bool with_double_line,
                                        int trials, u64 seed, const Gf& gf);

}  // namespace postulation
