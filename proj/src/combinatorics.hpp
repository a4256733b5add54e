// Exact counting layer: binomials, condition counts per component, the
// derived parameter budgets used by the induction bookkeeping, and the
// admissibility / exception classifiers. Everything here is closed-form
// integer arithmetic with overflow detection; no sampling.
#pragma once

#include <string>
#include <vector>

#include "checked.hpp"
#include "config.hpp"

namespace postulation {

// C(n, k) exactly; 0 outside the usual domain. Raises OverflowError when the
// value (or an intermediate product) does not fit in 64 bits.
i64 binomial(i64 n, i64 k);

// Number of linear conditions an m-fold structure on an r-dimensional linear
// subspace imposes on degree-d forms in P^n. Requires 0 <= r < n and
// 1 <= m <= d + 1.
i64 fat_space_conditions(int n, int d, int r, int m);

// Conditions imposed by one component on degree-d forms in P^n.
i64 component_conditions(const ComponentSpec& c, int n, int d);

struct ExpectedCounts {
  i64 ambient = 0;      // dimension of the space of degree-d forms
  i64 conditions = 0;   // total conditions imposed by the configuration
  i64 expected_h0 = 0;  // max(ambient - conditions, 0)
  i64 expected_h1 = 0;  // max(conditions - ambient, 0)
  i64 virtual_h0 = 0;   // ambient - conditions, allowed to be negative
};
ExpectedCounts expected_counts(const SchemeConfig& cfg);

// Line/point budget that makes a double line plus `lines` lines plus
// `collinear_points` collinear points exactly fill degree-d forms in P^n.
// Requires n >= 3 and d >= 3.
struct SquareParams {
  i64 lines = 0;
  i64 collinear_points = 0;
};
SquareParams square_parameters(int n, int d);

// How the square configuration is rearranged against the fixed hyperplane:
// how many lines stay generic, how many become sundial pairs, and how many
// are moved into the hyperplane. Requires (n >= 5, d >= 3) or (n = 4, d >= 5).
struct ResidualBudget {
  i64 kept_lines = 0;         // lines left transverse to the hyperplane
  i64 sundial_pairs = 0;      // pairs degenerated into sundials
  i64 specialized_lines = 0;  // lines moved into the hyperplane
};
ResidualBudget residual_budget(int n, int d);

// Second-stage budget inside the hyperplane for n >= 5, d >= 3.
struct TraceBudget {
  i64 specialized_lines = 0;
  i64 specialized_points = 0;
};
TraceBudget trace_budget(int n, int d);

// Second-stage budget on the quadric surface for n = 4, d >= 5.
struct RulingBudget {
  i64 ruling_lines = 0;
  i64 surface_points = 0;
};
RulingBudget ruling_budget(int d);

struct ScheduleCheck {
  std::string name;
  bool holds = false;
};

struct Schedule {
  int n = 0;
  int d = 0;
  SquareParams square;
  ResidualBudget residual;
  bool has_trace = false;  // n >= 5
  TraceBudget trace;
  bool has_ruling = false;  // n = 4
  RulingBudget ruling;
  std::vector<ScheduleCheck> checks;
  bool all_hold = false;
};

// Computes every derived budget for (n, d) and evaluates the feasibility
// checklist the induction relies on. Requires n = 4 with d >= 5, or n >= 5
// with d >= 3.
Schedule verify_schedule(int n, int d);

// Whether a union of `ruling_lines` first-ruling lines, `free_points` simple
// points, `aligned_points` simple points on one further first-ruling line and
// `double_points` double points is expected to impose exactly (d+1)^2
// independent conditions on bidegree-(d, d) surface forms.
bool quadric_fill_admissible(i64 ruling_lines, i64 free_points, i64 aligned_points,
                             i64 double_points, i64 d);

// Classifier for the one known defective family of a fat linear space plus
// s generic lines at degree d = multiplicity. Requires n >= space_dim + 2 >= 3,
// multiplicity >= 1, lines >= 0.
struct ExceptionInfo {
  bool exceptional = false;
  i64 virtual_defect = 0;  // C(lines, 2) in the exceptional range, else 0
};
ExceptionInfo classify_exception(int n, int d, int space_dim, int multiplicity, i64 lines);

}  // namespace postulation
