#include "combinatorics.hpp"

#include <algorithm>

namespace postulation {

i64 binomial(i64 n, i64 k) {
  if (k < 0 || n < 0 || k > n) return 0;
  k = std::min(k, n - k);
  i64 r = 1;
  for (i64 i = 1; i <= k; ++i) {
    // r * (n - k + i) is always divisible by i, so the division is exact.
    r = checked_mul(r, n - k + i) / i;
  }
  return r;
}

i64 fat_space_conditions(int n, int d, int r, int m) {
  if (n < 2) throw RangeError("fat_space_conditions: need n >= 2");
  if (d < 1) throw RangeError("fat_space_conditions: need d >= 1");
  if (r < 0 || r >= n) throw RangeError("fat_space_conditions: need 0 <= r < n");
  if (m < 1 || m > d + 1) throw RangeError("fat_space_conditions: need 1 <= m <= d + 1");
  i64 total = 0;
  for (int i = 0; i < m; ++i) {
    i64 along = binomial(r + d - i, r);          // monomials tangent to the support
    i64 normal = binomial(n + i - r - 1, i);     // normal directions of order i
    total = checked_add(total, checked_mul(along, normal));
  }
  return total;
}

i64 component_conditions(const ComponentSpec& c, int n, int d) {
  switch (c.kind) {
    case ComponentKind::Line:
      return checked_add(d, 1);
    case ComponentKind::FatLinearSpace:
      return fat_space_conditions(n, d, c.space_dim, c.multiplicity);
    case ComponentKind::FatPoint:
      if (c.multiplicity < 1) throw RangeError("multiplicity must be positive");
      return binomial(c.multiplicity - 1 + n, n);
    case ComponentKind::CollinearPoints:
      return c.count;
    case ComponentKind::Sundial:
      return checked_mul(2, checked_add(d, 1));
    case ComponentKind::DegenerateConic:
      return checked_add(checked_mul(2, d), 1);
  }
  throw RangeError("unknown component kind");
}

ExpectedCounts expected_counts(const SchemeConfig& cfg) {
  cfg.validate();
  ExpectedCounts out;
  out.ambient = binomial(static_cast<i64>(cfg.n) + cfg.d, cfg.n);
  for (const ComponentSpec& c : cfg.components)
    out.conditions = checked_add(out.conditions, component_conditions(c, cfg.n, cfg.d));
  out.virtual_h0 = checked_sub(out.ambient, out.conditions);
  out.expected_h0 = std::max<i64>(out.virtual_h0, 0);
  out.expected_h1 = std::max<i64>(-out.virtual_h0, 0);
  return out;
}

SquareParams square_parameters(int n, int d) {
  if (n < 3 || d < 3) throw RangeError("square_parameters: need n >= 3 and d >= 3");
  i64 forms = binomial(static_cast<i64>(n) + d, n);
  i64 rest = checked_sub(forms, checked_add(checked_mul(n, d), 1));
  SquareParams p;
  p.lines = floor_div(rest, d + 1);
  p.collinear_points = floor_mod(rest, d + 1);
  return p;
}

ResidualBudget residual_budget(int n, int d) {
  bool ok = (n >= 5 && d >= 3) || (n == 4 && d >= 5);
  if (!ok) throw RangeError("residual_budget: need (n >= 5, d >= 3) or (n = 4, d >= 5)");
  SquareParams sq = square_parameters(n, d);
  i64 forms_below = binomial(static_cast<i64>(n) + d - 1, n);
  i64 rest = checked_sub(forms_below, checked_add(checked_mul(n, d - 1), 1));
  rest = checked_sub(rest, sq.collinear_points);
  ResidualBudget b;
  b.kept_lines = floor_div(rest, d);
  b.sundial_pairs = floor_mod(rest, d);
  b.specialized_lines = checked_sub(sq.lines, checked_add(b.kept_lines, checked_mul(2, b.sundial_pairs)));
  return b;
}

TraceBudget trace_budget(int n, int d) {
  if (n < 5 || d < 3) throw RangeError("trace_budget: need n >= 5 and d >= 3");
  SquareParams sq = square_parameters(n, d);
  ResidualBudget rb = residual_budget(n, d);
  i64 forms = binomial(static_cast<i64>(n) + d - 2, n - 2);
  i64 rest = checked_sub(forms, static_cast<i64>(n) - 1);
  rest = checked_sub(rest, checked_sub(sq.lines, rb.kept_lines));
  TraceBudget t;
  t.specialized_lines = floor_div(rest, d);
  t.specialized_points = floor_mod(rest, d);
  return t;
}

RulingBudget ruling_budget(int d) {
  if (d < 5) throw RangeError("ruling_budget: need d >= 5 (n = 4)");
  ResidualBudget rb = residual_budget(4, d);
  i64 square = checked_mul(static_cast<i64>(d) + 1, static_cast<i64>(d) + 1);
  i64 rest = checked_sub(square, checked_mul(d + 2, rb.sundial_pairs));
  rest = checked_sub(rest, checked_mul(2, rb.specialized_lines));
  RulingBudget r;
  r.ruling_lines = floor_div(rest, d - 1);
  r.surface_points = floor_mod(rest, d - 1);
  return r;
}

Schedule verify_schedule(int n, int d) {
  bool ok = (n >= 5 && d >= 3) || (n == 4 && d >= 5);
  if (!ok) throw RangeError("verify_schedule: need (n >= 5, d >= 3) or (n = 4, d >= 5)");
  Schedule s;
  s.n = n;
  s.d = d;
  s.square = square_parameters(n, d);
  s.residual = residual_budget(n, d);
  auto push = [&s](const char* name, bool holds) { s.checks.push_back({name, holds}); };
  push("residual_lines_nonneg", s.residual.kept_lines >= 0);
  push("specialized_lines_nonneg", s.residual.specialized_lines >= 0);
  if (n >= 5) {
    s.has_trace = true;
    s.trace = trace_budget(n, d);
    push("trace_lines_nonneg", s.trace.specialized_lines >= 0);
    push("trace_lines_within_specialized",
         s.trace.specialized_lines <= s.residual.specialized_lines);
    push("trace_points_within_kept",
         s.residual.kept_lines >=
             checked_add(s.residual.sundial_pairs, s.trace.specialized_points));
    i64 lhs = checked_sub(binomial(static_cast<i64>(n) + d - 2, n - 1),
                          checked_mul(checked_sub(s.square.lines,
                                                  checked_add(s.residual.kept_lines,
                                                              s.trace.specialized_lines)),
                                      d));
    i64 rhs = checked_add(checked_sub(s.residual.kept_lines,
                                      checked_add(s.residual.sundial_pairs,
                                                  s.trace.specialized_points)),
                          1);
    push("trace_identity", lhs == rhs);
  } else {
    s.has_ruling = true;
    s.ruling = ruling_budget(d);
    push("ruling_lines_nonneg", s.ruling.ruling_lines >= 0);
    push("ruling_lines_within_specialized",
         s.ruling.ruling_lines <= s.residual.specialized_lines);
    push("surface_points_within_kept", s.ruling.surface_points <= s.residual.kept_lines);
    push("ruling_degree_bound",
         checked_add(s.residual.sundial_pairs, s.ruling.ruling_lines) <= d);
    i64 lhs = checked_sub(s.residual.kept_lines, s.ruling.surface_points);
    i64 used = checked_sub(s.square.lines,
                           checked_add(s.residual.kept_lines,
                                       checked_add(s.ruling.ruling_lines,
                                                   s.residual.sundial_pairs)));
    i64 rhs = checked_sub(checked_sub(binomial(static_cast<i64>(d) + 1, 3), 4),
                          checked_mul(static_cast<i64>(d) - 1, used));
    push("ruling_identity", lhs == rhs);
  }
  s.all_hold = std::all_of(s.checks.begin(), s.checks.end(),
                           [](const ScheduleCheck& c) { return c.holds; });
  return s;
}

bool quadric_fill_admissible(i64 ruling_lines, i64 free_points, i64 aligned_points,
                             i64 double_points, i64 d) {
  if (ruling_lines < 0 || free_points < 0 || aligned_points < 0 || double_points < 0 || d < 0)
    return false;
  i64 square = checked_mul(d + 1, d + 1);
  i64 load = checked_add(checked_mul(ruling_lines, d + 1),
                         checked_add(free_points,
                                     checked_add(aligned_points, checked_mul(3, double_points))));
  if (load != square) return false;
  if (double_points > d + 1) return false;
  if (aligned_points > d + 1) return false;
  if (d > ruling_lines) {
    // 2 * double_points <= (d + 1 - aligned_points) + 2 * (d - ruling_lines - 1) * floor((d+1)/2)
    i64 bound = checked_add(checked_sub(d + 1, aligned_points),
                            checked_mul(2, checked_mul(d - ruling_lines - 1, (d + 1) / 2)));
    if (checked_mul(2, double_points) > bound) return false;
  } else {
    if (double_points != 0) return false;
  }
  return true;
}

ExceptionInfo classify_exception(int n, int d, int space_dim, int multiplicity, i64 lines) {
  if (space_dim < 1 || n < space_dim + 2)
    throw RangeError("classify_exception: need n >= space_dim + 2 >= 3");
  if (multiplicity < 1) throw RangeError("classify_exception: multiplicity must be positive");
  if (lines < 0) throw RangeError("classify_exception: line count must be nonnegative");
  if (d < 1) throw RangeError("classify_exception: need d >= 1");
  ExceptionInfo info;
  info.exceptional =
      (n == space_dim + 3) && (multiplicity == d) && (lines >= 2) && (lines <= d);
  info.virtual_defect = info.exceptional ? binomial(lines, 2) : 0;
  return info;
}

}  // namespace postulation
