#include "doctest.h"

#include "combinatorics.hpp"
#include "config.hpp"

#include <vector>

using namespace postulation;

namespace {

// Independent route for the fat-space condition count: total monomials minus
// the monomials that vanish to order >= m on the subspace {x_{r+1} = ... = 0}.
// A monomial survives in the ideal iff its degree in the normal variables is
// at least m, so the complement is counted directly.
i64 conditions_by_complement(int n, int d, int r, int m) {
  i64 ideal = 0;
  for (int i = m; i <= d; ++i)
    ideal += binomial(n - r - 1 + i, n - r - 1) * binomial(r + d - i, r);
  return binomial(static_cast<i64>(n) + d, n) - ideal;
}

}  // namespace

TEST_CASE("binomial coefficients") {
  CHECK(binomial(0, 0) == 1);
  CHECK(binomial(5, 0) == 1);
  CHECK(binomial(5, 5) == 1);
  CHECK(binomial(5, 2) == 10);
  CHECK(binomial(10, 3) == 120);
  CHECK(binomial(52, 5) == 2598960);
  CHECK(binomial(3, 7) == 0);
  CHECK(binomial(-1, 0) == 0);
  CHECK(binomial(4, -2) == 0);
  for (i64 n = 1; n <= 30; ++n)
    for (i64 k = 1; k <= n; ++k)
      CHECK(binomial(n, k) == binomial(n - 1, k - 1) + binomial(n - 1, k));
  CHECK_THROWS_AS(binomial(70, 35), OverflowError);
}

TEST_CASE("fat space condition counts") {
  // Double line in P^3 at degree 4: one condition per degree along the line
  // for each of the two normal orders.
  CHECK(fat_space_conditions(3, 4, 1, 2) == 13);
  // Triple plane in P^5 at degree 3; frozen against the complement route
  // below and a hand expansion (10 + 18 + 18).
  CHECK(fat_space_conditions(5, 3, 2, 3) == 46);
  CHECK(conditions_by_complement(5, 3, 2, 3) == 46);

  SUBCASE("agrees with the complement count everywhere in range") {
    for (int n = 2; n <= 7; ++n)
      for (int d = 1; d <= 8; ++d)
        for (int r = 0; r < n; ++r)
          for (int m = 1; m <= d + 1; ++m)
            CHECK(fat_space_conditions(n, d, r, m) == conditions_by_complement(n, d, r, m));
  }

  SUBCASE("specializations") {
    for (int n = 2; n <= 7; ++n)
      for (int d = 1; d <= 8; ++d) {
        // Simple point.
        CHECK(fat_space_conditions(n, d, 0, 1) == 1);
        // Double line.
        if (d >= 1) CHECK(fat_space_conditions(n, d, 1, 2) == static_cast<i64>(n) * d + 1);
        for (int m = 1; m <= d + 1; ++m)
          CHECK(fat_space_conditions(n, d, 0, m) == binomial(m - 1 + n, n));
        for (int r = 0; r < n; ++r)
          CHECK(fat_space_conditions(n, d, r, 1) == binomial(r + d, r));
      }
  }

  SUBCASE("range checks") {
    CHECK_THROWS_AS(fat_space_conditions(1, 3, 0, 1), RangeError);
    CHECK_THROWS_AS(fat_space_conditions(3, 0, 0, 1), RangeError);
    CHECK_THROWS_AS(fat_space_conditions(3, 3, 3, 1), RangeError);
    CHECK_THROWS_AS(fat_space_conditions(3, 3, -1, 1), RangeError);
    CHECK_THROWS_AS(fat_space_conditions(3, 3, 1, 0), RangeError);
    CHECK_THROWS_AS(fat_space_conditions(3, 3, 1, 5), RangeError);
  }
}

TEST_CASE("per-component condition counts") {
  const int n = 4, d = 3;
  CHECK(component_conditions(ComponentSpec::line(), n, d) == d + 1);
  CHECK(component_conditions(ComponentSpec::fat_space(1, 2), n, d) ==
        static_cast<i64>(n) * d + 1);
  CHECK(component_conditions(ComponentSpec::fat_point(1), n, d) == 1);
  CHECK(component_conditions(ComponentSpec::fat_point(2), n, d) == n + 1);
  CHECK(component_conditions(ComponentSpec::collinear(3), n, d) == 3);
  CHECK(component_conditions(ComponentSpec::sundial(), n, d) == 2 * (d + 1));
  CHECK(component_conditions(ComponentSpec::degenerate_conic(), n, d) == 2 * d + 1);
}

TEST_CASE("expected counts for whole configurations") {
  SUBCASE("empty configuration") {
    SchemeConfig cfg(3, 3);
    ExpectedCounts e = expected_counts(cfg);
    CHECK(e.ambient == 20);
    CHECK(e.conditions == 0);
    CHECK(e.expected_h0 == 20);
    CHECK(e.expected_h1 == 0);
    CHECK(e.virtual_h0 == 20);
  }
  SUBCASE("double line and two lines in P^4 at degree 2 is square") {
    SchemeConfig cfg(4, 2);
    cfg.add(ComponentSpec::fat_space(1, 2));
    cfg.add(ComponentSpec::line(), 2);
    ExpectedCounts e = expected_counts(cfg);
    CHECK(e.ambient == 15);
    CHECK(e.conditions == 15);
    CHECK(e.expected_h0 == 0);
    CHECK(e.expected_h1 == 0);
    CHECK(e.virtual_h0 == 0);
  }
  SUBCASE("overdetermined side") {
    SchemeConfig cfg(3, 1);
    cfg.add(ComponentSpec::line(), 3);
    ExpectedCounts e = expected_counts(cfg);
    CHECK(e.ambient == 4);
    CHECK(e.conditions == 6);
    CHECK(e.expected_h0 == 0);
    CHECK(e.expected_h1 == 2);
    CHECK(e.virtual_h0 == -2);
  }
}

TEST_CASE("square configuration parameters") {
  SquareParams p33 = square_parameters(3, 3);
  CHECK(p33.lines == 2);
  CHECK(p33.collinear_points == 2);
  SquareParams p44 = square_parameters(4, 4);
  CHECK(p44.lines == 10);
  CHECK(p44.collinear_points == 3);
  SquareParams p43 = square_parameters(4, 3);
  CHECK(p43.lines == 5);
  CHECK(p43.collinear_points == 2);

  SUBCASE("the defining identity holds across the range") {
    for (int n = 3; n <= 9; ++n)
      for (int d = 3; d <= 20; ++d) {
        SquareParams p = square_parameters(n, d);
        CHECK(p.lines >= 0);
        CHECK(p.collinear_points >= 0);
        CHECK(p.collinear_points <= d);
        i64 conditions = static_cast<i64>(n) * d + 1 + p.lines * (d + 1) + p.collinear_points;
        CHECK(conditions == binomial(static_cast<i64>(n) + d, n));
      }
  }
  CHECK_THROWS_AS(square_parameters(2, 3), RangeError);
  CHECK_THROWS_AS(square_parameters(3, 2), RangeError);
}

TEST_CASE("residual budget against the hyperplane") {
  ResidualBudget b45 = residual_budget(4, 5);
  CHECK(b45.kept_lines == 10);
  CHECK(b45.sundial_pairs == 0);
  CHECK(b45.specialized_lines == 7);
  ResidualBudget b47 = residual_budget(4, 7);
  CHECK(b47.kept_lines == 25);
  CHECK(b47.sundial_pairs == 5);
  CHECK(b47.specialized_lines == 2);
  ResidualBudget b53 = residual_budget(5, 3);
  CHECK(b53.kept_lines == 3);
  CHECK(b53.sundial_pairs == 1);
  CHECK(b53.specialized_lines == 5);

  SUBCASE("the residual fills one degree down exactly") {
    // One degree down the double line survives, each kept line imposes d
    // conditions, each sundial pair leaves only its meeting point, and the
    // collinear block is untouched.
    for (int n = 4; n <= 9; ++n)
      for (int d = (n == 4 ? 5 : 3); d <= 20; ++d) {
        SquareParams sq = square_parameters(n, d);
        ResidualBudget b = residual_budget(n, d);
        CHECK(b.kept_lines + 2 * b.sundial_pairs + b.specialized_lines == sq.lines);
        CHECK(b.sundial_pairs < d);
        i64 conditions = static_cast<i64>(n) * (d - 1) + 1 + b.kept_lines * d +
                         b.sundial_pairs + sq.collinear_points;
        CHECK(conditions == binomial(static_cast<i64>(n) + d - 1, n));
      }
  }
  CHECK_THROWS_AS(residual_budget(4, 4), RangeError);
  CHECK_THROWS_AS(residual_budget(3, 9), RangeError);
}

TEST_CASE("trace budget inside the hyperplane") {
  TraceBudget t53 = trace_budget(5, 3);
  CHECK(t53.specialized_lines == 3);
  CHECK(t53.specialized_points == 0);
  TraceBudget t54 = trace_budget(5, 4);
  CHECK(t54.specialized_lines == 5);
  TraceBudget t63 = trace_budget(6, 3);
  CHECK(t63.specialized_points == 0);
  CHECK_THROWS_AS(trace_budget(4, 6), RangeError);
}

TEST_CASE("ruling budget on the quadric") {
  RulingBudget r5 = ruling_budget(5);
  CHECK(r5.ruling_lines == 5);
  CHECK(r5.surface_points == 2);
  CHECK(ruling_budget(7).ruling_lines == 2);
  CHECK(ruling_budget(10).ruling_lines == 4);
  CHECK(residual_budget(4, 10).sundial_pairs == 5);
  CHECK_THROWS_AS(ruling_budget(4), RangeError);
}

TEST_CASE("schedule feasibility") {
  Schedule s47 = verify_schedule(4, 7);
  CHECK(s47.has_ruling);
  CHECK_FALSE(s47.has_trace);
  CHECK(s47.ruling.ruling_lines == 2);
  CHECK(s47.residual.specialized_lines == 2);
  CHECK(s47.all_hold);

  Schedule s53 = verify_schedule(5, 3);
  CHECK(s53.has_trace);
  CHECK(s53.all_hold);

  // Degree bound tight: the pairs plus the ruling lines exactly use up d.
  Schedule s46 = verify_schedule(4, 6);
  CHECK(s46.residual.sundial_pairs + s46.ruling.ruling_lines == 6);
  CHECK(s46.all_hold);

  SUBCASE("every case in the induction range is feasible") {
    for (int d = 5; d <= 30; ++d) CHECK(verify_schedule(4, d).all_hold);
    for (int n = 5; n <= 10; ++n)
      for (int d = 3; d <= 20; ++d) CHECK(verify_schedule(n, d).all_hold);
  }
  CHECK_THROWS_AS(verify_schedule(4, 4), RangeError);
  CHECK_THROWS_AS(verify_schedule(3, 8), RangeError);
}

TEST_CASE("quadric fill admissibility") {
  CHECK(quadric_fill_admissible(3, 4, 0, 2, 4));
  CHECK(quadric_fill_admissible(5, 8, 0, 2, 6));
  for (i64 d = 0; d <= 9; ++d) CHECK(quadric_fill_admissible(0, (d + 1) * (d + 1), 0, 0, d));
  // The count must balance exactly.
  CHECK_FALSE(quadric_fill_admissible(3, 5, 0, 2, 4));
  CHECK_FALSE(quadric_fill_admissible(3, 3, 0, 2, 4));
  // Too many double points for the available rows.
  CHECK_FALSE(quadric_fill_admissible(0, 1, 0, 8, 4));
  // Double points need a spare row direction once the rulings are used up.
  CHECK_FALSE(quadric_fill_admissible(4, 2, 0, 1, 4));
  CHECK(quadric_fill_admissible(4, 5, 0, 0, 4));
  CHECK_FALSE(quadric_fill_admissible(-1, 0, 0, 0, 3));
}

TEST_CASE("exceptional family classifier") {
  ExceptionInfo a = classify_exception(4, 2, 1, 2, 2);
  CHECK(a.exceptional);
  CHECK(a.virtual_defect == 1);
  ExceptionInfo b = classify_exception(4, 3, 1, 3, 3);
  CHECK(b.exceptional);
  CHECK(b.virtual_defect == 3);
  // Wrong codimension: the span of the configuration no longer forces it.
  CHECK_FALSE(classify_exception(5, 2, 1, 2, 2).exceptional);
  // Multiplicity must match the degree.
  CHECK_FALSE(classify_exception(4, 3, 1, 2, 2).exceptional);
  // One line is never defective, and past d lines the family regularizes.
  CHECK_FALSE(classify_exception(4, 2, 1, 2, 1).exceptional);
  CHECK_FALSE(classify_exception(4, 2, 1, 2, 3).exceptional);
  CHECK(classify_exception(4, 3, 1, 3, 2).exceptional);
  CHECK(classify_exception(6, 4, 3, 4, 4).exceptional);
  CHECK(classify_exception(6, 4, 3, 4, 4).virtual_defect == 6);
  CHECK_THROWS_AS(classify_exception(3, 2, 2, 2, 2), RangeError);
  CHECK_THROWS_AS(classify_exception(4, 2, 1, 0, 2), RangeError);
  CHECK_THROWS_AS(classify_exception(4, 2, 1, 2, -1), RangeError);
  CHECK_THROWS_AS(classify_exception(4, 0, 1, 2, 2), RangeError);
}
