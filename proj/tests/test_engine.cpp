#include "doctest.h"

#include "engine.hpp"

using namespace postulation;

namespace {

const Gf& default_field() {
  static Gf gf(kDefaultPrime);
  return gf;
}

SchemeConfig double_line_plus_lines(int n, int d, i64 lines) {
  SchemeConfig cfg(n, d);
  cfg.add(ComponentSpec::fat_space(1, 2));
  cfg.add(ComponentSpec::line(), lines);
  return cfg;
}

}  // namespace

TEST_CASE("verdicts for landmark configurations") {
  const Gf& gf = default_field();

  SUBCASE("the defective square case never certifies") {
    Verdict v = verify_postulation(double_line_plus_lines(4, 2, 2), kEvidenceTrials, 21, gf);
    CHECK(v.expected.ambient == 15);
    CHECK(v.expected.conditions == 15);
    CHECK(v.best_rank == 14);
    CHECK(v.observed_h0 == 1);
    CHECK(v.observed_h1 == 1);
    CHECK(v.defect == 1);
    CHECK(v.virtual_defect == 1);
    CHECK_FALSE(v.certified);
    CHECK(v.trials_run == kEvidenceTrials);
    REQUIRE(v.trial_ranks.size() == static_cast<size_t>(kEvidenceTrials));
    for (i64 r : v.trial_ranks) CHECK(r == 14);
  }

  SUBCASE("the degree-3 square configuration certifies at zero") {
    SchemeConfig cfg = double_line_plus_lines(3, 3, 2);
    cfg.add(ComponentSpec::collinear(2));
    Verdict v = verify_postulation(cfg, kCertifyTrials, 22, gf);
    CHECK(v.expected.ambient == 20);
    CHECK(v.expected.conditions == 20);
    CHECK(v.certified);
    CHECK(v.observed_h0 == 0);
    CHECK(v.observed_h1 == 0);
    CHECK(v.defect == 0);
  }

  SUBCASE("an underdetermined case keeps the leftover sections") {
    Verdict v = verify_postulation(double_line_plus_lines(3, 4, 1), kCertifyTrials, 23, gf);
    CHECK(v.expected.ambient == 35);
    CHECK(v.expected.conditions == 18);
    CHECK(v.certified);
    CHECK(v.observed_h0 == 17);
    CHECK(v.observed_h1 == 0);
  }

  SUBCASE("reproducible per seed") {
    Verdict a = verify_postulation(double_line_plus_lines(3, 3, 3), 3, 77, gf);
    Verdict b = verify_postulation(double_line_plus_lines(3, 3, 3), 3, 77, gf);
    CHECK(a.trial_ranks == b.trial_ranks);
    CHECK(a.best_rank == b.best_rank);
  }
}

TEST_CASE("residual/trace inequality audits") {
  const Gf& gf = default_field();

  SUBCASE("degree-3 hyperplane stage is tight at zero") {
    SchemeConfig cfg(3, 3);
    cfg.with_hyperplane = true;
    cfg.add(ComponentSpec::fat_space(1, 2));
    cfg.add(ComponentSpec::line(Placement::InHyperplane));
    cfg.add(ComponentSpec::line());
    cfg.add(ComponentSpec::collinear(2, Placement::InHyperplane));
    HoraceSplit split = horace_split(cfg, SurfaceKind::Hyperplane);
    CastelnuovoReport r = castelnuovo_audit(cfg, split, kCertifyTrials, 31, gf);
    CHECK(r.lhs_h0 == 0);
    CHECK(r.residual_h0 == 0);
    CHECK(r.trace_h0 == 0);
    CHECK(r.inequality_holds);
  }

  SUBCASE("degree-4 quadric stage is tight at zero") {
    SchemeConfig cfg(3, 4);
    cfg.with_quadric = true;
    cfg.add(ComponentSpec::fat_space(1, 2));
    cfg.add(ComponentSpec::line(Placement::OnFirstRuling), 3);
    cfg.add(ComponentSpec::line());
    cfg.add(ComponentSpec::collinear(2, Placement::SupportOnQuadric));
    HoraceSplit split = horace_split(cfg, SurfaceKind::Quadric);
    CastelnuovoReport r = castelnuovo_audit(cfg, split, kCertifyTrials, 32, gf);
    CHECK(r.lhs_h0 == 0);
    CHECK(r.residual_h0 == 0);
    CHECK(r.trace_h0 == 0);
    CHECK(r.inequality_holds);
  }

  SUBCASE("a slack case keeps the inequality") {
    // Without the collinear pair the count is 33 of 35; both leftover
    // sections are explained by the trace side.
    SchemeConfig cfg(3, 4);
    cfg.with_quadric = true;
    cfg.add(ComponentSpec::fat_space(1, 2));
    cfg.add(ComponentSpec::line(Placement::OnFirstRuling), 3);
    cfg.add(ComponentSpec::line());
    HoraceSplit split = horace_split(cfg, SurfaceKind::Quadric);
    CastelnuovoReport r = castelnuovo_audit(cfg, split, kCertifyTrials, 33, gf);
    CHECK(r.lhs_h0 == 2);
    CHECK(r.residual_h0 == 0);
    CHECK(r.trace_h0 == 2);
    CHECK(r.inequality_holds);
  }
}

TEST_CASE("quadric criterion cross-check") {
  const Gf& gf = default_field();
  QuadricCrossCheck a = hh_cross_check(3, 4, 0, 2, 4, kCertifyTrials, 41, gf);
  CHECK(a.admissible);
  CHECK(a.certified_vanishing);
  CHECK(a.best_rank == 25);
  QuadricCrossCheck b = hh_cross_check(5, 8, 0, 2, 6, kCertifyTrials, 42, gf);
  CHECK(b.admissible);
  CHECK(b.certified_vanishing);
  for (int d = 1; d <= 6; ++d) {
    i64 pts = static_cast<i64>(d + 1) * (d + 1);
    QuadricCrossCheck c = hh_cross_check(0, pts, 0, 0, d, kCertifyTrials, 43, gf);
    CHECK(c.admissible);
    CHECK(c.certified_vanishing);
  }
  // Unbalanced load: not admissible, and the rank cannot fill the square.
  QuadricCrossCheck u = hh_cross_check(3, 2, 0, 2, 4, kCertifyTrials, 44, gf);
  CHECK_FALSE(u.admissible);
  CHECK_FALSE(u.certified_vanishing);
  CHECK(u.best_rank == 23);
}

TEST_CASE("sundial counts") {
  const Gf& gf = default_field();
  for (int n : {3, 4}) {
    for (int d : {2, 3}) {
      for (i64 x : {0, 1, 2}) {
        for (i64 y : {0, 1}) {
          if (x == 0 && y == 0) continue;
          Verdict v = sundial_audit(x, y, n, d, kCertifyTrials, 51, gf);
          i64 ambient = binomial(static_cast<i64>(n) + d, n);
          i64 conditions = (2 * x + y) * (d + 1);
          CHECK(v.expected.conditions == conditions);
          CHECK(v.best_rank == std::min(ambient, conditions));
          CHECK(v.certified);
        }
      }
    }
  }
}

TEST_CASE("degree-2 projection identity") {
  const Gf& gf = default_field();
  ProjectionReport a = projection_audit_d2(4, 2, kCertifyTrials, 61, gf);
  CHECK(a.h0_full == 1);
  CHECK(a.h0_projected == 1);
  CHECK(a.equal);
  ProjectionReport b = projection_audit_d2(5, 1, kCertifyTrials, 62, gf);
  CHECK(b.h0_full == 7);
  CHECK(b.equal);
  ProjectionReport c = projection_audit_d2(6, 0, kCertifyTrials, 63, gf);
  CHECK(c.h0_full == 15);
  CHECK(c.equal);
  for (i64 s = 0; s <= 4; ++s) CHECK(projection_audit_d2(4, s, kCertifyTrials, 64, gf).equal);
}

TEST_CASE("degree equals multiplicity family") {
  const Gf& gf = default_field();

  SUBCASE("inside the exceptional strip") {
    ConjectureReport a = conjecture_audit(4, 1, 3, 2, kEvidenceTrials, 71, gf);
    CHECK(a.classification.exceptional);
    CHECK(a.classification.virtual_defect == 1);
    CHECK(a.verdict.virtual_defect == 1);
    CHECK(a.matches);
    ConjectureReport b = conjecture_audit(5, 2, 3, 3, kEvidenceTrials, 72, gf);
    CHECK(b.classification.exceptional);
    CHECK(b.classification.virtual_defect == 3);
    CHECK(b.matches);
  }

  SUBCASE("outside the strip the family certifies") {
    ConjectureReport c = conjecture_audit(6, 1, 3, 2, kCertifyTrials, 73, gf);
    CHECK_FALSE(c.classification.exceptional);
    CHECK(c.verdict.certified);
    CHECK(c.verdict.defect == 0);
    CHECK(c.matches);
    ConjectureReport d = conjecture_audit(4, 1, 3, 4, kCertifyTrials, 74, gf);
    CHECK_FALSE(d.classification.exceptional);  // s = 4 > d regularizes
    CHECK(d.matches);
  }
}

TEST_CASE("incremental line rank sweeps") {
  const Gf& gf = default_field();

  SUBCASE("plain lines fill monotonically at the expected speed") {
    std::vector<i64> r = incremental_line_ranks(3, 3, 7, false, kCertifyTrials, 81, gf);
    REQUIRE(r.size() == 8);
    for (i64 s = 0; s <= 7; ++s) CHECK(r[static_cast<size_t>(s)] == std::min<i64>(4 * s, 20));
  }

  SUBCASE("the double-line prefix shows the one defective stop") {
    std::vector<i64> r = incremental_line_ranks(4, 2, 3, true, kEvidenceTrials, 82, gf);
    REQUIRE(r.size() == 4);
    CHECK(r[0] == 9);
    CHECK(r[1] == 12);
    CHECK(r[2] == 14);  // one short of the square: the defective case
    CHECK(r[3] == 15);  // recovered at the next line
  }

  SUBCASE("agrees with one-shot verdicts") {
    std::vector<i64> r = incremental_line_ranks(4, 3, 4, true, kCertifyTrials, 83, gf);
    for (i64 s = 0; s <= 4; ++s) {
      Verdict v = verify_postulation(double_line_plus_lines(4, 3, s), kCertifyTrials, 84, gf);
      CHECK(r[static_cast<size_t>(s)] == v.best_rank);
    }
  }
}
