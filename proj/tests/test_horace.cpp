#include "doctest.h"

#include "horace.hpp"

using namespace postulation;

namespace {

i64 count_kind(const SchemeConfig& cfg, ComponentKind k) {
  i64 c = 0;
  for (const auto& comp : cfg.components)
    if (comp.kind == k) ++c;
  return c;
}

}  // namespace

TEST_CASE("hyperplane split of the degree-3 base configuration") {
  // Double line kept free; one line and the collinear pair moved into the
  // hyperplane; one line kept free.
  SchemeConfig cfg(3, 3);
  cfg.with_hyperplane = true;
  cfg.add(ComponentSpec::fat_space(1, 2));
  cfg.add(ComponentSpec::line(Placement::InHyperplane));
  cfg.add(ComponentSpec::line());
  cfg.add(ComponentSpec::collinear(2, Placement::InHyperplane));

  HoraceSplit split = horace_split(cfg, SurfaceKind::Hyperplane);
  CHECK(split.degree_drop == 1);
  CHECK_FALSE(split.trace_on_quadric);

  // Residual: P^3 degree 2, double line + the free line.
  CHECK(split.residual.n == 3);
  CHECK(split.residual.d == 2);
  CHECK(count_kind(split.residual, ComponentKind::FatLinearSpace) == 1);
  CHECK(count_kind(split.residual, ComponentKind::Line) == 1);
  CHECK(split.residual.components.size() == 2);

  // Trace: P^2 degree 3, the double line meets in a double point, the free
  // line in a simple point, the specialized members stay whole.
  CHECK(split.trace_config.n == 2);
  CHECK(split.trace_config.d == 3);
  CHECK(count_kind(split.trace_config, ComponentKind::FatPoint) == 2);
  CHECK(count_kind(split.trace_config, ComponentKind::Line) == 1);
  CHECK(count_kind(split.trace_config, ComponentKind::CollinearPoints) == 1);
}

TEST_CASE("hyperplane split maps fat point multiplicities down") {
  SchemeConfig cfg(4, 4);
  cfg.with_hyperplane = true;
  cfg.add(ComponentSpec::fat_point(3, Placement::InHyperplane));
  cfg.add(ComponentSpec::fat_point(1, Placement::InHyperplane));
  cfg.add(ComponentSpec::fat_point(2));

  HoraceSplit split = horace_split(cfg, SurfaceKind::Hyperplane);
  // Residual: the specialized triple point leaves a double point; the
  // specialized simple point leaves nothing; the free double point persists.
  REQUIRE(split.residual.components.size() == 2);
  CHECK(split.residual.components[0].multiplicity == 2);
  CHECK(split.residual.components[1].multiplicity == 2);
  // Trace: both specialized points land with their multiplicities.
  REQUIRE(split.trace_config.components.size() == 2);
  CHECK(split.trace_config.components[0].multiplicity == 3);
  CHECK(split.trace_config.components[1].multiplicity == 1);
}

TEST_CASE("hyperplane split of a specialized sundial") {
  SchemeConfig cfg(4, 5);
  cfg.with_hyperplane = true;
  cfg.add(ComponentSpec::sundial(Placement::InHyperplane));
  HoraceSplit split = horace_split(cfg, SurfaceKind::Hyperplane);
  // The two lines lie in the hyperplane; the embedded double point pokes out
  // and leaves a simple point behind.
  REQUIRE(split.residual.components.size() == 1);
  CHECK(split.residual.components[0].kind == ComponentKind::FatPoint);
  CHECK(split.residual.components[0].multiplicity == 1);
  REQUIRE(split.trace_config.components.size() == 1);
  CHECK(split.trace_config.components[0].kind == ComponentKind::DegenerateConic);
}

TEST_CASE("quadric split of the degree-4 base configuration") {
  // Double line free; three lines on one ruling; one line free; the two
  // collinear points specialized onto the surface.
  SchemeConfig cfg(3, 4);
  cfg.with_quadric = true;
  cfg.add(ComponentSpec::fat_space(1, 2));
  cfg.add(ComponentSpec::line(Placement::OnFirstRuling), 3);
  cfg.add(ComponentSpec::line());
  cfg.add(ComponentSpec::collinear(2, Placement::SupportOnQuadric));

  HoraceSplit split = horace_split(cfg, SurfaceKind::Quadric);
  CHECK(split.degree_drop == 2);
  CHECK(split.trace_on_quadric);

  // Residual: P^3 degree 2, double line + the one free line.
  CHECK(split.residual.n == 3);
  CHECK(split.residual.d == 2);
  CHECK(split.residual.components.size() == 2);

  // Trace on the surface: 3 ruling lines; the free line crosses twice, the
  // double line twice doubled, the marked pair lands as 2 free points.
  CHECK(split.trace_quadric.ruling_lines == 3);
  CHECK(split.trace_quadric.free_points == 4);
  CHECK(split.trace_quadric.double_points == 2);
  CHECK(split.trace_quadric.aligned_points == 0);
  CHECK(quadric_fill_admissible(3, 4, 0, 2, 4));
}

TEST_CASE("quadric split distributes points by placement") {
  SchemeConfig cfg(3, 5);
  cfg.with_quadric = true;
  cfg.add(ComponentSpec::fat_point(1, Placement::SupportOnQuadric));
  cfg.add(ComponentSpec::fat_point(1));
  cfg.add(ComponentSpec::collinear(5, Placement::OnFirstRuling));

  HoraceSplit split = horace_split(cfg, SurfaceKind::Quadric);
  CHECK(split.trace_quadric.free_points == 1);
  CHECK(split.trace_quadric.aligned_points == 5);
  REQUIRE(split.residual.components.size() == 1);
  CHECK(split.residual.components[0].kind == ComponentKind::FatPoint);
  CHECK(split.residual.d == 3);
}

TEST_CASE("split rejections") {
  SUBCASE("free sundial against the hyperplane") {
    SchemeConfig cfg(4, 5);
    cfg.with_hyperplane = true;
    cfg.add(ComponentSpec::sundial());
    CHECK_THROWS_AS(horace_split(cfg, SurfaceKind::Hyperplane), UnsupportedSplitError);
  }
  SUBCASE("sundial against the quadric") {
    SchemeConfig cfg(3, 5);
    cfg.with_quadric = true;
    cfg.add(ComponentSpec::sundial());
    CHECK_THROWS_AS(horace_split(cfg, SurfaceKind::Quadric), UnsupportedSplitError);
  }
  SUBCASE("two aligned blocks on the quadric") {
    SchemeConfig cfg(3, 5);
    cfg.with_quadric = true;
    cfg.add(ComponentSpec::collinear(2, Placement::OnFirstRuling), 2);
    CHECK_THROWS_AS(horace_split(cfg, SurfaceKind::Quadric), UnsupportedSplitError);
  }
  SUBCASE("quadric splits need ambient dimension 3") {
    SchemeConfig cfg(4, 5);
    cfg.with_quadric = true;
    CHECK_THROWS_AS(cfg.validate(), RangeError);
  }
  SUBCASE("degree too small to drop") {
    SchemeConfig cfg1(3, 1);
    cfg1.with_hyperplane = true;
    CHECK_THROWS_AS(horace_split(cfg1, SurfaceKind::Hyperplane), RangeError);
    SchemeConfig cfg2(3, 2);
    cfg2.with_quadric = true;
    CHECK_THROWS_AS(horace_split(cfg2, SurfaceKind::Quadric), RangeError);
  }
}

TEST_CASE("empty configurations split to empty parts") {
  SchemeConfig cfg(5, 4);
  cfg.with_hyperplane = true;
  HoraceSplit split = horace_split(cfg, SurfaceKind::Hyperplane);
  CHECK(split.residual.components.empty());
  CHECK(split.trace_config.components.empty());
  CHECK(split.residual.d == 3);
  CHECK(split.trace_config.n == 4);
}
