// Residual/trace decomposition against one of the fixed auxiliary surfaces.
// The split is combinatorial: it maps each component spec to its residual
// part (one degree lower per surface degree) and its trace part (a
// configuration of the surface), according to how the component sits
// relative to the surface. Component/placement pairs outside the supported
// table are rejected loudly.
#pragma once

#include "config.hpp"
#include "quadric.hpp"

namespace postulation {

enum class SurfaceKind { Hyperplane, Quadric };

struct HoraceSplit {
  SurfaceKind surface = SurfaceKind::Hyperplane;
  int degree_drop = 1;  // 1 for the hyperplane, 2 for the quadric
  SchemeConfig residual;  // same ambient space, degree d - degree_drop
  bool trace_on_quadric = false;
  SchemeConfig trace_config;  // hyperplane trace: ambient n - 1, degree d
  QuadricSpec trace_quadric;  // quadric trace, evaluated at bidegree (d, d)
};

HoraceSplit horace_split(const SchemeConfig& cfg, SurfaceKind surface);

}  // namespace postulation
