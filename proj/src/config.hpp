// Component and configuration model: which subschemes make up an instance
// and where they are allowed to sit relative to the fixed auxiliary
// hypersurfaces (a hyperplane, or a smooth quadric surface when n = 3).
#pragma once

#include <vector>

#include "checked.hpp"

namespace postulation {

enum class ComponentKind {
  Line,             // a reduced line, spanned by two points
  FatLinearSpace,   // an m-fold structure on a linear space of dimension space_dim
  FatPoint,         // an m-fold point (same counting as FatLinearSpace with space_dim 0)
  CollinearPoints,  // `count` distinct simple points on one shared line
  Sundial,          // two lines meeting at a point plus an embedded double point
                    // spread across a 3-space containing both lines
  DegenerateConic,  // two lines meeting at a point (no embedded structure)
};

enum class Placement {
  Free,              // generic position
  InHyperplane,      // contained in the fixed hyperplane (for a sundial: the
                     // two lines lie in the hyperplane, the 3-space does not)
  OnFirstRuling,     // a line of the first ruling of the fixed quadric (n = 3)
  OnSecondRuling,    // a line of the second ruling of the fixed quadric (n = 3)
  SupportOnQuadric,  // support placed on the fixed quadric: a point of the
                     // quadric, or a first-ruling line as fat-space support
};

struct ComponentSpec {
  ComponentKind kind = ComponentKind::Line;
  int space_dim = 0;     // FatLinearSpace only: dimension of the support
  int multiplicity = 1;  // FatLinearSpace / FatPoint
  i64 count = 1;         // CollinearPoints only: number of points
  Placement placement = Placement::Free;

  static ComponentSpec line(Placement where = Placement::Free) {
    return {ComponentKind::Line, 0, 1, 1, where};
  }
  static ComponentSpec fat_space(int dim, int mult, Placement where = Placement::Free) {
    return {ComponentKind::FatLinearSpace, dim, mult, 1, where};
  }
  static ComponentSpec fat_point(int mult, Placement where = Placement::Free) {
    return {ComponentKind::FatPoint, 0, mult, 1, where};
  }
  static ComponentSpec collinear(i64 points, Placement where = Placement::Free) {
    return {ComponentKind::CollinearPoints, 0, 1, points, where};
  }
  static ComponentSpec sundial(Placement where = Placement::Free) {
    return {ComponentKind::Sundial, 0, 1, 1, where};
  }
  static ComponentSpec degenerate_conic(Placement where = Placement::Free) {
    return {ComponentKind::DegenerateConic, 0, 1, 1, where};
  }
};

struct SchemeConfig {
  int n = 3;  // projective dimension of the ambient space
  int d = 1;  // degree of the forms under consideration
  // Auxiliary surfaces must be declared before any component may be placed
  // on them.
  bool with_hyperplane = false;
  bool with_quadric = false;
  std::vector<ComponentSpec> components;

  void add(const ComponentSpec& c, i64 copies = 1) {
    for (i64 i = 0; i < copies; ++i) components.push_back(c);
  }

  void validate() const;
};

}  // namespace postulation
