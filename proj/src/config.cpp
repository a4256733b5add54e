#include "config.hpp"

#include <string>

namespace postulation {

void SchemeConfig::validate() const {
  if (n < 2) throw RangeError("ambient projective dimension must be at least 2");
  if (d < 1) throw RangeError("degree must be at least 1");
  if (with_quadric && n != 3)
    throw RangeError("the fixed smooth quadric surface is only available when n = 3");
  for (const ComponentSpec& c : components) {
    switch (c.kind) {
      case ComponentKind::FatLinearSpace:
        if (c.space_dim < 0 || c.space_dim >= n)
          throw RangeError("fat linear space dimension must satisfy 0 <= dim < n");
        if (c.multiplicity < 1 || c.multiplicity > d + 1)
          throw RangeError("multiplicity must satisfy 1 <= m <= d + 1");
        break;
      case ComponentKind::FatPoint:
        if (c.multiplicity < 1 || c.multiplicity > d + 1)
          throw RangeError("multiplicity must satisfy 1 <= m <= d + 1");
        break;
      case ComponentKind::CollinearPoints:
        if (c.count < 1) throw RangeError("a collinear block needs at least one point");
        break;
      case ComponentKind::Line:
      case ComponentKind::Sundial:
      case ComponentKind::DegenerateConic:
        break;
    }
    switch (c.placement) {
      case Placement::Free:
        break;
      case Placement::InHyperplane:
        if (!with_hyperplane)
          throw RangeError("placement requires a declared hyperplane");
        break;
      case Placement::OnFirstRuling:
      case Placement::OnSecondRuling:
        if (!with_quadric) throw RangeError("placement requires the declared quadric");
        if (c.kind != ComponentKind::Line && c.kind != ComponentKind::CollinearPoints)
          throw RangeError("ruling placement applies to lines and collinear blocks only");
        break;
      case Placement::SupportOnQuadric:
        if (!with_quadric) throw RangeError("placement requires the declared quadric");
        if (c.kind == ComponentKind::CollinearPoints) {
          // A line transverse to the quadric meets it in two points, so at
          // most two marked points of a block can sit on the surface.
          if (c.count > 2)
            throw RangeError("at most two collinear points fit on the quadric");
        } else if (!(c.kind == ComponentKind::FatPoint ||
                     (c.kind == ComponentKind::FatLinearSpace && c.space_dim <= 1))) {
          throw RangeError(
              "quadric support placement applies to points, fat lines, and pairs of collinear "
              "points only");
        }
        break;
    }
    if (c.kind == ComponentKind::Sundial && n < 3)
      throw RangeError("a sundial needs ambient dimension at least 3");
  }
}

}  // namespace postulation
