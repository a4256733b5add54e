#include "horace.hpp"

#include <string>

namespace postulation {

namespace {

[[noreturn]] void reject(const char* what) {
  throw UnsupportedSplitError(std::string("unsupported split: ") + what);
}

void split_against_hyperplane(const SchemeConfig& cfg, HoraceSplit& out) {
  SchemeConfig& res = out.residual;
  SchemeConfig& tr = out.trace_config;
  for (const ComponentSpec& c : cfg.components) {
    const bool in_h = c.placement == Placement::InHyperplane;
    if (!in_h && c.placement != Placement::Free)
      reject("hyperplane split with a quadric placement");
    switch (c.kind) {
      case ComponentKind::Line:
        if (in_h) {
          tr.add(ComponentSpec::line());
        } else {
          res.add(ComponentSpec::line());
          tr.add(ComponentSpec::fat_point(1));  // the point where the line crosses
        }
        break;
      case ComponentKind::FatLinearSpace:
        if (c.space_dim == 0) {
          if (in_h) {
            tr.add(ComponentSpec::fat_point(c.multiplicity));
            if (c.multiplicity > 1) res.add(ComponentSpec::fat_point(c.multiplicity - 1));
          } else {
            res.add(ComponentSpec::fat_space(0, c.multiplicity));
          }
        } else if (c.space_dim == 1 && c.multiplicity == 2 && !in_h) {
          res.add(ComponentSpec::fat_space(1, 2));
          tr.add(ComponentSpec::fat_point(2));  // the crossing point doubles in the trace
        } else {
          reject("fat linear space in this position");
        }
        break;
      case ComponentKind::FatPoint:
        if (in_h) {
          tr.add(ComponentSpec::fat_point(c.multiplicity));
          if (c.multiplicity > 1) res.add(ComponentSpec::fat_point(c.multiplicity - 1));
        } else {
          res.add(ComponentSpec::fat_point(c.multiplicity));
        }
        break;
      case ComponentKind::CollinearPoints:
        if (in_h)
          tr.add(ComponentSpec::collinear(c.count));
        else
          res.add(ComponentSpec::collinear(c.count));
        break;
      case ComponentKind::Sundial:
        if (in_h) {
          // The two lines lie in the hyperplane, the embedded double point
          // does not: its residual is the plain meeting point.
          res.add(ComponentSpec::fat_point(1));
          tr.add(ComponentSpec::degenerate_conic());
        } else {
          reject("sundial transverse to the hyperplane");
        }
        break;
      case ComponentKind::DegenerateConic:
        reject("degenerate conic in a hyperplane split");
    }
  }
}

void split_against_quadric(const SchemeConfig& cfg, HoraceSplit& out) {
  SchemeConfig& res = out.residual;
  QuadricSpec& tr = out.trace_quadric;
  auto split_point = [&](i64 multiplicity, Placement placement) {
    if (multiplicity != 1) reject("fat point of higher multiplicity against the quadric");
    if (placement == Placement::SupportOnQuadric) {
      tr.free_points += 1;
    } else if (placement == Placement::Free) {
      res.add(ComponentSpec::fat_point(1));
    } else {
      reject("fat point placement against the quadric");
    }
  };
  for (const ComponentSpec& c : cfg.components) {
    switch (c.kind) {
      case ComponentKind::Line:
        if (c.placement == Placement::OnFirstRuling) {
          tr.ruling_lines += 1;
        } else if (c.placement == Placement::Free) {
          res.add(ComponentSpec::line());
          tr.free_points += 2;  // a line meets the quadric twice
        } else {
          reject("line placement against the quadric");
        }
        break;
      case ComponentKind::FatLinearSpace:
        if (c.space_dim == 1 && c.multiplicity == 2 && c.placement == Placement::Free) {
          res.add(ComponentSpec::fat_space(1, 2));
          tr.double_points += 2;  // both crossings double in the trace
        } else if (c.space_dim == 0) {
          split_point(c.multiplicity, c.placement);
        } else {
          reject("fat linear space against the quadric");
        }
        break;
      case ComponentKind::FatPoint:
        split_point(c.multiplicity, c.placement);
        break;
      case ComponentKind::CollinearPoints:
        if (c.placement == Placement::OnFirstRuling) {
          if (tr.aligned_points != 0) reject("two aligned blocks on the quadric");
          tr.aligned_points += c.count;
        } else if (c.placement == Placement::SupportOnQuadric) {
          // The carrier is transverse; each marked point sits on the surface
          // and the block leaves nothing behind.
          tr.free_points += c.count;
        } else if (c.placement == Placement::Free) {
          res.add(ComponentSpec::collinear(c.count));
        } else {
          reject("collinear block placement against the quadric");
        }
        break;
      case ComponentKind::Sundial:
        reject("sundial against the quadric");
      case ComponentKind::DegenerateConic:
        reject("degenerate conic against the quadric");
    }
  }
}

}  // namespace

HoraceSplit horace_split(const SchemeConfig& cfg, SurfaceKind surface) {
  cfg.validate();
  HoraceSplit out;
  out.surface = surface;
  out.degree_drop = surface == SurfaceKind::Hyperplane ? 1 : 2;
  if (cfg.d - out.degree_drop < 1)
    throw RangeError("degree too small to take a residual");

  out.residual.n = cfg.n;
  out.residual.d = cfg.d - out.degree_drop;

  if (surface == SurfaceKind::Hyperplane) {
    out.trace_on_quadric = false;
    out.trace_config.n = cfg.n - 1;
    out.trace_config.d = cfg.d;
    if (out.trace_config.n < 2)
      throw RangeError("hyperplane trace needs ambient dimension at least 3");
    split_against_hyperplane(cfg, out);
    out.trace_config.validate();
  } else {
    if (cfg.n != 3) throw RangeError("quadric splits are only available in P^3");
    out.trace_on_quadric = true;
    split_against_quadric(cfg, out);
  }
  out.residual.validate();
  return out;
}

}  // namespace postulation
