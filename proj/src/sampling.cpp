#include "sampling.hpp"

#include <algorithm>
#include <optional>
#include <unordered_set>

namespace postulation {

namespace {

constexpr int kMaxAttempts = 32;

std::vector<u64> random_point(SeedStream& rng, const Gf& gf, int n, bool in_hyperplane) {
  std::vector<u64> p(static_cast<size_t>(n) + 1, 0);
  for (int attempt = 0; attempt < 16; ++attempt) {
    bool nonzero = false;
    for (int i = 0; i <= n; ++i) {
      if (in_hyperplane && i == n) {
        p[static_cast<size_t>(i)] = 0;
        continue;
      }
      p[static_cast<size_t>(i)] = rng.field_element(gf);
      nonzero |= p[static_cast<size_t>(i)] != 0;
    }
    if (nonzero) return p;
  }
  throw SamplingError("could not sample a nonzero point");
}

i64 span_rank(const std::vector<const std::vector<u64>*>& pts, int n, const Gf& gf) {
  RowBasis basis(n + 1, gf);
  for (const auto* p : pts) basis.add_row(*p);
  return basis.rank();
}

i64 span_rank2(const std::vector<u64>& a, const std::vector<u64>& b, int n, const Gf& gf) {
  return span_rank({&a, &b}, n, gf);
}

enum class RulingTag { None, First, Second };

// A line-like object participating in the pairwise intersection screening.
struct SpanObject {
  size_t component;
  int group;  // distinguishes the two lines of a sundial / conic
  std::vector<const std::vector<u64>*> pts;
  Placement placement;
  RulingTag ruling;
};

RulingTag ruling_of(const ComponentSpec& spec) {
  if (spec.placement == Placement::OnFirstRuling) return RulingTag::First;
  if (spec.placement == Placement::OnSecondRuling) return RulingTag::Second;
  if (spec.placement == Placement::SupportOnQuadric &&
      spec.kind == ComponentKind::FatLinearSpace && spec.space_dim == 1)
    return RulingTag::First;
  return RulingTag::None;
}

bool generic_enough(const SampledConfig& sc, const Gf& gf) {
  const int n = sc.n;
  std::vector<SpanObject> objects;
  std::vector<const std::vector<u64>*> supports;

  for (size_t ci = 0; ci < sc.components.size(); ++ci) {
    const SampledComponent& c = sc.components[ci];
    const auto& pts = c.points;
    switch (c.spec.kind) {
      case ComponentKind::Line:
        if (span_rank2(pts[0], pts[1], n, gf) != 2) return false;
        objects.push_back({ci, 0, {&pts[0], &pts[1]}, c.spec.placement, ruling_of(c.spec)});
        break;
      case ComponentKind::FatLinearSpace: {
        std::vector<const std::vector<u64>*> sp;
        for (const auto& p : pts) sp.push_back(&p);
        if (span_rank(sp, n, gf) != static_cast<i64>(pts.size())) return false;
        objects.push_back({ci, 0, sp, c.spec.placement, ruling_of(c.spec)});
        if (pts.size() == 1) supports.push_back(&pts[0]);
        break;
      }
      case ComponentKind::FatPoint:
        supports.push_back(&pts[0]);
        break;
      case ComponentKind::CollinearPoints:
        if (span_rank2(pts[0], pts[1], n, gf) != 2) return false;
        objects.push_back({ci, 0, {&pts[0], &pts[1]}, c.spec.placement, ruling_of(c.spec)});
        for (size_t i = 2; i < pts.size(); ++i) supports.push_back(&pts[i]);
        break;
      case ComponentKind::Sundial:
        if (span_rank({&pts[0], &pts[1], &pts[2]}, n, gf) != 3) return false;
        if (span_rank({&pts[0], &pts[1], &pts[2], &pts[3]}, n, gf) != 4) return false;
        objects.push_back({ci, 1, {&pts[0], &pts[1]}, c.spec.placement, RulingTag::None});
        objects.push_back({ci, 2, {&pts[0], &pts[2]}, c.spec.placement, RulingTag::None});
        supports.push_back(&pts[0]);
        break;
      case ComponentKind::DegenerateConic:
        if (span_rank({&pts[0], &pts[1], &pts[2]}, n, gf) != 3) return false;
        objects.push_back({ci, 1, {&pts[0], &pts[1]}, c.spec.placement, RulingTag::None});
        objects.push_back({ci, 2, {&pts[0], &pts[2]}, c.spec.placement, RulingTag::None});
        supports.push_back(&pts[0]);
        break;
    }
  }

  // Supports of distinct components must be pairwise distinct as projective
  // points (including the individual points of a collinear block).
  for (size_t i = 0; i < supports.size(); ++i)
    for (size_t j = i + 1; j < supports.size(); ++j)
      if (span_rank({supports[i], supports[j]}, n, gf) != 2) return false;

  // Two line-like objects must span as much as their placements allow; in
  // particular lines meet only when the configuration forces them to.
  for (size_t i = 0; i < objects.size(); ++i) {
    for (size_t j = i + 1; j < objects.size(); ++j) {
      const SpanObject& a = objects[i];
      const SpanObject& b = objects[j];
      if (a.component == b.component) continue;  // sundial/conic arms share a point by design
      i64 cap = n + 1;
      if (a.placement == Placement::InHyperplane && b.placement == Placement::InHyperplane)
        cap = n;
      i64 expected = std::min<i64>(static_cast<i64>(a.pts.size() + b.pts.size()), cap);
      if (a.ruling != RulingTag::None && b.ruling != RulingTag::None && a.ruling != b.ruling)
        expected = 3;  // opposite rulings always meet on the quadric
      std::vector<const std::vector<u64>*> all(a.pts);
      all.insert(all.end(), b.pts.begin(), b.pts.end());
      if (span_rank(all, n, gf) != expected) return false;
    }
  }
  return true;
}

std::pair<std::vector<u64>, std::vector<u64>> ruling_line(SeedStream& rng, const Gf& gf,
                                                          bool first) {
  u64 a = rng.field_element(gf);
  u64 b = rng.field_element(gf);
  if (a == 0 && b == 0) a = 1;
  if (first)
    return {segre_point(a, b, 1, 0, gf), segre_point(a, b, 0, 1, gf)};
  return {segre_point(1, 0, a, b, gf), segre_point(0, 1, a, b, gf)};
}

std::vector<u64> random_quadric_point(SeedStream& rng, const Gf& gf) {
  u64 u0 = rng.field_element(gf), u1 = rng.field_element(gf);
  u64 v0 = rng.field_element(gf), v1 = rng.field_element(gf);
  if (u0 == 0 && u1 == 0) u0 = 1;
  if (v0 == 0 && v1 == 0) v0 = 1;
  return segre_point(u0, u1, v0, v1, gf);
}

SampledComponent sample_component(const ComponentSpec& spec, int n, SeedStream& rng,
                                  const Gf& gf) {
  SampledComponent out;
  out.spec = spec;
  const bool in_h = spec.placement == Placement::InHyperplane;
  switch (spec.kind) {
    case ComponentKind::Line: {
      if (spec.placement == Placement::OnFirstRuling ||
          spec.placement == Placement::OnSecondRuling) {
        auto [a, b] = ruling_line(rng, gf, spec.placement == Placement::OnFirstRuling);
        out.points = {a, b};
      } else {
        out.points = {random_point(rng, gf, n, in_h), random_point(rng, gf, n, in_h)};
      }
      break;
    }
    case ComponentKind::FatLinearSpace: {
      if (spec.placement == Placement::SupportOnQuadric) {
        if (spec.space_dim == 1) {
          auto [a, b] = ruling_line(rng, gf, true);
          out.points = {a, b};
        } else {
          out.points = {random_quadric_point(rng, gf)};
        }
      } else {
        for (int i = 0; i <= spec.space_dim; ++i)
          out.points.push_back(random_point(rng, gf, n, in_h));
      }
      break;
    }
    case ComponentKind::FatPoint: {
      if (spec.placement == Placement::SupportOnQuadric) {
        out.points = {random_quadric_point(rng, gf)};
      } else {
        out.points = {random_point(rng, gf, n, in_h)};
      }
      break;
    }
    case ComponentKind::CollinearPoints: {
      if (static_cast<u64>(spec.count) >= gf.p)
        throw SamplingError(
            "more collinear points requested than the field has distinct "
            "parameters; enlarge the prime");
      if (spec.placement == Placement::SupportOnQuadric) {
        // The marked points lie on the surface; the carrier line through them
        // is transverse to it (two points by validation).
        std::vector<u64> a = random_quadric_point(rng, gf);
        std::vector<u64> b =
            spec.count == 2 ? random_quadric_point(rng, gf) : random_point(rng, gf, n, false);
        out.points = {a, b, a};
        if (spec.count == 2) out.points.push_back(b);
        break;
      }
      std::vector<u64> a, b;
      if (spec.placement == Placement::OnFirstRuling ||
          spec.placement == Placement::OnSecondRuling) {
        auto [ra, rb] = ruling_line(rng, gf, spec.placement == Placement::OnFirstRuling);
        a = ra;
        b = rb;
      } else {
        a = random_point(rng, gf, n, in_h);
        b = random_point(rng, gf, n, in_h);
      }
      out.points = {a, b};
      std::unordered_set<u64> used;
      for (i64 i = 0; i < spec.count; ++i) {
        u64 s;
        do {
          s = rng.field_element(gf);
        } while (!used.insert(s).second);
        std::vector<u64> pt(a.size());
        for (size_t k = 0; k < a.size(); ++k) pt[k] = gf.add(gf.mul(s, a[k]), b[k]);
        out.points.push_back(std::move(pt));
      }
      break;
    }
    case ComponentKind::Sundial: {
      // The two lines and their meeting point may be constrained to the
      // hyperplane; the fourth spanning point of the 3-space never is, so the
      // embedded double point sticks out of the hyperplane.
      out.points = {random_point(rng, gf, n, in_h), random_point(rng, gf, n, in_h),
                    random_point(rng, gf, n, in_h), random_point(rng, gf, n, false)};
      if (in_h && out.points[3][static_cast<size_t>(n)] == 0)
        out.points[3][static_cast<size_t>(n)] = 1;
      break;
    }
    case ComponentKind::DegenerateConic: {
      out.points = {random_point(rng, gf, n, in_h), random_point(rng, gf, n, in_h),
                    random_point(rng, gf, n, in_h)};
      break;
    }
  }
  return out;
}

}  // namespace

std::vector<u64> segre_point(u64 u0, u64 u1, u64 v0, u64 v1, const Gf& gf) {
  return {gf.mul(u0, v0), gf.mul(u0, v1), gf.mul(u1, v0), gf.mul(u1, v1)};
}

SampledConfig sample_config(const SchemeConfig& cfg, u64 seed, const Gf& gf) {
  cfg.validate();
  SeedStream rng(seed);
  for (int attempt = 0; attempt < kMaxAttempts; ++attempt) {
    SampledConfig sc;
    sc.n = cfg.n;
    sc.d = cfg.d;
    sc.components.reserve(cfg.components.size());
    for (const ComponentSpec& spec : cfg.components)
      sc.components.push_back(sample_component(spec, cfg.n, rng, gf));
    if (generic_enough(sc, gf)) return sc;
  }
  throw SamplingError(
      "failed to sample a configuration in generic position; enlarging the "
      "prime gives the sampler more room");
}

void transform_geometry(SampledConfig& sc, const DenseMatrix& change, const Gf& gf) {
  if (change.rows != sc.n + 1 || change.cols != sc.n + 1)
    throw RangeError("coordinate change has the wrong shape");
  for (SampledComponent& c : sc.components)
    for (std::vector<u64>& p : c.points) p = mat_vec(change, p, gf);
}

}  // namespace postulation
