#include "rows.hpp"

#include "combinatorics.hpp"

namespace postulation {

namespace {

// Coefficients of prod_i (a_i s + b_i t)^(e_i) as a binary form, listed from
// the pure s-power down to the pure t-power.
std::vector<u64> binary_restriction(const std::vector<int>& exps, const std::vector<u64>& a,
                                    const std::vector<u64>& b, const Gf& gf) {
  std::vector<u64> poly{1};
  for (size_t i = 0; i < exps.size(); ++i) {
    for (int rep = 0; rep < exps[i]; ++rep) {
      std::vector<u64> next(poly.size() + 1, 0);
      for (size_t k = 0; k < poly.size(); ++k) {
        if (poly[k] == 0) continue;
        next[k] = gf.add(next[k], gf.mul(poly[k], a[i]));
        next[k + 1] = gf.add(next[k + 1], gf.mul(poly[k], b[i]));
      }
      poly = std::move(next);
    }
  }
  return poly;
}

// Power tables make evaluation rows O(n) per monomial.
std::vector<std::vector<u64>> power_table(const std::vector<u64>& p, int d, const Gf& gf) {
  std::vector<std::vector<u64>> pw(p.size(), std::vector<u64>(static_cast<size_t>(d) + 1, 1));
  for (size_t i = 0; i < p.size(); ++i)
    for (int k = 1; k <= d; ++k)
      pw[i][static_cast<size_t>(k)] = gf.mul(pw[i][static_cast<size_t>(k) - 1], p[i]);
  return pw;
}

bool proportional(const std::vector<u64>& a, const std::vector<u64>& b, const Gf& gf) {
  RowBasis basis(static_cast<i64>(a.size()), gf);
  basis.add_row(a);
  basis.add_row(b);
  return basis.rank() < 2;
}

}  // namespace

DenseMatrix rows_for_line(const std::vector<u64>& a, const std::vector<u64>& b,
                          const MonomialBasis& basis, const Gf& gf) {
  if (a.size() != static_cast<size_t>(basis.ambient_dim) + 1 || a.size() != b.size())
    throw RangeError("line points do not match the ambient dimension");
  if (proportional(a, b, gf)) throw RangeError("the two points do not span a line");
  const int d = basis.degree;
  DenseMatrix rows(d + 1, basis.size());
  for (i64 col = 0; col < basis.size(); ++col) {
    std::vector<u64> coeffs =
        binary_restriction(basis.exponents[static_cast<size_t>(col)], a, b, gf);
    for (int k = 0; k <= d; ++k) rows.at(k, col) = coeffs[static_cast<size_t>(k)];
  }
  return rows;
}

DenseMatrix rows_for_fat_space(const std::vector<std::vector<u64>>& points, int multiplicity,
                               const BasisTower& tower, SeedStream& rng, const Gf& gf) {
  const int n = tower.ambient_dim();
  const int d = tower.top_degree();
  const int r = static_cast<int>(points.size()) - 1;
  if (r < 0 || r >= n) throw RangeError("fat space span must have dimension 0 <= r < n");
  if (multiplicity < 1 || multiplicity > d + 1)
    throw RangeError("fat space multiplicity must satisfy 1 <= m <= d + 1");

  // Change of coordinates carrying the coordinate subspace spanned by the
  // first r + 1 basis vectors onto the sampled span.
  DenseMatrix change(n + 1, n + 1);
  bool ok = false;
  for (int attempt = 0; attempt < 64 && !ok; ++attempt) {
    for (int j = 0; j <= n; ++j) {
      for (int i = 0; i <= n; ++i) {
        change.at(i, j) = (j <= r) ? points[static_cast<size_t>(j)][static_cast<size_t>(i)]
                                   : rng.field_element(gf);
      }
    }
    ok = rank_of(change, gf) == n + 1;
  }
  if (!ok)
    throw SamplingError("could not complete the span to a coordinate change; "
                        "the span may be degenerate");

  const MonomialBasis& top = tower.top();
  std::vector<i64> row_of(static_cast<size_t>(top.size()), -1);
  i64 row_count = 0;
  for (i64 m = 0; m < top.size(); ++m) {
    int normal = 0;
    for (int v = r + 1; v <= n; ++v) normal += top.exponents[static_cast<size_t>(m)][static_cast<size_t>(v)];
    if (normal < multiplicity) row_of[static_cast<size_t>(m)] = row_count++;
  }

  DenseMatrix rows(row_count, top.size());
  std::vector<u64> poly, next;
  for (i64 col = 0; col < top.size(); ++col) {
    const std::vector<int>& alpha = top.exponents[static_cast<size_t>(col)];
    poly.assign(1, 1);
    int k = 0;
    for (int var = 0; var <= n; ++var) {
      for (int rep = 0; rep < alpha[static_cast<size_t>(var)]; ++rep) {
        next.assign(static_cast<size_t>(tower.at(k + 1).size()), 0);
        const i64 lo_size = tower.at(k).size();
        for (i64 mono = 0; mono < lo_size; ++mono) {
          const u64 c = poly[static_cast<size_t>(mono)];
          if (c == 0) continue;
          for (int j = 0; j <= n; ++j) {
            const u64 lj = change.at(var, j);
            if (lj == 0) continue;
            const i64 t = tower.raise_index(k, mono, j);
            next[static_cast<size_t>(t)] = gf.add(next[static_cast<size_t>(t)], gf.mul(c, lj));
          }
        }
        poly.swap(next);
        ++k;
      }
    }
    for (i64 m = 0; m < top.size(); ++m) {
      const i64 rr = row_of[static_cast<size_t>(m)];
      if (rr >= 0) rows.at(rr, col) = poly[static_cast<size_t>(m)];
    }
  }
  return rows;
}

DenseMatrix evaluation_rows(const std::vector<const std::vector<u64>*>& points,
                            const MonomialBasis& basis, const Gf& gf) {
  DenseMatrix rows(static_cast<i64>(points.size()), basis.size());
  const int d = basis.degree;
  for (size_t r = 0; r < points.size(); ++r) {
    auto pw = power_table(*points[r], d, gf);
    for (i64 col = 0; col < basis.size(); ++col) {
      const std::vector<int>& e = basis.exponents[static_cast<size_t>(col)];
      u64 v = 1;
      for (size_t i = 0; i < e.size(); ++i) v = gf.mul(v, pw[i][static_cast<size_t>(e[i])]);
      rows.at(static_cast<i64>(r), col) = v;
    }
  }
  return rows;
}

DenseMatrix point_with_directions_rows(const std::vector<u64>& p,
                                       const std::vector<const std::vector<u64>*>& directions,
                                       const MonomialBasis& basis, const Gf& gf) {
  const int d = basis.degree;
  auto pw = power_table(p, d, gf);
  DenseMatrix rows(1 + static_cast<i64>(directions.size()), basis.size());
  for (i64 col = 0; col < basis.size(); ++col) {
    const std::vector<int>& e = basis.exponents[static_cast<size_t>(col)];
    u64 v = 1;
    for (size_t i = 0; i < e.size(); ++i) v = gf.mul(v, pw[i][static_cast<size_t>(e[i])]);
    rows.at(0, col) = v;
    for (size_t dir = 0; dir < directions.size(); ++dir) {
      u64 acc = 0;
      for (size_t i = 0; i < e.size(); ++i) {
        if (e[i] == 0) continue;
        const u64 di = (*directions[dir])[i];
        if (di == 0) continue;
        u64 term = gf.reduce(static_cast<u64>(e[i]));
        for (size_t j = 0; j < e.size(); ++j) {
          const int exp = e[j] - (j == i ? 1 : 0);
          term = gf.mul(term, pw[j][static_cast<size_t>(exp)]);
        }
        acc = gf.add(acc, gf.mul(di, term));
      }
      rows.at(1 + static_cast<i64>(dir), col) = acc;
    }
  }
  return rows;
}

DenseMatrix rows_for_component(const SampledComponent& c, const BasisTower& tower,
                               SeedStream& rng, const Gf& gf) {
  const MonomialBasis& top = tower.top();
  switch (c.spec.kind) {
    case ComponentKind::Line:
      return rows_for_line(c.points[0], c.points[1], top, gf);
    case ComponentKind::FatLinearSpace:
      return rows_for_fat_space(c.points, c.spec.multiplicity, tower, rng, gf);
    case ComponentKind::FatPoint:
      return rows_for_fat_space({c.points[0]}, c.spec.multiplicity, tower, rng, gf);
    case ComponentKind::CollinearPoints: {
      std::vector<const std::vector<u64>*> pts;
      for (size_t i = 2; i < c.points.size(); ++i) pts.push_back(&c.points[i]);
      return evaluation_rows(pts, top, gf);
    }
    case ComponentKind::Sundial: {
      RowBasis span(static_cast<i64>(c.points[0].size()), gf);
      for (const auto& p : c.points) span.add_row(p);
      if (span.rank() != 4)
        throw RangeError("sundial spanning points must span a 3-space");
      DenseMatrix rows = rows_for_line(c.points[0], c.points[1], top, gf);
      rows.append_rows(rows_for_line(c.points[0], c.points[2], top, gf));
      rows.append_rows(point_with_directions_rows(
          c.points[0], {&c.points[1], &c.points[2], &c.points[3]}, top, gf));
      return rows;
    }
    case ComponentKind::DegenerateConic: {
      RowBasis span(static_cast<i64>(c.points[0].size()), gf);
      for (const auto& p : c.points) span.add_row(p);
      if (span.rank() != 3)
        throw RangeError("degenerate conic points must span a plane");
      DenseMatrix rows = rows_for_line(c.points[0], c.points[1], top, gf);
      rows.append_rows(rows_for_line(c.points[0], c.points[2], top, gf));
      return rows;
    }
  }
  throw RangeError("unknown component kind");
}

DenseMatrix assemble_from_sampled(const SampledConfig& sc, const BasisTower& tower,
                                  u64 aux_seed, const Gf& gf) {
  SeedStream rng(aux_seed);
  DenseMatrix out(0, tower.top().size());
  for (const SampledComponent& c : sc.components)
    out.append_rows(rows_for_component(c, tower, rng, gf));
  return out;
}

DenseMatrix assemble_matrix(const SchemeConfig& cfg, u64 seed, const Gf& gf) {
  SampledConfig sc = sample_config(cfg, derive_seed(seed, 0), gf);
  BasisTower tower(cfg.n, cfg.d);
  return assemble_from_sampled(sc, tower, derive_seed(seed, 1), gf);
}

}  // namespace postulation
