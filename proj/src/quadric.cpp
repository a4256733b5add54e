#include "quadric.hpp"

#include "rng.hpp"

namespace postulation {

namespace {

struct Pair2 {
  u64 a = 0;
  u64 b = 0;
};

u64 cross(const Pair2& x, const Pair2& y, const Gf& gf) {
  return gf.sub(gf.mul(x.a, y.b), gf.mul(x.b, y.a));
}

Pair2 random_pair(SeedStream& rng, const Gf& gf) {
  Pair2 p{rng.field_element(gf), rng.field_element(gf)};
  if (p.a == 0 && p.b == 0) p.a = 1;
  return p;
}

bool distinct_from_all(const Pair2& p, const std::vector<Pair2>& seen, const Gf& gf) {
  for (const Pair2& q : seen)
    if (cross(p, q, gf) == 0) return false;
  return true;
}

i64 col_index(int i, int j, int b) { return static_cast<i64>(i) * (b + 1) + j; }

// pw[k] = a^k * b^(deg-k) products are assembled from these tables.
std::vector<u64> powers(u64 x, int deg, const Gf& gf) {
  std::vector<u64> pw(static_cast<size_t>(deg) + 1, 1);
  for (int k = 1; k <= deg; ++k) pw[static_cast<size_t>(k)] = gf.mul(pw[static_cast<size_t>(k) - 1], x);
  return pw;
}

}  // namespace

i64 quadric_basis_size(int a, int b) {
  if (a < 0 || b < 0) throw RangeError("bidegree must be nonnegative");
  return checked_mul(static_cast<i64>(a) + 1, static_cast<i64>(b) + 1);
}

DenseMatrix quadric_rows(const QuadricSpec& spec, int a, int b, u64 seed, const Gf& gf) {
  if (spec.ruling_lines < 0 || spec.free_points < 0 || spec.aligned_points < 0 ||
      spec.double_points < 0)
    throw RangeError("quadric spec counts must be nonnegative");
  const i64 cols = quadric_basis_size(a, b);
  const i64 nrows = checked_add(checked_mul(spec.ruling_lines, static_cast<i64>(b) + 1),
                                checked_add(spec.free_points,
                                            checked_add(spec.aligned_points,
                                                        checked_mul(3, spec.double_points))));
  SeedStream rng(seed);

  for (int attempt = 0; attempt < 32; ++attempt) {
    std::vector<Pair2> line_u;  // the ruling lines, plus the carrier when present
    bool ok = true;
    for (i64 i = 0; i < spec.ruling_lines && ok; ++i) {
      Pair2 u = random_pair(rng, gf);
      ok = distinct_from_all(u, line_u, gf);
      line_u.push_back(u);
    }
    Pair2 carrier{};
    if (ok && spec.aligned_points > 0) {
      carrier = random_pair(rng, gf);
      ok = distinct_from_all(carrier, line_u, gf);
      line_u.push_back(carrier);
    }
    if (!ok) continue;

    struct Pt {
      Pair2 u, v;
    };
    auto sample_point_off_lines = [&](bool& good) {
      Pt p{random_pair(rng, gf), random_pair(rng, gf)};
      good = distinct_from_all(p.u, line_u, gf);
      return p;
    };

    std::vector<Pt> free_pts, double_pts;
    std::vector<Pair2> aligned_v;
    for (i64 i = 0; i < spec.free_points && ok; ++i) {
      free_pts.push_back(sample_point_off_lines(ok));
      for (size_t j = 0; ok && j + 1 < free_pts.size(); ++j)
        ok = cross(free_pts[j].u, free_pts.back().u, gf) != 0 ||
             cross(free_pts[j].v, free_pts.back().v, gf) != 0;
    }
    for (i64 i = 0; i < spec.aligned_points && ok; ++i) {
      Pair2 v = random_pair(rng, gf);
      ok = distinct_from_all(v, aligned_v, gf);
      aligned_v.push_back(v);
    }
    for (i64 i = 0; i < spec.double_points && ok; ++i) {
      double_pts.push_back(sample_point_off_lines(ok));
      for (size_t j = 0; ok && j + 1 < double_pts.size(); ++j)
        ok = cross(double_pts[j].u, double_pts.back().u, gf) != 0 ||
             cross(double_pts[j].v, double_pts.back().v, gf) != 0;
    }
    if (!ok) continue;

    DenseMatrix rows(nrows, cols);
    i64 r = 0;

    // Restriction to a first-ruling line {u fixed}: the coefficient of each
    // v-monomial collects the u-monomials evaluated at u.
    for (i64 li = 0; li < spec.ruling_lines; ++li) {
      auto pu = powers(line_u[static_cast<size_t>(li)].a, a, gf);
      auto qu = powers(line_u[static_cast<size_t>(li)].b, a, gf);
      for (int k = 0; k <= b; ++k, ++r)
        for (int i = 0; i <= a; ++i)
          rows.at(r, col_index(i, k, b)) =
              gf.mul(pu[static_cast<size_t>(i)], qu[static_cast<size_t>(a - i)]);
    }

    auto eval_row = [&](const Pair2& u, const Pair2& v, i64 target) {
      auto pu = powers(u.a, a, gf), qu = powers(u.b, a, gf);
      auto pv = powers(v.a, b, gf), qv = powers(v.b, b, gf);
      for (int i = 0; i <= a; ++i)
        for (int j = 0; j <= b; ++j)
          rows.at(target, col_index(i, j, b)) =
              gf.mul(gf.mul(pu[static_cast<size_t>(i)], qu[static_cast<size_t>(a - i)]),
                     gf.mul(pv[static_cast<size_t>(j)], qv[static_cast<size_t>(b - j)]));
    };

    for (const Pt& p : free_pts) eval_row(p.u, p.v, r++);
    for (const Pair2& v : aligned_v) eval_row(carrier, v, r++);

    for (const Pt& p : double_pts) {
      // Generic chart directions; value row plus the derivative along each
      // factor of the product structure.
      Pair2 du, dv;
      do {
        du = random_pair(rng, gf);
      } while (cross(du, p.u, gf) == 0);
      do {
        dv = random_pair(rng, gf);
      } while (cross(dv, p.v, gf) == 0);
      auto pu = powers(p.u.a, a, gf), qu = powers(p.u.b, a, gf);
      auto pv = powers(p.v.a, b, gf), qv = powers(p.v.b, b, gf);
      auto u_mono = [&](int i) {
        return gf.mul(pu[static_cast<size_t>(i)], qu[static_cast<size_t>(a - i)]);
      };
      auto v_mono = [&](int j) {
        return gf.mul(pv[static_cast<size_t>(j)], qv[static_cast<size_t>(b - j)]);
      };
      auto du_mono = [&](int i) {  // derivative of u0^i u1^(a-i) along du at p.u
        u64 acc = 0;
        if (i > 0)
          acc = gf.add(acc, gf.mul(gf.reduce(static_cast<u64>(i)),
                                   gf.mul(du.a, gf.mul(pu[static_cast<size_t>(i) - 1],
                                                       qu[static_cast<size_t>(a - i)]))));
        if (a - i > 0)
          acc = gf.add(acc, gf.mul(gf.reduce(static_cast<u64>(a - i)),
                                   gf.mul(du.b, gf.mul(pu[static_cast<size_t>(i)],
                                                       qu[static_cast<size_t>(a - i) - 1]))));
        return acc;
      };
      auto dv_mono = [&](int j) {
        u64 acc = 0;
        if (j > 0)
          acc = gf.add(acc, gf.mul(gf.reduce(static_cast<u64>(j)),
                                   gf.mul(dv.a, gf.mul(pv[static_cast<size_t>(j) - 1],
                                                       qv[static_cast<size_t>(b - j)]))));
        if (b - j > 0)
          acc = gf.add(acc, gf.mul(gf.reduce(static_cast<u64>(b - j)),
                                   gf.mul(dv.b, gf.mul(pv[static_cast<size_t>(j)],
                                                       qv[static_cast<size_t>(b - j) - 1]))));
        return acc;
      };
      for (int i = 0; i <= a; ++i) {
        for (int j = 0; j <= b; ++j) {
          rows.at(r, col_index(i, j, b)) = gf.mul(u_mono(i), v_mono(j));
          rows.at(r + 1, col_index(i, j, b)) = gf.mul(du_mono(i), v_mono(j));
          rows.at(r + 2, col_index(i, j, b)) = gf.mul(u_mono(i), dv_mono(j));
        }
      }
      r += 3;
    }
    return rows;
  }
  throw SamplingError("failed to sample a generic union on the quadric; enlarge the prime");
}

i64 quadric_rank(const QuadricSpec& spec, int a, int b, u64 seed, const Gf& gf) {
  return rank_of(quadric_rows(spec, a, b, seed, gf), gf);
}

}  // namespace postulation
