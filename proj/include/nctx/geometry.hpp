#pragma once

#include <array>
#include <optional>

#include "nctx/errors.hpp"
#include "nctx/types.hpp"

namespace nctx {

template <typename Scalar>
Scalar cross2(const Vec2<Scalar>& u, const Vec2<Scalar>& v) {
  return u.x() * v.y() - u.y() * v.x();
}

// Twice the signed area of triangle (a, b, c); positive when counter-clockwise.
template <typename Scalar>
Scalar triangle_det(const Vec2<Scalar>& a, const Vec2<Scalar>& b, const Vec2<Scalar>& c) {
  return cross2<Scalar>(b - a, c - a);
}

// The four preparation vectors relabelled so that P_0 and P_3 span one
// diagonal, P_1 and P_2 the other, and the diagonal pair {P_0 - P_3, P_2 - P_1}
// is positively oriented (D > 0).
template <typename Scalar>
struct CanonicalGeometry {
  std::array<Vec2<Scalar>, 4> verts;  // canonical order P_0, P_1, P_2, P_3
  std::array<int, 4> perm;            // perm[input index] = canonical label
  Scalar D;                           // orientation determinant

  // input index that carries canonical label l
  int input_of(int label) const {
    for (int i = 0; i < 4; ++i)
      if (perm[i] == label) return i;
    return -1;
  }
};

using CanonicalGeometryd = CanonicalGeometry<double>;

// Weights of the crossing point c of the two diagonals:
// p P_0 + (1-p) P_3 = q P_1 + (1-q) P_2 = c.
template <typename Scalar>
struct PivotalDecomposition {
  Scalar p;
  Scalar q;
  Vec2<Scalar> c;
};

using PivotalDecompositiond = PivotalDecomposition<double>;

// Either a canonical quadrilateral or a hull with <= 3 extreme points, which
// admits an immediate noncontextual model and needs no inequality check.
template <typename Scalar>
struct GeometryVerdict {
  std::optional<CanonicalGeometry<Scalar>> canonical;
  bool degenerate_simplex() const { return !canonical.has_value(); }
};

using GeometryVerdictd = GeometryVerdict<double>;

// Labels the input vectors. Input index 0 always becomes P_0, its diagonal
// partner P_3, and the remaining two are ordered so that D > 0. Any triple
// whose area determinant is within eps_geom of zero, or a point inside the
// triangle of the others, is classified as a degenerate simplex.
template <typename Scalar>
GeometryVerdict<Scalar> canonicalize(const std::array<Vec2<Scalar>, 4>& vs, Scalar eps_geom) {
  // every triple must span a real triangle
  std::array<Scalar, 4> area;  // area[m] = triangle of the three points != m
  for (int m = 0; m < 4; ++m) {
    std::array<int, 3> t;
    int n = 0;
    for (int i = 0; i < 4; ++i)
      if (i != m) t[n++] = i;
    area[m] = triangle_det<Scalar>(vs[t[0]], vs[t[1]], vs[t[2]]);
    if (!(area[m] > eps_geom || area[m] < -eps_geom)) return {};
  }

  // a point inside (or on) the triangle of the other three means the hull is
  // that triangle
  for (int m = 0; m < 4; ++m) {
    std::array<int, 3> t;
    int n = 0;
    for (int i = 0; i < 4; ++i)
      if (i != m) t[n++] = i;
    const Scalar s0 = triangle_det<Scalar>(vs[t[0]], vs[t[1]], vs[m]);
    const Scalar s1 = triangle_det<Scalar>(vs[t[1]], vs[t[2]], vs[m]);
    const Scalar s2 = triangle_det<Scalar>(vs[t[2]], vs[t[0]], vs[m]);
    const bool all_pos = s0 > -eps_geom && s1 > -eps_geom && s2 > -eps_geom;
    const bool all_neg = s0 < eps_geom && s1 < eps_geom && s2 < eps_geom;
    if (all_pos || all_neg) return {};
  }

  // convex position: the diagonal partner of input 0 is the j whose connecting
  // line strictly separates the remaining two points
  int opp = -1;
  for (int j = 1; j < 4; ++j) {
    int k = -1, l = -1;
    for (int i = 1; i < 4; ++i)
      if (i != j) (k < 0 ? k : l) = i;
    const Scalar sk = triangle_det<Scalar>(vs[0], vs[j], vs[k]);
    const Scalar sl = triangle_det<Scalar>(vs[0], vs[j], vs[l]);
    if ((sk > Scalar(0)) != (sl > Scalar(0))) {
      opp = j;
      break;
    }
  }
  if (opp < 0) return {};  // unreachable for a verified convex quadrilateral

  int k = -1, l = -1;
  for (int i = 1; i < 4; ++i)
    if (i != opp) (k < 0 ? k : l) = i;

  CanonicalGeometry<Scalar> geo;
  geo.verts[0] = vs[0];
  geo.verts[3] = vs[opp];
  Scalar D = cross2<Scalar>(vs[0] - vs[opp], vs[l] - vs[k]);
  if (D < Scalar(0)) {
    std::swap(k, l);
    D = -D;
  }
  if (!(D > eps_geom)) return {};
  geo.verts[1] = vs[k];
  geo.verts[2] = vs[l];
  geo.D = D;
  geo.perm = {};
  geo.perm[0] = 0;
  geo.perm[opp] = 3;
  geo.perm[k] = 1;
  geo.perm[l] = 2;
  return {geo};
}

// Cramer's rule on [P_0 - P_3 | P_2 - P_1] (p q)^T = P_2 - P_3.
template <typename Scalar>
PivotalDecomposition<Scalar> pivotal_solve(const CanonicalGeometry<Scalar>& geo,
                                           Scalar eps_geom = Scalar(1e-9)) {
  const auto& P = geo.verts;
  const Scalar p = cross2<Scalar>(P[2] - P[3], P[2] - P[1]) / geo.D;
  const Scalar q = cross2<Scalar>(P[0] - P[3], P[2] - P[3]) / geo.D;
  if (!(p > eps_geom && p < Scalar(1) - eps_geom && q > eps_geom && q < Scalar(1) - eps_geom))
    throw NumericalDegeneracy("pivot weights left (eps, 1-eps): near-degenerate quadrilateral");
  return {p, q, p * P[0] + (Scalar(1) - p) * P[3]};
}

// Signed 4x4 determinant with rows (x_i, y_i, z_i, 1). Nonpositive exactly when
// p z_0 + (1-p) z_3 <= q z_1 + (1-q) z_2; numerically
// det = D * [(p z_0 + (1-p) z_3) - (q z_1 + (1-q) z_2)].
template <typename Scalar>
Scalar lemma_det(const CanonicalGeometry<Scalar>& geo, const Vec4<Scalar>& z) {
  Mat4<Scalar> m;
  for (int i = 0; i < 4; ++i) m.row(i) << geo.verts[i].x(), geo.verts[i].y(), z[i], Scalar(1);
  return m.determinant();
}

}  // namespace nctx
