#pragma once

#include <algorithm>
#include <array>
#include <string>

#include "nctx/geometry.hpp"
#include "nctx/scenario.hpp"

namespace nctx {

// One sign choice (c0, d0, c1, d1) selecting an inequality variant; the eight
// admissible columns are exactly the +-1 vectors with an odd number of minus
// signs, i.e. the eight CHSH versions.
struct SignColumn {
  int c0, d0, c1, d1;
  std::string key() const;  // "1,1,1,-1"
};

const std::array<SignColumn, 8>& sign_columns();

// z_i entering the signed-volume determinant for one sign column.
template <typename Scalar>
Vec4<Scalar> z_vector(const SignColumn& col, const CanonicalGeometry<Scalar>& geo) {
  const auto& P = geo.verts;
  Vec4<Scalar> z;
  z[0] = Scalar(col.c0) * P[0].x() + Scalar(col.d0) * P[0].y() - Scalar(1);
  z[1] = -Scalar(col.c1) * P[1].x() - Scalar(col.d1) * P[1].y() + Scalar(1);
  z[2] = Scalar(col.c1) * P[2].x() + Scalar(col.d1) * P[2].y() + Scalar(1);
  z[3] = -Scalar(col.c0) * P[3].x() - Scalar(col.d0) * P[3].y() - Scalar(1);
  return z;
}

enum class Verdict { noncontextual, contextual, degenerate_noncontextual };

std::string to_string(Verdict v);

struct InequalityReport {
  std::array<double, 8> det_values;   // indexed like sign_columns()
  std::array<double, 8> chsh_values;  // 2 + det/D per column
  double max_violation;               // max(0, max det)
  Verdict verdict;

  double max_det() const { return *std::max_element(det_values.begin(), det_values.end()); }
};

// Evaluates all eight determinants; a noncontextual model exists iff none
// exceeds eps_verdict.
InequalityReport evaluate_all(const CanonicalGeometryd& geo, double eps_verdict);

// Bipartite table P(a,b|x,y) with a,b,x,y in {0,1}, stored at (2x+a, 2y+b).
struct BellTable {
  Eigen::Matrix4d probs = Eigen::Matrix4d::Zero();

  double& at(int a, int b, int x, int y) { return probs(2 * x + a, 2 * y + b); }
  double at(int a, int b, int x, int y) const { return probs(2 * x + a, 2 * y + b); }

  // <A_x B_y> = sum_{a,b} (-1)^{a+b} P(a,b|x,y)
  double correlator(int x, int y) const {
    return at(0, 0, x, y) - at(0, 1, x, y) - at(1, 0, x, y) + at(1, 1, x, y);
  }
};

// Splits each diagonal's mixture into a bipartite source: Alice's setting picks
// a diagonal, her outcome picks the endpoint (weighted by the pivot), Bob
// measures M_y on that endpoint. stats must be the same scenario geo was
// canonicalized from; the permutation is applied here.
BellTable bell_convert(const ScenarioStats& stats, const CanonicalGeometryd& geo,
                       const PivotalDecompositiond& piv);

// Signed correlator combination for one column. Substituting the converted
// table into S = e00<A0B0> + e01<A0B1> + e10<A1B0> + e11<A1B1> and using
// <A_0 B_j> = p x/y_0 - (1-p) x/y_3, <A_1 B_j> = q x/y_1 - (1-q) x/y_2 gives
// S - 2 = p z_0 + (1-p) z_3 - q z_1 - (1-q) z_2 with (e00,e01,e10,e11) =
// (c0,d0,c1,d1): the sign column maps onto the correlator signs unchanged,
// which makes S = 2 + det/D an identity.
double chsh_value(const BellTable& bt, const SignColumn& col);

}  // namespace nctx
