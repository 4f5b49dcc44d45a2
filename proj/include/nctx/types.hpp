#pragma once

#include <Eigen/Dense>

namespace nctx {

template <typename Scalar>
using Vec2 = Eigen::Matrix<Scalar, 2, 1>;
template <typename Scalar>
using Vec3 = Eigen::Matrix<Scalar, 3, 1>;
template <typename Scalar>
using Vec4 = Eigen::Matrix<Scalar, 4, 1>;
template <typename Scalar>
using Mat2 = Eigen::Matrix<Scalar, 2, 2>;
template <typename Scalar>
using Mat4 = Eigen::Matrix<Scalar, 4, 4>;

using Vec2d = Vec2<double>;
using Vec3d = Vec3<double>;
using Vec4d = Vec4<double>;

// All tolerances are absolute: expectation vectors live in [-1,1]^2, so the
// scale is fixed by the probability representation.
struct Tolerances {
  double eps_prob = 1e-9;    // clamp band around [0,1] for input probabilities
  double eps_geom = 1e-9;    // triangle-area threshold for degeneracy
  double eps_verdict = 1e-9; // determinant threshold for a violation
  double delta_lp = 1e-7;    // LP feasibility residual bound
};

}  // namespace nctx
