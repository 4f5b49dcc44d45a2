#pragma once

#include "nctx/errors.hpp"
#include "nctx/scenario.hpp"
#include "nctx/types.hpp"

namespace nctx {

// P(outcome 0) = (1 + r . m) / 2 for Bloch vector r measured along axis m.
template <typename Scalar>
Scalar born_prob0(const Vec3<Scalar>& r, const Vec3<Scalar>& axis) {
  return (Scalar(1) + r.dot(axis)) / Scalar(2);
}

struct BlochState {
  Vec3d r;
  explicit BlochState(const Vec3d& v) : r(v) {
    if (r.norm() > 1.0 + 1e-12) throw Error("Bloch vector outside the unit ball");
  }
};

struct BlochMeasurement {
  Vec3d axis;  // outcome 0 <-> +1 eigenvalue
  explicit BlochMeasurement(const Vec3d& m) : axis(m) {
    if (std::abs(axis.norm() - 1.0) > 1e-12) throw Error("measurement axis not unit length");
  }
};

inline double born_prob0(const BlochState& s, const BlochMeasurement& m) {
  return born_prob0<double>(s.r, m.axis);
}

// Four preparations at the +-1 eigenstates of (X+Z)/sqrt(2) and (X-Z)/sqrt(2),
// measured along X and Z. eta in [0,1] shrinks every Bloch vector toward the
// maximally mixed state, so the expectation vectors are eta*(+-v, +-v) with
// v = 1/sqrt(2).
ScenarioStats qubit_scenario(double eta);

// Three-measurement variant for exercising the tomographic reduction: the same
// four states tilted toward Y by y_tilt[i], a Y measurement appended, and an
// auxiliary preparation at the +1 eigenstate of Y.
ScenarioStats tilted_qubit_scenario(double eta, const std::array<double, 4>& y_tilt);

// Visibility at which the largest inequality determinant of qubit_scenario
// crosses zero, located by bisection to 1e-8 (analytically 1/sqrt(2)).
double violation_threshold();

}  // namespace nctx
