#include "nctx/quantum.hpp"

#include <cmath>

#include "nctx/pipeline.hpp"

namespace nctx {

namespace {

// +-1 eigenstates of (X+Z)/sqrt(2) and (X-Z)/sqrt(2) as Bloch vectors,
// ordered so the labelling conventions hold without relabelling.
std::array<Vec3d, 4> diagonal_eigenstates() {
  const double v = 1.0 / std::sqrt(2.0);
  return {Vec3d(v, 0, v), Vec3d(v, 0, -v), Vec3d(-v, 0, v), Vec3d(-v, 0, -v)};
}

ScenarioStats stats_from_states(const std::vector<Vec3d>& states,
                                const std::vector<std::string>& prep_names,
                                const std::vector<Vec3d>& axes,
                                const std::vector<std::string>& meas_names) {
  ScenarioStats stats;
  stats.measurements = meas_names;
  for (std::size_t i = 0; i < states.size(); ++i) {
    PrepRecord rec;
    rec.name = prep_names[i];
    for (const auto& axis : axes) rec.prob0.push_back(born_prob0<double>(states[i], axis));
    stats.preparations.push_back(std::move(rec));
  }
  return stats;
}

}  // namespace

ScenarioStats qubit_scenario(double eta) {
  if (eta < 0.0 || eta > 1.0) throw Error("visibility must lie in [0,1]");
  const auto base = diagonal_eigenstates();
  std::vector<Vec3d> states;
  for (const auto& r : base) states.push_back(eta * r);
  return stats_from_states(states, {"P0", "P1", "P2", "P3"},
                           {Vec3d(1, 0, 0), Vec3d(0, 0, 1)}, {"M0", "M1"});
}

ScenarioStats tilted_qubit_scenario(double eta, const std::array<double, 4>& y_tilt) {
  if (eta < 0.0 || eta > 1.0) throw Error("visibility must lie in [0,1]");
  const auto base = diagonal_eigenstates();
  std::vector<Vec3d> states;
  for (int i = 0; i < 4; ++i) {
    const double d = y_tilt[i];
    if (std::abs(d) >= 1.0) throw Error("tilt must lie in (-1,1)");
    // shrink the X/Z part so the tilted vector stays inside the Bloch ball
    states.push_back(eta * std::sqrt(1.0 - d * d) * base[i] + Vec3d(0, d, 0));
  }
  states.push_back(Vec3d(0, 1, 0));  // auxiliary: +1 eigenstate of Y
  ScenarioStats stats = stats_from_states(
      states, {"P0", "P1", "P2", "P3", "Paux"},
      {Vec3d(1, 0, 0), Vec3d(0, 0, 1), Vec3d(0, 1, 0)}, {"M0", "M1", "Mprime"});
  stats.preparations.back().auxiliary = true;
  return stats;
}

double violation_threshold() {
  const Tolerances tol;
  auto max_det = [&](double eta) {
    const CertificationResult res = certify(qubit_scenario(eta), tol, false);
    return res.report->max_det();
  };
  double lo = 0.25, hi = 1.0;  // max det is negative at lo, positive at hi
  for (int it = 0; it < 60 && hi - lo > 1e-8; ++it) {
    const double mid = 0.5 * (lo + hi);
    (max_det(mid) > 0.0 ? hi : lo) = mid;
  }
  return 0.5 * (lo + hi);
}

}  // namespace nctx
