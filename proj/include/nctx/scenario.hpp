#pragma once

#include <cstddef>
#include <string>
#include <vector>

#include "nctx/types.hpp"

namespace nctx {

// One preparation: a name plus P(outcome 0 | preparation, M_j) for each
// measurement j. Only the outcome-0 probability is stored; P(1|...) is always
// 1 - prob0, so the pair cannot drift out of normalisation.
struct PrepRecord {
  std::string name;
  std::vector<double> prob0;
  bool auxiliary = false;
};

struct ScenarioStats {
  std::vector<std::string> measurements;
  std::vector<PrepRecord> preparations;

  std::size_t n_measurements() const { return measurements.size(); }
  std::size_t n_preparations() const { return preparations.size(); }
};

enum class Mode {
  certify,    // 4 preparations, 2 measurements
  tomography  // >= 5 preparations, 3 measurements, one auxiliary
};

// Clamps probabilities within eps_prob of [0,1] onto the boundary, rejects
// anything further out, and checks the counts required by the mode.
ScenarioStats validate(const ScenarioStats& raw, double eps_prob, Mode mode);

inline double expectation_from_prob0(double p) { return 2.0 * p - 1.0; }
inline double prob0_from_expectation(double e) { return (1.0 + e) / 2.0; }

// Expectation-vector representation: x = 2 P(0|.,M_0) - 1, y = 2 P(0|.,M_1) - 1.
std::vector<Vec2d> to_vectors(const ScenarioStats& stats);

// Three-measurement variant; the third coordinate is the M' expectation.
std::vector<Vec3d> to_vectors3(const ScenarioStats& stats);

// JSON document handling; format documented in the README.
ScenarioStats parse_scenario_json(const std::string& text);
ScenarioStats load_scenario_json(const std::string& path);
std::string scenario_to_json(const ScenarioStats& stats);

}  // namespace nctx
