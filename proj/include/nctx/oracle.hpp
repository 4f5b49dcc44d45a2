#pragma once

#include <optional>

#include "nctx/inequalities.hpp"

namespace nctx {

// Weights over the 16 deterministic strategies lambda = 4*alpha + beta, where
// bit x of alpha is Alice's outcome for setting x and bit y of beta is Bob's
// outcome for setting y.
struct StrategyWeights {
  Eigen::Matrix<double, 16, 1> w = Eigen::Matrix<double, 16, 1>::Zero();

  static int alice_outcome(int lambda, int x) { return ((lambda >> 2) >> x) & 1; }
  static int bob_outcome(int lambda, int y) { return ((lambda & 3) >> y) & 1; }

  // reconstructed P(a,b|x,y)
  BellTable reconstruct() const;
};

// Explicit ontological model over the 16 strategies: mu(i, lambda) is the
// distribution of preparation i, and the response functions are the
// deterministic Bob outcomes.
struct OntologicalModel {
  Eigen::Matrix<double, 4, 16> mu = Eigen::Matrix<double, 4, 16>::Zero();

  static double response(int k, int lambda, int j) {
    return StrategyWeights::bob_outcome(lambda, j) == k ? 1.0 : 0.0;
  }

  // reconstructed P(0 | P_i, M_j)
  double prob0(int i, int j) const {
    double s = 0.0;
    for (int lam = 0; lam < 16; ++lam) s += mu(i, lam) * response(0, lam, j);
    return s;
  }
};

struct OracleVerdict {
  bool feasible = false;
  bool degenerate = false;  // simplex hull: model exists without any LP
  double residual = 0.0;    // max |A w - b| at termination
  std::optional<StrategyWeights> witness;
  std::optional<OntologicalModel> model;
};

// Phase-1 simplex feasibility for "bt is a mixture of deterministic
// strategies": 16 equality constraints plus normalization, Bland's rule,
// pivot cap 10^4.
OracleVerdict local_model_feasible(const BellTable& bt, double delta_lp);

// Same verdict with the ontological model filled in by inverting the
// strategy weights through the pivot decomposition.
OracleVerdict local_model_feasible(const BellTable& bt, const PivotalDecompositiond& piv,
                                   double delta_lp);

// Full independent route: degenerate hulls are feasible outright, anything
// else goes through the converted table and the LP.
OracleVerdict noncontextual_model_exists(const ScenarioStats& stats, const Tolerances& tol = {});

}  // namespace nctx
