#include "nctx/oracle.hpp"

#include <array>

#include "nctx/errors.hpp"
#include "nctx/log.hpp"
#include "nctx/pipeline.hpp"

namespace nctx {

namespace {

constexpr int kVars = 16;  // deterministic strategies
constexpr int kRows = 17;  // 16 probability constraints + normalization
constexpr int kMaxPivots = 10000;
constexpr double kTolPivot = 1e-11;

// A(r, lambda) = 1 iff strategy lambda produces (a,b) under settings (x,y),
// with r = 8x + 4y + 2a + b; last row is the normalization.
Eigen::Matrix<double, kRows, kVars> constraint_matrix() {
  Eigen::Matrix<double, kRows, kVars> A = Eigen::Matrix<double, kRows, kVars>::Zero();
  for (int x = 0; x < 2; ++x)
    for (int y = 0; y < 2; ++y)
      for (int a = 0; a < 2; ++a)
        for (int b = 0; b < 2; ++b) {
          const int r = 8 * x + 4 * y + 2 * a + b;
          for (int lam = 0; lam < kVars; ++lam)
            if (StrategyWeights::alice_outcome(lam, x) == a &&
                StrategyWeights::bob_outcome(lam, y) == b)
              A(r, lam) = 1.0;
        }
  A.row(kRows - 1).setOnes();
  return A;
}

Eigen::Matrix<double, kRows, 1> rhs(const BellTable& bt) {
  Eigen::Matrix<double, kRows, 1> b;
  for (int x = 0; x < 2; ++x)
    for (int y = 0; y < 2; ++y)
      for (int a = 0; a < 2; ++a)
        for (int bb = 0; bb < 2; ++bb) b(8 * x + 4 * y + 2 * a + bb) = bt.at(a, bb, x, y);
  b(kRows - 1) = 1.0;
  return b;
}

struct Phase1Result {
  Eigen::Matrix<double, kVars, 1> w;
  double residual;  // max |A w - b|
};

// Phase-1 simplex on A w = b, w >= 0: minimize the artificial total with
// Bland's entering/leaving rule (artificials never re-enter). The system is
// feasible iff the optimum is zero, i.e. the residual of the returned w
// vanishes up to roundoff.
Phase1Result phase1_simplex(const Eigen::Matrix<double, kRows, kVars>& A,
                            const Eigen::Matrix<double, kRows, 1>& b) {
  const int m = kRows, n = kVars;
  const int rhs_col = n + m;
  Eigen::MatrixXd T = Eigen::MatrixXd::Zero(m + 1, n + m + 1);
  T.block(0, 0, m, n) = A;
  for (int i = 0; i < m; ++i) {
    T(i, n + i) = 1.0;
    T(i, rhs_col) = b(i);  // all inputs are probabilities, so b >= 0
  }
  for (int j = 0; j < n; ++j) T(m, j) = -A.col(j).sum();
  T(m, rhs_col) = -b.sum();

  std::array<int, kRows> basis;
  for (int i = 0; i < m; ++i) basis[i] = n + i;
  std::array<bool, kRows> artificial_banned{};

  auto extract = [&] {
    Phase1Result res;
    res.w.setZero();
    for (int i = 0; i < m; ++i)
      if (basis[i] < n) res.w(basis[i]) = T(i, rhs_col);
    res.residual = (A * res.w - b).cwiseAbs().maxCoeff();
    return res;
  };

  for (int iter = 0; iter < kMaxPivots; ++iter) {
    // entering: smallest-index improving column
    int enter = -1;
    for (int j = 0; j < n + m; ++j) {
      if (j >= n && artificial_banned[j - n]) continue;
      if (T(m, j) < -kTolPivot) {
        enter = j;
        break;
      }
    }
    if (enter < 0) {
      Phase1Result res = extract();
      log::debug("lp: optimum after ", iter, " pivots, residual ", res.residual);
      return res;
    }

    // leaving: min ratio, ties to the smallest basis label
    int leave = -1;
    double best_ratio = 0.0;
    for (int i = 0; i < m; ++i) {
      if (T(i, enter) <= kTolPivot) continue;
      const double ratio = T(i, rhs_col) / T(i, enter);
      if (leave < 0 || ratio < best_ratio - kTolPivot ||
          (ratio < best_ratio + kTolPivot && basis[i] < basis[leave])) {
        leave = i;
        best_ratio = ratio;
      }
    }
    if (leave < 0) {
      // a feasibility objective is bounded below; treat as a stall
      throw SolverStall("lp: unbounded pivot column in phase 1", extract().residual);
    }

    if (basis[leave] >= n) artificial_banned[basis[leave] - n] = true;
    basis[leave] = enter;
    T.row(leave) /= T(leave, enter);
    for (int i = 0; i <= m; ++i) {
      if (i == leave) continue;
      const double f = T(i, enter);
      if (f != 0.0) T.row(i) -= f * T.row(leave);
    }
  }
  throw SolverStall("lp: pivot cap reached", extract().residual);
}

OntologicalModel materialize_model(const StrategyWeights& wit,
                                   const PivotalDecompositiond& piv) {
  OntologicalModel model;
  for (int lam = 0; lam < kVars; ++lam) {
    const double w = wit.w(lam);
    const int a0 = StrategyWeights::alice_outcome(lam, 0);
    const int a1 = StrategyWeights::alice_outcome(lam, 1);
    model.mu(0, lam) = a0 == 0 ? w / piv.p : 0.0;
    model.mu(3, lam) = a0 == 1 ? w / (1.0 - piv.p) : 0.0;
    model.mu(1, lam) = a1 == 0 ? w / piv.q : 0.0;
    model.mu(2, lam) = a1 == 1 ? w / (1.0 - piv.q) : 0.0;
  }
  return model;
}

}  // namespace

BellTable StrategyWeights::reconstruct() const {
  BellTable bt;
  for (int lam = 0; lam < kVars; ++lam)
    for (int x = 0; x < 2; ++x)
      for (int y = 0; y < 2; ++y)
        bt.at(alice_outcome(lam, x), bob_outcome(lam, y), x, y) += w(lam);
  return bt;
}

OracleVerdict local_model_feasible(const BellTable& bt, double delta_lp) {
  static const Eigen::Matrix<double, kRows, kVars> A = constraint_matrix();
  const Phase1Result res = phase1_simplex(A, rhs(bt));
  OracleVerdict verdict;
  verdict.residual = res.residual;
  verdict.feasible = res.residual <= delta_lp;
  if (verdict.feasible) {
    StrategyWeights wit;
    wit.w = res.w;
    verdict.witness = wit;
  }
  return verdict;
}

OracleVerdict local_model_feasible(const BellTable& bt, const PivotalDecompositiond& piv,
                                   double delta_lp) {
  OracleVerdict verdict = local_model_feasible(bt, delta_lp);
  if (verdict.feasible) verdict.model = materialize_model(*verdict.witness, piv);
  return verdict;
}

OracleVerdict noncontextual_model_exists(const ScenarioStats& stats, const Tolerances& tol) {
  const CertificationResult res = certify(stats, tol, /*with_oracle=*/true);
  return *res.oracle;
}

}  // namespace nctx
