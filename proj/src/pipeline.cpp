#include "nctx/pipeline.hpp"

#include <cmath>

#include "nctx/log.hpp"

namespace nctx {

bool CertificationResult::oracle_disagrees(const Tolerances& tol) const {
  if (!oracle || !report || !geometry) return false;
  const double md = report->max_det();
  const double band = 10.0 * std::max(tol.delta_lp, tol.eps_verdict) * geometry->D;
  if (std::abs(md) <= band) return false;  // both methods blur near the boundary
  const bool det_contextual = md > tol.eps_verdict;
  return det_contextual == oracle->feasible;
}

CertificationResult certify(const ScenarioStats& stats, const Tolerances& tol,
                            bool with_oracle) {
  const ScenarioStats valid = validate(stats, tol.eps_prob, Mode::certify);
  const auto vecs = to_vectors(valid);
  const std::array<Vec2d, 4> vs = {vecs[0], vecs[1], vecs[2], vecs[3]};

  CertificationResult res;
  const GeometryVerdictd gv = canonicalize<double>(vs, tol.eps_geom);
  if (gv.degenerate_simplex()) {
    log::info("hull has <= 3 extreme points: noncontextual by the simplex model");
    res.verdict = Verdict::degenerate_noncontextual;
    if (with_oracle) {
      OracleVerdict ov;
      ov.feasible = true;
      ov.degenerate = true;
      res.oracle = ov;
    }
    return res;
  }

  res.geometry = *gv.canonical;
  res.pivotal = pivotal_solve<double>(*res.geometry, tol.eps_geom);
  res.report = evaluate_all(*res.geometry, tol.eps_verdict);
  res.verdict = res.report->verdict;
  res.bell = bell_convert(valid, *res.geometry, *res.pivotal);
  log::debug("max det ", res.report->max_det(), ", D ", res.geometry->D, ", p ",
             res.pivotal->p, ", q ", res.pivotal->q);
  if (with_oracle)
    res.oracle = local_model_feasible(*res.bell, *res.pivotal, tol.delta_lp);
  return res;
}

ReduceCertificationResult reduce_and_certify(const ScenarioStats& stats, const Tolerances& tol,
                                             bool with_oracle) {
  const ScenarioStats valid = validate(stats, tol.eps_prob, Mode::tomography);
  ReduceCertificationResult out{reduce_scenario(valid), {}};
  out.certification = certify(out.reduced.effective_stats, tol, with_oracle);
  return out;
}

}  // namespace nctx
