#pragma once

#include <optional>

#include "nctx/inequalities.hpp"
#include "nctx/oracle.hpp"
#include "nctx/tomography.hpp"

namespace nctx {

struct CertificationResult {
  Verdict verdict = Verdict::degenerate_noncontextual;
  std::optional<CanonicalGeometryd> geometry;
  std::optional<PivotalDecompositiond> pivotal;
  std::optional<InequalityReport> report;  // absent on the degenerate path
  std::optional<BellTable> bell;
  std::optional<OracleVerdict> oracle;

  // verdicts disagree outside the band where both methods are trustworthy
  bool oracle_disagrees(const Tolerances& tol) const;
};

// validate -> to_vectors -> canonicalize -> (pivotal_solve -> evaluate_all ->
// bell_convert [-> LP oracle]). Degenerate hulls stop at the geometry stage.
CertificationResult certify(const ScenarioStats& stats, const Tolerances& tol,
                            bool with_oracle);

struct ReduceCertificationResult {
  ReducedScenario reduced;
  CertificationResult certification;
};

// Tomographic reduction followed by certification of the effective scenario.
ReduceCertificationResult reduce_and_certify(const ScenarioStats& stats, const Tolerances& tol,
                                             bool with_oracle);

}  // namespace nctx
