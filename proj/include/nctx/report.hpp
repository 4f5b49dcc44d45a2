#pragma once

#include <array>
#include <optional>
#include <string>

#include "nctx/pipeline.hpp"

namespace nctx {

// Flat mirror of the machine-readable report. Geometry fields are absent on
// the degenerate path; oracle only when requested.
struct Report {
  std::string verdict;
  std::optional<std::array<double, 8>> det_values;   // keyed by sign column
  std::optional<std::array<double, 8>> chsh_values;
  std::optional<double> D;
  std::optional<double> p;
  std::optional<double> q;
  std::optional<std::array<double, 2>> c;
  std::optional<std::array<int, 4>> permutation;     // input index -> canonical label

  struct Oracle {
    bool feasible = false;
    bool degenerate = false;
    double residual = 0.0;
    std::optional<std::array<double, 16>> witness;
    std::optional<std::array<std::array<double, 16>, 4>> mu;
  };
  std::optional<Oracle> oracle;
};

struct ReductionReport {
  double plane_w;
  std::array<double, 4> mix_params;
  std::array<std::array<double, 2>, 4> effective;
};

Report make_report(const CertificationResult& r);
ReductionReport make_reduction_report(const ReductionResult& r);

// Stable JSON: fixed key order, numbers via fmt_double, so parse -> emit is
// byte-identical.
std::string to_json(const Report& r);
std::string to_json_simulate(const ScenarioStats& scenario, const Report& certification);
std::string to_json_reduce(const ReductionReport& reduction, const Report& certification);
std::string to_json_threshold(double eta_star);

Report report_from_json(const std::string& text);

// wrapped {"scenario"/"reduction": ..., "certification": ...} documents
std::string reemit_simulate_json(const std::string& text);
std::string reemit_reduce_json(const std::string& text);

std::string to_text(const Report& r);
std::string to_text(const ReductionReport& r);

}  // namespace nctx
