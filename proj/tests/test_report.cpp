#include <cmath>

#include <doctest.h>

#include "helpers.hpp"
#include "nctx/numfmt.hpp"
#include "nctx/quantum.hpp"
#include "nctx/report.hpp"

using namespace nctx;

TEST_CASE("number formatting survives a parse cycle") {
  for (const double v : {0.5, 1.0, -0.0, 1.0 / 3.0, 8 * std::sqrt(2.0) - 8, 1e-12,
                         0.7071067811865476, 123456.789}) {
    const std::string s = fmt_double(v);
    CHECK(fmt_double(std::stod(s)) == s);
  }
}

TEST_CASE("certification report JSON round-trips byte-identically") {
  const auto res = certify(qubit_scenario(1.0), Tolerances{}, true);
  const std::string text = to_json(make_report(res));
  CHECK(to_json(report_from_json(text)) == text);

  // spot-check the schema
  CHECK(text.find("\"verdict\": \"Contextual\"") != std::string::npos);
  CHECK(text.find("\"det_values\": {\"1,1,1,-1\": ") != std::string::npos);
  CHECK(text.find("\"oracle\": {\"feasible\": false") != std::string::npos);
  CHECK(text.find("\"permutation\": [0, 1, 2, 3]") != std::string::npos);
}

TEST_CASE("degenerate report stays minimal and round-trips") {
  const auto res = certify(qubit_scenario(0.0), Tolerances{}, true);
  const std::string text = to_json(make_report(res));
  CHECK(text.find("\"verdict\": \"DegenerateNoncontextual\"") != std::string::npos);
  CHECK(text.find("det_values") == std::string::npos);
  CHECK(text.find("\"degenerate\": true") != std::string::npos);
  CHECK(to_json(report_from_json(text)) == text);
}

TEST_CASE("feasible report with witness and model round-trips") {
  const auto stats = testutil::stats_from_vectors(
      {Vec2d(0.3, 0.3), Vec2d(0.3, -0.3), Vec2d(-0.3, 0.3), Vec2d(-0.3, -0.3)});
  const auto res = certify(stats, Tolerances{}, true);
  const std::string text = to_json(make_report(res));
  CHECK(text.find("\"witness\": [") != std::string::npos);
  CHECK(text.find("\"mu\": [[") != std::string::npos);
  CHECK(to_json(report_from_json(text)) == text);
}

TEST_CASE("simulate and reduce wrappers round-trip") {
  const auto stats = qubit_scenario(0.9);
  const auto res = certify(stats, Tolerances{}, false);
  const std::string sim = to_json_simulate(stats, make_report(res));
  CHECK(reemit_simulate_json(sim) == sim);

  const auto tomo = tilted_qubit_scenario(1.0, {0.02, 0.05, -0.03, 0.01});
  const auto out = reduce_and_certify(tomo, Tolerances{}, false);
  const std::string red = to_json_reduce(make_reduction_report(out.reduced.reduction),
                                         make_report(out.certification));
  CHECK(reemit_reduce_json(red) == red);
}

TEST_CASE("text report mentions the essentials") {
  const auto res = certify(qubit_scenario(1.0), Tolerances{}, true);
  const std::string text = to_text(make_report(res));
  CHECK(text.find("verdict: Contextual") != std::string::npos);
  CHECK(text.find("max det") != std::string::npos);
  CHECK(text.find("oracle: infeasible") != std::string::npos);
}
