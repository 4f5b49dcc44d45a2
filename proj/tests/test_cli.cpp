#include <cmath>

#include <doctest.h>
#include <json.hpp>

#include "helpers.hpp"
#include "nctx/quantum.hpp"
#include "nctx/report.hpp"
#include "nctx/scenario.hpp"
#include "nctx/tomography.hpp"

using namespace nctx;
using testutil::run_cli;
using testutil::write_temp;

namespace {

std::string qubit_file() {
  static const std::string path = write_temp(scenario_to_json(qubit_scenario(1.0)), "qubit");
  return path;
}

std::string local_square_file() {
  static const std::string path = write_temp(
      scenario_to_json(testutil::stats_from_vectors(
          {Vec2d(0.3, 0.3), Vec2d(0.3, -0.3), Vec2d(-0.3, 0.3), Vec2d(-0.3, -0.3)})),
      "square");
  return path;
}

}  // namespace

TEST_CASE("certify reports the qubit violation with exit code 1") {
  const auto res = run_cli("certify '" + qubit_file() + "' --format json");
  REQUIRE(res.exit_code == 1);
  const auto doc = nlohmann::json::parse(res.out);
  CHECK(doc.at("verdict") == "Contextual");
  const double det = doc.at("det_values").at("1,1,1,-1").get<double>();
  CHECK(std::abs(det - 3.3137084990) <= 1e-9);
  const double chsh = doc.at("chsh_values").at("1,1,1,-1").get<double>();
  CHECK(std::abs(chsh - 2.8284271247) <= 1e-9);
}

TEST_CASE("certify accepts the local square with exit code 0") {
  const auto res = run_cli("certify '" + local_square_file() + "' --oracle --format json");
  CHECK(res.exit_code == 0);
  const auto doc = nlohmann::json::parse(res.out);
  CHECK(doc.at("verdict") == "Noncontextual");
  CHECK(doc.at("oracle").at("feasible") == true);
}

TEST_CASE("oracle agreement keeps the exit code at 1 for the qubit file") {
  const auto res = run_cli("certify '" + qubit_file() + "' --oracle --format json");
  CHECK(res.exit_code == 1);
  const auto doc = nlohmann::json::parse(res.out);
  CHECK(doc.at("oracle").at("feasible") == false);
}

TEST_CASE("malformed input exits 2") {
  const std::string bad = write_temp("{definitely not json", "bad");
  CHECK(run_cli("certify '" + bad + "'").exit_code == 2);
  CHECK(run_cli("certify /nonexistent/path.json").exit_code == 2);
  const std::string wrong =
      write_temp(R"({"measurements": ["M0"], "preparations": []})", "wrong");
  CHECK(run_cli("certify '" + wrong + "'").exit_code == 2);
}

TEST_CASE("batch mode returns the worst per-file code") {
  const auto res =
      run_cli("certify '" + local_square_file() + "' '" + qubit_file() + "' --format json");
  CHECK(res.exit_code == 1);
  // two reports, one per line
  CHECK(std::count(res.out.begin(), res.out.end(), '\n') == 2);
}

TEST_CASE("simulate certifies the generated scenario") {
  auto res = run_cli("simulate --eta 1.0 --format json");
  CHECK(res.exit_code == 1);
  auto doc = nlohmann::json::parse(res.out);
  CHECK(doc.at("certification").at("verdict") == "Contextual");
  CHECK(doc.at("scenario").at("preparations").size() == 4);

  res = run_cli("simulate --eta 0.5 --format json");
  CHECK(res.exit_code == 0);
  doc = nlohmann::json::parse(res.out);
  CHECK(doc.at("certification").at("verdict") == "Noncontextual");

  CHECK(run_cli("simulate --eta 1.5").exit_code != 0);  // out of range
}

TEST_CASE("tolerance flags reach the pipeline") {
  // an absurdly loose verdict threshold flips the qubit verdict
  const auto res = run_cli("certify '" + qubit_file() + "' --eps-verdict 10 --format json");
  CHECK(res.exit_code == 0);
  CHECK(nlohmann::json::parse(res.out).at("verdict") == "Noncontextual");
  CHECK(run_cli("certify '" + qubit_file() + "' --eps-verdict -1").exit_code == 2);
}

TEST_CASE("eta and threshold are mutually exclusive") {
  CHECK(run_cli("simulate --eta 0.5 --threshold").exit_code == 2);
}

TEST_CASE("simulate --threshold prints the critical visibility") {
  const auto res = run_cli("simulate --threshold --format json");
  CHECK(res.exit_code == 0);
  const auto doc = nlohmann::json::parse(res.out);
  CHECK(std::abs(doc.at("threshold").get<double>() - 0.7071068) <= 1e-6);
}

TEST_CASE("reduce certifies a tilted scenario end to end") {
  const std::string path = write_temp(
      scenario_to_json(tilted_qubit_scenario(1.0, {0.02, 0.05, -0.03, 0.01})), "tilted");
  const auto res = run_cli("reduce '" + path + "' --oracle --format json");
  CHECK(res.exit_code == 1);
  const auto doc = nlohmann::json::parse(res.out);
  CHECK(doc.at("certification").at("verdict") == "Contextual");
  CHECK(doc.at("reduction").at("plane_w").get<double>() ==
        doctest::Approx(0.05).epsilon(1e-12));
}

TEST_CASE("reduce rejects an unseparated auxiliary with exit 2") {
  auto stats = tilted_qubit_scenario(1.0, {0.02, 0.05, -0.03, 0.01});
  stats.preparations[4].prob0[2] = prob0_from_expectation(0.03);  // below the 0.05 tilt
  const std::string path = write_temp(scenario_to_json(stats), "unsep");
  CHECK(run_cli("reduce '" + path + "'").exit_code == 2);
}

TEST_CASE("shipped sample files certify as documented") {
  const char* data = std::getenv("NCTX_DATA");
  REQUIRE(data != nullptr);
  const std::string dir(data);

  auto res = run_cli("certify '" + dir + "/qubit_xz.json' --format json");
  CHECK(res.exit_code == 1);
  CHECK(nlohmann::json::parse(res.out).at("verdict") == "Contextual");

  res = run_cli("certify '" + dir + "/local_square.json' --oracle --format json");
  CHECK(res.exit_code == 0);
  CHECK(nlohmann::json::parse(res.out).at("oracle").at("feasible") == true);

  res = run_cli("certify '" + dir + "/degenerate_collinear.json' --format json");
  CHECK(res.exit_code == 0);
  CHECK(nlohmann::json::parse(res.out).at("verdict") == "DegenerateNoncontextual");

  res = run_cli("reduce '" + dir + "/tilted_3m.json' --format json");
  CHECK(res.exit_code == 1);
}

TEST_CASE("CLI JSON output is byte-stable under parse and re-emit") {
  auto res = run_cli("certify '" + qubit_file() + "' --oracle --format json");
  std::string body = res.out;
  REQUIRE(!body.empty());
  body.pop_back();  // trailing newline
  CHECK(to_json(report_from_json(body)) == body);

  res = run_cli("simulate --eta 0.9 --format json");
  body = res.out;
  body.pop_back();
  CHECK(reemit_simulate_json(body) == body);

  const std::string path = write_temp(
      scenario_to_json(tilted_qubit_scenario(1.0, {0.02, 0.05, -0.03, 0.01})), "tilted2");
  res = run_cli("reduce '" + path + "' --format json");
  body = res.out;
  body.pop_back();
  CHECK(reemit_reduce_json(body) == body);
}
