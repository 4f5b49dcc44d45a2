#include <algorithm>
#include <iostream>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "nctx/errors.hpp"
#include "nctx/log.hpp"
#include "nctx/pipeline.hpp"
#include "nctx/quantum.hpp"
#include "nctx/report.hpp"

namespace {

struct RunConfig {
  nctx::Tolerances tol;
  bool oracle = false;
  std::string format = "text";
  double eta = 1.0;
  bool threshold = false;
};

// 0 = noncontextual model exists, 1 = contextual, 3 = oracle disagreement
int verdict_code(const nctx::CertificationResult& res, const RunConfig& cfg) {
  if (cfg.oracle && res.oracle_disagrees(cfg.tol)) {
    std::cerr << "nctx: inequality verdict and LP oracle disagree outside the tolerance band"
              << " (max det " << res.report->max_det() << ", D " << res.geometry->D
              << ", oracle residual " << res.oracle->residual << ")\n";
    return 3;
  }
  return res.verdict == nctx::Verdict::contextual ? 1 : 0;
}

void print_scenario_text(const nctx::ScenarioStats& stats) {
  std::cout << "scenario:";
  for (const auto& m : stats.measurements) std::cout << "  " << m;
  std::cout << "\n";
  for (const auto& prep : stats.preparations) {
    std::cout << "  " << prep.name << (prep.auxiliary ? " (aux)" : "") << ":";
    for (double p : prep.prob0) std::cout << " " << p;
    std::cout << "\n";
  }
}

int run_certify_file(const std::string& path, const RunConfig& cfg) {
  const auto stats = nctx::load_scenario_json(path);
  const auto res = nctx::certify(stats, cfg.tol, cfg.oracle);
  const auto rep = nctx::make_report(res);
  if (cfg.format == "json")
    std::cout << nctx::to_json(rep) << "\n";
  else
    std::cout << nctx::to_text(rep);
  return verdict_code(res, cfg);
}

int run_simulate(const RunConfig& cfg) {
  if (cfg.threshold) {
    const double eta_star = nctx::violation_threshold();
    if (cfg.format == "json")
      std::cout << nctx::to_json_threshold(eta_star) << "\n";
    else
      std::cout << "violation threshold eta = " << eta_star << "\n";
    return 0;
  }
  const auto stats = nctx::qubit_scenario(cfg.eta);
  const auto res = nctx::certify(stats, cfg.tol, cfg.oracle);
  const auto rep = nctx::make_report(res);
  if (cfg.format == "json") {
    std::cout << nctx::to_json_simulate(stats, rep) << "\n";
  } else {
    print_scenario_text(stats);
    std::cout << nctx::to_text(rep);
  }
  return verdict_code(res, cfg);
}

int run_reduce_file(const std::string& path, const RunConfig& cfg) {
  const auto stats = nctx::load_scenario_json(path);
  const auto res = nctx::reduce_and_certify(stats, cfg.tol, cfg.oracle);
  const auto red = nctx::make_reduction_report(res.reduced.reduction);
  const auto rep = nctx::make_report(res.certification);
  if (cfg.format == "json") {
    std::cout << nctx::to_json_reduce(red, rep) << "\n";
  } else {
    std::cout << nctx::to_text(red);
    std::cout << nctx::to_text(rep);
  }
  return verdict_code(res.certification, cfg);
}

template <typename F>
int guarded(F&& f) {
  try {
    return f();
  } catch (const nctx::Error& e) {
    std::cerr << "nctx: " << e.what() << "\n";
    return 2;
  } catch (const std::exception& e) {
    std::cerr << "nctx: unexpected error: " << e.what() << "\n";
    return 2;
  }
}

void add_tolerance_flags(CLI::App* cmd, RunConfig& cfg) {
  cmd->add_option("--eps-prob", cfg.tol.eps_prob, "probability clamp band")
      ->check(CLI::PositiveNumber);
  cmd->add_option("--eps-geom", cfg.tol.eps_geom, "degeneracy tolerance")
      ->check(CLI::PositiveNumber);
  cmd->add_option("--eps-verdict", cfg.tol.eps_verdict, "violation threshold on determinants")
      ->check(CLI::PositiveNumber);
  cmd->add_option("--delta-lp", cfg.tol.delta_lp, "LP feasibility residual bound")
      ->check(CLI::PositiveNumber);
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"preparation-noncontextuality certifier (4 preparations, 2 binary measurements)"};
  app.require_subcommand(1);

  RunConfig cfg;
  std::vector<std::string> files;

  auto* certify = app.add_subcommand(
      "certify", "decide whether a noncontextual model exists for recorded statistics");
  certify->add_option("file", files, "scenario JSON file(s)")->required()->expected(-1);
  certify->add_flag("--oracle", cfg.oracle, "cross-check with the LP feasibility oracle");
  certify->add_option("--format", cfg.format, "text or json")
      ->check(CLI::IsMember({"text", "json"}));
  add_tolerance_flags(certify, cfg);

  auto* simulate = app.add_subcommand("simulate", "certify the qubit example at visibility eta");
  auto* eta_opt =
      simulate->add_option("--eta", cfg.eta, "visibility in [0,1]")->check(CLI::Range(0.0, 1.0));
  simulate->add_flag("--threshold", cfg.threshold, "locate the visibility where violation starts")
      ->excludes(eta_opt);
  simulate->add_option("--format", cfg.format, "text or json")
      ->check(CLI::IsMember({"text", "json"}));
  add_tolerance_flags(simulate, cfg);

  auto* reduce = app.add_subcommand(
      "reduce", "reduce a 3-measurement scenario to the plane and certify it");
  reduce->add_option("file", files, "scenario JSON file(s)")->required()->expected(-1);
  reduce->add_flag("--oracle", cfg.oracle, "cross-check with the LP feasibility oracle");
  reduce->add_option("--format", cfg.format, "text or json")
      ->check(CLI::IsMember({"text", "json"}));
  add_tolerance_flags(reduce, cfg);

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int rc = app.exit(e);
    return rc == 0 ? 0 : 2;  // --help stays 0, every usage error is an input error
  }

  int code = 0;
  if (certify->parsed()) {
    for (const auto& f : files) code = std::max(code, guarded([&] { return run_certify_file(f, cfg); }));
  } else if (simulate->parsed()) {
    code = guarded([&] { return run_simulate(cfg); });
  } else if (reduce->parsed()) {
    for (const auto& f : files) code = std::max(code, guarded([&] { return run_reduce_file(f, cfg); }));
  }
  return code;
}
