#pragma once

#include <array>
#include <cstdio>
#include <cstdlib>
#include <fstream>
#include <random>
#include <string>
#include <sys/wait.h>

#include "nctx/geometry.hpp"
#include "nctx/scenario.hpp"

namespace testutil {

inline nctx::Vec2d random_point(std::mt19937_64& rng) {
  std::uniform_real_distribution<double> u(-1.0, 1.0);
  return {u(rng), u(rng)};
}

// four vectors uniform in [-1,1]^2, resampled until they form a proper
// quadrilateral
inline std::array<nctx::Vec2d, 4> random_quad(std::mt19937_64& rng, double eps_geom = 1e-9) {
  for (;;) {
    std::array<nctx::Vec2d, 4> vs = {random_point(rng), random_point(rng), random_point(rng),
                                     random_point(rng)};
    if (!nctx::canonicalize<double>(vs, eps_geom).degenerate_simplex()) return vs;
  }
}

inline nctx::ScenarioStats stats_from_vectors(const std::array<nctx::Vec2d, 4>& vs) {
  nctx::ScenarioStats stats;
  stats.measurements = {"M0", "M1"};
  for (int i = 0; i < 4; ++i) {
    nctx::PrepRecord rec;
    rec.name = "P" + std::to_string(i);
    rec.prob0 = {nctx::prob0_from_expectation(vs[i].x()),
                 nctx::prob0_from_expectation(vs[i].y())};
    stats.preparations.push_back(std::move(rec));
  }
  return stats;
}

struct CliResult {
  int exit_code;
  std::string out;
};

// runs the built binary named by NCTX_CLI; stderr is dropped so stdout stays
// parseable
inline CliResult run_cli(const std::string& args) {
  const char* bin = std::getenv("NCTX_CLI");
  if (bin == nullptr) return {-1, "NCTX_CLI not set"};
  const std::string cmd = std::string("'") + bin + "' " + args + " 2>/dev/null";
  FILE* pipe = popen(cmd.c_str(), "r");
  if (pipe == nullptr) return {-1, "popen failed"};
  std::string out;
  char buf[4096];
  size_t n;
  while ((n = fread(buf, 1, sizeof buf, pipe)) > 0) out.append(buf, n);
  const int status = pclose(pipe);
  return {WIFEXITED(status) ? WEXITSTATUS(status) : -1, out};
}

inline std::string write_temp(const std::string& contents, const std::string& tag) {
  static int counter = 0;
  const std::string path = "/tmp/nctx_test_" + std::to_string(getpid()) + "_" + tag + "_" +
                           std::to_string(counter++) + ".json";
  std::ofstream out(path);
  out << contents;
  return path;
}

}  // namespace testutil
