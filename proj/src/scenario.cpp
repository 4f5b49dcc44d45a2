#include "nctx/scenario.hpp"

#include <fstream>
#include <sstream>

#include <json.hpp>

#include "nctx/errors.hpp"
#include "nctx/numfmt.hpp"

namespace nctx {

namespace {

double clamp_prob(double v, double eps_prob, const std::string& where) {
  if (v < -eps_prob || v > 1.0 + eps_prob)
    throw OutOfRangeProbability("probability " + fmt_double(v) + " out of range at " + where);
  if (v < 0.0) return 0.0;
  if (v > 1.0) return 1.0;
  return v;
}

}  // namespace

ScenarioStats validate(const ScenarioStats& raw, double eps_prob, Mode mode) {
  const std::size_t want_meas = mode == Mode::certify ? 2 : 3;
  if (raw.n_measurements() != want_meas)
    throw WrongArity("expected " + std::to_string(want_meas) + " measurements, got " +
                     std::to_string(raw.n_measurements()));
  if (mode == Mode::certify && raw.n_preparations() != 4)
    throw WrongArity("expected 4 preparations, got " + std::to_string(raw.n_preparations()));
  if (mode == Mode::tomography && raw.n_preparations() < 5)
    throw WrongArity("expected at least 5 preparations, got " +
                     std::to_string(raw.n_preparations()));

  ScenarioStats out = raw;
  for (auto& prep : out.preparations) {
    if (prep.prob0.size() != raw.n_measurements())
      throw WrongArity("preparation " + prep.name + " has " +
                       std::to_string(prep.prob0.size()) + " probabilities for " +
                       std::to_string(raw.n_measurements()) + " measurements");
    if (mode == Mode::certify && prep.auxiliary)
      throw WrongArity("auxiliary preparation " + prep.name + " is only valid with 3 measurements");
    for (std::size_t j = 0; j < prep.prob0.size(); ++j)
      prep.prob0[j] = clamp_prob(prep.prob0[j], eps_prob,
                                 prep.name + "/" + out.measurements[j]);
  }
  return out;
}

std::vector<Vec2d> to_vectors(const ScenarioStats& stats) {
  std::vector<Vec2d> vs;
  vs.reserve(stats.n_preparations());
  for (const auto& prep : stats.preparations)
    vs.emplace_back(expectation_from_prob0(prep.prob0[0]), expectation_from_prob0(prep.prob0[1]));
  return vs;
}

std::vector<Vec3d> to_vectors3(const ScenarioStats& stats) {
  std::vector<Vec3d> vs;
  vs.reserve(stats.n_preparations());
  for (const auto& prep : stats.preparations)
    vs.emplace_back(expectation_from_prob0(prep.prob0[0]), expectation_from_prob0(prep.prob0[1]),
                    expectation_from_prob0(prep.prob0[2]));
  return vs;
}

ScenarioStats parse_scenario_json(const std::string& text) {
  nlohmann::json doc;
  try {
    doc = nlohmann::json::parse(text);
  } catch (const nlohmann::json::exception& e) {
    throw ParseError(std::string("invalid JSON: ") + e.what());
  }
  try {
    ScenarioStats stats;
    stats.measurements = doc.at("measurements").get<std::vector<std::string>>();
    for (const auto& p : doc.at("preparations")) {
      PrepRecord rec;
      rec.name = p.at("name").get<std::string>();
      rec.prob0 = p.at("prob0").get<std::vector<double>>();
      rec.auxiliary = p.value("auxiliary", false);
      stats.preparations.push_back(std::move(rec));
    }
    return stats;
  } catch (const nlohmann::json::exception& e) {
    throw ParseError(std::string("bad scenario document: ") + e.what());
  }
}

ScenarioStats load_scenario_json(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw ParseError("cannot open " + path);
  std::ostringstream buf;
  buf << in.rdbuf();
  return parse_scenario_json(buf.str());
}

std::string scenario_to_json(const ScenarioStats& stats) {
  std::ostringstream out;
  out << "{\"measurements\": [";
  for (std::size_t j = 0; j < stats.measurements.size(); ++j) {
    if (j) out << ", ";
    out << nlohmann::json(stats.measurements[j]).dump();
  }
  out << "], \"preparations\": [";
  for (std::size_t i = 0; i < stats.preparations.size(); ++i) {
    const auto& prep = stats.preparations[i];
    if (i) out << ", ";
    out << "{\"name\": " << nlohmann::json(prep.name).dump() << ", \"prob0\": [";
    for (std::size_t j = 0; j < prep.prob0.size(); ++j) {
      if (j) out << ", ";
      out << fmt_double(prep.prob0[j]);
    }
    out << "]";
    if (prep.auxiliary) out << ", \"auxiliary\": true";
    out << "}";
  }
  out << "]}";
  return out.str();
}

}  // namespace nctx
