#include "nctx/report.hpp"

#include <cstdio>
#include <sstream>

#include <json.hpp>

#include "nctx/errors.hpp"
#include "nctx/numfmt.hpp"

namespace nctx {

namespace {

std::string num_list(const double* v, std::size_t n) {
  std::string out = "[";
  for (std::size_t i = 0; i < n; ++i) {
    if (i) out += ", ";
    out += fmt_double(v[i]);
  }
  return out + "]";
}

std::string column_map(const std::array<double, 8>& vals) {
  std::string out = "{";
  const auto& cols = sign_columns();
  for (std::size_t i = 0; i < cols.size(); ++i) {
    if (i) out += ", ";
    out += "\"" + cols[i].key() + "\": " + fmt_double(vals[i]);
  }
  return out + "}";
}

std::string oracle_json(const Report::Oracle& o) {
  std::string out = "{\"feasible\": ";
  out += o.feasible ? "true" : "false";
  if (o.degenerate) out += ", \"degenerate\": true";
  out += ", \"residual\": " + fmt_double(o.residual);
  if (o.witness) out += ", \"witness\": " + num_list(o.witness->data(), 16);
  if (o.mu) {
    out += ", \"mu\": [";
    for (int i = 0; i < 4; ++i) {
      if (i) out += ", ";
      out += num_list((*o.mu)[i].data(), 16);
    }
    out += "]";
  }
  return out + "}";
}

std::array<double, 8> parse_column_map(const nlohmann::json& j) {
  std::array<double, 8> vals{};
  const auto& cols = sign_columns();
  for (std::size_t i = 0; i < cols.size(); ++i) vals[i] = j.at(cols[i].key()).get<double>();
  return vals;
}

Report report_from_parsed(const nlohmann::json& doc) {
  Report r;
  r.verdict = doc.at("verdict").get<std::string>();
  if (doc.contains("det_values")) r.det_values = parse_column_map(doc.at("det_values"));
  if (doc.contains("chsh_values")) r.chsh_values = parse_column_map(doc.at("chsh_values"));
  if (doc.contains("D")) r.D = doc.at("D").get<double>();
  if (doc.contains("p")) r.p = doc.at("p").get<double>();
  if (doc.contains("q")) r.q = doc.at("q").get<double>();
  if (doc.contains("c")) {
    r.c = std::array<double, 2>{doc.at("c").at(0).get<double>(), doc.at("c").at(1).get<double>()};
  }
  if (doc.contains("permutation")) {
    std::array<int, 4> perm{};
    for (int i = 0; i < 4; ++i) perm[i] = doc.at("permutation").at(i).get<int>();
    r.permutation = perm;
  }
  if (doc.contains("oracle")) {
    const auto& jo = doc.at("oracle");
    Report::Oracle o;
    o.feasible = jo.at("feasible").get<bool>();
    o.degenerate = jo.value("degenerate", false);
    o.residual = jo.at("residual").get<double>();
    if (jo.contains("witness")) {
      std::array<double, 16> w{};
      for (int i = 0; i < 16; ++i) w[i] = jo.at("witness").at(i).get<double>();
      o.witness = w;
    }
    if (jo.contains("mu")) {
      std::array<std::array<double, 16>, 4> mu{};
      for (int i = 0; i < 4; ++i)
        for (int k = 0; k < 16; ++k) mu[i][k] = jo.at("mu").at(i).at(k).get<double>();
      o.mu = mu;
    }
    r.oracle = o;
  }
  return r;
}

ReductionReport reduction_from_parsed(const nlohmann::json& doc) {
  ReductionReport red{};
  red.plane_w = doc.at("plane_w").get<double>();
  for (int i = 0; i < 4; ++i) {
    red.mix_params[i] = doc.at("mix_params").at(i).get<double>();
    red.effective[i] = {doc.at("effective").at(i).at(0).get<double>(),
                        doc.at("effective").at(i).at(1).get<double>()};
  }
  return red;
}

std::string reduction_json(const ReductionReport& red) {
  std::string out = "{\"plane_w\": " + fmt_double(red.plane_w);
  out += ", \"mix_params\": " + num_list(red.mix_params.data(), 4);
  out += ", \"effective\": [";
  for (int i = 0; i < 4; ++i) {
    if (i) out += ", ";
    out += num_list(red.effective[i].data(), 2);
  }
  return out + "]}";
}

nlohmann::json parse_or_throw(const std::string& text) {
  try {
    return nlohmann::json::parse(text);
  } catch (const nlohmann::json::exception& e) {
    throw ParseError(std::string("invalid report JSON: ") + e.what());
  }
}

ScenarioStats scenario_from_parsed(const nlohmann::json& j) {
  return parse_scenario_json(j.dump());
}

}  // namespace

Report make_report(const CertificationResult& r) {
  Report rep;
  rep.verdict = to_string(r.verdict);
  if (r.report) {
    rep.det_values = r.report->det_values;
    rep.chsh_values = r.report->chsh_values;
  }
  if (r.geometry) {
    rep.D = r.geometry->D;
    rep.permutation = r.geometry->perm;
  }
  if (r.pivotal) {
    rep.p = r.pivotal->p;
    rep.q = r.pivotal->q;
    rep.c = std::array<double, 2>{r.pivotal->c.x(), r.pivotal->c.y()};
  }
  if (r.oracle) {
    Report::Oracle o;
    o.feasible = r.oracle->feasible;
    o.degenerate = r.oracle->degenerate;
    o.residual = r.oracle->residual;
    if (r.oracle->witness) {
      std::array<double, 16> w{};
      for (int i = 0; i < 16; ++i) w[i] = r.oracle->witness->w(i);
      o.witness = w;
    }
    if (r.oracle->model) {
      std::array<std::array<double, 16>, 4> mu{};
      for (int i = 0; i < 4; ++i)
        for (int k = 0; k < 16; ++k) mu[i][k] = r.oracle->model->mu(i, k);
      o.mu = mu;
    }
    rep.oracle = o;
  }
  return rep;
}

ReductionReport make_reduction_report(const ReductionResult& r) {
  ReductionReport red{};
  red.plane_w = r.plane_w;
  red.mix_params = r.mix_params;
  for (int i = 0; i < 4; ++i) red.effective[i] = {r.effective[i].x(), r.effective[i].y()};
  return red;
}

std::string to_json(const Report& r) {
  std::string out = "{\"verdict\": \"" + r.verdict + "\"";
  if (r.det_values) out += ", \"det_values\": " + column_map(*r.det_values);
  if (r.chsh_values) out += ", \"chsh_values\": " + column_map(*r.chsh_values);
  if (r.D) out += ", \"D\": " + fmt_double(*r.D);
  if (r.p) out += ", \"p\": " + fmt_double(*r.p);
  if (r.q) out += ", \"q\": " + fmt_double(*r.q);
  if (r.c) out += ", \"c\": " + num_list(r.c->data(), 2);
  if (r.permutation) {
    out += ", \"permutation\": [";
    for (int i = 0; i < 4; ++i) {
      if (i) out += ", ";
      out += std::to_string((*r.permutation)[i]);
    }
    out += "]";
  }
  if (r.oracle) out += ", \"oracle\": " + oracle_json(*r.oracle);
  return out + "}";
}

std::string to_json_simulate(const ScenarioStats& scenario, const Report& certification) {
  return "{\"scenario\": " + scenario_to_json(scenario) +
         ", \"certification\": " + to_json(certification) + "}";
}

std::string to_json_reduce(const ReductionReport& reduction, const Report& certification) {
  return "{\"reduction\": " + reduction_json(reduction) +
         ", \"certification\": " + to_json(certification) + "}";
}

std::string to_json_threshold(double eta_star) {
  return "{\"threshold\": " + fmt_double(eta_star) + "}";
}

Report report_from_json(const std::string& text) {
  return report_from_parsed(parse_or_throw(text));
}

std::string reemit_simulate_json(const std::string& text) {
  const nlohmann::json doc = parse_or_throw(text);
  return to_json_simulate(scenario_from_parsed(doc.at("scenario")),
                          report_from_parsed(doc.at("certification")));
}

std::string reemit_reduce_json(const std::string& text) {
  const nlohmann::json doc = parse_or_throw(text);
  return to_json_reduce(reduction_from_parsed(doc.at("reduction")),
                        report_from_parsed(doc.at("certification")));
}

namespace {

std::string short_num(double v) {
  char buf[32];
  std::snprintf(buf, sizeof buf, "%.10g", v);
  return buf;
}

}  // namespace

std::string to_text(const Report& r) {
  std::ostringstream out;
  out << "verdict: " << r.verdict << "\n";
  if (r.D) out << "D: " << short_num(*r.D) << "\n";
  if (r.p)
    out << "p: " << short_num(*r.p) << "  q: " << short_num(*r.q) << "  c: ("
        << short_num((*r.c)[0]) << ", " << short_num((*r.c)[1]) << ")\n";
  if (r.permutation) {
    out << "permutation (input -> canonical): [";
    for (int i = 0; i < 4; ++i) out << (i ? ", " : "") << (*r.permutation)[i];
    out << "]\n";
  }
  if (r.det_values) {
    out << "column (c0,d0,c1,d1)   det             chsh\n";
    const auto& cols = sign_columns();
    double best = (*r.det_values)[0];
    for (std::size_t i = 0; i < cols.size(); ++i) {
      char line[96];
      std::snprintf(line, sizeof line, "  %-11s  %15.10g  %15.10g\n", cols[i].key().c_str(),
                    (*r.det_values)[i], (*r.chsh_values)[i]);
      out << line;
      best = std::max(best, (*r.det_values)[i]);
    }
    out << "max det: " << short_num(best) << " (violated iff > 0; chsh classical bound 2)\n";
  }
  if (r.oracle) {
    out << "oracle: " << (r.oracle->feasible ? "feasible" : "infeasible");
    if (r.oracle->degenerate) out << " (degenerate hull, no LP run)";
    out << ", residual " << short_num(r.oracle->residual) << "\n";
  }
  return out.str();
}

std::string to_text(const ReductionReport& r) {
  std::ostringstream out;
  out << "reduction plane w: " << short_num(r.plane_w) << "\n";
  for (int i = 0; i < 4; ++i)
    out << "  t[" << i << "] = " << short_num(r.mix_params[i]) << "  effective = ("
        << short_num(r.effective[i][0]) << ", " << short_num(r.effective[i][1]) << ")\n";
  return out.str();
}

}  // namespace nctx
