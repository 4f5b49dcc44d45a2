#include "nctx/inequalities.hpp"

#include "nctx/errors.hpp"

namespace nctx {

std::string SignColumn::key() const {
  auto s = [](int v) { return v > 0 ? std::string("1") : std::string("-1"); };
  return s(c0) + "," + s(d0) + "," + s(c1) + "," + s(d1);
}

const std::array<SignColumn, 8>& sign_columns() {
  // columns of
  //    1  1  1  1 -1 -1 -1 -1
  //    1  1 -1 -1  1  1 -1 -1
  //    1 -1  1 -1  1 -1  1 -1
  //   -1  1  1 -1  1 -1 -1  1
  static const std::array<SignColumn, 8> cols = {{
      {1, 1, 1, -1},
      {1, 1, -1, 1},
      {1, -1, 1, 1},
      {1, -1, -1, -1},
      {-1, 1, 1, 1},
      {-1, 1, -1, -1},
      {-1, -1, 1, -1},
      {-1, -1, -1, 1},
  }};
  return cols;
}

std::string to_string(Verdict v) {
  switch (v) {
    case Verdict::noncontextual: return "Noncontextual";
    case Verdict::contextual: return "Contextual";
    case Verdict::degenerate_noncontextual: return "DegenerateNoncontextual";
  }
  return "?";
}

InequalityReport evaluate_all(const CanonicalGeometryd& geo, double eps_verdict) {
  InequalityReport rep{};
  const auto& cols = sign_columns();
  for (std::size_t i = 0; i < cols.size(); ++i) {
    rep.det_values[i] = lemma_det<double>(geo, z_vector<double>(cols[i], geo));
    rep.chsh_values[i] = 2.0 + rep.det_values[i] / geo.D;
  }
  const double m = rep.max_det();
  rep.max_violation = m > 0.0 ? m : 0.0;
  rep.verdict = m > eps_verdict ? Verdict::contextual : Verdict::noncontextual;
  return rep;
}

BellTable bell_convert(const ScenarioStats& stats, const CanonicalGeometryd& geo,
                       const PivotalDecompositiond& piv) {
  // prob of outcome b for canonical preparation label l under measurement y
  auto prob = [&](int label, int b, int y) {
    const double p0 = stats.preparations[geo.input_of(label)].prob0[y];
    return b == 0 ? p0 : 1.0 - p0;
  };
  BellTable bt;
  for (int b = 0; b < 2; ++b) {
    for (int y = 0; y < 2; ++y) {
      bt.at(0, b, 0, y) = piv.p * prob(0, b, y);
      bt.at(1, b, 0, y) = (1.0 - piv.p) * prob(3, b, y);
      bt.at(0, b, 1, y) = piv.q * prob(1, b, y);
      bt.at(1, b, 1, y) = (1.0 - piv.q) * prob(2, b, y);
    }
  }
  return bt;
}

double chsh_value(const BellTable& bt, const SignColumn& col) {
  return col.c0 * bt.correlator(0, 0) + col.d0 * bt.correlator(0, 1) +
         col.c1 * bt.correlator(1, 0) + col.d1 * bt.correlator(1, 1);
}

}  // namespace nctx
