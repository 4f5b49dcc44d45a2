#include "nctx/tomography.hpp"

#include <algorithm>

#include "nctx/errors.hpp"

namespace nctx {

ReductionResult reduce(const std::array<Vec3d, 4>& originals, const Vec3d& aux) {
  const double wa = aux.z();
  double wmin = originals[0].z(), wmax = originals[0].z();
  for (const auto& o : originals) {
    wmin = std::min(wmin, o.z());
    wmax = std::max(wmax, o.z());
  }

  if (!(wa > wmax || wa < wmin)) {
    for (const auto& o : originals)
      if (wa == o.z())
        throw DegenerateDirection("auxiliary shares the third coordinate " +
                                  std::to_string(wa) + " with an original");
    throw NotSeparated("auxiliary third coordinate " + std::to_string(wa) +
                       " is not strictly beyond the originals' range [" +
                       std::to_string(wmin) + ", " + std::to_string(wmax) + "]");
  }

  ReductionResult res;
  res.plane_w = wa > wmax ? wmax : wmin;  // nearest valid plane, minimal mixing
  for (int i = 0; i < 4; ++i) {
    const double wi = originals[i].z();
    const double t = res.plane_w == wi ? 0.0 : (res.plane_w - wi) / (wa - wi);
    res.mix_params[i] = t;
    res.effective[i] =
        (1.0 - t) * originals[i].head<2>() + t * aux.head<2>();
  }
  return res;
}

ReducedScenario reduce_scenario(const ScenarioStats& stats) {
  std::array<int, 4> orig_idx{};
  int n_orig = 0, aux_idx = -1;
  for (int i = 0; i < static_cast<int>(stats.n_preparations()); ++i) {
    if (stats.preparations[i].auxiliary) {
      if (aux_idx >= 0) throw WrongArity("more than one auxiliary preparation flagged");
      aux_idx = i;
    } else {
      if (n_orig == 4) throw WrongArity("more than 4 non-auxiliary preparations");
      orig_idx[n_orig++] = i;
    }
  }
  if (aux_idx < 0) throw WrongArity("no preparation flagged auxiliary");
  if (n_orig != 4) throw WrongArity("expected 4 non-auxiliary preparations, got " +
                                    std::to_string(n_orig));

  const auto vs = to_vectors3(stats);
  std::array<Vec3d, 4> originals;
  for (int i = 0; i < 4; ++i) originals[i] = vs[orig_idx[i]];

  ReducedScenario out;
  out.reduction = reduce(originals, vs[aux_idx]);
  out.effective_stats.measurements = {stats.measurements[0], stats.measurements[1]};
  for (int i = 0; i < 4; ++i) {
    PrepRecord rec;
    rec.name = stats.preparations[orig_idx[i]].name;
    rec.prob0 = {prob0_from_expectation(out.reduction.effective[i].x()),
                 prob0_from_expectation(out.reduction.effective[i].y())};
    out.effective_stats.preparations.push_back(std::move(rec));
  }
  return out;
}

}  // namespace nctx
