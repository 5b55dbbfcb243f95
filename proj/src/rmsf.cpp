#include "ccdgf/rmsf.hpp"

#include <utility>

#include "ccdgf/boxops.hpp"
#include "ccdgf/cgf.hpp"
#include "ccdgf/igf.hpp"

namespace ccdgf {
namespace {

void require_state(const Image& p, const Image& I, double eps, double eps2, int iters) {
  require_same_shape(p, I, "rmsf");
  detail::require_eps(eps, "rmsf: eps");
  detail::require_eps(eps2, "rmsf: eps2");
  detail::require_iters(iters);
}

template <class Step>
MutualState roll(const Image& p, const Image& I, int iters, std::vector<MutualState>* snapshots,
                 Step step) {
  MutualState s{p, I, 0};
  if (snapshots != nullptr) {
    snapshots->clear();
    snapshots->reserve(static_cast<std::size_t>(iters));
  }
  for (int n = 0; n < iters; ++n) {
    s = step(s);
    if (snapshots != nullptr) snapshots->push_back(s);
  }
  return s;
}

Image anchored(const Image& forward, const Image& anchor, const WindowSpec& w, double weight) {
  return blend(forward, anchor, anchor_weight(forward.width(), forward.height(), w, weight));
}

}  // namespace

Image alpha_weight(const Image& x, const WindowSpec& w) {
  const Image m2 = box_mean(map(x, [](double v) { return v * v; }), w);
  return map(m2, [](double v) { return 1.0 / (1.0 + v); });
}

MutualState gf_rmsf_step(const MutualState& s, double eps, double eps2, const WindowSpec& w,
                         MutualStepTrace* trace) {
  MutualStepTrace t;
  t.ab = gf_coeffs(s.q, s.G, w, eps);
  t.cd = gf_coeffs(s.G, s.q, w, eps2);

  t.q_forward = gf_apply(t.ab, s.G, w);
  t.q_inverse = detail::igf_update(t.cd, s.G, s.q, w);
  t.q_weight = alpha_weight(t.cd.a, w);
  MutualState next{blend(t.q_inverse, t.q_forward, t.q_weight), Image{}, s.iteration + 1};

  const GfCoeffs cd_next = gf_coeffs(s.G, next.q, w, eps2);
  const GfCoeffs ab_next = gf_coeffs(next.q, s.G, w, eps);
  t.G_forward = gf_apply(cd_next, next.q, w);
  t.G_inverse = detail::igf_update(ab_next, next.q, s.G, w);
  t.G_weight = alpha_weight(t.ab.a, w);
  next.G = blend(t.G_inverse, t.G_forward, t.G_weight);

  if (trace != nullptr) *trace = std::move(t);
  return next;
}

MutualState gf_rmsf(const Image& p, const Image& I, double eps, double eps2, const WindowSpec& w,
                    int iters, std::vector<MutualState>* snapshots) {
  require_state(p, I, eps, eps2, iters);
  return roll(p, I, iters, snapshots,
              [&](const MutualState& s) { return gf_rmsf_step(s, eps, eps2, w); });
}

MutualState cgf_rmsf_step(const MutualState& s, const Image& p, const Image& I, double eps,
                          double eps2, double lambda, double beta, const WindowSpec& w,
                          MutualStepTrace* trace) {
  MutualStepTrace t;
  t.ab = gf_coeffs(s.q, s.G, w, eps);
  t.cd = gf_coeffs(s.G, s.q, w, eps2);

  t.q_forward = anchored(gf_apply(t.ab, s.G, w), p, w, lambda);
  t.q_inverse = detail::icgf_update(t.cd, s.G, s.q, I, w, beta);
  t.q_weight = alpha_weight(t.cd.a, w);
  MutualState next{blend(t.q_inverse, t.q_forward, t.q_weight), Image{}, s.iteration + 1};

  const GfCoeffs cd_next = gf_coeffs(s.G, next.q, w, eps2);
  const GfCoeffs ab_next = gf_coeffs(next.q, s.G, w, eps);
  t.G_forward = anchored(gf_apply(cd_next, next.q, w), I, w, beta);
  t.G_inverse = detail::icgf_update(ab_next, next.q, s.G, p, w, lambda);
  t.G_weight = alpha_weight(t.ab.a, w);
  next.G = blend(t.G_inverse, t.G_forward, t.G_weight);

  if (trace != nullptr) *trace = std::move(t);
  return next;
}

MutualState cgf_rmsf(const Image& p, const Image& I, double eps, double eps2, double lambda,
                     double beta, const WindowSpec& w, int iters,
                     std::vector<MutualState>* snapshots) {
  require_state(p, I, eps, eps2, iters);
  if (!(lambda >= 0.0) || !(beta >= 0.0)) throw ParamError("rmsf: lambda and beta must be >= 0");
  return roll(p, I, iters, snapshots, [&](const MutualState& s) {
    return cgf_rmsf_step(s, p, I, eps, eps2, lambda, beta, w);
  });
}

MutualState naive_roll37(const Image& p, const Image& I, double eps, const WindowSpec& w,
                         int iters, std::vector<MutualState>* snapshots) {
  require_state(p, I, eps, eps, iters);
  return roll(p, I, iters, snapshots, [&](const MutualState& s) {
    return MutualState{gf(s.q, s.G, w, eps), gf(s.G, s.q, w, eps), s.iteration + 1};
  });
}

EnergyReport energy_mutual(const MutualState& s, const GfCoeffs& ab, const GfCoeffs& cd,
                           const WindowSpec& w, double eps, double eps2) {
  require_same_shape(s.q, s.G, "energy_mutual");
  require_same_shape(ab.a, s.q, "energy_mutual");
  require_same_shape(ab.b, s.q, "energy_mutual");
  require_same_shape(cd.a, s.q, "energy_mutual");
  require_same_shape(cd.b, s.q, "energy_mutual");
  w.validate(s.q.width(), s.q.height());
  CompensatedSum data_ab;
  CompensatedSum penalty_a;
  CompensatedSum data_cd;
  CompensatedSum penalty_c;
  detail::accumulate_fit_energy(s.q, ab, s.G, w, eps, data_ab, penalty_a);
  detail::accumulate_fit_energy(s.G, cd, s.q, w, eps2, data_cd, penalty_c);
  EnergyReport report;
  report.add("data_ab", data_ab.value());
  report.add("penalty_a", penalty_a.value());
  report.add("data_cd", data_cd.value());
  report.add("penalty_c", penalty_c.value());
  return report;
}

}  // namespace ccdgf
