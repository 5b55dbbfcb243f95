#include "ccdgf/cgf.hpp"

#include <cstddef>

namespace ccdgf {
namespace {

void require_lambda(double lambda) {
  if (!(lambda >= 0.0)) throw ParamError("cgf: lambda must be >= 0");
}

}  // namespace

Image anchor_weight(int width, int height, const WindowSpec& w, double lambda) {
  require_lambda(lambda);
  Image alpha = window_counts(width, height, w);
  for (double& v : alpha.pixels()) v = lambda / (v + lambda);
  return alpha;
}

Image cgf(const Image& p, const Image& I, const Image& g, const WindowSpec& w, double eps,
          double lambda) {
  require_same_shape(p, g, "cgf");
  const Image alpha = anchor_weight(p.width(), p.height(), w, lambda);
  return blend(gf(p, I, w, eps), g, alpha);
}

std::vector<Image> cgf_roll(const Image& p, const Image& I, const Image& g, const WindowSpec& w,
                            double eps, double lambda, int iters) {
  detail::require_iters(iters);
  std::vector<Image> out;
  out.reserve(static_cast<std::size_t>(iters));
  const Image* q = &p;
  for (int n = 0; n < iters; ++n) {
    out.push_back(cgf(*q, I, g, w, eps, lambda));
    q = &out.back();
  }
  return out;
}

ConvergenceResult cgf_converge(const Image& p, const Image& I, const Image& g,
                               const WindowSpec& w, double eps, double lambda, double tol,
                               int max_iters) {
  detail::require_iters(max_iters);
  if (!(tol > 0.0)) throw ParamError("cgf: tolerance must be > 0");
  ConvergenceResult r{p};
  while (r.iterations < max_iters) {
    Image next = cgf(r.q, I, g, w, eps, lambda);
    r.last_step = max_abs_diff(next, r.q);
    r.q = std::move(next);
    ++r.iterations;
    if (r.last_step < tol) {
      r.converged = true;
      break;
    }
  }
  return r;
}

EnergyReport energy_cgf(const Image& q, const GfCoeffs& coeffs, const Image& I, const Image& g,
                        const WindowSpec& w, double eps, double lambda) {
  require_same_shape(q, I, "energy_cgf");
  require_same_shape(q, g, "energy_cgf");
  require_same_shape(coeffs.a, I, "energy_cgf");
  require_same_shape(coeffs.b, I, "energy_cgf");
  w.validate(q.width(), q.height());
  CompensatedSum data;
  CompensatedSum penalty;
  detail::accumulate_fit_energy(q, coeffs, I, w, eps, data, penalty);
  CompensatedSum anchor;
  for (std::size_t i = 0; i < q.size(); ++i) {
    const double d = q[i] - g[i];
    anchor.add(lambda * d * d);
  }
  EnergyReport report;
  report.add("data", data.value());
  report.add("coeff_penalty", penalty.value());
  report.add("anchor", anchor.value());
  return report;
}

}  // namespace ccdgf
