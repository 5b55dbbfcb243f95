#include "ccdgf/gf.hpp"

#include <algorithm>
#include <cstddef>
#include <string>

namespace ccdgf {
namespace detail {

void require_iters(int iters) {
  if (iters < 1) throw ParamError("iteration count must be >= 1, got " + std::to_string(iters));
}

void require_eps(double eps, const char* what) {
  if (!(eps > 0.0)) throw ParamError(std::string(what) + " must be > 0");
}

GfCoeffs fit_coeffs(const Image& p, const Image& I, const WindowSpec& w, double eps,
                    Exec exec) {
  require_same_shape(p, I, "gf_coeffs");
  const Image mean_I = box_mean(I, w, exec);
  const Image mean_p = box_mean(p, w, exec);
  const Image corr_Ip = box_mean(zip_map(I, p, [](double u, double v) { return u * v; }), w, exec);
  const Image corr_II = box_mean(map(I, [](double u) { return u * u; }), w, exec);

  GfCoeffs c{Image(p.width(), p.height()), Image(p.width(), p.height())};
  const auto n = static_cast<std::ptrdiff_t>(p.size());
#pragma omp parallel for schedule(static) if (exec == Exec::Parallel)
  for (std::ptrdiff_t s = 0; s < n; ++s) {
    const auto i = static_cast<std::size_t>(s);
    const double var = std::max(0.0, corr_II[i] - mean_I[i] * mean_I[i]);
    const double cov = corr_Ip[i] - mean_I[i] * mean_p[i];
    c.a[i] = cov / (var + eps);
    c.b[i] = mean_p[i] - c.a[i] * mean_I[i];
  }
  return c;
}

void accumulate_fit_energy(const Image& target, const GfCoeffs& coeffs, const Image& G,
                           const WindowSpec& w, double eps, CompensatedSum& data,
                           CompensatedSum& penalty) {
  const int width = target.width();
  const int height = target.height();
  for (int ky = 0; ky < height; ++ky) {
    for (int kx = 0; kx < width; ++kx) {
      const double ak = coeffs.a(kx, ky);
      const double bk = coeffs.b(kx, ky);
      for_each_in_window(kx, ky, width, height, w, [&](int ix, int iy) {
        const double r = ak * G(ix, iy) + bk - target(ix, iy);
        data.add(r * r);
        penalty.add(eps * ak * ak);
      });
    }
  }
}

}  // namespace detail

GfCoeffs gf_coeffs(const Image& p, const Image& I, const WindowSpec& w, double eps, Exec exec) {
  detail::require_eps(eps, "gf: eps");
  return detail::fit_coeffs(p, I, w, eps, exec);
}

Image gf_apply(const GfCoeffs& coeffs, const Image& I, const WindowSpec& w, Exec exec) {
  require_same_shape(coeffs.a, I, "gf_apply");
  require_same_shape(coeffs.b, I, "gf_apply");
  const Image mean_a = box_mean(coeffs.a, w, exec);
  const Image mean_b = box_mean(coeffs.b, w, exec);
  Image q(I.width(), I.height());
  const auto n = static_cast<std::ptrdiff_t>(I.size());
#pragma omp parallel for schedule(static) if (exec == Exec::Parallel)
  for (std::ptrdiff_t s = 0; s < n; ++s) {
    const auto i = static_cast<std::size_t>(s);
    q[i] = mean_a[i] * I[i] + mean_b[i];
  }
  return q;
}

Image gf(const Image& p, const Image& I, const WindowSpec& w, double eps, Exec exec) {
  return gf_apply(gf_coeffs(p, I, w, eps, exec), I, w, exec);
}

std::vector<Image> gf_roll(const Image& p, const Image& I, const WindowSpec& w, double eps,
                           int iters) {
  detail::require_iters(iters);
  std::vector<Image> out;
  out.reserve(static_cast<std::size_t>(iters));
  const Image* q = &p;
  for (int n = 0; n < iters; ++n) {
    out.push_back(gf(*q, I, w, eps));
    q = &out.back();
  }
  return out;
}

EnergyReport energy_gf(const Image& q, const GfCoeffs& coeffs, const Image& I,
                       const WindowSpec& w, double eps) {
  require_same_shape(q, I, "energy_gf");
  require_same_shape(coeffs.a, I, "energy_gf");
  require_same_shape(coeffs.b, I, "energy_gf");
  w.validate(q.width(), q.height());
  CompensatedSum data;
  CompensatedSum penalty;
  detail::accumulate_fit_energy(q, coeffs, I, w, eps, data, penalty);
  EnergyReport report;
  report.add("data", data.value());
  report.add("coeff_penalty", penalty.value());
  return report;
}

}  // namespace ccdgf
