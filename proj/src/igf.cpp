#include "ccdgf/igf.hpp"

#include <cstddef>

#include "ccdgf/boxops.hpp"

namespace ccdgf {
namespace detail {

Image igf_update(const GfCoeffs& coeffs, const Image& p, const Image& G0, const WindowSpec& w) {
  require_same_shape(p, G0, "igf");
  const Image& a = coeffs.a;
  const Image& b = coeffs.b;
  const Image mean_a = box_mean(a, w);
  const Image mean_ab = box_mean(zip_map(a, b, [](double u, double v) { return u * v; }), w);
  const Image mean_aa = box_mean(map(a, [](double u) { return u * u; }), w);
  Image G(p.width(), p.height());
  const auto n = static_cast<std::ptrdiff_t>(p.size());
#pragma omp parallel for schedule(static)
  for (std::ptrdiff_t s = 0; s < n; ++s) {
    const auto i = static_cast<std::size_t>(s);
    G[i] = mean_aa[i] < kInverseDegeneracy ? G0[i]
                                           : (mean_a[i] * p[i] - mean_ab[i]) / mean_aa[i];
  }
  return G;
}

Image icgf_update(const GfCoeffs& coeffs, const Image& p, const Image& G0, const Image& g,
                  const WindowSpec& w, double lambda) {
  require_same_shape(p, G0, "icgf");
  require_same_shape(p, g, "icgf");
  if (!(lambda >= 0.0)) throw ParamError("icgf: lambda must be >= 0");
  const Image& a = coeffs.a;
  const Image& b = coeffs.b;
  const Image sum_a = box_sum(a, w);
  const Image sum_ab = box_sum(zip_map(a, b, [](double u, double v) { return u * v; }), w);
  const Image sum_aa = box_sum(map(a, [](double u) { return u * u; }), w);
  const Image counts = window_counts(p.width(), p.height(), w);
  Image G(p.width(), p.height());
  const auto n = static_cast<std::ptrdiff_t>(p.size());
#pragma omp parallel for schedule(static)
  for (std::ptrdiff_t s = 0; s < n; ++s) {
    const auto i = static_cast<std::size_t>(s);
    const double denom = sum_aa[i] + lambda;
    G[i] = denom < kInverseDegeneracy * counts[i]
               ? G0[i]
               : (sum_a[i] * p[i] - sum_ab[i] + lambda * g[i]) / denom;
  }
  return G;
}

}  // namespace detail

Image igf(const Image& p, const Image& G0, const WindowSpec& w, double eps) {
  return detail::igf_update(gf_coeffs(p, G0, w, eps), p, G0, w);
}

Image icgf(const Image& p, const Image& G0, const Image& g, const WindowSpec& w, double eps,
           double lambda) {
  return detail::icgf_update(gf_coeffs(p, G0, w, eps), p, G0, g, w, lambda);
}

}  // namespace ccdgf
