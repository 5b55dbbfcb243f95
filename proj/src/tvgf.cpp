#include "ccdgf/tvgf.hpp"

#include <algorithm>
#include <cmath>
#include <cstddef>
#include <numbers>
#include <string>
#include <vector>

#include "ccdgf/boxops.hpp"
#include "fft.hpp"

namespace ccdgf {
namespace {

void require_periodic(const WindowSpec& w, int width, int height, const char* what) {
  if (w.boundary != Boundary::Periodic) {
    throw WindowError(std::string(what) + " requires a periodic window");
  }
  w.validate(width, height);
}

// Symbol of the 1D circular forward-difference operator D^T D.
std::vector<double> laplacian_symbol(int n) {
  std::vector<double> out(static_cast<std::size_t>(n));
  for (int k = 0; k < n; ++k) {
    out[static_cast<std::size_t>(k)] = 2.0 - 2.0 * std::cos(2.0 * std::numbers::pi * k / n);
  }
  return out;
}

}  // namespace

SpectrumField forward_transform(const Image& x) {
  const int width = x.width();
  const int height = x.height();
  const std::size_t n = x.size();
  auto in = fft::alloc_complex(n);
  auto out = fft::alloc_complex(n);
  for (std::size_t i = 0; i < n; ++i) in[i] = {x[i], 0.0};
  fft::forward_c2c(width, height, in.get(), out.get());
  SpectrumField s{width, height, std::vector<std::complex<double>>(out.get(), out.get() + n)};
  return s;
}

Image inverse_transform(const SpectrumField& s, double* max_imag_residue) {
  Image out(s.width, s.height);
  const std::size_t n = out.size();
  if (s.data.size() != n) throw ShapeError("inverse_transform: spectrum size mismatch");
  auto in = fft::alloc_complex(n);
  auto res = fft::alloc_complex(n);
  for (std::size_t i = 0; i < n; ++i) in[i] = s.data[i];
  fft::inverse_c2c(s.width, s.height, in.get(), res.get());
  const double scale = 1.0 / static_cast<double>(n);
  double residue = 0.0;
  for (std::size_t i = 0; i < n; ++i) {
    out[i] = res[i].real() * scale;
    residue = std::max(residue, std::abs(res[i].imag() * scale));
  }
  if (max_imag_residue != nullptr) *max_imag_residue = residue;
  return out;
}

TvDenominator tv_denominator(int width, int height, const WindowSpec& w, double lambda) {
  if (width < 1 || height < 1) throw DimensionError("tv_denominator: non-positive dimensions");
  if (!(lambda >= 0.0)) throw ParamError("tvgf: lambda must be >= 0");
  const double count = static_cast<double>(w.side() * w.side());
  const auto dx = laplacian_symbol(width);
  const auto dy = laplacian_symbol(height);
  TvDenominator d{Image(width, height)};
  for (int v = 0; v < height; ++v) {
    for (int u = 0; u < width; ++u) {
      d.values(u, v) = count + lambda * (dx[static_cast<std::size_t>(u)] +
                                         dy[static_cast<std::size_t>(v)]);
    }
  }
  return d;
}

Image tvgf_solve_q(const Image& f, const WindowSpec& w, double lambda) {
  const int width = f.width();
  const int height = f.height();
  require_periodic(w, width, height, "tvgf_solve_q");
  if (!(lambda >= 0.0)) throw ParamError("tvgf: lambda must be >= 0");

  const int half_w = width / 2 + 1;
  const std::size_t n = f.size();
  const std::size_t nh = static_cast<std::size_t>(height) * static_cast<std::size_t>(half_w);
  auto real = fft::alloc_real(n);
  auto spec = fft::alloc_complex(nh);
  std::copy(f.pixels().begin(), f.pixels().end(), real.get());
  fft::forward_r2c(width, height, real.get(), spec.get());

  const double count = static_cast<double>(w.side() * w.side());
  const auto dx = laplacian_symbol(width);
  const auto dy = laplacian_symbol(height);
  const double scale = 1.0 / static_cast<double>(n);
#pragma omp parallel for schedule(static)
  for (int v = 0; v < height; ++v) {
    std::complex<double>* row = spec.get() + static_cast<std::size_t>(v) * half_w;
    for (int u = 0; u < half_w; ++u) {
      const double denom =
          count + lambda * (dx[static_cast<std::size_t>(u)] + dy[static_cast<std::size_t>(v)]);
      row[u] *= scale / denom;
    }
  }

  fft::inverse_c2r(width, height, spec.get(), real.get());
  Image q(width, height);
  std::copy(real.get(), real.get() + n, q.pixels().begin());
  return q;
}

Image tvgf(const Image& p, const Image& I, const WindowSpec& w, double eps, double lambda) {
  require_periodic(w, p.width(), p.height(), "tvgf");
  const GfCoeffs c = gf_coeffs(p, I, w, eps);
  const Image sum_a = box_sum(c.a, w);
  const Image sum_b = box_sum(c.b, w);
  Image f(I.width(), I.height());
  for (std::size_t i = 0; i < f.size(); ++i) f[i] = sum_a[i] * I[i] + sum_b[i];
  return tvgf_solve_q(f, w, lambda);
}

std::vector<Image> tvgf_roll(const Image& p, const Image& I, const WindowSpec& w, double eps,
                             double lambda, int iters) {
  detail::require_iters(iters);
  std::vector<Image> out;
  out.reserve(static_cast<std::size_t>(iters));
  const Image* q = &p;
  for (int n = 0; n < iters; ++n) {
    out.push_back(tvgf(*q, I, w, eps, lambda));
    q = &out.back();
  }
  return out;
}

EnergyReport energy_tvgf(const Image& q, const GfCoeffs& coeffs, const Image& I,
                         const WindowSpec& w, double eps, double lambda) {
  require_same_shape(q, I, "energy_tvgf");
  require_same_shape(coeffs.a, I, "energy_tvgf");
  require_same_shape(coeffs.b, I, "energy_tvgf");
  require_periodic(w, q.width(), q.height(), "energy_tvgf");
  CompensatedSum data;
  CompensatedSum penalty;
  detail::accumulate_fit_energy(q, coeffs, I, w, eps, data, penalty);
  CompensatedSum tv;
  const int width = q.width();
  const int height = q.height();
  for (int y = 0; y < height; ++y) {
    for (int x = 0; x < width; ++x) {
      const double gx = q((x + 1) % width, y) - q(x, y);
      const double gy = q(x, (y + 1) % height) - q(x, y);
      tv.add(lambda * (gx * gx + gy * gy));
    }
  }
  EnergyReport report;
  report.add("data", data.value());
  report.add("coeff_penalty", penalty.value());
  report.add("tv", tv.value());
  return report;
}

}  // namespace ccdgf
