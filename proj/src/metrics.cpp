#include "ccdgf/metrics.hpp"

#include <array>
#include <cmath>
#include <limits>

namespace ccdgf {
namespace {

std::array<double, kSsimWindow> gaussian_taps() {
  std::array<double, kSsimWindow> taps{};
  const int half = kSsimWindow / 2;
  double sum = 0.0;
  for (int i = 0; i < kSsimWindow; ++i) {
    const double d = i - half;
    taps[static_cast<std::size_t>(i)] = std::exp(-d * d / (2.0 * kSsimSigma * kSsimSigma));
    sum += taps[static_cast<std::size_t>(i)];
  }
  for (double& t : taps) t /= sum;
  return taps;
}

// Separable Gaussian filter, "valid" region only.
Image gaussian_valid(const Image& x) {
  static const auto taps = gaussian_taps();
  const int ow = x.width() - kSsimWindow + 1;
  const int oh = x.height() - kSsimWindow + 1;
  Image horiz(ow, x.height());
  for (int y = 0; y < x.height(); ++y) {
    const double* row = x.row(y);
    for (int i = 0; i < ow; ++i) {
      double s = 0.0;
      for (int k = 0; k < kSsimWindow; ++k) s += taps[static_cast<std::size_t>(k)] * row[i + k];
      horiz(i, y) = s;
    }
  }
  Image out(ow, oh);
  for (int j = 0; j < oh; ++j) {
    for (int i = 0; i < ow; ++i) {
      double s = 0.0;
      for (int k = 0; k < kSsimWindow; ++k) s += taps[static_cast<std::size_t>(k)] * horiz(i, j + k);
      out(i, j) = s;
    }
  }
  return out;
}

void require_channels(std::span<const Image> x, std::span<const Image> y) {
  if (x.empty() || x.size() != y.size()) throw ShapeError("metrics: channel count mismatch");
}

}  // namespace

double mse(const Image& x, const Image& y) {
  require_same_shape(x, y, "mse");
  CompensatedSum s;
  for (std::size_t i = 0; i < x.size(); ++i) {
    const double d = x[i] - y[i];
    s.add(d * d);
  }
  return s.value() / static_cast<double>(x.size());
}

double mse(std::span<const Image> x, std::span<const Image> y) {
  require_channels(x, y);
  double total = 0.0;
  for (std::size_t c = 0; c < x.size(); ++c) total += mse(x[c], y[c]);
  return total / static_cast<double>(x.size());
}

double psnr_from_mse(double m, double peak) {
  if (m == 0.0) return std::numeric_limits<double>::infinity();
  return 10.0 * std::log10(peak * peak / m);
}

double psnr(const Image& x, const Image& y, double peak) { return psnr_from_mse(mse(x, y), peak); }

double psnr(std::span<const Image> x, std::span<const Image> y, double peak) {
  return psnr_from_mse(mse(x, y), peak);
}

double ssim(const Image& x, const Image& y, double peak) {
  require_same_shape(x, y, "ssim");
  if (x.width() < kSsimWindow || x.height() < kSsimWindow) {
    throw DimensionError("ssim: images must be at least 11x11");
  }
  const double c1 = (kSsimK1 * peak) * (kSsimK1 * peak);
  const double c2 = (kSsimK2 * peak) * (kSsimK2 * peak);
  const Image mu_x = gaussian_valid(x);
  const Image mu_y = gaussian_valid(y);
  const Image xx = gaussian_valid(map(x, [](double v) { return v * v; }));
  const Image yy = gaussian_valid(map(y, [](double v) { return v * v; }));
  const Image xy = gaussian_valid(zip_map(x, y, [](double u, double v) { return u * v; }));
  CompensatedSum s;
  for (std::size_t i = 0; i < mu_x.size(); ++i) {
    const double mx = mu_x[i];
    const double my = mu_y[i];
    const double vx = xx[i] - mx * mx;
    const double vy = yy[i] - my * my;
    const double cxy = xy[i] - mx * my;
    s.add(((2.0 * mx * my + c1) * (2.0 * cxy + c2)) /
          ((mx * mx + my * my + c1) * (vx + vy + c2)));
  }
  return s.value() / static_cast<double>(mu_x.size());
}

double ssim(std::span<const Image> x, std::span<const Image> y, double peak) {
  require_channels(x, y);
  double total = 0.0;
  for (std::size_t c = 0; c < x.size(); ++c) total += ssim(x[c], y[c], peak);
  return total / static_cast<double>(x.size());
}

}  // namespace ccdgf
