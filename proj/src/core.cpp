#include "ccdgf/core.hpp"

#include <algorithm>
#include <cmath>
#include <string>

namespace ccdgf {

Image::Image(int width, int height, double fill) {
  if (width < 1 || height < 1) {
    throw DimensionError("image dimensions must be positive, got " +
                         std::to_string(width) + "x" + std::to_string(height));
  }
  width_ = width;
  height_ = height;
  data_.assign(static_cast<std::size_t>(width) * static_cast<std::size_t>(height), fill);
}

Image make_image(int width, int height, double fill) {
  if (!std::isfinite(fill)) throw ParamError("make_image: fill value must be finite");
  return Image(width, height, fill);
}

void require_same_shape(const Image& x, const Image& y, const char* what) {
  if (!x.same_shape(y)) {
    throw ShapeError(std::string(what) + ": shape mismatch " + std::to_string(x.width()) + "x" +
                     std::to_string(x.height()) + " vs " + std::to_string(y.width()) + "x" +
                     std::to_string(y.height()));
  }
}

Image blend(const Image& x, const Image& y, const Image& weight) {
  require_same_shape(x, y, "blend");
  require_same_shape(x, weight, "blend");
  Image out(x.width(), x.height());
  const auto n = static_cast<std::ptrdiff_t>(x.size());
#pragma omp parallel for schedule(static)
  for (std::ptrdiff_t i = 0; i < n; ++i) {
    const auto k = static_cast<std::size_t>(i);
    out[k] = (1.0 - weight[k]) * x[k] + weight[k] * y[k];
  }
  return out;
}

bool all_finite(const Image& x) noexcept {
  return std::all_of(x.pixels().begin(), x.pixels().end(),
                     [](double v) { return std::isfinite(v); });
}

double max_abs_diff(const Image& x, const Image& y) {
  require_same_shape(x, y, "max_abs_diff");
  double m = 0.0;
  for (std::size_t i = 0; i < x.size(); ++i) m = std::max(m, std::abs(x[i] - y[i]));
  return m;
}

double mean(const Image& x) noexcept {
  CompensatedSum s;
  for (double v : x.pixels()) s.add(v);
  return x.empty() ? 0.0 : s.value() / static_cast<double>(x.size());
}

double stddev(const Image& x) noexcept {
  if (x.empty()) return 0.0;
  const double mu = mean(x);
  CompensatedSum s;
  for (double v : x.pixels()) s.add((v - mu) * (v - mu));
  return std::sqrt(s.value() / static_cast<double>(x.size()));
}

double min_value(const Image& x) noexcept {
  return x.empty() ? 0.0 : *std::min_element(x.pixels().begin(), x.pixels().end());
}

double max_value(const Image& x) noexcept {
  return x.empty() ? 0.0 : *std::max_element(x.pixels().begin(), x.pixels().end());
}

Image luma(std::span<const Image> channels) {
  if (channels.empty()) throw ShapeError("luma: no channels");
  if (channels.size() == 1) return channels.front();
  Image out(channels.front().width(), channels.front().height());
  for (const Image& c : channels) {
    require_same_shape(out, c, "luma");
    for (std::size_t i = 0; i < out.size(); ++i) out[i] += c[i];
  }
  const double inv = 1.0 / static_cast<double>(channels.size());
  for (double& v : out.pixels()) v *= inv;
  return out;
}

void WindowSpec::validate(int width, int height) const {
  if (radius < 0) throw WindowError("window radius must be non-negative");
  if (boundary == Boundary::Periodic && side() > std::min(width, height)) {
    throw WindowError("periodic window of side " + std::to_string(side()) +
                      " does not fit a " + std::to_string(width) + "x" +
                      std::to_string(height) + " image");
  }
}

int WindowSpec::count(int x, int y, int width, int height) const noexcept {
  if (boundary == Boundary::Periodic) return side() * side();
  const int cx = std::min(x + radius, width - 1) - std::max(x - radius, 0) + 1;
  const int cy = std::min(y + radius, height - 1) - std::max(y - radius, 0) + 1;
  return cx * cy;
}

Image window_counts(int width, int height, const WindowSpec& w) {
  w.validate(width, height);
  Image out(width, height);
  for (int y = 0; y < height; ++y) {
    for (int x = 0; x < width; ++x) out(x, y) = w.count(x, y, width, height);
  }
  return out;
}

void FilterParams::validate() const {
  if (!(eps > 0.0)) throw ParamError("eps must be > 0");
  if (!(eps2 > 0.0)) throw ParamError("eps2 must be > 0");
  if (!(lambda >= 0.0)) throw ParamError("lambda must be >= 0");
  if (!(beta >= 0.0)) throw ParamError("beta must be >= 0");
  if (!std::isfinite(tau)) throw ParamError("tau must be finite");
  if (iters < 1) throw ParamError("iters must be >= 1");
}

double EnergyReport::term(std::string_view name) const noexcept {
  for (const auto& t : terms) {
    if (t.name == name) return t.value;
  }
  return 0.0;
}

void EnergyReport::add(std::string name, double value) {
  total += value;
  terms.push_back({std::move(name), value});
}

}  // namespace ccdgf
