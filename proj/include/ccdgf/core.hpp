#pragma once

#include <cmath>
#include <cstddef>
#include <span>
#include <stdexcept>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

namespace ccdgf {

// Error hierarchy. Everything derives from std::invalid_argument so callers
// that only care about "bad input" can catch one type.
struct Error : std::invalid_argument {
  using std::invalid_argument::invalid_argument;
};
struct DimensionError : Error {
  using Error::Error;
};
struct ShapeError : Error {
  using Error::Error;
};
struct WindowError : Error {
  using Error::Error;
};
struct ParamError : Error {
  using Error::Error;
};

/// Dense single-channel image of 64-bit floats, row-major.
///
/// Photographic data lives in [0,1]; coefficient fields (a, b, ...) are
/// unrestricted reals. A multichannel image is a std::vector<Image> of
/// equal shape.
class Image {
 public:
  Image() = default;
  Image(int width, int height, double fill = 0.0);

  int width() const noexcept { return width_; }
  int height() const noexcept { return height_; }
  std::size_t size() const noexcept { return data_.size(); }
  bool empty() const noexcept { return data_.empty(); }

  double& operator()(int x, int y) noexcept { return data_[index(x, y)]; }
  double operator()(int x, int y) const noexcept { return data_[index(x, y)]; }
  double& operator[](std::size_t i) noexcept { return data_[i]; }
  double operator[](std::size_t i) const noexcept { return data_[i]; }

  std::span<double> pixels() noexcept { return data_; }
  std::span<const double> pixels() const noexcept { return data_; }
  double* row(int y) noexcept { return data_.data() + index(0, y); }
  const double* row(int y) const noexcept { return data_.data() + index(0, y); }

  bool same_shape(const Image& other) const noexcept {
    return width_ == other.width_ && height_ == other.height_;
  }

  bool operator==(const Image&) const = default;

 private:
  std::size_t index(int x, int y) const noexcept {
    return static_cast<std::size_t>(y) * static_cast<std::size_t>(width_) +
           static_cast<std::size_t>(x);
  }

  int width_ = 0;
  int height_ = 0;
  std::vector<double> data_;
};

Image make_image(int width, int height, double fill);

void require_same_shape(const Image& x, const Image& y, const char* what);

/// out[i] = f(x[i], y[i]).
template <class F>
Image zip_map(const Image& x, const Image& y, F f) {
  require_same_shape(x, y, "zip_map");
  Image out(x.width(), x.height());
  const auto n = static_cast<std::ptrdiff_t>(x.size());
  const double* xs = x.pixels().data();
  const double* ys = y.pixels().data();
  double* os = out.pixels().data();
#pragma omp parallel for schedule(static)
  for (std::ptrdiff_t i = 0; i < n; ++i) os[i] = f(xs[i], ys[i]);
  return out;
}

template <class F>
Image map(const Image& x, F f) {
  Image out(x.width(), x.height());
  const auto n = static_cast<std::ptrdiff_t>(x.size());
  const double* xs = x.pixels().data();
  double* os = out.pixels().data();
#pragma omp parallel for schedule(static)
  for (std::ptrdiff_t i = 0; i < n; ++i) os[i] = f(xs[i]);
  return out;
}

/// Pixelwise (1 - w) * x + w * y.
Image blend(const Image& x, const Image& y, const Image& weight);

bool all_finite(const Image& x) noexcept;
double max_abs_diff(const Image& x, const Image& y);
double mean(const Image& x) noexcept;
double stddev(const Image& x) noexcept;
double min_value(const Image& x) noexcept;
double max_value(const Image& x) noexcept;

/// Average of channels; a single channel is returned unchanged.
Image luma(std::span<const Image> channels);

enum class Boundary { Truncate, Periodic };

/// Square window of side 2r+1 centred at each pixel. Truncate clips it at
/// the image border, Periodic wraps it around.
struct WindowSpec {
  int radius = 0;
  Boundary boundary = Boundary::Truncate;

  int side() const noexcept { return 2 * radius + 1; }

  /// Throws WindowError when the window cannot be used on a width x height
  /// image.
  void validate(int width, int height) const;

  /// |w_i| for the pixel at (x, y) of a width x height image.
  int count(int x, int y, int width, int height) const noexcept;
};

/// Per-pixel window sizes as an image.
Image window_counts(int width, int height, const WindowSpec& w);

/// Scalar parameters shared by the filter family.
struct FilterParams {
  double eps = 0.1;     // regularizer of the (a, b) fit
  double lambda = 0.0;  // TV weight / anchor weight
  double beta = 0.0;    // anchor weight of the guidance track
  double eps2 = 0.1;    // regularizer of the (c, d) fit
  double tau = 1.0;     // detail gain of the enhanced flash image
  int iters = 1;

  void validate() const;
};

struct EnergyTerm {
  std::string name;
  double value = 0.0;
};

/// Objective value with a per-term breakdown.
struct EnergyReport {
  double total = 0.0;
  std::vector<EnergyTerm> terms;

  /// Value of the named term, 0 when absent.
  double term(std::string_view name) const noexcept;
  void add(std::string name, double value);
};

/// Neumaier-compensated running sum.
class CompensatedSum {
 public:
  void add(double v) noexcept {
    const double t = sum_ + v;
    if (std::abs(sum_) >= std::abs(v)) {
      comp_ += (sum_ - t) + v;
    } else {
      comp_ += (v - t) + sum_;
    }
    sum_ = t;
  }
  double value() const noexcept { return sum_ + comp_; }

 private:
  double sum_ = 0.0;
  double comp_ = 0.0;
};

}  // namespace ccdgf
