#include "ccdgf/boxops.hpp"

#include <algorithm>
#include <cstddef>
#include <vector>

namespace ccdgf {
namespace {

constexpr int kColumnBlock = 256;

void row_pass(const double* in, double* out, int n, int r, Boundary boundary) {
  double s = 0.0;
  if (boundary == Boundary::Truncate) {
    const int hi = std::min(r, n - 1);
    for (int j = 0; j <= hi; ++j) s += in[j];
    for (int x = 0; x < n; ++x) {
      out[x] = s;
      const int add = x + r + 1;
      const int rem = x - r;
      if (add < n) s += in[add];
      if (rem >= 0) s -= in[rem];
    }
  } else {
    for (int d = -r; d <= r; ++d) s += in[(d + n) % n];
    for (int x = 0; x < n; ++x) {
      out[x] = s;
      s += in[(x + r + 1) % n];
      s -= in[(x - r + n) % n];
    }
  }
}

// Running vertical sums for columns [x0, x1).
void column_pass(const Image& in, Image& out, int x0, int x1, int r, Boundary boundary) {
  const int h = in.height();
  const int len = x1 - x0;
  std::vector<double> acc(static_cast<std::size_t>(len), 0.0);
  auto add_row = [&](int y, double sign) {
    const double* src = in.row(y) + x0;
    for (int j = 0; j < len; ++j) acc[static_cast<std::size_t>(j)] += sign * src[j];
  };
  if (boundary == Boundary::Truncate) {
    const int hi = std::min(r, h - 1);
    for (int y = 0; y <= hi; ++y) add_row(y, 1.0);
    for (int y = 0; y < h; ++y) {
      std::copy(acc.begin(), acc.end(), out.row(y) + x0);
      if (y + r + 1 < h) add_row(y + r + 1, 1.0);
      if (y - r >= 0) add_row(y - r, -1.0);
    }
  } else {
    for (int d = -r; d <= r; ++d) add_row((d + h) % h, 1.0);
    for (int y = 0; y < h; ++y) {
      std::copy(acc.begin(), acc.end(), out.row(y) + x0);
      add_row((y + r + 1) % h, 1.0);
      add_row((y - r + h) % h, -1.0);
    }
  }
}

Image box_sum_impl(const Image& x, const WindowSpec& w, bool parallel) {
  w.validate(x.width(), x.height());
  const int width = x.width();
  const int height = x.height();
  const int r = w.radius;
  if (r == 0) return x;

  Image rows(width, height);
#pragma omp parallel for schedule(static) if (parallel)
  for (int y = 0; y < height; ++y) row_pass(x.row(y), rows.row(y), width, r, w.boundary);

  Image out(width, height);
  const int blocks = (width + kColumnBlock - 1) / kColumnBlock;
#pragma omp parallel for schedule(static) if (parallel)
  for (int b = 0; b < blocks; ++b) {
    const int x0 = b * kColumnBlock;
    const int x1 = std::min(width, x0 + kColumnBlock);
    column_pass(rows, out, x0, x1, r, w.boundary);
  }
  return out;
}

// Divides in place by the window count. Truncated counts factor into a
// column extent times a row extent.
void normalize(Image& sums, const WindowSpec& w, bool parallel) {
  const int width = sums.width();
  const int height = sums.height();
  if (w.boundary == Boundary::Periodic) {
    const double inv = 1.0 / static_cast<double>(w.side() * w.side());
    const auto n = static_cast<std::ptrdiff_t>(sums.size());
    double* d = sums.pixels().data();
#pragma omp parallel for schedule(static) if (parallel)
    for (std::ptrdiff_t i = 0; i < n; ++i) d[i] *= inv;
    return;
  }
  const int r = w.radius;
  std::vector<int> cx(static_cast<std::size_t>(width));
  for (int x = 0; x < width; ++x) {
    cx[static_cast<std::size_t>(x)] = std::min(x + r, width - 1) - std::max(x - r, 0) + 1;
  }
#pragma omp parallel for schedule(static) if (parallel)
  for (int y = 0; y < height; ++y) {
    const int cy = std::min(y + r, height - 1) - std::max(y - r, 0) + 1;
    double* row = sums.row(y);
    for (int x = 0; x < width; ++x) {
      row[x] /= static_cast<double>(cy * cx[static_cast<std::size_t>(x)]);
    }
  }
}

}  // namespace

Image box_sum(const Image& x, const WindowSpec& w, Exec exec) {
  return box_sum_impl(x, w, exec == Exec::Parallel);
}

Image box_mean(const Image& x, const WindowSpec& w, Exec exec) {
  const bool parallel = exec == Exec::Parallel;
  Image out = box_sum_impl(x, w, parallel);
  normalize(out, w, parallel);
  return out;
}

BoxStats box_stats(const Image& x, const WindowSpec& w, Exec exec) {
  return {box_mean(x, w, exec), window_counts(x.width(), x.height(), w)};
}

Image box_var(const Image& x, const WindowSpec& w, Exec exec) {
  const Image m = box_mean(x, w, exec);
  const Image m2 = box_mean(map(x, [](double v) { return v * v; }), w, exec);
  return zip_map(m2, m, [](double e2, double e) { return std::max(0.0, e2 - e * e); });
}

Image box_cov(const Image& x, const Image& y, const WindowSpec& w, Exec exec) {
  require_same_shape(x, y, "box_cov");
  const Image mx = box_mean(x, w, exec);
  const Image my = box_mean(y, w, exec);
  const Image mxy = box_mean(zip_map(x, y, [](double a, double b) { return a * b; }), w, exec);
  Image out(x.width(), x.height());
  for (std::size_t i = 0; i < out.size(); ++i) out[i] = mxy[i] - mx[i] * my[i];
  return out;
}

Image naive_box_sum(const Image& x, const WindowSpec& w) {
  w.validate(x.width(), x.height());
  Image out(x.width(), x.height());
  for (int y = 0; y < x.height(); ++y) {
    for (int xx = 0; xx < x.width(); ++xx) {
      double s = 0.0;
      for_each_in_window(xx, y, x.width(), x.height(), w,
                         [&](int u, int v) { s += x(u, v); });
      out(xx, y) = s;
    }
  }
  return out;
}

}  // namespace ccdgf
