#pragma once

#include "ccdgf/core.hpp"

namespace ccdgf {

/// Selects the OpenMP kernel or the single-threaded reference. Both run the
/// same arithmetic in the same order, so their outputs are bitwise equal.
enum class Exec { Parallel, Serial };

/// E_w(x) together with the per-pixel window sizes it was normalized by.
struct BoxStats {
  Image mean;
  Image count;
};

/// Sum over the (2r+1)^2 window at every pixel. Cost is independent of r:
/// a running row pass followed by a running column pass.
Image box_sum(const Image& x, const WindowSpec& w, Exec exec = Exec::Parallel);

/// box_sum divided by |w_i|.
Image box_mean(const Image& x, const WindowSpec& w, Exec exec = Exec::Parallel);

BoxStats box_stats(const Image& x, const WindowSpec& w, Exec exec = Exec::Parallel);

/// E(x^2) - E(x)^2, clamped at zero.
Image box_var(const Image& x, const WindowSpec& w, Exec exec = Exec::Parallel);

/// E(xy) - E(x)E(y). Not clamped: covariances may be negative.
Image box_cov(const Image& x, const Image& y, const WindowSpec& w, Exec exec = Exec::Parallel);

/// Brute-force O(|w|)-per-pixel window sum. Test oracle for box_sum.
Image naive_box_sum(const Image& x, const WindowSpec& w);

/// Calls f(xx, yy) for every pixel of the window centred at (x, y), in
/// row-major order. Under Periodic the coordinates are already wrapped.
template <class F>
void for_each_in_window(int x, int y, int width, int height, const WindowSpec& w, F&& f) {
  const int r = w.radius;
  if (w.boundary == Boundary::Truncate) {
    const int y0 = y - r < 0 ? 0 : y - r;
    const int y1 = y + r >= height ? height - 1 : y + r;
    const int x0 = x - r < 0 ? 0 : x - r;
    const int x1 = x + r >= width ? width - 1 : x + r;
    for (int yy = y0; yy <= y1; ++yy) {
      for (int xx = x0; xx <= x1; ++xx) f(xx, yy);
    }
  } else {
    for (int dy = -r; dy <= r; ++dy) {
      const int yy = ((y + dy) % height + height) % height;
      for (int dx = -r; dx <= r; ++dx) {
        const int xx = ((x + dx) % width + width) % width;
        f(xx, yy);
      }
    }
  }
}

}  // namespace ccdgf
