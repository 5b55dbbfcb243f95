#include "ccdgf/rfnf.hpp"

#include <cmath>

#include "ccdgf/cgf.hpp"
#include "ccdgf/gf.hpp"

namespace ccdgf {

Image detail_image(const Image& flash, const WindowSpec& w, double eps) {
  const Image base = gf(flash, flash, w, eps);
  return zip_map(flash, base, [](double f, double b) { return f - b; });
}

Image enhanced_image(const Image& flash, const WindowSpec& w, double eps, double tau) {
  if (!std::isfinite(tau)) throw ParamError("rfnf: tau must be finite");
  const Image base = gf(flash, flash, w, eps);
  return zip_map(flash, base, [tau](double f, double b) { return b + tau * (f - b); });
}

Image rfnf_seo(const Image& no_flash, const Image& flash, const WindowSpec& w, double eps,
               double detail_gain, int iters) {
  require_same_shape(no_flash, flash, "rfnf_seo");
  detail::require_iters(iters);
  const Image detail = detail_image(flash, w, eps);
  Image q = no_flash;
  for (int n = 0; n < iters; ++n) {
    const Image base = gf(q, flash, w, eps);
    q = zip_map(base, detail, [detail_gain](double b, double d) { return b + detail_gain * d; });
  }
  return q;
}

Image rfnf_gen(const Image& no_flash, const Image& flash, const WindowSpec& w, double eps,
               double lambda, double tau, int iters) {
  require_same_shape(no_flash, flash, "rfnf_gen");
  detail::require_iters(iters);
  const Image anchor = enhanced_image(flash, w, eps, tau);
  Image q = no_flash;
  for (int n = 0; n < iters; ++n) q = cgf(q, flash, anchor, w, eps, lambda);
  return q;
}

}  // namespace ccdgf
