#pragma once

#include <vector>

#include "ccdgf/core.hpp"

namespace ccdgf {

/// I_f - gf(I_f, I_f): the high-frequency detail of the flash image.
Image detail_image(const Image& flash, const WindowSpec& w, double eps);

/// gf(I_f, I_f) + tau * detail_image(I_f): the enhanced flash image used as
/// the anchor of the generalized scheme.
Image enhanced_image(const Image& flash, const WindowSpec& w, double eps, double tau);

/// Detail-transfer rolling from q^0 = I_n:
///   q^{n+1} = gf(q^n, I_f) + detail_gain * detail_image(I_f).
/// Returns q^iters.
Image rfnf_seo(const Image& no_flash, const Image& flash, const WindowSpec& w, double eps,
               double detail_gain, int iters);

/// Anchored rolling from q^0 = I_n:
///   q^{n+1} = (1 - alpha) gf(q^n, I_f) + alpha I_e,  alpha = lambda / (|w| + lambda),
/// with I_e = enhanced_image(I_f, tau). Equivalent to cgf_roll with g = I_e.
/// For small alpha and tau = detail_gain / alpha one step approaches one
/// rfnf_seo step with discrepancy linear in alpha.
Image rfnf_gen(const Image& no_flash, const Image& flash, const WindowSpec& w, double eps,
               double lambda, double tau, int iters);

}  // namespace ccdgf
