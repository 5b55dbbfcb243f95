#pragma once

#include "ccdgf/core.hpp"
#include "ccdgf/gf.hpp"

namespace ccdgf {

/// Pixels whose E_w(a^2) falls below this keep their prior guidance value.
inline constexpr double kInverseDegeneracy = 1e-12;

/// Inverse guided filter: fits p ~ a G0 + b per window, then solves each
/// pixel's guidance value from the local models:
///   G_i = (E(a) p_i - E(ab)) / E(a^2).
/// Where E(a^2) < kInverseDegeneracy the pixel keeps G0.
///
/// Standalone output is rarely visually meaningful; the filter exists as
/// the structure-preserving half of mutual-structure rolling.
Image igf(const Image& p, const Image& G0, const WindowSpec& w, double eps);

/// Inverse conservative guided filter:
///   G_i = (sum a p_i - sum ab + lambda g_i) / (sum a^2 + lambda)
/// with sums over the windows containing i. Falls back to G0 only when the
/// denominator per window pixel is below kInverseDegeneracy (lambda = 0).
Image icgf(const Image& p, const Image& G0, const Image& g, const WindowSpec& w, double eps,
           double lambda);

namespace detail {

// Guidance updates from already-fitted coefficients (a, b) of p against G0.
Image igf_update(const GfCoeffs& coeffs, const Image& p, const Image& G0, const WindowSpec& w);
Image icgf_update(const GfCoeffs& coeffs, const Image& p, const Image& G0, const Image& g,
                  const WindowSpec& w, double lambda);

}  // namespace detail
}  // namespace ccdgf
