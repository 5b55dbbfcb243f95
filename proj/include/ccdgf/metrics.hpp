#pragma once

#include <span>

#include "ccdgf/core.hpp"

namespace ccdgf {

/// Mean squared difference.
double mse(const Image& x, const Image& y);
/// Mean over channels of per-channel mse.
double mse(std::span<const Image> x, std::span<const Image> y);

/// 10 log10(peak^2 / mse); +infinity when the images are identical.
double psnr(const Image& x, const Image& y, double peak = 1.0);
double psnr(std::span<const Image> x, std::span<const Image> y, double peak = 1.0);
double psnr_from_mse(double mse, double peak = 1.0);

inline constexpr int kSsimWindow = 11;
inline constexpr double kSsimSigma = 1.5;
inline constexpr double kSsimK1 = 0.01;
inline constexpr double kSsimK2 = 0.03;

/// Mean structural similarity with the usual 11x11 Gaussian window
/// (sigma 1.5, K1 = 0.01, K2 = 0.03) over the fully covered region.
/// Requires both dimensions >= 11.
double ssim(const Image& x, const Image& y, double peak = 1.0);
double ssim(std::span<const Image> x, std::span<const Image> y, double peak = 1.0);

}  // namespace ccdgf
