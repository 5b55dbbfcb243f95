#include <gtest/gtest.h>

#include <cmath>
#include <limits>
#include <vector>

#include "ccdgf/metrics.hpp"
#include "oracle.hpp"

using namespace ccdgf;

TEST(Mse, Basics) {
  const Image x = oracle::random_image(12, 12, 1);
  EXPECT_EQ(mse(x, x), 0.0);
  EXPECT_NEAR(mse(make_image(4, 4, 0.0), make_image(4, 4, 0.1)), 0.01, 1e-15);
  const Image y = oracle::random_image(12, 12, 2);
  EXPECT_EQ(mse(x, y), mse(y, x));
  EXPECT_GE(mse(x, y), 0.0);
  EXPECT_THROW(mse(x, make_image(12, 11, 0.0)), ShapeError);
}

TEST(Psnr, Basics) {
  const Image x = oracle::random_image(12, 12, 3);
  EXPECT_EQ(psnr(x, x), std::numeric_limits<double>::infinity());
  EXPECT_NEAR(psnr_from_mse(0.01), 20.0, 1e-12);
  EXPECT_NEAR(psnr(make_image(4, 4, 0.0), make_image(4, 4, 0.1)), 20.0, 1e-9);
  EXPECT_NEAR(psnr_from_mse(0.04, 2.0), 20.0, 1e-12);
}

TEST(Psnr, RoundedReferencePairs) {
  EXPECT_NEAR(psnr_from_mse(0.0066), 21.80, 0.005);
  EXPECT_NEAR(psnr_from_mse(0.0035), 24.56, 0.005);
  // The printed MSE values carry two significant digits, so the printed
  // PSNR values sit within the rounding interval of the MSE.
  EXPECT_LE(psnr_from_mse(0.00665), 21.8370);
  EXPECT_GE(psnr_from_mse(0.00655), 21.8370);
  EXPECT_LE(psnr_from_mse(0.00355), 24.5191);
  EXPECT_GE(psnr_from_mse(0.00345), 24.5191);
}

TEST(Psnr, MonotoneInMse) {
  double prev = std::numeric_limits<double>::infinity();
  for (double m : {1e-6, 1e-4, 1e-3, 0.01, 0.1, 1.0}) {
    const double p = psnr_from_mse(m);
    EXPECT_LT(p, prev);
    prev = p;
  }
}

TEST(Ssim, Identity) {
  const Image x = oracle::random_image(16, 16, 4);
  EXPECT_EQ(ssim(x, x), 1.0);
}

TEST(Ssim, ConstantsClosedForm) {
  const double m1 = 0.4;
  const double m2 = 0.5;
  const double c1 = 0.01 * 0.01;
  const double expected = (2 * m1 * m2 + c1) / (m1 * m1 + m2 * m2 + c1);
  EXPECT_NEAR(ssim(make_image(16, 16, m1), make_image(16, 16, m2)), expected, 1e-12);
}

TEST(Ssim, InvertedImage) {
  const Image x = oracle::random_image(16, 16, 5);
  const Image inv = map(x, [](double v) { return 1.0 - v; });
  const double s = ssim(x, inv);
  EXPECT_LT(s, 0.5);
  EXPECT_NEAR(s, oracle::ssim(x, inv), 1e-12);
}

TEST(Ssim, MatchesReferenceFormula) {
  const Image x = oracle::random_image(20, 17, 6);
  const Image y = zip_map(x, oracle::random_image(20, 17, 7, -0.1, 0.1), [](double a, double b) { return a + b; });
  const double s = ssim(x, y);
  EXPECT_NEAR(s, oracle::ssim(x, y), 1e-12);
  EXPECT_GE(s, -1.0);
  EXPECT_LE(s, 1.0);
  EXPECT_NEAR(s, ssim(y, x), 1e-14);
}

TEST(Ssim, Errors) {
  EXPECT_THROW(ssim(make_image(10, 16, 0.0), make_image(10, 16, 0.0)), DimensionError);
  EXPECT_THROW(ssim(make_image(16, 16, 0.0), make_image(16, 15, 0.0)), ShapeError);
}

TEST(Metrics, Multichannel) {
  const std::vector<Image> x{oracle::random_image(16, 16, 8), oracle::random_image(16, 16, 9)};
  const std::vector<Image> y{x[0], make_image(16, 16, 0.5)};
  EXPECT_NEAR(mse(x, y), 0.5 * mse(x[1], y[1]), 1e-15);
  EXPECT_NEAR(ssim(x, y), 0.5 * (1.0 + ssim(x[1], y[1])), 1e-15);
  EXPECT_THROW(mse(x, std::vector<Image>{x[0]}), ShapeError);
}
