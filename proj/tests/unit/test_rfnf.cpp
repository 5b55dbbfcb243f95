#include <gtest/gtest.h>

#include "ccdgf/boxops.hpp"
#include "ccdgf/cgf.hpp"
#include "ccdgf/gf.hpp"
#include "ccdgf/metrics.hpp"
#include "ccdgf/rfnf.hpp"
#include "ccdgf/synth.hpp"
#include "oracle.hpp"

using namespace ccdgf;

namespace {

const WindowSpec kW{2, Boundary::Truncate};

}  // namespace

TEST(DetailImage, Constant) {
  for (const Image out = detail_image(make_image(10, 10, 0.3), kW, 0.01); double v : out.pixels()) EXPECT_NEAR(v, 0.0, 1e-14);
}

TEST(DetailImage, LargeRegularizer) {
  const Image f = oracle::random_image(12, 12, 1);
  const Image d = detail_image(f, kW, 1e12);
  const Image blur = box_mean(box_mean(f, kW), kW);
  EXPECT_LE(max_abs_diff(d, zip_map(f, blur, [](double a, double b) { return a - b; })), 1e-10);
}

TEST(DetailImage, Composition) {
  const Image f = oracle::random_image(16, 16, 2);
  const Image ref = zip_map(f, oracle::gf(f, f, kW, 0.01), [](double a, double b) { return a - b; });
  EXPECT_LE(max_abs_diff(detail_image(f, kW, 0.01), ref), 1e-10);
}

TEST(EnhancedImage, UnitGainIsFlash) {
  const Image f = oracle::random_image(16, 16, 3);
  EXPECT_LE(max_abs_diff(enhanced_image(f, kW, 0.01, 1.0), f), 1e-14);
}

TEST(RfnfSeo, ZeroGainIsRollingGf) {
  const Image n = oracle::random_image(16, 16, 4);
  const Image f = oracle::random_image(16, 16, 5);
  EXPECT_EQ(rfnf_seo(n, f, kW, 0.01, 0.0, 4), gf_roll(n, f, kW, 0.01, 4).back());
}

TEST(RfnfSeo, SingleStep) {
  const Image n = oracle::random_image(16, 16, 6);
  const Image f = oracle::random_image(16, 16, 7);
  const Image d = detail_image(f, kW, 0.01);
  const Image base = gf(n, f, kW, 0.01);
  const Image ref = zip_map(base, d, [](double a, double b) { return a + 0.8 * b; });
  EXPECT_LE(max_abs_diff(rfnf_seo(n, f, kW, 0.01, 0.8, 1), ref), 1e-14);
}

TEST(Rfnf, ConstantFixedPoint) {
  const Image c = make_image(12, 12, 0.55);
  for (const Image out = rfnf_seo(c, c, kW, 0.01, 0.7, 5); double v : out.pixels()) EXPECT_NEAR(v, 0.55, 1e-13);
  for (const Image out = rfnf_gen(c, c, kW, 0.01, 2.0, 3.0, 5); double v : out.pixels()) EXPECT_NEAR(v, 0.55, 1e-13);
}

TEST(RfnfGen, ZeroLambdaMatchesSeo) {
  const Image n = oracle::random_image(16, 16, 8);
  const Image f = oracle::random_image(16, 16, 9);
  EXPECT_LE(max_abs_diff(rfnf_gen(n, f, kW, 0.01, 0.0, 2.0, 6), rfnf_seo(n, f, kW, 0.01, 0.0, 6)), 1e-12);
}

TEST(RfnfGen, IsCgfRollOnEnhancedAnchor) {
  const Image n = oracle::random_image(16, 16, 10);
  const Image f = oracle::random_image(16, 16, 11);
  const Image e = enhanced_image(f, kW, 0.01, 1.5);
  const Image ref = cgf_roll(n, f, e, kW, 0.01, 3.0, 5).back();
  EXPECT_LE(max_abs_diff(rfnf_gen(n, f, kW, 0.01, 3.0, 1.5, 5), ref), 1e-12);
}

TEST(RfnfGen, UnitGainAnchorsToFlash) {
  const Image n = oracle::random_image(16, 16, 12);
  const Image f = oracle::random_image(16, 16, 13);
  const Image ref = cgf_roll(n, f, f, kW, 0.01, 3.0, 2).back();
  EXPECT_LE(max_abs_diff(rfnf_gen(n, f, kW, 0.01, 3.0, 1.0, 2), ref), 1e-12);
}

// With a constant anchor weight alpha and tau = gain / alpha, one generalized
// step differs from one detail-transfer step by
// alpha (gf(I_f, I_f) - gf(q, I_f)), so the gap is linear in alpha.
TEST(RfnfGen, SmallAnchorApproachesSeo) {
  const Image n = oracle::random_image(24, 24, 14);
  const Image f = oracle::random_image(24, 24, 15);
  const WindowSpec w{2, Boundary::Periodic};
  const double gain = 0.6;
  const double count = 25.0;
  const Image dropped = zip_map(gf(f, f, w, 0.01), gf(n, f, w, 0.01), [](double a, double b) { return a - b; });
  const double K = std::max(std::abs(min_value(dropped)), std::abs(max_value(dropped)));
  for (double alpha : {1e-2, 1e-3, 1e-4}) {
    const double lambda = alpha * count / (1.0 - alpha);
    const double gap = max_abs_diff(rfnf_gen(n, f, w, 0.01, lambda, gain / alpha, 1), rfnf_seo(n, f, w, 0.01, gain, 1));
    EXPECT_NEAR(gap, K * alpha, 1e-9);
  }
}

TEST(Rfnf, SyntheticPairImprovesOnNoFlash) {
  const synth::FlashPair pair = synth::flash_pair(64, 64, 3);
  const Image out = rfnf_seo(pair.no_flash, pair.flash, kW, 0.01, 0.5, 3);
  EXPECT_TRUE(all_finite(out));
  EXPECT_LT(mse(out, pair.scene), mse(pair.no_flash, pair.scene));
}

TEST(Rfnf, Errors) {
  const Image x = make_image(8, 8, 0.1);
  EXPECT_THROW(rfnf_seo(x, make_image(8, 9, 0.1), kW, 0.01, 0.5, 1), ShapeError);
  EXPECT_THROW(rfnf_gen(x, make_image(9, 8, 0.1), kW, 0.01, 0.5, 1.0, 1), ShapeError);
  EXPECT_THROW(rfnf_gen(x, x, kW, 0.01, 0.5, 1.0, 0), ParamError);
}
