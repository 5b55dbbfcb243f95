#include <gtest/gtest.h>

#include <limits>
#include <vector>

#include "ccdgf/core.hpp"
#include "oracle.hpp"

using namespace ccdgf;

TEST(MakeImage, ConstantFill) {
  const Image x = make_image(3, 3, 0.5);
  EXPECT_EQ(x.width(), 3);
  EXPECT_EQ(x.height(), 3);
  for (double v : x.pixels()) EXPECT_EQ(v, 0.5);
}

TEST(MakeImage, SinglePixel) {
  const Image x = make_image(1, 1, 0.0);
  ASSERT_EQ(x.size(), 1u);
  EXPECT_EQ(x[0], 0.0);
}

TEST(MakeImage, DataLength) {
  const Image x = make_image(2, 3, 1.0);
  EXPECT_EQ(x.size(), 6u);
  for (double v : x.pixels()) EXPECT_EQ(v, 1.0);
}

TEST(MakeImage, RejectsBadDimensions) {
  EXPECT_THROW(make_image(0, 3, 0.0), DimensionError);
  EXPECT_THROW(make_image(3, -1, 0.0), DimensionError);
  EXPECT_THROW(make_image(2, 2, std::numeric_limits<double>::quiet_NaN()), ParamError);
}

TEST(ZipMap, Pointwise) {
  const auto c = [](double v) { return make_image(4, 3, v); };
  EXPECT_EQ(zip_map(c(2), c(3), [](double a, double b) { return a + b; }), c(5));
  const Image x = oracle::random_image(4, 3, 1);
  EXPECT_EQ(zip_map(x, c(0), [](double a, double b) { return a + b; }), x);
  EXPECT_EQ(zip_map(c(6), c(3), [](double a, double b) { return a / b; }), c(2));
}

TEST(ZipMap, ShapeMismatch) {
  EXPECT_THROW(zip_map(make_image(2, 3, 0), make_image(3, 2, 0), [](double a, double) { return a; }),
               ShapeError);
}

TEST(Blend, Endpoints) {
  const Image x = oracle::random_image(5, 5, 2);
  const Image y = oracle::random_image(5, 5, 3);
  EXPECT_EQ(blend(x, y, make_image(5, 5, 0.0)), x);
  EXPECT_EQ(blend(x, y, make_image(5, 5, 1.0)), y);
  const Image half = blend(x, y, make_image(5, 5, 0.5));
  for (std::size_t i = 0; i < x.size(); ++i) EXPECT_NEAR(half[i], 0.5 * (x[i] + y[i]), 1e-15);
}

TEST(Stats, MeanStddevRange) {
  Image x(2, 2);
  x[0] = 0.0;
  x[1] = 1.0;
  x[2] = 0.0;
  x[3] = 1.0;
  EXPECT_DOUBLE_EQ(mean(x), 0.5);
  EXPECT_DOUBLE_EQ(stddev(x), 0.5);
  EXPECT_EQ(min_value(x), 0.0);
  EXPECT_EQ(max_value(x), 1.0);
  EXPECT_TRUE(all_finite(x));
  x[2] = std::numeric_limits<double>::infinity();
  EXPECT_FALSE(all_finite(x));
}

TEST(Luma, AveragesChannels) {
  const std::vector<Image> rgb{make_image(2, 2, 0.3), make_image(2, 2, 0.6), make_image(2, 2, 0.9)};
  const Image y = luma(rgb);
  for (double v : y.pixels()) EXPECT_NEAR(v, 0.6, 1e-15);
  EXPECT_EQ(luma(std::vector<Image>{rgb[0]}), rgb[0]);
}

TEST(WindowSpec, Counts) {
  const WindowSpec t{1, Boundary::Truncate};
  EXPECT_EQ(t.count(0, 0, 4, 4), 4);
  EXPECT_EQ(t.count(1, 0, 4, 4), 6);
  EXPECT_EQ(t.count(1, 1, 4, 4), 9);
  const WindowSpec p{1, Boundary::Periodic};
  EXPECT_EQ(p.count(0, 0, 4, 4), 9);
  const Image counts = window_counts(4, 4, t);
  EXPECT_EQ(counts(3, 3), 4.0);
  EXPECT_EQ(counts(2, 2), 9.0);
}

TEST(WindowSpec, Validation) {
  EXPECT_THROW((WindowSpec{-1, Boundary::Truncate}.validate(4, 4)), WindowError);
  EXPECT_THROW((WindowSpec{2, Boundary::Periodic}.validate(4, 4)), WindowError);
  EXPECT_NO_THROW((WindowSpec{1, Boundary::Periodic}.validate(3, 3)));
  // Truncated windows may exceed the image; they are simply clipped.
  EXPECT_NO_THROW((WindowSpec{10, Boundary::Truncate}.validate(4, 4)));
}

TEST(FilterParams, Validation) {
  FilterParams ok;
  EXPECT_NO_THROW(ok.validate());
  FilterParams p = ok;
  p.eps = 0.0;
  EXPECT_THROW(p.validate(), ParamError);
  p = ok;
  p.lambda = -1.0;
  EXPECT_THROW(p.validate(), ParamError);
  p = ok;
  p.iters = 0;
  EXPECT_THROW(p.validate(), ParamError);
}

TEST(CompensatedSum, RecoversSmallTerms) {
  CompensatedSum s;
  s.add(1e16);
  for (int i = 0; i < 1000; ++i) s.add(1.0);
  s.add(-1e16);
  EXPECT_EQ(s.value(), 1000.0);
}

TEST(EnergyReport, TotalsTerms) {
  EnergyReport r;
  r.add("data", 2.0);
  r.add("penalty", 0.5);
  EXPECT_EQ(r.total, 2.5);
  EXPECT_EQ(r.term("penalty"), 0.5);
  EXPECT_EQ(r.term("missing"), 0.0);
}
