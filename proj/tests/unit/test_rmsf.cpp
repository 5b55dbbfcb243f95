#include <gtest/gtest.h>

#include <algorithm>

#include "ccdgf/boxops.hpp"
#include "ccdgf/cgf.hpp"
#include "ccdgf/gf.hpp"
#include "ccdgf/igf.hpp"
#include "ccdgf/rmsf.hpp"
#include "ccdgf/synth.hpp"
#include "oracle.hpp"

using namespace ccdgf;

namespace {

const WindowSpec kW{2, Boundary::Truncate};

void expect_between(const Image& v, const Image& lo_hi_a, const Image& lo_hi_b) {
  for (std::size_t i = 0; i < v.size(); ++i) {
    EXPECT_GE(v[i], std::min(lo_hi_a[i], lo_hi_b[i]) - 1e-12);
    EXPECT_LE(v[i], std::max(lo_hi_a[i], lo_hi_b[i]) + 1e-12);
  }
}

}  // namespace

TEST(AlphaWeight, Constants) {
  const WindowSpec w{1, Boundary::Truncate};
  for (auto [c, expected] : {std::pair{0.0, 1.0}, std::pair{1.0, 0.5}, std::pair{3.0, 0.1}}) {
    for (const Image out = alpha_weight(make_image(5, 5, c), w); double v : out.pixels()) EXPECT_NEAR(v, expected, 1e-15);
  }
}

TEST(AlphaWeight, InUnitInterval) {
  const Image x = oracle::random_image(12, 12, 1, -50, 50);
  for (const Image out = alpha_weight(x, kW); double v : out.pixels()) {
    EXPECT_GT(v, 0.0);
    EXPECT_LE(v, 1.0);
  }
}

TEST(GfRmsf, ConstantsPreserved) {
  const Image c = make_image(12, 12, 0.4);
  const MutualState s = gf_rmsf(c, c, 0.01, 0.02, kW, 4);
  for (double v : s.q.pixels()) EXPECT_NEAR(v, 0.4, 1e-14);
  for (double v : s.G.pixels()) EXPECT_NEAR(v, 0.4, 1e-14);
  EXPECT_EQ(s.iteration, 4);
}

TEST(GfRmsf, FirstStepComposition) {
  const Image p = oracle::random_image(16, 16, 2);
  const Image I = oracle::random_image(16, 16, 3);
  const double eps = 0.02;
  const double eps2 = 0.05;
  const MutualState s = gf_rmsf(p, I, eps, eps2, kW, 1);

  const GfCoeffs cd = oracle::gf_coeffs(I, p, kW, eps2);
  const Image forward = oracle::gf(p, I, kW, eps);
  const Image inverse = oracle::inverse_minimizer(cd, I, p, p, kW, 0.0, kInverseDegeneracy);
  const Image m2 = oracle::box_mean(map(cd.a, [](double v) { return v * v; }), kW);
  for (std::size_t i = 0; i < p.size(); ++i) {
    const double alpha = 1.0 / (1.0 + m2[i]);
    EXPECT_NEAR(s.q[i], alpha * forward[i] + (1.0 - alpha) * inverse[i], 1e-10);
  }
}

TEST(GfRmsf, SnapshotsAndTrace) {
  const Image p = oracle::random_image(12, 12, 4);
  std::vector<MutualState> snaps;
  const MutualState s = gf_rmsf(p, p, 0.01, 0.01, kW, 3, &snaps);
  ASSERT_EQ(snaps.size(), 3u);
  EXPECT_EQ(snaps.back().q, s.q);
  EXPECT_EQ(snaps[0].iteration, 1);

  MutualStepTrace t;
  const MutualState one = gf_rmsf_step({p, p, 0}, 0.01, 0.01, kW, &t);
  EXPECT_EQ(one.q, snaps[0].q);
  expect_between(one.q, t.q_forward, t.q_inverse);
  expect_between(one.G, t.G_forward, t.G_inverse);
}

TEST(GfRmsf, NotIdentityOnSelfInput) {
  const Image I = synth::generate(synth::Kind::Texture, 1, 48, 48)[1].image;
  const MutualState s = gf_rmsf(I, I, 0.01, 0.01, kW, 1);
  EXPECT_GT(max_abs_diff(s.q, I), 1e-6);
}

TEST(GfRmsf, EnergyDescends) {
  for (std::uint64_t seed : {5u, 6u, 7u}) {
    const Image p = oracle::random_image(16, 16, seed);
    const Image I = oracle::random_image(16, 16, seed + 100);
    for (Boundary b : {Boundary::Truncate, Boundary::Periodic}) {
      const WindowSpec w{2, b};
      auto energy = [&](const MutualState& s) {
        return energy_mutual(s, gf_coeffs(s.q, s.G, w, 0.05), gf_coeffs(s.G, s.q, w, 0.02), w, 0.05, 0.02).total;
      };
      MutualState s{p, I, 0};
      double prev = energy(s);
      for (int n = 0; n < 10; ++n) {
        s = gf_rmsf_step(s, 0.05, 0.02, w);
        const double e = energy(s);
        EXPECT_LE(e, prev + 1e-9) << "seed " << seed << " step " << n;
        prev = e;
      }
    }
  }
}

TEST(CgfRmsf, ZeroAnchorsMatchGfRmsf) {
  const Image p = oracle::random_image(16, 16, 8);
  const Image I = oracle::random_image(16, 16, 9);
  const MutualState a = gf_rmsf(p, I, 0.02, 0.03, kW, 5);
  const MutualState b = cgf_rmsf(p, I, 0.02, 0.03, 0.0, 0.0, kW, 5);
  EXPECT_LE(max_abs_diff(a.q, b.q), 1e-12);
  EXPECT_LE(max_abs_diff(a.G, b.G), 1e-12);
}

TEST(CgfRmsf, ConstantsPreserved) {
  const Image c = make_image(10, 10, 0.7);
  const MutualState s = cgf_rmsf(c, c, 0.01, 0.01, 0.5, 0.5, kW, 3);
  for (double v : s.q.pixels()) EXPECT_NEAR(v, 0.7, 1e-14);
  for (double v : s.G.pixels()) EXPECT_NEAR(v, 0.7, 1e-14);
}

TEST(CgfRmsf, EveryStepIsConvexCombination) {
  const Image p = oracle::random_image(16, 16, 10);
  const Image I = oracle::random_image(16, 16, 11);
  MutualState s{p, I, 0};
  for (int n = 0; n < 5; ++n) {
    MutualStepTrace t;
    const MutualState next = cgf_rmsf_step(s, p, I, 0.01, 0.01, 0.01, 0.01, kW, &t);
    expect_between(next.q, t.q_forward, t.q_inverse);
    expect_between(next.G, t.G_forward, t.G_inverse);
    s = next;
  }
}

TEST(CgfRmsf, FirstStepComposition) {
  const Image p = oracle::random_image(12, 12, 12);
  const Image I = oracle::random_image(12, 12, 13);
  const double lambda = 0.7;
  const double beta = 0.4;
  MutualStepTrace t;
  const MutualState s = cgf_rmsf_step({p, I, 0}, p, I, 0.02, 0.03, lambda, beta, kW, &t);
  EXPECT_LE(max_abs_diff(t.q_forward, cgf(p, I, p, kW, 0.02, lambda)), 1e-12);
  EXPECT_LE(max_abs_diff(t.q_inverse, icgf(I, p, I, kW, 0.03, beta)), 1e-12);
  EXPECT_LE(max_abs_diff(t.G_forward, cgf(I, s.q, I, kW, 0.03, beta)), 1e-12);
  EXPECT_LE(max_abs_diff(t.G_inverse, icgf(s.q, I, p, kW, 0.02, lambda)), 1e-12);
}

TEST(NaiveRoll37, ConstantsAndSingleStep) {
  const Image c = make_image(10, 10, 0.2);
  const MutualState s = naive_roll37(c, c, 0.01, kW, 3);
  for (double v : s.q.pixels()) EXPECT_NEAR(v, 0.2, 1e-14);
  const Image p = oracle::random_image(10, 10, 14);
  const Image I = oracle::random_image(10, 10, 15);
  const MutualState one = naive_roll37(p, I, 0.01, kW, 1);
  EXPECT_EQ(one.q, gf(p, I, kW, 0.01));
  EXPECT_EQ(one.G, gf(I, p, kW, 0.01));
}

TEST(NaiveRoll37, WipesDetailFasterThanRmsf) {
  const Image I = synth::generate(synth::Kind::Texture, 2, 64, 64)[1].image;
  const WindowSpec w{6, Boundary::Truncate};
  const MutualState naive = naive_roll37(I, I, 0.003, w, 30);
  const MutualState mutual = gf_rmsf(I, I, 0.003, 0.003, w, 30);
  EXPECT_LT(stddev(naive.q), stddev(mutual.q));
}

TEST(EnergyMutual, TrivialAndOracle) {
  const WindowSpec w{1, Boundary::Truncate};
  const Image zero = make_image(6, 6, 0.0);
  EXPECT_EQ(energy_mutual({zero, zero, 0}, {zero, zero}, {zero, zero}, w, 0.1, 0.1).total, 0.0);
  const Image c = make_image(6, 6, 0.3);
  EXPECT_EQ(energy_mutual({c, c, 0}, {zero, c}, {zero, c}, w, 0.1, 0.1).total, 0.0);

  const Image q = oracle::random_image(8, 8, 16);
  const Image G = oracle::random_image(8, 8, 17);
  const GfCoeffs ab{oracle::random_image(8, 8, 18, -1, 1), oracle::random_image(8, 8, 19)};
  const GfCoeffs cd{oracle::random_image(8, 8, 20, -1, 1), oracle::random_image(8, 8, 21)};
  const double ref = oracle::fit_energy(q, ab, G, w, 0.1) + oracle::fit_energy(G, cd, q, w, 0.2);
  EXPECT_NEAR(energy_mutual({q, G, 0}, ab, cd, w, 0.1, 0.2).total, ref, 1e-12 * ref);
}

TEST(Rmsf, Errors) {
  const Image x = make_image(6, 6, 0.1);
  EXPECT_THROW(gf_rmsf(x, make_image(6, 5, 0.1), 0.1, 0.1, kW, 1), ShapeError);
  EXPECT_THROW(gf_rmsf(x, x, 0.1, 0.1, kW, 0), ParamError);
  EXPECT_THROW(cgf_rmsf(x, x, 0.1, 0.1, -1.0, 0.0, kW, 1), ParamError);
  EXPECT_THROW(naive_roll37(x, x, 0.0, kW, 1), ParamError);
}
