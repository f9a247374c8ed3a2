#include <gtest/gtest.h>

#include "fex/error.hpp"
#include "fex/spectral.hpp"
#include "test_support.hpp"

namespace fex {
namespace {

using testing::random_function;

void expect_values(const GroupFunction& f, std::vector<Complex> expected, double tol = 1e-12) {
  ASSERT_EQ(f.size(), expected.size());
  for (std::size_t i = 0; i < expected.size(); ++i) {
    EXPECT_LT(std::abs(f[i] - expected[i]), tol) << "index " << i;
  }
}

TEST(Spectral, SynthesizeExamples) {
  const GroupSpec g({3, 4});
  auto mass = GroupFunction::zeros(g, Side::time);
  mass[0] = 1.0;
  expect_values(synthesize(mass), std::vector<Complex>(g.order(), 1.0));

  const GroupSpec z2({2});
  expect_values(synthesize(GroupFunction(z2, Side::time, {0.0, 1.0})), {1.0, -1.0});
  expect_values(synthesize(GroupFunction::zeros(g, Side::time)), std::vector<Complex>(g.order()));
}

TEST(Spectral, AnalyzeExamples) {
  const GroupSpec g({6});
  std::vector<Complex> point(g.order());
  point[0] = 1.0;
  expect_values(analyze(GroupFunction(g, Side::frequency, std::vector<Complex>(g.order(), 1.0))), point);

  const GroupSpec z2({2});
  const Complex i{0.0, 1.0};
  expect_values(analyze(GroupFunction(z2, Side::frequency, {1.0, i})), {(1.0 + i) / 2.0, (1.0 - i) / 2.0});

  const GroupSpec z2z3({2, 3});
  const ElementIndex gamma0 = 4;
  const auto ind = GroupFunction::indicator(z2z3, Side::frequency, std::vector<ElementIndex>{gamma0});
  std::vector<Complex> expected(z2z3.order());
  for (ElementIndex x = 0; x < z2z3.order(); ++x) {
    expected[x] = testing::direct_pairing(z2z3, x, gamma0) / 6.0;
  }
  expect_values(analyze(ind), expected);
}

TEST(Spectral, ANormExamples) {
  const GroupSpec g({8});
  const ElementIndex g0 = 3;
  auto character = GroupFunction::zeros(g, Side::frequency);
  for (ElementIndex gm = 0; gm < g.order(); ++gm) character[gm] = g.pairing(g0, gm);
  EXPECT_NEAR(a_norm(character), 1.0, 1e-12);

  const GroupSpec z2({2});
  EXPECT_NEAR(a_norm(GroupFunction(z2, Side::frequency, {1.0, Complex(0, 1)})), std::sqrt(2.0), 1e-15);

  EXPECT_NEAR(a_norm(GroupFunction::indicator(g, Side::frequency, std::vector<ElementIndex>{5})), 1.0,
              1e-14);
}

TEST(Spectral, SupAndL1Norms) {
  const GroupSpec z2({2});
  EXPECT_EQ(sup_norm(GroupFunction(z2, Side::frequency, {1.0, -1.0})), 1.0);
  EXPECT_EQ(l1_time_norm(GroupFunction(z2, Side::time, {0.5, 0.5})), 1.0);
  EXPECT_EQ(sup_norm(GroupFunction::zeros(z2, Side::frequency)), 0.0);
}

TEST(Spectral, SideMismatchIsAnError) {
  const GroupSpec g({4});
  const auto t = GroupFunction::zeros(g, Side::time);
  const auto f = GroupFunction::zeros(g, Side::frequency);
  try {
    (void)synthesize(f);
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.kind(), ErrorKind::side_mismatch);
  }
  EXPECT_THROW(analyze(t), Error);
  EXPECT_THROW(a_norm(t), Error);
  EXPECT_THROW(GroupFunction(g, Side::time, std::vector<Complex>(3)), Error);
}

TEST(Spectral, MatchesDirectTransform) {
  Rng rng(3);
  for (const auto& g : testing::test_groups()) {
    const auto f = random_function(rng, g, Side::frequency);
    const auto lambda = analyze(f);
    const auto expected = testing::direct_analyze(g, {f.values().begin(), f.values().end()});
    for (ElementIndex x = 0; x < g.order(); ++x) EXPECT_LT(std::abs(lambda[x] - expected[x]), 1e-13);
  }
}

TEST(Spectral, RoundTripAndPlancherel) {
  Rng rng(5);
  for (const auto& g : testing::test_groups()) {
    const double order = static_cast<double>(g.order());
    for (int trial = 0; trial < 100; ++trial) {
      const auto f = random_function(rng, g, Side::frequency);
      const auto lambda = analyze(f);
      const auto back = synthesize(lambda);
      double scale = 0.0;
      double err = 0.0;
      double freq_energy = 0.0;
      double time_energy = 0.0;
      for (ElementIndex i = 0; i < g.order(); ++i) {
        scale = std::max(scale, std::abs(f[i]));
        err = std::max(err, std::abs(back[i] - f[i]));
        freq_energy += std::norm(f[i]) / order;
        time_energy += std::norm(lambda[i]);
      }
      ASSERT_LE(err, 1e-9 * scale);
      ASSERT_NEAR(freq_energy, time_energy, 1e-9 * freq_energy);
    }
  }
}

TEST(Spectral, ANormDominatesSupAndIsANorm) {
  Rng rng(8);
  for (const auto& g : testing::test_groups()) {
    for (int trial = 0; trial < 50; ++trial) {
      const auto f = random_function(rng, g, Side::frequency);
      const auto h = random_function(rng, g, Side::frequency);
      const double nf = a_norm(f);
      const double nh = a_norm(h);
      ASSERT_LE(sup_norm(f), nf + 1e-9);

      auto sum = f;
      for (ElementIndex i = 0; i < g.order(); ++i) sum[i] += h[i];
      ASSERT_LE(a_norm(sum), nf + nh + 1e-9);

      const Complex c{rng.uniform(-3, 3), rng.uniform(-3, 3)};
      auto scaled = f;
      for (auto& z : scaled.values()) z *= c;
      ASSERT_NEAR(a_norm(scaled), std::abs(c) * nf, 1e-9 * std::max(1.0, nf));
    }
  }
}

}  // namespace
}  // namespace fex
