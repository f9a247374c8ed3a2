#include <gtest/gtest.h>

#include "fex/error.hpp"
#include "fex/peak.hpp"
#include "test_support.hpp"

namespace fex {
namespace {

TEST(PeakBuilder, GreedyBaseSetExamples) {
  const GroupSpec z8({8});
  EXPECT_EQ(greedy_base_set(z8, std::vector<ElementIndex>{3, 5}), (std::vector<ElementIndex>{0, 1, 2}));

  const GroupSpec g({2, 3});
  std::vector<ElementIndex> all(g.order());
  for (ElementIndex i = 0; i < g.order(); ++i) all[i] = i;
  EXPECT_EQ(greedy_base_set(g, {}), all);

  const GroupSpec z4({4});
  EXPECT_EQ(greedy_base_set(z4, std::vector<ElementIndex>{1, 2, 3}), (std::vector<ElementIndex>{0}));
}

TEST(PeakBuilder, GreedyBaseSetIsMaximalAndAvoidsDifferences) {
  Rng rng(21);
  for (const auto& g : testing::test_groups()) {
    for (int trial = 0; trial < 10; ++trial) {
      const auto n = 1 + rng.below(std::min<std::size_t>(g.order(), 4));
      const auto k = testing::random_points(rng, g, n);
      const auto d = difference_set(g, k);
      const auto base = greedy_base_set(g, d);
      ASSERT_EQ(base.front(), 0U);
      std::vector<bool> banned(g.order());
      for (auto x : d) banned[x] = true;
      for (auto p : base) {
        for (auto q : base) ASSERT_FALSE(banned[g.sub(p, q)]);
      }
      for (ElementIndex e = 0; e < g.order(); ++e) {
        if (std::find(base.begin(), base.end(), e) != base.end()) continue;
        const bool blocked = std::any_of(base.begin(), base.end(),
                                         [&](ElementIndex b) { return banned[g.sub(e, b)]; });
        EXPECT_TRUE(blocked) << "element " << e << " could have been added";
      }
    }
  }
}

TEST(PeakBuilder, PointBaseSet) {
  const GroupSpec g({10});
  const auto peak = build_peak(g, std::vector<ElementIndex>{0});
  for (ElementIndex t = 0; t < g.order(); ++t) {
    EXPECT_EQ(peak.delta[t], Complex(t == 0 ? 1.0 : 0.0));
    EXPECT_NEAR(peak.lambda[t].real(), 0.1, 1e-15);
  }
}

TEST(PeakBuilder, AutocorrelationOnZ8) {
  const GroupSpec z8({8});
  const auto peak = build_peak(z8, std::vector<ElementIndex>{0, 1, 2});
  const std::vector<double> expected{1.0, 2.0 / 3, 1.0 / 3, 0, 0, 0, 1.0 / 3, 2.0 / 3};
  for (ElementIndex t = 0; t < 8; ++t) EXPECT_EQ(peak.delta[t], Complex(expected[t])) << t;
}

TEST(PeakBuilder, FullGroupBaseSet) {
  const GroupSpec g({2, 4});
  std::vector<ElementIndex> all(g.order());
  for (ElementIndex i = 0; i < g.order(); ++i) all[i] = i;
  const auto peak = build_peak(g, all);
  for (ElementIndex t = 0; t < g.order(); ++t) {
    EXPECT_EQ(peak.delta[t], Complex(1.0));
    EXPECT_NEAR(peak.lambda[t].real(), t == 0 ? 1.0 : 0.0, 1e-15);
  }
}

TEST(PeakBuilder, InvalidBaseSets) {
  const GroupSpec g({6});
  for (std::vector<ElementIndex> bad : {std::vector<ElementIndex>{}, {1, 2}, {0, 0}, {0, 6}}) {
    try {
      build_peak(g, bad);
      FAIL();
    } catch (const Error& e) {
      EXPECT_EQ(e.kind(), ErrorKind::invalid_base_set);
    }
  }
}

TEST(PeakBuilder, ValidationExamples) {
  const GroupSpec z8({8});
  const std::vector<ElementIndex> d{3, 5};
  EXPECT_TRUE(validate_peak(build_peak(z8, std::vector<ElementIndex>{0, 1, 2}), d).all_passed());
  EXPECT_TRUE(validate_peak(build_peak(z8, std::vector<ElementIndex>{0}), std::vector<ElementIndex>{1, 2, 7})
                  .all_passed());

  auto broken = build_peak(z8, std::vector<ElementIndex>{0});
  broken.delta[0] = 0.5;
  const auto report = validate_peak(broken, d);
  EXPECT_FALSE(report.all_passed());
  EXPECT_FALSE(report.at("unit_peak").passed);
  EXPECT_DOUBLE_EQ(report.at("unit_peak").worst_violation, 0.5);
  EXPECT_TRUE(report.at("density_mass").passed);
}

TEST(PeakBuilder, ValidationFlagsSupportOnDifferences) {
  const GroupSpec z8({8});
  // I = {0, 1, 2} is not admissible against D = {1, 7}.
  const auto peak = build_peak(z8, std::vector<ElementIndex>{0, 1, 2});
  const auto report = validate_peak(peak, std::vector<ElementIndex>{1, 7});
  EXPECT_FALSE(report.at("vanishes_on_differences").passed);
  EXPECT_NEAR(report.at("vanishes_on_differences").worst_violation, 2.0 / 3, 1e-15);
}

TEST(PeakBuilder, GreedyPeaksAlwaysValidate) {
  Rng rng(4);
  for (const auto& g : testing::test_groups()) {
    for (int trial = 0; trial < 10; ++trial) {
      const auto n = 1 + rng.below(std::min<std::size_t>(g.order(), 5));
      const auto k = testing::random_points(rng, g, n);
      const auto d = difference_set(g, k);
      const auto peak = build_peak(g, greedy_base_set(g, d));
      const auto report = validate_peak(peak, d);
      ASSERT_TRUE(report.all_passed());
      ASSERT_LT(report.worst_violation(), 1e-12);
      for (ElementIndex t = 0; t < g.order(); ++t) {
        EXPECT_LT(std::abs(peak.delta[t] - peak.delta[g.neg(t)]), 1e-12);
      }
      EXPECT_NEAR(a_norm(peak.delta), 1.0, 1e-9);
    }
  }
}

}  // namespace
}  // namespace fex
