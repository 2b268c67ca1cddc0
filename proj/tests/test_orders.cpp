#include <gtest/gtest.h>

#include "majorize.hpp"
#include "oracles.hpp"

using namespace majorize;

TEST(HardyLittlewood, Examples) {
  EXPECT_TRUE(check_hl_submajor(NonincreasingSeq({1, 1}), NonincreasingSeq({2, 0})).holds());
  EXPECT_TRUE(check_hl_submajor(NonincreasingSeq({0.5, 0.2}), NonincreasingSeq({0.5, 0.2})).holds());
  const auto v = check_hl_submajor(NonincreasingSeq({2, 0}), NonincreasingSeq({1, 1}));
  EXPECT_TRUE(v.fails());
  EXPECT_EQ(v.failure_index, std::size_t(1));
}

TEST(LogSubmajor, Examples) {
  EXPECT_TRUE(check_log_submajor(NonincreasingSeq({0.5, 0.5}), NonincreasingSeq({1, 0.25})).holds());
  const auto v = check_log_submajor(NonincreasingSeq({1, 0.125}), NonincreasingSeq({0.5, 0.5}));
  EXPECT_TRUE(v.fails());
  EXPECT_EQ(v.failure_index, std::size_t(0));
  const NonincreasingSeq x({0.9, 0.3, 0.1});
  EXPECT_TRUE(check_log_submajor(x, x).holds());
}

TEST(LogSubmajor, ZeroConventions) {
  EXPECT_TRUE(check_log_submajor(NonincreasingSeq({5, 0}), NonincreasingSeq({5, 1e-3})).holds());
  EXPECT_TRUE(check_log_submajor(NonincreasingSeq({1, 0}), NonincreasingSeq({1, 0})).holds());
  const auto v = check_log_submajor(NonincreasingSeq({1, 1e-3}), NonincreasingSeq({10, 0}));
  EXPECT_TRUE(v.fails());
  EXPECT_EQ(v.failure_index, std::size_t(1));
}

TEST(LogSubmajor, ZeroToleranceReportsRoundingAsInconclusive) {
  // Equal products reached through different factors: the excess is rounding only.
  Tolerances strict;
  strict.log = 0;
  const NonincreasingSeq b({0.7, 0.3});
  const NonincreasingSeq a({0.7 * 0.3 / 0.11, 0.11});
  const auto v = check_log_submajor(NonincreasingSeq({0.21 / 0.11 * 0.11 / 0.3, 0.3}), a, strict);
  EXPECT_FALSE(v.fails());
  EXPECT_FALSE(check_log_submajor(b, a, strict).fails());
}

TEST(Uniform, Examples) {
  auto v = check_uniform_submajor(NonincreasingSeq({1, 1, 0, 0}), NonincreasingSeq({2, 2, 0, 0}), 8);
  EXPECT_TRUE(v.holds());
  EXPECT_EQ(v.witness, std::size_t(1));

  // Prefix sums 1, 2, 3, 4 against 1, 1.9, 2.0, 2.1: first violation at n = 2.
  v = check_uniform_submajor(NonincreasingSeq({1, 1, 1, 1}), NonincreasingSeq({1, 0.9, 0.1, 0.1}), 8);
  EXPECT_TRUE(v.fails());
  EXPECT_EQ(v.failure_window, std::size_t(0));
  EXPECT_EQ(v.failure_index, std::size_t(2));

  const NonincreasingSeq x({0.8, 0.4, 0.4, 0.1});
  v = check_uniform_submajor(x, x, 8);
  EXPECT_TRUE(v.holds());
  EXPECT_EQ(v.witness, std::size_t(1));
}

TEST(Uniform, InconclusiveWhenNoStretchWorks) {
  // HL holds (equal total), but a large tail entry in b cannot be absorbed by
  // any window stretch <= 2 because a vanishes past index 0.
  const NonincreasingSeq b({0.5, 0.5, 0.5, 0.5});
  const NonincreasingSeq a({2, 0, 0, 0});
  const auto v = check_uniform_submajor(b, a, 2);
  EXPECT_TRUE(v.inconclusive());
  EXPECT_EQ(v.bound_searched, std::size_t(2));
  EXPECT_TRUE(check_hl_submajor(b, a).holds());
}

TEST(Deciders, AgreeWithBruteForceOracles) {
  for (int t = 0; t < 1000; ++t) {
    Rng rng = trial_rng(21, 0, t);
    const std::size_t n = 1 + t % 12;
    const NonincreasingSeq a = random_nonincreasing(rng, n, 1e-2, 1.0);
    const NonincreasingSeq b = random_nonincreasing(rng, n, 1e-2, 1.0);
    const auto hl = check_hl_submajor(b, a);
    const std::size_t first = oracle::hl_first_failure(b, a);
    EXPECT_EQ(hl.holds(), first == 0);
    if (hl.fails()) {
      EXPECT_EQ(*hl.failure_index, first);
    }
    EXPECT_EQ(check_log_submajor(b, a).holds(), oracle::log_holds(b, a));
    const auto u = check_uniform_submajor(b, a, 6);
    const std::size_t w = oracle::smallest_uniform_witness(b, a, 6);
    if (u.holds()) {
      EXPECT_EQ(*u.witness, w);
      EXPECT_TRUE(hl.holds());
    } else if (hl.holds()) {
      EXPECT_EQ(w, 0u);
      EXPECT_TRUE(u.inconclusive());
    } else {
      EXPECT_TRUE(u.fails());
    }
  }
}

TEST(Deciders, PointwiseDominationGivesAllOrdersWithStretchOne) {
  for (int t = 0; t < 300; ++t) {
    Rng rng = trial_rng(22, 0, t);
    const NonincreasingSeq a = random_nonincreasing(rng, 1 + t % 20);
    std::vector<double> b(a.vector());
    std::uniform_real_distribution<double> unit(0, 1);
    for (std::size_t k = 0; k < b.size(); ++k) b[k] *= unit(rng);
    // Keep b nonincreasing while staying below a.
    for (std::size_t k = 1; k < b.size(); ++k) b[k] = std::min(b[k], b[k - 1]);
    const NonincreasingSeq bs(b);
    EXPECT_TRUE(check_hl_submajor(bs, a).holds());
    EXPECT_TRUE(check_log_submajor(bs, a).holds());
    const auto u = check_uniform_submajor(bs, a, 4);
    ASSERT_TRUE(u.holds());
    EXPECT_EQ(u.witness, std::size_t(1));
  }
}

TEST(LogSubmajor, ReflexiveAndTransitive) {
  for (int t = 0; t < 300; ++t) {
    Rng rng = trial_rng(23, 0, t);
    const std::size_t n = 2 + t % 10;
    const NonincreasingSeq a = random_nonincreasing(rng, n);
    const NonincreasingSeq b = random_nonincreasing(rng, n);
    const NonincreasingSeq c = random_nonincreasing(rng, n);
    EXPECT_TRUE(check_log_submajor(a, a).holds());
    if (check_log_submajor(a, b).holds() && check_log_submajor(b, c).holds()) {
      EXPECT_FALSE(check_log_submajor(a, c).fails());
    }
  }
}

TEST(HardestEstimate, Examples) {
  EXPECT_TRUE(verify_hardest_estimate(NonincreasingSeq({0.2, 0.2, 0.2})).holds());
  EXPECT_TRUE(verify_hardest_estimate(NonincreasingSeq({1, 0.25})).holds());
  const auto sx = s_transform(NonincreasingSeq({1, 0.25}));
  EXPECT_NEAR(sx[1], 0.4233, 1e-4);
}

TEST(HardestEstimate, RandomizedNeverFails) {
  for (int t = 0; t < 500; ++t) {
    Rng rng = trial_rng(24, 0, t);
    const NonincreasingSeq x = random_nonincreasing(rng, 1 + t % 64);
    EXPECT_TRUE(verify_hardest_estimate(x).holds()) << "trial " << t;
  }
}

TEST(SumLessdot, DirectPart) {
  EXPECT_TRUE(verify_sum_lessdot_direct(NonincreasingSeq({0.5, 0.5}), NonincreasingSeq({1, 0.25}),
                                        NonincreasingSeq({1}), NonincreasingSeq({1}))
                  .holds());
  const NonincreasingSeq a1({0.6, 0.2}), a2({0.9});
  EXPECT_TRUE(verify_sum_lessdot_direct(a1, a1, a2, a2).holds());
  EXPECT_THROW(verify_sum_lessdot_direct(NonincreasingSeq({2}), NonincreasingSeq({1}), a2, a2), input_error);
}

TEST(ConvexHull, DampedRearrangementsAreUniformlySubmajorized) {
  Rng rng = trial_rng(25, 0, 0);
  const NonincreasingSeq x({1, 0.5, 0.25, 0});
  const auto r = verify_convex_hull_direction_a(x, 200, rng);
  EXPECT_TRUE(r.passed()) << (r.notes.empty() ? "" : r.notes.front());
  Rng rng2 = trial_rng(25, 1, 0);
  const auto r2 = verify_convex_hull_direction_a(random_nonincreasing(rng2, 12), 500, rng2);
  EXPECT_TRUE(r2.passed());
  EXPECT_EQ(r2.trials, 500u);
}

TEST(ConvexHull, SingleUndampedTermHasStretchOne) {
  const NonincreasingSeq x({1, 0.5, 0.25, 0});
  const auto v = check_uniform_submajor(mu(std::vector<double>{0.25, 1, 0, 0.5}), x, 8);
  ASSERT_TRUE(v.holds());
  EXPECT_EQ(v.witness, std::size_t(1));
  // (x + reversed x) / 2.
  const auto y = mu(std::vector<double>{0.5, 0.375, 0.375, 0.5});
  EXPECT_TRUE(check_uniform_submajor(y, x, 8).holds());
}
