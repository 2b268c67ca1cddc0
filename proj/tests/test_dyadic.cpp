#include <gtest/gtest.h>

#include "majorize.hpp"
#include "oracles.hpp"

using namespace majorize;

namespace {

DyadicStepSeq steps(std::initializer_list<std::tuple<long, long, long>> pieces) {
  std::vector<StepInterval> iv;
  for (const auto& [s, e, v] : pieces) iv.push_back({BigInt(s), BigInt(e), BigRational(v)});
  return DyadicStepSeq(std::move(iv));
}

// Random nonincreasing step sequence on [0, horizon) with small integer log2 values.
DyadicStepSeq random_steps(Rng& rng, long horizon) {
  std::uniform_int_distribution<long> cut(1, horizon - 1);
  std::uniform_int_distribution<long> drop(0, 3);
  std::vector<long> cuts{0, horizon};
  for (int i = 0; i < 4; ++i) cuts.push_back(cut(rng));
  std::sort(cuts.begin(), cuts.end());
  cuts.erase(std::unique(cuts.begin(), cuts.end()), cuts.end());
  std::vector<StepInterval> iv;
  long value = -drop(rng);
  for (std::size_t i = 0; i + 1 < cuts.size(); ++i) {
    iv.push_back({BigInt(cuts[i]), BigInt(cuts[i + 1]), BigRational(value)});
    value -= drop(rng);
  }
  return DyadicStepSeq(std::move(iv));
}

}  // namespace

TEST(StepSeq, ValidatesConstruction) {
  EXPECT_THROW(DyadicStepSeq(std::vector<StepInterval>{}), input_error);
  EXPECT_THROW(steps({{1, 2, 0}}), input_error);
  EXPECT_THROW(steps({{0, 2, 0}, {3, 4, -1}}), input_error);
  EXPECT_THROW(steps({{0, 2, -1}, {2, 4, 0}}), input_error);
  EXPECT_THROW(steps({{0, 0, 0}}), input_error);
  EXPECT_NO_THROW(steps({{0, 2, 0}, {2, 4, 0}}));
}

TEST(StepSeq, LookupAndHorizon) {
  const auto x = steps({{0, 2, 0}, {2, 10, -3}});
  EXPECT_EQ(*x.log2_at(0), 0);
  EXPECT_EQ(*x.log2_at(9), -3);
  EXPECT_FALSE(x.covers(10));
  EXPECT_THROW((void)x.log2_at(10), input_error);
}

TEST(Generators, TowerShape) {
  const auto t = tower_sequence(2);
  ASSERT_EQ(t.intervals().size(), 3u);
  EXPECT_EQ(*t.log2_at(1), -1);
  EXPECT_EQ(*t.log2_at(2), -8);
  EXPECT_EQ(*t.log2_at(255), -8);
  EXPECT_EQ(*t.log2_at(256), -64);
  EXPECT_EQ(*t.horizon(), pow2(std::uint64_t(64)));
  EXPECT_EQ(gamma_index(0), 2);
  EXPECT_EQ(gamma_index(1), pow2(std::uint64_t(11)));
  EXPECT_EQ(gamma_index(2), pow2(std::uint64_t(70)));
}

TEST(Generators, A0AndHead) {
  const auto a0 = a0_sequence(2);
  EXPECT_EQ(*a0.log2_at(0), -8);
  EXPECT_EQ(*a0.log2_at(2), -64);
  EXPECT_EQ(*a0.log2_at(2047), -64);
  EXPECT_EQ(*a0.log2_at(2048), -512);
  const auto head = a0_head(1);
  EXPECT_EQ(*head.log2_at(1), -8);
  EXPECT_FALSE(head.log2_at(2).has_value());
  EXPECT_FALSE(head.horizon().has_value());
}

TEST(ExactPrefix, MatchesEntryByEntrySums) {
  const auto t = tower_sequence(2);
  for (long k : {0L, 1L, 2L, 3L, 100L, 255L, 256L, 300L, 1000L})
    EXPECT_EQ(*exact_prefix_log2(t, k), oracle::prefix_log2_by_entries(t, k)) << k;
  for (int trial = 0; trial < 50; ++trial) {
    Rng rng = trial_rng(41, 0, trial);
    const auto x = random_steps(rng, 200);
    for (long k = 0; k < 200; k += 7) EXPECT_EQ(*exact_prefix_log2(x, k), oracle::prefix_log2_by_entries(x, k));
  }
  EXPECT_EQ(*exact_prefix_log2(tower_sequence(2), 300), -4914);
  EXPECT_THROW(exact_prefix_log2(tower_sequence(1), 256), input_error);
}

TEST(ExactPrefix, ZeroTailMakesProductVanish) {
  const auto head = a0_head(1);
  EXPECT_TRUE(exact_prefix_log2(head, 1).has_value());
  EXPECT_FALSE(exact_prefix_log2(head, 2).has_value());
}

TEST(DyadicOps, DilateScalePowerAgreeWithExpansion) {
  for (int trial = 0; trial < 30; ++trial) {
    Rng rng = trial_rng(42, 0, trial);
    const auto x = random_steps(rng, 64);
    const auto xs = oracle::expand(x, 64);
    const auto d = oracle::expand(dilate_pow2(x, 2), 256);
    for (long k = 0; k < 256; ++k) EXPECT_EQ(d[k], xs[k / 4]);
    const auto s = oracle::expand(scale_pow2(x, BigRational(3)), 64);
    const auto p = oracle::expand(power(x, 4), 64);
    for (long k = 0; k < 64; ++k) {
      EXPECT_EQ(s[k], 8 * xs[k]);
      EXPECT_EQ(p[k], xs[k] * xs[k] * xs[k] * xs[k]);
    }
  }
}

TEST(DyadicOps, SupIsPointwiseMax) {
  for (int trial = 0; trial < 30; ++trial) {
    Rng rng = trial_rng(43, 0, trial);
    const auto x = random_steps(rng, 50), y = random_steps(rng, 50);
    const auto m = oracle::expand(sup(x, y), 50);
    const auto xs = oracle::expand(x, 50), ys = oracle::expand(y, 50);
    for (long k = 0; k < 50; ++k) EXPECT_EQ(m[k], std::max(xs[k], ys[k]));
  }
}

TEST(Pow2Sum, AgreesWithRationalArithmetic) {
  Rng rng = trial_rng(44, 0, 0);
  std::uniform_int_distribution<int> e(-12, 4);
  std::uniform_int_distribution<int> count(0, 5);
  for (int trial = 0; trial < 2000; ++trial) {
    const int target = e(rng);
    std::vector<Log2Value> terms;
    BigRational sum = 0;
    const int c = count(rng);
    for (int i = 0; i < c; ++i) {
      const int v = e(rng);
      terms.push_back(BigRational(v));
      sum += v >= 0 ? BigRational(pow2(std::uint64_t(v))) : BigRational(BigInt(1), pow2(std::uint64_t(-v)));
    }
    if (trial % 9 == 0) terms.push_back(std::nullopt);
    const BigRational t = target >= 0 ? BigRational(pow2(std::uint64_t(target)))
                                      : BigRational(BigInt(1), pow2(std::uint64_t(-target)));
    const auto verdict = pow2_sum_dominates(BigRational(target), terms);
    ASSERT_TRUE(verdict.has_value());
    EXPECT_EQ(*verdict, t <= sum) << "trial " << trial;
  }
  EXPECT_EQ(pow2_sum_dominates(std::nullopt, {}), std::optional<bool>(true));
}

TEST(DominatedBySum, AgreesWithExpansion) {
  for (int trial = 0; trial < 60; ++trial) {
    Rng rng = trial_rng(45, 0, trial);
    const auto lhs = random_steps(rng, 80);
    const std::vector<DyadicStepSeq> terms{random_steps(rng, 80), random_steps(rng, 80)};
    const auto l = oracle::expand(lhs, 80);
    const auto a = oracle::expand(terms[0], 80), b = oracle::expand(terms[1], 80);
    long first = -1;
    for (long k = 0; k < 80 && first < 0; ++k)
      if (l[k] > a[k] + b[k]) first = k;
    const auto cmp = dominated_by_sum(lhs, terms);
    EXPECT_EQ(cmp.holds(), first < 0);
    if (first >= 0) {
      ASSERT_TRUE(cmp.first_violation.has_value());
      // Reported index is the start of the refinement piece holding the first violation.
      EXPECT_LE(*cmp.first_violation, first);
      EXPECT_GT(l[static_cast<long>(*cmp.first_violation)], 0.0);
    }
  }
}

TEST(ExactLogSubmajor, AgreesWithLongDoubleProducts) {
  for (int trial = 0; trial < 60; ++trial) {
    Rng rng = trial_rng(46, 0, trial);
    const auto x = random_steps(rng, 40), y = random_steps(rng, 40);
    const auto xs = oracle::expand(x, 40), ys = oracle::expand(y, 40);
    bool holds = true;
    long double px = 1, py = 1;
    for (long k = 0; k < 40; ++k) {
      px *= xs[k];
      py *= ys[k];
      if (px > py) holds = false;
    }
    EXPECT_EQ(exact_log_submajor(x, y).holds(), holds) << trial;
  }
}

TEST(Harmonic, EnclosureContainsFloatingSum) {
  for (int ea = 0; ea <= 6; ++ea)
    for (int eb = ea + 1; eb <= 14; ++eb) {
      long double s = 0;
      for (long m = 1L << ea; m < (1L << eb); ++m) s += 1.0L / (m + 1);
      const auto b = harmonic_enclosure_pow2(ea, eb);
      EXPECT_LE(static_cast<long double>(b.lower), s);
      EXPECT_GE(static_cast<long double>(b.upper), s);
    }
}

TEST(TAux, ExhaustiveOnFirstBlock) {
  std::vector<BigInt> ks;
  for (long k = 2; k < 256; ++k) ks.push_back(k);
  const auto r = verify_t_aux(0, ks);
  EXPECT_TRUE(r.holds());
  // Independent evaluation of 2^8 (T mu)(k) through the entry-by-entry product.
  const auto t = tower_sequence(1);
  for (const auto& p : r.points) {
    const long k = static_cast<long>(p.k);
    const BigRational value = BigRational(8) + oracle::prefix_log2_by_entries(t, k) / BigRational(k + 1);
    EXPECT_EQ(p.value, value);
  }
}

TEST(TAux, SampledHigherBlocks) {
  for (unsigned n = 1; n <= 3; ++n) {
    Rng rng = trial_rng(47, n, 0);
    const auto ks = sample_t_aux_indices(n, 25, rng);
    EXPECT_EQ(ks.size(), 25u);
    EXPECT_TRUE(verify_t_aux(n, ks).holds()) << n;
  }
  EXPECT_THROW(verify_t_aux(0, {BigInt(256)}), input_error);
}

TEST(TMain, CertifiedForAdmissiblePairs) {
  for (auto [l, n] : {std::pair{1u, 4u}, {2u, 8u}, {3u, 16u}, {1u, 5u}}) {
    const auto r = verify_t_main(l, n);
    EXPECT_TRUE(r.certified()) << l << "," << n;
    EXPECT_TRUE(r.strict) << l << "," << n;
    EXPECT_EQ(r.left_exponent, 7 * n);
    EXPECT_EQ(r.right_exponent, BigInt(l + 1 + 7 * (1u << l)));
  }
  EXPECT_TRUE(verify_t_main(1, 4).exact_cross_check.value_or(false));
  EXPECT_THROW(verify_t_main(1, 2), input_error);
  EXPECT_THROW(verify_t_main(0, 4), input_error);
}

TEST(A0Bound, HoldsOnEveryPiece) {
  for (unsigned l = 1; l <= 4; ++l) {
    const auto r = verify_a0_bound(l, 4);
    EXPECT_TRUE(r.holds()) << l;
    EXPECT_GT(r.comparison.pieces_checked, 0u);
    for (const auto& f : r.facts) EXPECT_EQ(f.lhs, BigInt(3 * f.n + l) + pow2(std::uint64_t(3 * f.n)));
  }
  EXPECT_THROW(verify_a0_bound(0, 4), input_error);
}

TEST(Horror, TowerAndItsDilation) {
  const auto tower = tower_sequence(3);
  const auto r0 = verify_horror(tower, 0, 3);
  EXPECT_TRUE(r0.holds());
  EXPECT_TRUE(r0.log_submajorized);
  const auto r1 = verify_horror(scale_pow2(dilate_pow2(tower, 1), BigRational(1)), 1, 3);
  EXPECT_TRUE(r1.holds());
  // Outside the witness bound for l = 0.
  EXPECT_THROW(verify_horror(scale_pow2(tower, BigRational(1)), 0, 3), input_error);
}

TEST(Horror, RegionsCoverTheBlock) {
  EXPECT_EQ(horror_region(1, 2), "head");
  EXPECT_EQ(horror_region(256, 2).rfind("block-start", 0), 0u);
  EXPECT_EQ(horror_region(BigInt(1) << 9, 2).rfind("log-mean-fourth-power", 0), 0u);
  EXPECT_EQ(horror_region(gamma_index(1), 2).rfind("log-mean-tail", 0), 0u);
}
