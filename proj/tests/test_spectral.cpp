#include <gtest/gtest.h>

#include <numbers>

#include "majorize.hpp"
#include "oracles.hpp"

using namespace majorize;

namespace {

Eigen::MatrixXcd from_rows(std::initializer_list<std::initializer_list<Complex>> rows) {
  const auto n = static_cast<Eigen::Index>(rows.size());
  Eigen::MatrixXcd m(n, n);
  Eigen::Index i = 0;
  for (const auto& row : rows) {
    Eigen::Index j = 0;
    for (const auto& v : row) m(i, j++) = v;
    ++i;
  }
  return m;
}

}  // namespace

TEST(Linalg, SingularValuesMatchGramEigenvalues) {
  for (int t = 0; t < 100; ++t) {
    Rng rng = trial_rng(31, 0, t);
    const DenseMatrix m(random_gaussian_matrix(rng, 1 + t % 10));
    const auto got = sv_seq(m);
    const auto want = oracle::singular_values(m.matrix());
    ASSERT_EQ(got.size(), want.size());
    for (std::size_t i = 0; i < got.size(); ++i) EXPECT_NEAR(got[i], want[i], 1e-7 * (1 + want[0]));
  }
}

TEST(Linalg, DeterminantEqualsProducts) {
  for (int t = 0; t < 100; ++t) {
    Rng rng = trial_rng(32, 0, t);
    const DenseMatrix m(random_gaussian_matrix(rng, 1 + t % 8));
    const Complex det = m.matrix().determinant();
    Complex eig_prod = 1;
    for (const auto& v : eigen_seq(m)) eig_prod *= v;
    double sv_prod = 1;
    for (double s : sv_seq(m)) sv_prod *= s;
    EXPECT_NEAR(std::abs(det - eig_prod), 0.0, 1e-8 * (1 + std::abs(det)));
    EXPECT_NEAR(std::abs(det), sv_prod, 1e-8 * (1 + sv_prod));
  }
}

TEST(Linalg, RejectsBadMatrices) {
  EXPECT_THROW(DenseMatrix(Eigen::MatrixXcd(2, 3)), input_error);
  EXPECT_THROW(DenseMatrix(Eigen::MatrixXcd::Zero(kDeskLimit + 1, kDeskLimit + 1)), input_error);
  Eigen::MatrixXcd bad = Eigen::MatrixXcd::Zero(2, 2);
  bad(0, 1) = std::numeric_limits<double>::quiet_NaN();
  EXPECT_THROW((DenseMatrix(bad)), input_error);
}

TEST(Linalg, CanonicalOrderKeepsConjugatePairsStable) {
  ComplexSeq v{Complex(0, -1), Complex(0, 1), Complex(2, 0)};
  canonical_order(v);
  EXPECT_EQ(v[0], Complex(2, 0));
  EXPECT_EQ(v[1], Complex(0, 1));
  EXPECT_EQ(v[2], Complex(0, -1));
}

TEST(Weyl, HandExamples) {
  const DenseMatrix jordan(from_rows({{0, 1}, {0, 0}}));
  EXPECT_TRUE(weyl_check(jordan).holds());
  EXPECT_EQ(sv_seq(jordan).vector(), (std::vector<double>{1, 0}));
  const DenseMatrix diag(from_rows({{Complex(0, 3), 0}, {0, -1}}));
  EXPECT_TRUE(weyl_check(diag).holds());
  EXPECT_NEAR(sv_seq(diag)[0], 3, 1e-14);
}

TEST(Weyl, RandomMatrices) {
  for (int t = 0; t < 500; ++t) {
    Rng rng = trial_rng(33, 0, t);
    EXPECT_TRUE(weyl_check(DenseMatrix(random_gaussian_matrix(rng, 1 + t % 12))).holds()) << t;
  }
}

TEST(Lidskii, TraceMatchesEigenSum) {
  const DenseMatrix m(from_rows({{1, 2}, {3, 4}}));
  const auto r = lidskii_check(m);
  EXPECT_TRUE(r.holds());
  EXPECT_NEAR(r.eigen_sum.real(), 5, 1e-12);
  for (int t = 0; t < 200; ++t) {
    Rng rng = trial_rng(34, 0, t);
    EXPECT_TRUE(lidskii_check(DenseMatrix(random_gaussian_matrix(rng, 1 + t % 16))).holds());
  }
}

TEST(Ringrose, SplitsIntoNormalPlusQuasinilpotent) {
  for (int t = 0; t < 200; ++t) {
    Rng rng = trial_rng(35, 0, t);
    const DenseMatrix m(random_gaussian_matrix(rng, 1 + t % 10));
    const auto split = ringrose_decompose(m);
    const auto d = ringrose_diagnostics(m, split);
    const double scale = 1 + d.norm;
    EXPECT_LE(d.reconstruction_error, 1e-10 * scale);
    EXPECT_LE(d.q_spectral_radius, 1e-8 * scale);
    EXPECT_LE(d.q_lower_residual, 1e-8 * scale);
    EXPECT_LE(d.eigen_mismatch, 1e-8 * scale);
    EXPECT_LE(d.normality_defect, 1e-8 * scale * scale);
    EXPECT_TRUE(is_quasinilpotent(DenseMatrix(split.q_part)));
    // Unitary basis.
    const Eigen::Index n = split.basis.rows();
    EXPECT_LE((split.basis.adjoint() * split.basis - Eigen::MatrixXcd::Identity(n, n)).norm(), 1e-10);
  }
}

TEST(Ringrose, NormalInputHasZeroQuasinilpotentPart) {
  const DenseMatrix diag(from_rows({{2, 0, 0}, {0, Complex(0, 1), 0}, {0, 0, -1}}));
  const auto split = ringrose_decompose(diag);
  EXPECT_LE(split.q_part.norm(), 1e-12);
}

TEST(Quasinilpotent, Recognition) {
  EXPECT_TRUE(is_quasinilpotent(DenseMatrix(from_rows({{0, 5}, {0, 0}}))));
  EXPECT_TRUE(is_quasinilpotent(DenseMatrix(from_rows({{0, 0}, {3, 0}}))));
  EXPECT_FALSE(is_quasinilpotent(DenseMatrix(from_rows({{1, 0}, {0, 0}}))));
  EXPECT_FALSE(is_quasinilpotent(DenseMatrix(from_rows({{0, 1}, {1, 0}}))));
  // Conjugated strictly upper matrix: nilpotent but not triangular.
  Rng rng = trial_rng(36, 0, 0);
  const Eigen::MatrixXcd u = random_unitary(rng, 5);
  const Eigen::MatrixXcd q = u * random_strictly_upper(rng, 5) * u.adjoint();
  EXPECT_TRUE(is_quasinilpotent(DenseMatrix(q)));
  Tolerances tol;
  EXPECT_THROW(require_quasinilpotent(DenseMatrix(from_rows({{1, 0}, {0, 0}})), tol), input_error);
}

TEST(Quasinilpotent, SumBoundWithConstant400) {
  // Hand case: the 2x2 Jordan block has real part with eigenvalues +-1/2,
  // none of modulus > 1, so both sides are checked against an empty sum.
  const auto hand = quasinilpotent_sum_check(DenseMatrix(from_rows({{0, 1}, {0, 0}})));
  EXPECT_TRUE(hand.holds());
  EXPECT_EQ(hand.real_part.lhs, 0.0);
  EXPECT_NEAR(hand.real_part.rhs, 400 * std::log(2 * std::numbers::e), 1e-9);
  for (int t = 0; t < 300; ++t) {
    Rng rng = trial_rng(37, 0, t);
    Eigen::MatrixXcd q = random_strictly_upper(rng, 2 + t % 12);
    q *= 1 + t % 7;
    EXPECT_TRUE(quasinilpotent_sum_check(DenseMatrix(q)).holds()) << t;
  }
}

TEST(Quasinilpotent, PrefinalAndGeometricEstimates) {
  for (int t = 0; t < 300; ++t) {
    Rng rng = trial_rng(38, 0, t);
    const Eigen::MatrixXcd u = random_unitary(rng, 2 + t % 10);
    const Eigen::MatrixXcd q = u * random_strictly_upper(rng, 2 + t % 10) * u.adjoint();
    EXPECT_TRUE(prefinal_bound_check(DenseMatrix(q)).holds()) << t;
    EXPECT_TRUE(geom_estimate_check(DenseMatrix(q)).holds()) << t;
  }
  EXPECT_THROW(prefinal_bound_check(DenseMatrix(from_rows({{1, 0}, {0, 0}}))), input_error);
}

TEST(CesaroSpectrum, MatchesAveragedEigenvalues) {
  const auto c = cesaro_hermitian_spectrum(from_rows({{3, 0}, {0, -1}}));
  ASSERT_EQ(c.size(), 2u);
  EXPECT_NEAR(c[0], 3, 1e-12);
  EXPECT_NEAR(c[1], 1, 1e-12);
}

TEST(AbsTrace, RandomMatrices) {
  for (int t = 0; t < 200; ++t) {
    Rng rng = trial_rng(39, 0, t);
    EXPECT_TRUE(abs_trace_check(DenseMatrix(random_gaussian_matrix(rng, 1 + t % 10))));
  }
}

TEST(ConstructFromSpectrum, HandCase) {
  const auto t = construct_from_spectrum(ComplexSeq{0.5, 0.5}, NonincreasingSeq({1, 0.25}));
  const auto s = sv_seq(t);
  EXPECT_NEAR(s[0], 1, 1e-12);
  EXPECT_NEAR(s[1], 0.25, 1e-12);
  EXPECT_LE(spectrum_distance(eigen_seq(t), ComplexSeq{0.5, 0.5}), 1e-8);
}

TEST(ConstructFromSpectrum, ZeroEigenvaluesAndRejection) {
  const auto t = construct_from_spectrum(ComplexSeq{0, 0, 0}, NonincreasingSeq({2, 1, 0.5}));
  EXPECT_LE(spectrum_distance(eigen_seq(t), ComplexSeq{0, 0, 0}), 1e-8);
  const auto s = sv_seq(t);
  EXPECT_LE(s[0], 2 + 1e-12);
  EXPECT_THROW(construct_from_spectrum(ComplexSeq{2, 0.1}, NonincreasingSeq({1, 1})), input_error);
  EXPECT_THROW(construct_from_spectrum(ComplexSeq{0.1, 0.5}, NonincreasingSeq({1, 1})), input_error);
}

TEST(ConstructFromSpectrum, RandomLogSubmajorizedPairs) {
  for (int t = 0; t < 300; ++t) {
    Rng rng = trial_rng(40, 0, t);
    const std::size_t n = 1 + t % 9;
    const NonincreasingSeq x = random_nonincreasing(rng, n, 0.05, 2.0);
    // Shrink a random rearrangement of x with random phases: mu(y) <= x pointwise.
    std::uniform_real_distribution<double> unit(0, 1);
    std::vector<double> mods(x.vector());
    for (double& m : mods) m *= 0.2 + 0.8 * unit(rng);
    std::sort(mods.begin(), mods.end(), std::greater<>());
    ComplexSeq y;
    for (double m : mods) y.push_back(std::polar(m, 2 * std::numbers::pi * unit(rng)));
    if (t % 5 == 0) y.back() = 0;
    const auto m = construct_from_spectrum(y, x);
    EXPECT_LE(spectrum_distance(eigen_seq(m), y), 1e-8 * 2);
    const auto s = oracle::singular_values(m.matrix());
    for (std::size_t i = 0; i < n; ++i) EXPECT_LE(s[i], x[i] * (1 + 1e-9) + 1e-13) << t << " " << i;
  }
}
