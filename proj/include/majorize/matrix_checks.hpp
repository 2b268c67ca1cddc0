#pragma once

// Randomized matrix realizations of the sequence inequalities: singular
// values of sums, the Hardy-Littlewood and uniform chains for positive
// summands, and the sum lemma for log-submajorization.

#include <Eigen/Dense>
#include <algorithm>
#include <cstddef>
#include <limits>
#include <random>
#include <string>
#include <vector>

#include "majorize/config.hpp"
#include "majorize/linalg.hpp"
#include "majorize/orders.hpp"
#include "majorize/random.hpp"
#include "majorize/seq_core.hpp"

namespace majorize {

namespace detail {

inline Eigen::MatrixXcd diagonal_matrix(const NonincreasingSeq& s, std::size_t dim) {
  Eigen::MatrixXcd d = Eigen::MatrixXcd::Zero(static_cast<Eigen::Index>(dim), static_cast<Eigen::Index>(dim));
  for (std::size_t i = 0; i < s.size(); ++i) d(static_cast<Eigen::Index>(i), static_cast<Eigen::Index>(i)) = s[i];
  return d;
}

}  // namespace detail

/// U diag(s) V with Haar unitaries U, V: a generic matrix with singular values s.
inline Eigen::MatrixXcd random_with_singular_values(Rng& rng, const NonincreasingSeq& s, std::size_t dim) {
  require(s.size() <= dim, "more singular values than the dimension");
  return random_unitary(rng, dim) * detail::diagonal_matrix(s, dim) * random_unitary(rng, dim);
}

/// U diag(s) U^*: a positive matrix with eigenvalues s.
inline Eigen::MatrixXcd random_positive_with_spectrum(Rng& rng, const NonincreasingSeq& s, std::size_t dim) {
  require(s.size() <= dim, "more eigenvalues than the dimension");
  const Eigen::MatrixXcd u = random_unitary(rng, dim);
  return u * detail::diagonal_matrix(s, dim) * u.adjoint();
}

/// Entrywise mu(A + B) <= sigma_2(mu(A) + mu(B)) + tol.sv (||A|| + ||B||).
inline bool mu_sum_holds(const DenseMatrix& a, const DenseMatrix& b, const Tolerances& tol = {}) {
  require(a.dim() == b.dim(), "summands must have equal dimension");
  const NonincreasingSeq sa = sv_seq(a);
  const NonincreasingSeq sb = sv_seq(b);
  const NonincreasingSeq lhs = sv_seq(DenseMatrix(a.matrix() + b.matrix()));
  const NonincreasingSeq rhs = dilate(add(sa, sb), 2);
  const double slack = tol.sv * (sa[0] + sb[0]);
  for (std::size_t k = 0; k < lhs.size(); ++k)
    if (lhs[k] > rhs[k] + slack) return false;
  return true;
}

/// Gaussian pairs (A, B) of the given dimension, checked with mu_sum_holds.
inline TrialReport verify_mu_sum(std::size_t trials, std::size_t dim, std::uint64_t seed = 0,
                                 const Tolerances& tol = {}) {
  require(dim >= 1 && dim <= kDeskLimit, "dimension outside [1, desk limit]");
  TrialReport report;
  for (std::size_t t = 0; t < trials; ++t) {
    Rng rng = trial_rng(seed, 101, t);
    const DenseMatrix a(random_gaussian_matrix(rng, dim));
    const DenseMatrix b(random_gaussian_matrix(rng, dim));
    report.record(mu_sum_holds(a, b, tol), "trial " + std::to_string(t));
  }
  return report;
}

enum class Realization { Diagonal, RandomUnitary };

struct MajSumChain {
  NonincreasingSeq sum;     // mu(A + B)
  NonincreasingSeq middle;  // mu(A) + mu(B)
  NonincreasingSeq right;   // 2 sigma_{1/2} mu(A + B)
  OrderVerdict hl_left, hl_right, uniform_left, uniform_right;

  [[nodiscard]] bool holds() const {
    return hl_left.holds() && hl_right.holds() && uniform_left.holds() && uniform_right.holds();
  }
};

/// A + B << mu(A) + mu(B) << 2 sigma_{1/2} mu(A + B) and the same chain for
/// uniform submajorization, with A and B positive with spectra a and b.
/// Diagonal realization pairs a with a random permutation of b.
inline MajSumChain verify_maj_sum_chain(const NonincreasingSeq& a, const NonincreasingSeq& b, Realization mode,
                                        Rng& rng, std::size_t lambda_max = 8, const Tolerances& tol = {}) {
  const std::size_t dim = std::max<std::size_t>(1, std::max(a.size(), b.size()));
  require(dim <= kDeskLimit, "dimension exceeds desk limit");
  Eigen::MatrixXcd ma, mb;
  if (mode == Realization::Diagonal) {
    std::vector<double> bv = zero_pad(b, dim).vector();
    std::shuffle(bv.begin(), bv.end(), rng);
    ma = detail::diagonal_matrix(a, dim);
    mb = Eigen::MatrixXcd::Zero(static_cast<Eigen::Index>(dim), static_cast<Eigen::Index>(dim));
    for (std::size_t i = 0; i < dim; ++i) mb(static_cast<Eigen::Index>(i), static_cast<Eigen::Index>(i)) = bv[i];
  } else {
    ma = random_positive_with_spectrum(rng, a, dim);
    mb = random_positive_with_spectrum(rng, b, dim);
  }
  MajSumChain c;
  c.sum = sv_seq(DenseMatrix(ma + mb));
  c.middle = add(a, b);
  c.right = scale(half_dilate(c.sum), 2.0);
  // The sum is computed from matrices, so compare with a relative slack.
  Tolerances scaled = tol;
  scaled.sum = std::max(tol.sum, tol.sv * (c.sum.empty() ? 0.0 : c.sum[0]));
  c.hl_left = check_hl_submajor(c.sum, c.middle, scaled);
  c.hl_right = check_hl_submajor(c.middle, c.right, scaled);
  c.uniform_left = check_uniform_submajor(c.sum, c.middle, lambda_max, scaled);
  c.uniform_right = check_uniform_submajor(c.middle, c.right, lambda_max, scaled);
  return c;
}

struct SumLessdot {
  OrderVerdict direct;  // b1 (+) b2 <<_log a1 (+) a2
  OrderVerdict sum;     // mu(B1 + B2) <<_log 2 sigma_2 (a1 (+) a2)
  [[nodiscard]] bool holds() const { return direct.holds() && sum.holds(); }
};

/// Both parts of the sum lemma; part (b) realizes B1, B2 as generic matrices
/// with singular values b1, b2.
inline SumLessdot verify_sum_lessdot(const NonincreasingSeq& b1, const NonincreasingSeq& a1,
                                     const NonincreasingSeq& b2, const NonincreasingSeq& a2, Rng& rng,
                                     const Tolerances& tol = {}) {
  SumLessdot r;
  r.direct = verify_sum_lessdot_direct(b1, a1, b2, a2, tol);
  const std::size_t dim = std::max<std::size_t>(1, std::max(b1.size(), b2.size()));
  require(dim <= kDeskLimit, "dimension exceeds desk limit");
  const Eigen::MatrixXcd m = random_with_singular_values(rng, b1, dim) + random_with_singular_values(rng, b2, dim);
  const NonincreasingSeq lhs = sv_seq(DenseMatrix(m));
  const NonincreasingSeq rhs = scale(dilate(direct_sum(a1, a2), 2), 2.0);
  // Each computed singular value v carries absolute error of order eps ||M||,
  // i.e. relative error eps ||M|| / v; the log tolerance absorbs their sum.
  Tolerances loose = tol;
  const double top = lhs.empty() ? 0.0 : lhs[0];
  double drift = 0;
  for (double v : lhs)
    if (v > tol.prod_floor) drift += 1024 * std::numeric_limits<double>::epsilon() * top / v;
  loose.log = std::max(tol.log, drift);
  r.sum = check_log_submajor(lhs, rhs, loose);
  return r;
}

/// Positive A, B with mu(B) <= mu(A) entrywise have Tr B <= Tr A.
inline bool trace_monotone_holds(const Eigen::MatrixXcd& a, const Eigen::MatrixXcd& b, double slack = 1e-10) {
  return b.trace().real() <= a.trace().real() + slack * (1 + std::abs(a.trace().real()));
}

}  // namespace majorize
