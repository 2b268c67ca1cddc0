#pragma once

// Seeded generators for randomized trials.  Every trial draws from its own
// engine seeded by (seed, stream, trial), so batches can run in any order and
// still reproduce the same draws.

#include <Eigen/Dense>
#include <algorithm>
#include <cmath>
#include <complex>
#include <cstdint>
#include <functional>
#include <random>
#include <vector>

#include "majorize/seq_core.hpp"

namespace majorize {

using Rng = std::mt19937_64;

inline Rng trial_rng(std::uint64_t seed, std::uint64_t stream, std::uint64_t trial) {
  std::seed_seq seq{static_cast<std::uint32_t>(seed), static_cast<std::uint32_t>(seed >> 32),
                    static_cast<std::uint32_t>(stream), static_cast<std::uint32_t>(trial),
                    static_cast<std::uint32_t>(trial >> 32)};
  return Rng(seq);
}

/// Complex entries with independent standard normal real and imaginary parts.
inline Eigen::MatrixXcd random_gaussian_matrix(Rng& rng, std::size_t dim) {
  std::normal_distribution<double> normal(0.0, 1.0);
  const auto n = static_cast<Eigen::Index>(dim);
  Eigen::MatrixXcd m(n, n);
  for (Eigen::Index i = 0; i < n; ++i)
    for (Eigen::Index j = 0; j < n; ++j) {
      const double re = normal(rng);
      const double im = normal(rng);
      m(i, j) = {re, im};
    }
  return m;
}

/// Strictly upper triangular with the same entry law; nilpotent by construction.
inline Eigen::MatrixXcd random_strictly_upper(Rng& rng, std::size_t dim) {
  Eigen::MatrixXcd m = random_gaussian_matrix(rng, dim);
  return m.triangularView<Eigen::StrictlyUpper>();
}

/// Haar-distributed unitary: QR of a Gaussian matrix with the phases of R's
/// diagonal folded back into Q.
inline Eigen::MatrixXcd random_unitary(Rng& rng, std::size_t dim) {
  const Eigen::MatrixXcd g = random_gaussian_matrix(rng, dim);
  Eigen::HouseholderQR<Eigen::MatrixXcd> qr(g);
  Eigen::MatrixXcd q = qr.householderQ();
  const Eigen::MatrixXcd r = qr.matrixQR().triangularView<Eigen::Upper>();
  for (Eigen::Index j = 0; j < q.cols(); ++j) {
    const std::complex<double> d = r(j, j);
    const double modulus = std::abs(d);
    if (modulus > 0) q.col(j) *= d / modulus;
  }
  return q;
}

/// Nonincreasing sequence with entries log-uniform in [lo, hi].
inline NonincreasingSeq random_nonincreasing(Rng& rng, std::size_t length, double lo = 1e-6, double hi = 1.0) {
  std::uniform_real_distribution<double> exponent(std::log(lo), std::log(hi));
  std::vector<double> v(length);
  for (double& e : v) e = std::exp(exponent(rng));
  std::sort(v.begin(), v.end(), std::greater<double>{});
  return NonincreasingSeq(std::move(v));
}

}  // namespace majorize
