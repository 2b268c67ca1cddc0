#pragma once

// Desk-scale dense complex matrices: eigenvalue and singular value sequences
// in the canonical order used across the project.

#include <Eigen/Dense>
#include <algorithm>
#include <cmath>
#include <complex>
#include <cstddef>
#include <string>
#include <tuple>
#include <vector>

#include "majorize/config.hpp"
#include "majorize/seq_core.hpp"

namespace majorize {

using Complex = std::complex<double>;
using ComplexSeq = std::vector<Complex>;

/// Square complex matrix with finite entries and 1 <= dim <= kDeskLimit.
class DenseMatrix {
 public:
  explicit DenseMatrix(Eigen::MatrixXcd m) : m_(std::move(m)) {
    require(m_.rows() == m_.cols(), "matrix must be square");
    require(m_.rows() >= 1, "matrix must have positive dimension");
    require(static_cast<std::size_t>(m_.rows()) <= kDeskLimit,
            "matrix dimension exceeds desk limit " + std::to_string(kDeskLimit));
    require(m_.allFinite(), "matrix entries must be finite");
  }

  [[nodiscard]] std::size_t dim() const noexcept { return static_cast<std::size_t>(m_.rows()); }
  [[nodiscard]] const Eigen::MatrixXcd& matrix() const noexcept { return m_; }

 private:
  Eigen::MatrixXcd m_;
};

/// Sorts by nonincreasing modulus; equal moduli by descending real part, then
/// descending imaginary part.  "Equal" means equal after snapping to a grid of
/// 1e-10 times the largest modulus, so rounding noise cannot flip the order of
/// a conjugate pair.
inline void canonical_order(ComplexSeq& values) {
  double scale = 0;
  for (const auto& v : values) scale = std::max(scale, std::abs(v));
  const double grid = scale > 0 ? 1e-10 * scale : 1.0;
  auto snap = [grid](double v) { return std::round(v / grid); };
  std::sort(values.begin(), values.end(), [&](const Complex& x, const Complex& y) {
    return std::make_tuple(-snap(std::abs(x)), -snap(x.real()), -snap(x.imag()), -std::abs(x)) <
           std::make_tuple(-snap(std::abs(y)), -snap(y.real()), -snap(y.imag()), -std::abs(y));
  });
}

/// Eigenvalues with algebraic multiplicity, in canonical order.
inline ComplexSeq eigen_seq(const DenseMatrix& t) {
  Eigen::ComplexEigenSolver<Eigen::MatrixXcd> solver(t.matrix(), /*computeEigenvectors=*/false);
  if (solver.info() != Eigen::Success) throw computation_error("eigenvalue solver did not converge");
  const Eigen::VectorXcd& ev = solver.eigenvalues();
  ComplexSeq out(ev.data(), ev.data() + ev.size());
  canonical_order(out);
  return out;
}

/// Eigenvalues of a Hermitian matrix, in canonical order (so by |.| first).
inline RealSeq hermitian_eigen_seq(const Eigen::MatrixXcd& h) {
  Eigen::SelfAdjointEigenSolver<Eigen::MatrixXcd> solver(h, Eigen::EigenvaluesOnly);
  if (solver.info() != Eigen::Success) throw computation_error("Hermitian eigenvalue solver did not converge");
  ComplexSeq values;
  for (Eigen::Index i = 0; i < solver.eigenvalues().size(); ++i) values.emplace_back(solver.eigenvalues()(i), 0.0);
  canonical_order(values);
  RealSeq out;
  for (const auto& v : values) out.push_back(v.real());
  return out;
}

/// Singular values, nonincreasing.
inline NonincreasingSeq sv_seq(const DenseMatrix& t) {
  Eigen::JacobiSVD<Eigen::MatrixXcd> svd(t.matrix());
  const Eigen::VectorXd& s = svd.singularValues();
  return NonincreasingSeq(std::vector<double>(s.data(), s.data() + s.size()));
}

inline double operator_norm(const DenseMatrix& t) {
  const auto s = sv_seq(t);
  return s.empty() ? 0.0 : s[0];
}

inline Eigen::MatrixXcd real_part(const Eigen::MatrixXcd& t) { return (t + t.adjoint()) / 2.0; }
inline Eigen::MatrixXcd imag_part(const Eigen::MatrixXcd& t) { return (t - t.adjoint()) / Complex(0.0, 2.0); }

/// Largest distance in an optimal greedy pairing of two spectra.  Pairs are
/// formed closest-first, which is exact for well separated spectra.
inline double spectrum_distance(const ComplexSeq& a, const ComplexSeq& b) {
  require(a.size() == b.size(), "spectra have different sizes");
  std::vector<std::tuple<double, std::size_t, std::size_t>> pairs;
  for (std::size_t i = 0; i < a.size(); ++i)
    for (std::size_t j = 0; j < b.size(); ++j) pairs.emplace_back(std::abs(a[i] - b[j]), i, j);
  std::sort(pairs.begin(), pairs.end());
  std::vector<bool> used_a(a.size()), used_b(b.size());
  double worst = 0;
  std::size_t matched = 0;
  for (const auto& [d, i, j] : pairs) {
    if (used_a[i] || used_b[j]) continue;
    used_a[i] = used_b[j] = true;
    worst = std::max(worst, d);
    if (++matched == a.size()) break;
  }
  return worst;
}

}  // namespace majorize
