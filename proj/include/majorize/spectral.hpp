#pragma once

// Matrix-level statements: Ringrose splitting T = N + Q, the Weyl and Lidskii
// checks, the Cesaro estimates for real and imaginary parts of quasi-nilpotent
// matrices, and a Horn-type construction of a matrix with prescribed
// eigenvalues and dominated singular values.

#include <Eigen/Dense>
#include <algorithm>
#include <cmath>
#include <complex>
#include <cstddef>
#include <numbers>
#include <optional>
#include <string>
#include <vector>

#include "majorize/config.hpp"
#include "majorize/linalg.hpp"
#include "majorize/orders.hpp"
#include "majorize/seq_core.hpp"

namespace majorize {

// ---------------------------------------------------------------------------
// Ringrose splitting

struct RingroseSplit {
  Eigen::MatrixXcd n_part;  // normal, same spectrum as the input
  Eigen::MatrixXcd q_part;  // quasi-nilpotent
  Eigen::MatrixXcd basis;   // unitary; basis^* T basis is upper triangular
};

/// A posteriori measurements of a split.  The spectral radius of q_part is
/// read off the diagonal of basis^* q_part basis: a floating-point nilpotent
/// matrix has eigenvalues of size eps^{1/dim}, so a generic eigensolver
/// cannot certify it, while the triangular form can.
struct RingroseDiagnostics {
  double norm = 0;
  double reconstruction_error = 0;
  double q_spectral_radius = 0;
  double q_lower_residual = 0;
  double eigen_mismatch = 0;
  double normality_defect = 0;
};

inline RingroseSplit ringrose_decompose(const DenseMatrix& t) {
  Eigen::ComplexSchur<Eigen::MatrixXcd> schur(t.matrix());
  if (schur.info() != Eigen::Success) throw computation_error("Schur triangularization did not converge");
  const Eigen::MatrixXcd& u = schur.matrixU();
  const Eigen::MatrixXcd& r = schur.matrixT();
  const Eigen::MatrixXcd diag = r.diagonal().asDiagonal();
  const Eigen::MatrixXcd strict = r.triangularView<Eigen::StrictlyUpper>();
  return {u * diag * u.adjoint(), u * strict * u.adjoint(), u};
}

inline RingroseDiagnostics ringrose_diagnostics(const DenseMatrix& t, const RingroseSplit& split) {
  RingroseDiagnostics d;
  d.norm = operator_norm(t);
  d.reconstruction_error = (split.n_part + split.q_part - t.matrix()).norm();
  const Eigen::MatrixXcd q_tri = split.basis.adjoint() * split.q_part * split.basis;
  d.q_spectral_radius = q_tri.diagonal().cwiseAbs().maxCoeff();
  const Eigen::MatrixXcd lower = q_tri.triangularView<Eigen::StrictlyLower>();
  d.q_lower_residual = lower.norm();
  d.eigen_mismatch = spectrum_distance(eigen_seq(DenseMatrix(split.n_part)), eigen_seq(t));
  d.normality_defect =
      (split.n_part * split.n_part.adjoint() - split.n_part.adjoint() * split.n_part).norm();
  return d;
}

// ---------------------------------------------------------------------------
// Weyl and Lidskii

/// |lambda(T)| <<_log mu(T).
inline OrderVerdict weyl_check(const DenseMatrix& t, const Tolerances& tol = {}) {
  return check_log_submajor(mu(eigen_seq(t)), sv_seq(t), tol);
}

struct TraceIdentity {
  Complex trace;
  Complex eigen_sum;
  double error = 0;
  double allowed = 0;
  [[nodiscard]] bool holds() const noexcept { return error <= allowed; }
};

/// Tr(T) = sum of eigenvalues, within tol.eig * dim.
inline TraceIdentity lidskii_check(const DenseMatrix& t, const Tolerances& tol = {}) {
  TraceIdentity r;
  r.trace = t.matrix().trace();
  for (const auto& v : eigen_seq(t)) r.eigen_sum += v;
  r.error = std::abs(r.trace - r.eigen_sum);
  r.allowed = tol.eig * static_cast<double>(t.dim());
  return r;
}

// ---------------------------------------------------------------------------
// Quasi-nilpotent estimates

/// ||(Q/||Q||_F)^dim||_F; zero exactly when Q is nilpotent in exact arithmetic.
inline double nilpotency_residual(const Eigen::MatrixXcd& q) {
  const double scale = q.norm();
  if (scale == 0) return 0;
  const Eigen::MatrixXcd normalized = q / scale;
  Eigen::MatrixXcd power = normalized;
  for (Eigen::Index i = 1; i < q.rows(); ++i) power = power * normalized;
  return power.norm();
}

/// Strictly triangular inputs are accepted as-is; anything else must pass the
/// relative nilpotency residual test at tol.eig.
inline bool is_quasinilpotent(const DenseMatrix& q, const Tolerances& tol = {}) {
  const Eigen::MatrixXcd& m = q.matrix();
  const Eigen::MatrixXcd upper = m.triangularView<Eigen::StrictlyUpper>();
  const Eigen::MatrixXcd lower = m.triangularView<Eigen::StrictlyLower>();
  if (upper == m || lower == m) return true;
  return nilpotency_residual(m) <= tol.eig;
}

inline void require_quasinilpotent(const DenseMatrix& q, const Tolerances& tol) {
  require(is_quasinilpotent(q, tol), "input is not quasi-nilpotent within tolerance");
}

struct SpectralSumBound {
  double lhs = 0;  // |sum of eigenvalues of the Hermitian part with |lambda| > 1|
  double rhs = 0;  // constant * sum_{2e s > 1} ln(2e s), s over singular values
  [[nodiscard]] bool holds() const noexcept { return lhs <= rhs; }
};

struct QuasinilpotentSumCheck {
  SpectralSumBound real_part;
  SpectralSumBound imag_part;
  [[nodiscard]] bool holds() const noexcept { return real_part.holds() && imag_part.holds(); }
};

namespace detail {

inline double large_eigen_sum(const RealSeq& spectrum) {
  double sum = 0;
  for (double v : spectrum)
    if (std::abs(v) > 1) sum += v;
  return std::abs(sum);
}

}  // namespace detail

/// |sum_{|l|>1, l an eigenvalue of Re Q} l| <= 400 sum_{|l|>1, l an eigenvalue of 2e|Q|} ln(l),
/// and the same for Im Q.  Spectra counted with multiplicity.
inline QuasinilpotentSumCheck quasinilpotent_sum_check(const DenseMatrix& q, const Tolerances& tol = {}) {
  require_quasinilpotent(q, tol);
  double rhs = 0;
  for (double s : sv_seq(q)) {
    const double v = 2 * std::numbers::e * s;
    if (v > 1) rhs += std::log(v);
  }
  rhs *= 400;
  QuasinilpotentSumCheck r;
  r.real_part = {detail::large_eigen_sum(hermitian_eigen_seq(real_part(q.matrix()))), rhs};
  r.imag_part = {detail::large_eigen_sum(hermitian_eigen_seq(imag_part(q.matrix()))), rhs};
  return r;
}

struct EntrywiseBound {
  RealSeq lhs;
  RealSeq rhs;
  std::optional<std::size_t> first_violation;
  [[nodiscard]] bool holds() const noexcept { return !first_violation; }
};

struct PrefinalCheck {
  EntrywiseBound real_part;
  EntrywiseBound imag_part;
  [[nodiscard]] bool holds() const noexcept { return real_part.holds() && imag_part.holds(); }
};

/// Cesaro means of the eigenvalue sequence of a Hermitian matrix.
inline RealSeq cesaro_hermitian_spectrum(const Eigen::MatrixXcd& h) { return cesaro(hermitian_eigen_seq(h)); }

/// |C lambda(Re Q)| <= 200 S(mu((2eQ)^{(+)2})) entrywise, and the same for Im Q.
inline PrefinalCheck prefinal_bound_check(const DenseMatrix& q, const Tolerances& tol = {}) {
  require_quasinilpotent(q, tol);
  const NonincreasingSeq mu_q = sv_seq(q);
  const NonincreasingSeq bound = scale(s_transform(dilate(scale(mu_q, 2 * std::numbers::e), 2), tol.prod_floor), 200.0);
  const double slack = tol.sv * (mu_q.empty() ? 0.0 : mu_q[0]);

  auto compare = [&](const Eigen::MatrixXcd& h) {
    EntrywiseBound e;
    for (double v : cesaro_hermitian_spectrum(h)) e.lhs.push_back(std::abs(v));
    e.rhs.assign(bound.begin(), bound.begin() + static_cast<std::ptrdiff_t>(e.lhs.size()));
    for (std::size_t k = 0; k < e.lhs.size(); ++k) {
      if (e.lhs[k] > e.rhs[k] + slack) {
        e.first_violation = k;
        break;
      }
    }
    return e;
  };
  return {compare(real_part(q.matrix())), compare(imag_part(q.matrix()))};
}

struct GeomEstimateCheck {
  OrderVerdict real_part;
  OrderVerdict imag_part;
  [[nodiscard]] bool holds() const noexcept { return real_part.holds() && imag_part.holds(); }
};

/// C lambda(Re Q) <<_log (1600 e Q)^{(+)4}, and the same for Im Q.
inline GeomEstimateCheck geom_estimate_check(const DenseMatrix& q, const Tolerances& tol = {}) {
  require_quasinilpotent(q, tol);
  const NonincreasingSeq rhs = dilate(scale(sv_seq(q), 1600 * std::numbers::e), 4);
  return {check_log_submajor(mu(cesaro_hermitian_spectrum(real_part(q.matrix()))), rhs, tol),
          check_log_submajor(mu(cesaro_hermitian_spectrum(imag_part(q.matrix()))), rhs, tol)};
}

// ---------------------------------------------------------------------------
// Finite-trace consequences

/// |Tr(Re T)| <= Tr|T|.
inline bool abs_trace_check(const DenseMatrix& t, double slack = 1e-12) {
  const double lhs = std::abs(real_part(t.matrix()).trace().real());
  double rhs = 0;
  for (double s : sv_seq(t)) rhs += s;
  return lhs <= rhs + slack * (1 + rhs);
}

// ---------------------------------------------------------------------------
// Horn-type construction

namespace detail {

// t = u diag(s) v^*, t upper triangular with diagonal equal to `lambdas`.
struct HornFactors {
  Eigen::MatrixXcd t;
  Eigen::MatrixXcd u;
  Eigen::MatrixXcd v;
};

// Requires all moduli and all s positive and nonincreasing, prod |lambda| =
// prod s and the prefix product inequalities.  Peels off lambda_0 with a 2x2
// block whose singular values are the neighbours s_k >= |lambda_0| >= s_{k+1}.
inline HornFactors horn_upper(const ComplexSeq& lambdas, const std::vector<double>& s) {
  const std::size_t n = lambdas.size();
  const auto ni = static_cast<Eigen::Index>(n);
  if (n == 1) {
    const double a = std::abs(lambdas[0]);
    HornFactors f{Eigen::MatrixXcd::Constant(1, 1, lambdas[0]), Eigen::MatrixXcd::Identity(1, 1),
                  Eigen::MatrixXcd::Identity(1, 1)};
    if (a > 0) f.u(0, 0) = lambdas[0] / a;
    return f;
  }

  const Complex lead = lambdas[0];
  const double a = std::abs(lead);
  std::size_t k = 0;  // 0-based: s[k] >= a >= s[k+1]
  while (k + 2 < n && s[k + 1] >= a) ++k;
  const double upper = std::max(s[k], a);
  const double lower = std::min(s[k + 1], a);
  const double merged = std::clamp(upper * lower / a, lower, upper);
  const double coupling =
      std::sqrt(std::max(0.0, (upper - a) * (upper + a) * (a - lower) * (a + lower)) / (a * a));

  ComplexSeq rest(lambdas.begin() + 1, lambdas.end());
  std::vector<double> reduced;
  reduced.reserve(n - 1);
  for (std::size_t i = 0; i < k; ++i) reduced.push_back(s[i]);
  reduced.push_back(merged);
  for (std::size_t i = k + 2; i < n; ++i) reduced.push_back(s[i]);
  const auto p = static_cast<Eigen::Index>(k);  // position of `merged` in `reduced`
  const HornFactors child = horn_upper(rest, reduced);

  HornFactors f;
  f.t = Eigen::MatrixXcd::Zero(ni, ni);
  f.t(0, 0) = lead;
  f.t.block(0, 1, 1, ni - 1) = coupling * child.v.col(p).adjoint();
  f.t.block(1, 1, ni - 1, ni - 1) = child.t;

  Eigen::Matrix2cd g;
  g << lead, coupling, 0.0, merged;
  Eigen::JacobiSVD<Eigen::Matrix2cd> svd(g, Eigen::ComputeFullU | Eigen::ComputeFullV);
  const Eigen::Matrix2cd& x = svd.matrixU();
  const Eigen::Matrix2cd& y = svd.matrixV();
  const Eigen::Index idx[2] = {0, p + 1};
  Eigen::MatrixXcd embed_u = Eigen::MatrixXcd::Identity(ni, ni);
  Eigen::MatrixXcd embed_v = Eigen::MatrixXcd::Identity(ni, ni);
  for (int r = 0; r < 2; ++r)
    for (int c = 0; c < 2; ++c) {
      embed_u(idx[r], idx[c]) = x(r, c);
      embed_v(idx[r], idx[c]) = y(r, c);
    }
  Eigen::MatrixXcd lift_u = Eigen::MatrixXcd::Identity(ni, ni);
  Eigen::MatrixXcd lift_v = Eigen::MatrixXcd::Identity(ni, ni);
  lift_u.block(1, 1, ni - 1, ni - 1) = child.u;
  lift_v.block(1, 1, ni - 1, ni - 1) = child.v;
  const Eigen::MatrixXcd full_u = lift_u * embed_u;
  const Eigen::MatrixXcd full_v = lift_v * embed_v;

  // Coordinates carry singular values in the order
  // (s_k, s_0..s_{k-1}, s_{k+1}, s_{k+2}..); permute columns back to s order.
  std::vector<Eigen::Index> order;
  for (Eigen::Index i = 1; i <= p; ++i) order.push_back(i);
  order.push_back(0);
  for (Eigen::Index i = p + 1; i < ni; ++i) order.push_back(i);
  f.u.resize(ni, ni);
  f.v.resize(ni, ni);
  for (Eigen::Index c = 0; c < ni; ++c) {
    f.u.col(c) = full_u.col(order[static_cast<std::size_t>(c)]);
    f.v.col(c) = full_v.col(order[static_cast<std::size_t>(c)]);
  }
  return f;
}

}  // namespace detail

/// Matrix T with eigenvalue sequence y and mu(T) <= x entrywise, given
/// |y| nonincreasing and |y| <<_log x.
///
/// Nonzero eigenvalues go into an upper triangular Horn block whose singular
/// values are x with its last used entry lowered until the products match;
/// zero eigenvalues go into a weighted shift carrying the remaining budget.
/// The result is re-verified before it is returned.
inline DenseMatrix construct_from_spectrum(const ComplexSeq& y, const NonincreasingSeq& x,
                                           const Tolerances& tol = {}) {
  const std::size_t n = y.size();
  require(n >= 1 && n == x.size(), "y and x must have the same positive length");
  require(n <= kDeskLimit, "dimension exceeds desk limit");
  for (std::size_t i = 1; i < n; ++i)
    require(std::abs(y[i]) <= std::abs(y[i - 1]) * (1 + 1e-12), "|y| must be nonincreasing");
  require(check_log_submajor(mu(y), x, tol).holds(), "precondition |y| <<_log x does not hold");

  std::size_t rank = 0;
  while (rank < n && std::abs(y[rank]) > tol.prod_floor) ++rank;

  const auto ni = static_cast<Eigen::Index>(n);
  Eigen::MatrixXcd t = Eigen::MatrixXcd::Zero(ni, ni);
  if (rank > 0) {
    std::vector<double> budget(x.begin(), x.begin() + static_cast<std::ptrdiff_t>(rank));
    double log_ratio = 0;
    for (std::size_t i = 0; i < rank; ++i) log_ratio += std::log(budget[i]) - std::log(std::abs(y[i]));
    budget[rank - 1] *= std::exp(-log_ratio);
    const ComplexSeq head(y.begin(), y.begin() + static_cast<std::ptrdiff_t>(rank));
    const auto r = static_cast<Eigen::Index>(rank);
    t.block(0, 0, r, r) = detail::horn_upper(head, budget).t;
  }
  for (std::size_t i = rank; i + 1 < n; ++i)
    t(static_cast<Eigen::Index>(i), static_cast<Eigen::Index>(i + 1)) = x[i];

  DenseMatrix out(std::move(t));
  const double scale_x = std::max(1.0, x[0]);
  const double mismatch = spectrum_distance(eigen_seq(out), y);
  if (mismatch > tol.eig * scale_x)
    throw computation_error("constructed eigenvalues deviate from y by " + std::to_string(mismatch));
  const NonincreasingSeq s = sv_seq(out);
  const double floor = 64 * std::numeric_limits<double>::epsilon() * x[0];
  for (std::size_t i = 0; i < n; ++i)
    if (s[i] > x[i] * (1 + tol.sv) + floor)
      throw computation_error("constructed singular value " + std::to_string(i) + " exceeds its bound");
  return out;
}

}  // namespace majorize
