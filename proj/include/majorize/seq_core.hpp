#pragma once

// Sequence domain: decreasing rearrangement, dilations, direct sums, the
// Cesaro mean and the two nonlinear transforms S (log-deficiency correction)
// and T (running geometric mean).  All sequences are finite truncations; no
// operation extrapolates past the data it is given.

#include <algorithm>
#include <cmath>
#include <complex>
#include <concepts>
#include <cstddef>
#include <functional>
#include <limits>
#include <span>
#include <string>
#include <vector>

#include "majorize/config.hpp"

namespace majorize {

template <std::floating_point Real>
using BasicRealSeq = std::vector<Real>;
using RealSeq = BasicRealSeq<double>;

/// A finite, nonnegative, nonincreasing sequence (a decreasing rearrangement).
///
/// Construction validates the invariant.  Increases within `kSnapSlack`
/// relative are attributed to rounding and snapped flat; anything larger is
/// rejected.
template <std::floating_point Real>
class BasicNonincreasingSeq {
 public:
  static constexpr Real kSnapSlack = Real(64) * std::numeric_limits<Real>::epsilon();

  BasicNonincreasingSeq() = default;

  explicit BasicNonincreasingSeq(std::vector<Real> values) : values_(std::move(values)) {
    for (std::size_t k = 0; k < values_.size(); ++k) {
      Real& v = values_[k];
      if (!std::isfinite(v)) throw input_error("sequence entry " + std::to_string(k) + " is not finite");
      if (v < Real(0)) {
        if (v > -kSnapSlack) {
          v = Real(0);
        } else {
          throw input_error("sequence entry " + std::to_string(k) + " is negative");
        }
      }
      if (k > 0 && v > values_[k - 1]) {
        if (v - values_[k - 1] <= kSnapSlack * values_[k - 1]) {
          v = values_[k - 1];
        } else {
          throw input_error("sequence is not nonincreasing at index " + std::to_string(k));
        }
      }
    }
  }

  [[nodiscard]] std::size_t size() const noexcept { return values_.size(); }
  [[nodiscard]] bool empty() const noexcept { return values_.empty(); }
  [[nodiscard]] Real operator[](std::size_t k) const { return values_[k]; }
  [[nodiscard]] std::span<const Real> values() const noexcept { return values_; }
  [[nodiscard]] const std::vector<Real>& vector() const noexcept { return values_; }
  [[nodiscard]] auto begin() const noexcept { return values_.begin(); }
  [[nodiscard]] auto end() const noexcept { return values_.end(); }

  friend bool operator==(const BasicNonincreasingSeq&, const BasicNonincreasingSeq&) = default;

 private:
  std::vector<Real> values_;
};

using NonincreasingSeq = BasicNonincreasingSeq<double>;

template <std::floating_point Real>
[[nodiscard]] bool is_nonincreasing(std::span<const Real> x) {
  return std::adjacent_find(x.begin(), x.end(), std::less<Real>{}) == x.end();
}

/// Decreasing rearrangement of the moduli.
template <std::floating_point Real>
[[nodiscard]] BasicNonincreasingSeq<Real> mu(std::span<const Real> x) {
  std::vector<Real> out(x.size());
  std::transform(x.begin(), x.end(), out.begin(), [](Real v) { return std::abs(v); });
  std::sort(out.begin(), out.end(), std::greater<Real>{});
  return BasicNonincreasingSeq<Real>(std::move(out));
}

template <std::floating_point Real>
[[nodiscard]] BasicNonincreasingSeq<Real> mu(std::span<const std::complex<Real>> x) {
  std::vector<Real> out(x.size());
  std::transform(x.begin(), x.end(), out.begin(), [](const std::complex<Real>& v) { return std::abs(v); });
  std::sort(out.begin(), out.end(), std::greater<Real>{});
  return BasicNonincreasingSeq<Real>(std::move(out));
}

inline NonincreasingSeq mu(const std::vector<double>& x) { return mu(std::span<const double>(x)); }
inline NonincreasingSeq mu(const std::vector<std::complex<double>>& x) {
  return mu(std::span<const std::complex<double>>(x));
}

/// Running arithmetic mean: (Cx)(k) = (x(0) + ... + x(k)) / (k + 1).
template <typename Value>
[[nodiscard]] std::vector<Value> cesaro(std::span<const Value> x) {
  std::vector<Value> out(x.size());
  Value running{};
  for (std::size_t k = 0; k < x.size(); ++k) {
    running += x[k];
    out[k] = running / static_cast<decltype(std::abs(running))>(k + 1);
  }
  return out;
}

inline RealSeq cesaro(const RealSeq& x) { return cesaro(std::span<const double>(x)); }

/// sigma_n: every entry repeated n times.
template <typename Value>
[[nodiscard]] std::vector<Value> dilate(std::span<const Value> x, std::size_t n) {
  require(n >= 1, "dilation factor must be at least 1");
  std::vector<Value> out;
  out.reserve(x.size() * n);
  for (const Value& v : x) out.insert(out.end(), n, v);
  return out;
}

inline RealSeq dilate(const RealSeq& x, std::size_t n) { return dilate(std::span<const double>(x), n); }

template <std::floating_point Real>
[[nodiscard]] BasicNonincreasingSeq<Real> dilate(const BasicNonincreasingSeq<Real>& x, std::size_t n) {
  return BasicNonincreasingSeq<Real>(dilate(x.values(), n));
}

/// sigma_{1/2}: averages of consecutive pairs; odd input gets one trailing zero.
template <std::floating_point Real>
[[nodiscard]] std::vector<Real> half_dilate(std::span<const Real> x) {
  std::vector<Real> out((x.size() + 1) / 2);
  for (std::size_t k = 0; k < out.size(); ++k) {
    const Real second = 2 * k + 1 < x.size() ? x[2 * k + 1] : Real(0);
    out[k] = (x[2 * k] + second) / Real(2);
  }
  return out;
}

inline RealSeq half_dilate(const RealSeq& x) { return half_dilate(std::span<const double>(x)); }

template <std::floating_point Real>
[[nodiscard]] BasicNonincreasingSeq<Real> half_dilate(const BasicNonincreasingSeq<Real>& x) {
  return BasicNonincreasingSeq<Real>(half_dilate(x.values()));
}

/// Direct sum on sequences: merge of two decreasing rearrangements.
template <std::floating_point Real>
[[nodiscard]] BasicNonincreasingSeq<Real> direct_sum(const BasicNonincreasingSeq<Real>& x,
                                                    const BasicNonincreasingSeq<Real>& y) {
  std::vector<Real> out(x.size() + y.size());
  std::merge(x.begin(), x.end(), y.begin(), y.end(), out.begin(), std::greater<Real>{});
  return BasicNonincreasingSeq<Real>(std::move(out));
}

template <std::floating_point Real>
[[nodiscard]] BasicNonincreasingSeq<Real> scale(const BasicNonincreasingSeq<Real>& x, Real c) {
  require(c >= Real(0), "scale factor must be nonnegative");
  std::vector<Real> out(x.vector());
  for (Real& v : out) v *= c;
  return BasicNonincreasingSeq<Real>(std::move(out));
}

/// Entrywise sum of two nonincreasing sequences, shorter one zero-padded.
template <std::floating_point Real>
[[nodiscard]] BasicNonincreasingSeq<Real> add(const BasicNonincreasingSeq<Real>& x,
                                             const BasicNonincreasingSeq<Real>& y) {
  std::vector<Real> out(std::max(x.size(), y.size()), Real(0));
  for (std::size_t k = 0; k < x.size(); ++k) out[k] += x[k];
  for (std::size_t k = 0; k < y.size(); ++k) out[k] += y[k];
  return BasicNonincreasingSeq<Real>(std::move(out));
}

template <std::floating_point Real>
[[nodiscard]] BasicNonincreasingSeq<Real> zero_pad(const BasicNonincreasingSeq<Real>& x, std::size_t n) {
  if (x.size() >= n) return x;
  std::vector<Real> out(x.vector());
  out.resize(n, Real(0));
  return BasicNonincreasingSeq<Real>(std::move(out));
}

template <std::floating_point Real>
[[nodiscard]] BasicNonincreasingSeq<Real> truncate(const BasicNonincreasingSeq<Real>& x, std::size_t n) {
  if (x.size() <= n) return x;
  return BasicNonincreasingSeq<Real>(std::vector<Real>(x.begin(), x.begin() + static_cast<std::ptrdiff_t>(n)));
}

/// Raw entries of the S transform,
///   (Sx)(k) = x(k) (1 + L(k) / (k + 1)),  L(k) = sum_{m<=k} ln(x(m) / x(k)).
///
/// L is accumulated through L(k) = L(k-1) + k (ln x(k-1) - ln x(k)), whose
/// increments are nonnegative term by term.  Entries below `floor` are zero
/// and stay zero from there on.
template <std::floating_point Real>
[[nodiscard]] std::vector<Real> s_transform_values(std::span<const Real> x, Real floor = Real(1e-300)) {
  std::vector<Real> out(x.size(), Real(0));
  Real deficiency = 0;
  Real previous_log = 0;
  for (std::size_t k = 0; k < x.size(); ++k) {
    if (!(x[k] > floor)) break;
    const Real current_log = std::log(x[k]);
    if (k > 0) deficiency += static_cast<Real>(k) * (previous_log - current_log);
    out[k] = x[k] * (Real(1) + deficiency / static_cast<Real>(k + 1));
    previous_log = current_log;
  }
  return out;
}

template <std::floating_point Real>
[[nodiscard]] BasicNonincreasingSeq<Real> s_transform(const BasicNonincreasingSeq<Real>& x,
                                                     Real floor = Real(1e-300)) {
  return BasicNonincreasingSeq<Real>(s_transform_values(x.values(), floor));
}

/// Natural log of the running geometric mean, -inf once an entry hits `floor`.
template <std::floating_point Real>
[[nodiscard]] std::vector<Real> t_transform_log(std::span<const Real> x, Real floor = Real(1e-300)) {
  std::vector<Real> out(x.size(), -std::numeric_limits<Real>::infinity());
  Real log_sum = 0;
  for (std::size_t k = 0; k < x.size(); ++k) {
    if (!(x[k] > floor)) break;
    log_sum += std::log(x[k]);
    out[k] = log_sum / static_cast<Real>(k + 1);
  }
  return out;
}

/// (Tx)(k) = (x(0) ... x(k))^{1/(k+1)}, accumulated in the log domain.
template <std::floating_point Real>
[[nodiscard]] BasicNonincreasingSeq<Real> t_transform(const BasicNonincreasingSeq<Real>& x,
                                                     Real floor = Real(1e-300)) {
  std::vector<Real> out = t_transform_log(x.values(), floor);
  // On flat stretches the rounded log-means creep upward by an ulp at a time.
  for (std::size_t k = 1; k < out.size(); ++k) out[k] = std::min(out[k], out[k - 1]);
  for (Real& v : out) v = std::exp(v);
  return BasicNonincreasingSeq<Real>(std::move(out));
}

/// Right-hand side of the S bound for k >= n:
///   x(n) (1 + ln(prod_{m<=n} x(m) / x(n)^{n+1}) / (k + 1)).
template <std::floating_point Real>
[[nodiscard]] Real s_bound_tail(std::span<const Real> x, std::size_t n, std::size_t k) {
  Real deficiency = 0;
  for (std::size_t m = 0; m <= n; ++m) deficiency += std::log(x[m] / x[n]);
  return x[n] * (Real(1) + deficiency / static_cast<Real>(k + 1));
}

/// Right-hand side of the S bound for k <= n:
///   x(k) (1 + ln(prod_{m<=n} x(m) / x(n)^{n+1}) / (k + 1)).
template <std::floating_point Real>
[[nodiscard]] Real s_bound_head(std::span<const Real> x, std::size_t n, std::size_t k) {
  Real deficiency = 0;
  for (std::size_t m = 0; m <= n; ++m) deficiency += std::log(x[m] / x[n]);
  return x[k] * (Real(1) + deficiency / static_cast<Real>(k + 1));
}

/// ln(2^{2n+u+2}) - sum_{k=0}^{2n} ln(1 + u/(k+1)); nonnegative whenever the
/// binomial product bound holds.
template <std::floating_point Real>
[[nodiscard]] Real binomial_log_gap(Real u, std::size_t n) {
  Real log_product = 0;
  for (std::size_t k = 0; k <= 2 * n; ++k) log_product += std::log1p(u / static_cast<Real>(k + 1));
  return (static_cast<Real>(2 * n + 2) + u) * std::log(Real(2)) - log_product;
}

}  // namespace majorize
