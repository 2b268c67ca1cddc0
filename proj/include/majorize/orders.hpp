#pragma once

// Deciders for Hardy-Littlewood, logarithmic and uniform submajorization on
// finite truncations, plus the sequence-level inequality checks built on them.

#include <algorithm>
#include <cmath>
#include <cstddef>
#include <limits>
#include <optional>
#include <random>
#include <stdexcept>
#include <string>
#include <vector>

#include "majorize/config.hpp"
#include "majorize/seq_core.hpp"

namespace majorize {

enum class Status { Holds, Fails, Inconclusive };

inline const char* to_string(Status s) {
  switch (s) {
    case Status::Holds: return "holds";
    case Status::Fails: return "fails";
    case Status::Inconclusive: return "inconclusive";
  }
  return "?";
}

/// Tri-state answer to an order or membership query.
///
/// `witness` carries the integer that certifies Holds (the window stretch
/// lambda, or the dilation exponent l).  `failure_index` locates the first
/// violated prefix; for uniform rows `failure_window` is the row's m.
template <typename Index>
struct BasicVerdict {
  Status status = Status::Holds;
  std::optional<std::size_t> witness;
  std::optional<Index> failure_index;
  std::optional<Index> failure_window;
  std::optional<std::size_t> bound_searched;
  std::string note;

  [[nodiscard]] bool holds() const noexcept { return status == Status::Holds; }
  [[nodiscard]] bool fails() const noexcept { return status == Status::Fails; }
  [[nodiscard]] bool inconclusive() const noexcept { return status == Status::Inconclusive; }
};

using OrderVerdict = BasicVerdict<std::size_t>;

namespace detail {

// Violations this close to equality cannot be told apart from accumulated
// rounding in the inputs; they are reported as Inconclusive, never Fails.
inline double rounding_band(double magnitude, std::size_t terms) {
  return 1024.0 * std::numeric_limits<double>::epsilon() * (magnitude + static_cast<double>(terms));
}

inline std::vector<double> padded(const NonincreasingSeq& x, std::size_t n) {
  std::vector<double> out(x.vector());
  out.resize(n, 0.0);
  return out;
}

inline std::vector<double> prefix_sums(const std::vector<double>& x) {
  std::vector<double> out(x.size() + 1, 0.0);
  for (std::size_t k = 0; k < x.size(); ++k) out[k + 1] = out[k] + x[k];
  return out;
}

}  // namespace detail

/// b << a (Hardy-Littlewood): every prefix sum of b is at most that of a.
/// `failure_index` is the violating prefix length n >= 1.
inline OrderVerdict check_hl_submajor(const NonincreasingSeq& b, const NonincreasingSeq& a,
                                      const Tolerances& tol = {}) {
  const std::size_t n = std::max(b.size(), a.size());
  const auto pb = detail::prefix_sums(detail::padded(b, n));
  const auto pa = detail::prefix_sums(detail::padded(a, n));
  for (std::size_t len = 1; len <= n; ++len) {
    const double excess = pb[len] - pa[len];
    const double allowed = tol.sum * static_cast<double>(len);
    if (excess <= allowed) continue;
    OrderVerdict v;
    v.failure_index = len;
    const double band = detail::rounding_band(pb[len] + pa[len], 2 * len);
    v.status = excess <= std::max(allowed, band) ? Status::Inconclusive : Status::Fails;
    v.note = "prefix sum excess " + std::to_string(excess);
    return v;
  }
  return {};
}

/// b <<_log a: every prefix product of b is at most that of a, compared as
/// natural-log sums.  `failure_index` is the last index n of the failing
/// product prod_{k<=n}.
inline OrderVerdict check_log_submajor(const NonincreasingSeq& b, const NonincreasingSeq& a,
                                       const Tolerances& tol = {}) {
  const std::size_t n = std::max(b.size(), a.size());
  const auto bp = detail::padded(b, n);
  const auto ap = detail::padded(a, n);
  double log_b = 0;
  double log_a = 0;
  double magnitude = 0;
  for (std::size_t k = 0; k < n; ++k) {
    // A zero on the left makes every later left product zero.
    if (!(bp[k] > tol.prod_floor)) return {};
    if (!(ap[k] > tol.prod_floor)) {
      OrderVerdict v;
      v.status = Status::Fails;
      v.failure_index = k;
      v.note = "right product vanishes while left product is positive";
      return v;
    }
    const double lb = std::log(bp[k]);
    const double la = std::log(ap[k]);
    log_b += lb;
    log_a += la;
    magnitude += std::abs(lb) + std::abs(la);
    const double excess = log_b - log_a;
    if (excess <= tol.log) continue;
    OrderVerdict v;
    v.failure_index = k;
    v.status = excess <= std::max(tol.log, detail::rounding_band(magnitude, 2 * (k + 1))) ? Status::Inconclusive
                                                                                        : Status::Fails;
    v.note = "log prefix product excess " + std::to_string(excess);
    return v;
  }
  return {};
}

/// Uniform submajorization: searches lambda = 1..lambda_max for which
///   sum_{k=lambda m}^{n-1} b(k) <= sum_{k=m}^{n-1} a(k)   for all lambda m < n.
/// The m = 0 row is Hardy-Littlewood; its failure is a hard Fails.
inline OrderVerdict check_uniform_submajor(const NonincreasingSeq& b, const NonincreasingSeq& a,
                                           std::size_t lambda_max, const Tolerances& tol = {}) {
  require(lambda_max >= 1, "lambda_max must be at least 1");
  const OrderVerdict hl = check_hl_submajor(b, a, tol);
  if (!hl.holds()) {
    OrderVerdict v = hl;
    v.failure_window = 0;
    return v;
  }
  const std::size_t n = std::max(b.size(), a.size());
  const auto pb = detail::prefix_sums(detail::padded(b, n));
  const auto pa = detail::prefix_sums(detail::padded(a, n));

  auto rows_pass = [&](std::size_t lambda) {
    for (std::size_t m = 1; lambda * m < n; ++m) {
      for (std::size_t len = lambda * m + 1; len <= n; ++len) {
        const double left = pb[len] - pb[lambda * m];
        const double right = pa[len] - pa[m];
        if (left - right > tol.sum * static_cast<double>(len)) return false;
      }
    }
    return true;
  };

  for (std::size_t lambda = 1; lambda <= lambda_max; ++lambda) {
    if (rows_pass(lambda)) {
      OrderVerdict v;
      v.witness = lambda;
      if (!check_hl_submajor(b, a, tol).holds()) throw std::logic_error("uniform witness without HL submajorization");
      return v;
    }
  }
  OrderVerdict v;
  v.status = Status::Inconclusive;
  v.bound_searched = lambda_max;
  v.note = "no window stretch up to lambda_max works";
  return v;
}

/// Aggregate of a randomized or multi-part check.
struct TrialReport {
  std::size_t trials = 0;
  std::size_t failures = 0;
  std::size_t inconclusive = 0;
  std::size_t max_witness = 0;
  std::vector<std::string> notes;

  [[nodiscard]] bool passed() const noexcept { return failures == 0 && inconclusive == 0; }

  void record(const OrderVerdict& v, const std::string& label) {
    ++trials;
    if (v.witness) max_witness = std::max(max_witness, *v.witness);
    if (v.holds()) return;
    (v.fails() ? failures : inconclusive) += 1;
    if (notes.size() < 8) notes.push_back(label + ": " + to_string(v.status) + (v.note.empty() ? "" : " (" + v.note + ")"));
  }

  void record(bool ok, const std::string& label) {
    ++trials;
    if (ok) return;
    ++failures;
    if (notes.size() < 8) notes.push_back(label);
  }

  void merge(const TrialReport& other) {
    trials += other.trials;
    failures += other.failures;
    inconclusive += other.inconclusive;
    max_witness = std::max(max_witness, other.max_witness);
    for (const auto& s : other.notes)
      if (notes.size() < 8) notes.push_back(s);
  }
};

/// S x <<_log 4 (x (+) x).
inline OrderVerdict verify_hardest_estimate(const NonincreasingSeq& x, const Tolerances& tol = {}) {
  const NonincreasingSeq sx = s_transform(x, tol.prod_floor);
  const NonincreasingSeq rhs = scale(direct_sum(x, x), 4.0);
  return check_log_submajor(sx, rhs, tol);
}

/// Direct-sum part of the sum lemma: B1 (+) B2 <<_log A1 (+) A2 whenever
/// B1 <<_log A1 and B2 <<_log A2.
inline OrderVerdict verify_sum_lessdot_direct(const NonincreasingSeq& b1, const NonincreasingSeq& a1,
                                              const NonincreasingSeq& b2, const NonincreasingSeq& a2,
                                              const Tolerances& tol = {}) {
  require(check_log_submajor(b1, a1, tol).holds(), "precondition b1 <<_log a1 does not hold");
  require(check_log_submajor(b2, a2, tol).holds(), "precondition b2 <<_log a2 does not hold");
  return check_log_submajor(direct_sum(b1, b2), direct_sum(a1, a2), tol);
}

/// Samples convex combinations of damped rearrangements of x and checks that
/// each is uniformly submajorized by x.
template <typename Rng>
TrialReport verify_convex_hull_direction_a(const NonincreasingSeq& x, std::size_t trials, Rng& rng,
                                           std::size_t lambda_max = 64, const Tolerances& tol = {}) {
  require(trials >= 1, "trials must be at least 1");
  TrialReport report;
  std::uniform_int_distribution<std::size_t> term_count(1, 5);
  std::uniform_real_distribution<double> unit(0.0, 1.0);
  for (std::size_t t = 0; t < trials; ++t) {
    const std::size_t terms = term_count(rng);
    std::vector<double> weights(terms);
    double total = 0;
    for (double& w : weights) total += (w = unit(rng) + 1e-3);
    std::vector<double> y(x.size(), 0.0);
    for (std::size_t j = 0; j < terms; ++j) {
      std::vector<double> z(x.vector());
      std::shuffle(z.begin(), z.end(), rng);
      for (double& v : z) v *= unit(rng);
      for (std::size_t k = 0; k < y.size(); ++k) y[k] += weights[j] / total * z[k];
    }
    report.record(check_uniform_submajor(mu(y), x, lambda_max, tol), "trial " + std::to_string(t));
  }
  return report;
}

}  // namespace majorize
