#pragma once

// Exact arithmetic on piecewise-constant sequences whose breakpoints are big
// integers and whose values are 2^q with q a big rational.  Used to verify the
// tower counterexample (a principal ideal whose logarithmic envelope is not
// geometrically stable) with no floating point at all.

#include <boost/multiprecision/cpp_int.hpp>

#include <algorithm>
#include <cstddef>
#include <cstdint>
#include <map>
#include <optional>
#include <random>
#include <string>
#include <vector>

#include "majorize/config.hpp"
#include "majorize/orders.hpp"

namespace majorize {

using BigInt = boost::multiprecision::cpp_int;
using BigRational = boost::multiprecision::cpp_rational;

/// log2 of a nonnegative value; nullopt stands for log2(0) = -inf.
using Log2Value = std::optional<BigRational>;

using ExactVerdict = BasicVerdict<BigInt>;

inline BigInt pow2(const BigInt& e) {
  require(e >= 0, "negative power of two requested as an integer");
  return BigInt(1) << static_cast<std::size_t>(e);
}

inline BigInt pow2(std::uint64_t e) { return BigInt(1) << static_cast<std::size_t>(e); }

/// -inf compares below everything.
inline bool log2_less(const Log2Value& a, const Log2Value& b) {
  if (!a) return static_cast<bool>(b);
  if (!b) return false;
  return *a < *b;
}

inline bool log2_less_equal(const Log2Value& a, const Log2Value& b) { return !log2_less(b, a); }

inline std::string to_string(const BigRational& q) {
  const BigInt den = boost::multiprecision::denominator(q);
  const BigInt num = boost::multiprecision::numerator(q);
  return den == 1 ? num.str() : num.str() + "/" + den.str();
}

inline std::string to_string(const Log2Value& v) { return v ? to_string(*v) : std::string("-inf"); }

/// Human-readable index; exact for small values and powers of two (+/- 1).
inline std::string describe_index(const BigInt& k) {
  if (k < 0) return "-" + describe_index(-k);
  if (k == 0) return "0";
  const std::size_t bits = boost::multiprecision::msb(k);
  if (bits < 128) return k.str();
  if (k == pow2(std::uint64_t(bits))) return "2^" + std::to_string(bits);
  if (k + 1 == pow2(std::uint64_t(bits + 1))) return "2^" + std::to_string(bits + 1) + "-1";
  if (k - 1 == pow2(std::uint64_t(bits))) return "2^" + std::to_string(bits) + "+1";
  return "~2^" + std::to_string(bits);
}

/// One constant piece [start, end) with value 2^log2; nullopt end is +inf.
struct StepInterval {
  BigInt start;
  std::optional<BigInt> end;
  Log2Value log2;
};

/// Nonincreasing step sequence over consecutive intervals starting at 0.
class DyadicStepSeq {
 public:
  DyadicStepSeq() = default;

  explicit DyadicStepSeq(std::vector<StepInterval> intervals) : intervals_(std::move(intervals)) {
    require(!intervals_.empty(), "step sequence needs at least one interval");
    require(intervals_.front().start == 0, "first interval must start at 0");
    for (std::size_t i = 0; i < intervals_.size(); ++i) {
      const auto& iv = intervals_[i];
      const bool last = i + 1 == intervals_.size();
      require(last || iv.end.has_value(), "only the last interval may be unbounded");
      if (iv.end) require(iv.start < *iv.end, "interval " + std::to_string(i) + " is empty");
      if (!last) {
        require(*iv.end == intervals_[i + 1].start, "intervals must be consecutive");
        require(log2_less_equal(intervals_[i + 1].log2, iv.log2), "values must be nonincreasing");
      }
    }
  }

  [[nodiscard]] const std::vector<StepInterval>& intervals() const noexcept { return intervals_; }

  /// End of the last interval; nullopt when unbounded.
  [[nodiscard]] const std::optional<BigInt>& horizon() const { return intervals_.back().end; }

  [[nodiscard]] bool covers(const BigInt& k) const { return k >= 0 && (!horizon() || k < *horizon()); }

  [[nodiscard]] std::size_t interval_index(const BigInt& k) const {
    require(covers(k), "index " + describe_index(k) + " is beyond the horizon");
    auto it = std::upper_bound(intervals_.begin(), intervals_.end(), k,
                               [](const BigInt& v, const StepInterval& iv) { return v < iv.start; });
    return static_cast<std::size_t>(std::distance(intervals_.begin(), it)) - 1;
  }

  [[nodiscard]] const Log2Value& log2_at(const BigInt& k) const { return intervals_[interval_index(k)].log2; }

 private:
  std::vector<StepInterval> intervals_;
};

// ---------------------------------------------------------------------------
// Generators

/// mu(A) = sup_n 2^{-2^{3n}} chi_[0, 2^{2^{3n}}): value 2^{-1} on [0, 2), then
/// 2^{-2^{3n}} on [2^{2^{3(n-1)}}, 2^{2^{3n}}) for n = 1..n_max.
inline DyadicStepSeq tower_sequence(unsigned n_max) {
  std::vector<StepInterval> iv;
  iv.push_back({0, BigInt(2), BigRational(-1)});
  for (unsigned n = 1; n <= n_max; ++n) {
    const std::uint64_t e = std::uint64_t(1) << (3 * n);
    iv.push_back({pow2(e >> 3), pow2(e), BigRational(-BigInt(e))});
  }
  return DyadicStepSeq(std::move(iv));
}

/// gamma_n = 2^{3n + 2^{3n}}.
inline BigInt gamma_index(unsigned n) { return pow2(std::uint64_t(3 * n) + (std::uint64_t(1) << (3 * n))); }

/// mu(A_0) = sup_n 2^{-2^{3(n+1)}} chi_[0, gamma_n), for n = 0..n_max.
inline DyadicStepSeq a0_sequence(unsigned n_max) {
  std::vector<StepInterval> iv;
  BigInt start = 0;
  for (unsigned n = 0; n <= n_max; ++n) {
    const BigInt end = gamma_index(n);
    iv.push_back({start, end, BigRational(-BigInt(std::uint64_t(1) << (3 * (n + 1))))});
    start = end;
  }
  return DyadicStepSeq(std::move(iv));
}

/// The finite part sup_{0<=n<l} 2^{-2^{3(n+1)}} chi_[0, gamma_n), zero afterwards.
inline DyadicStepSeq a0_head(unsigned l) {
  std::vector<StepInterval> iv;
  BigInt start = 0;
  for (unsigned n = 0; n < l; ++n) {
    const BigInt end = gamma_index(n);
    iv.push_back({start, end, BigRational(-BigInt(std::uint64_t(1) << (3 * (n + 1))))});
    start = end;
  }
  iv.push_back({start, std::nullopt, std::nullopt});
  return DyadicStepSeq(std::move(iv));
}

// ---------------------------------------------------------------------------
// Exact operations

/// sigma_{2^l}: every endpoint multiplied by 2^l.
inline DyadicStepSeq dilate_pow2(const DyadicStepSeq& x, unsigned l) {
  std::vector<StepInterval> iv = x.intervals();
  for (auto& piece : iv) {
    piece.start <<= l;
    if (piece.end) *piece.end <<= l;
  }
  return DyadicStepSeq(std::move(iv));
}

/// 2^l x.
inline DyadicStepSeq scale_pow2(const DyadicStepSeq& x, const BigRational& l) {
  std::vector<StepInterval> iv = x.intervals();
  for (auto& piece : iv)
    if (piece.log2) *piece.log2 += l;
  return DyadicStepSeq(std::move(iv));
}

/// x^p for a positive integer p.
inline DyadicStepSeq power(const DyadicStepSeq& x, unsigned p) {
  require(p >= 1, "exponent must be a positive integer");
  std::vector<StepInterval> iv = x.intervals();
  for (auto& piece : iv)
    if (piece.log2) *piece.log2 *= p;
  return DyadicStepSeq(std::move(iv));
}

/// Restriction to [0, horizon).
inline DyadicStepSeq truncate(const DyadicStepSeq& x, const BigInt& horizon) {
  require(horizon > 0, "horizon must be positive");
  std::vector<StepInterval> iv;
  for (const auto& piece : x.intervals()) {
    if (piece.start >= horizon) break;
    StepInterval p = piece;
    if (!p.end || *p.end > horizon) p.end = horizon;
    iv.push_back(std::move(p));
  }
  require(!iv.empty() && *iv.back().end == horizon, "horizon exceeds the sequence's own horizon");
  return DyadicStepSeq(std::move(iv));
}

/// Smallest horizon among the inputs; nullopt if all are unbounded.
inline std::optional<BigInt> common_horizon(const std::vector<const DyadicStepSeq*>& seqs) {
  std::optional<BigInt> h;
  for (const auto* s : seqs)
    if (s->horizon() && (!h || *s->horizon() < *h)) h = *s->horizon();
  return h;
}

/// Sorted starts of the common refinement, restricted to [0, horizon).
inline std::vector<BigInt> refinement(const std::vector<const DyadicStepSeq*>& seqs,
                                      const std::optional<BigInt>& horizon) {
  std::vector<BigInt> starts;
  for (const auto* s : seqs)
    for (const auto& piece : s->intervals())
      if (!horizon || piece.start < *horizon) starts.push_back(piece.start);
  std::sort(starts.begin(), starts.end());
  starts.erase(std::unique(starts.begin(), starts.end()), starts.end());
  return starts;
}

/// Pointwise maximum over the common horizon.
inline DyadicStepSeq sup(const DyadicStepSeq& x, const DyadicStepSeq& y) {
  const auto horizon = common_horizon({&x, &y});
  const auto starts = refinement({&x, &y}, horizon);
  std::vector<StepInterval> iv;
  for (std::size_t i = 0; i < starts.size(); ++i) {
    const Log2Value& a = x.log2_at(starts[i]);
    const Log2Value& b = y.log2_at(starts[i]);
    Log2Value v = log2_less(a, b) ? b : a;
    std::optional<BigInt> end = i + 1 < starts.size() ? std::optional<BigInt>(starts[i + 1]) : horizon;
    if (!iv.empty() && iv.back().log2 == v) {
      iv.back().end = end;
    } else {
      iv.push_back({starts[i], end, std::move(v)});
    }
  }
  return DyadicStepSeq(std::move(iv));
}

/// Whether 2^target <= sum_i 2^{terms_i}.  Exact when all finite exponents are
/// integers (binary carries); otherwise decided only if a single term already
/// dominates, nullopt if not.
inline std::optional<bool> pow2_sum_dominates(const Log2Value& target, const std::vector<Log2Value>& terms) {
  if (!target) return true;
  for (const auto& t : terms)
    if (t && *t >= *target) return true;
  auto is_integer = [](const BigRational& q) { return boost::multiprecision::denominator(q) == 1; };
  if (!is_integer(*target)) return std::nullopt;
  std::map<BigInt, BigInt> counts;
  for (const auto& t : terms) {
    if (!t) continue;
    if (!is_integer(*t)) return std::nullopt;
    counts[boost::multiprecision::numerator(*t)] += 1;
  }
  for (auto it = counts.begin(); it != counts.end(); ++it)
    if (it->second >= 2) counts[it->first + 1] += it->second / 2;
  return !counts.empty() && BigRational(counts.rbegin()->first) >= *target;
}

struct StepComparison {
  std::size_t pieces_checked = 0;
  std::optional<BigInt> first_violation;
  std::optional<BigInt> first_undecided;
  [[nodiscard]] bool holds() const noexcept { return !first_violation && !first_undecided; }
};

/// Checks lhs <= sum(terms) on every elementary interval of the common
/// refinement, which is exhaustive for step functions.
inline StepComparison dominated_by_sum(const DyadicStepSeq& lhs, const std::vector<DyadicStepSeq>& terms) {
  std::vector<const DyadicStepSeq*> all{&lhs};
  for (const auto& t : terms) all.push_back(&t);
  const auto horizon = common_horizon(all);
  StepComparison out;
  for (const auto& k : refinement(all, horizon)) {
    ++out.pieces_checked;
    std::vector<Log2Value> values;
    for (const auto& t : terms) values.push_back(t.log2_at(k));
    const auto verdict = pow2_sum_dominates(lhs.log2_at(k), values);
    if (!verdict) {
      if (!out.first_undecided) out.first_undecided = k;
    } else if (!*verdict) {
      out.first_violation = k;
      return out;
    }
  }
  return out;
}

/// log2 prod_{m=0}^{k} x(m), exactly.
inline Log2Value exact_prefix_log2(const DyadicStepSeq& x, const BigInt& k) {
  require(k >= 0 && x.covers(k), "index " + describe_index(k) + " is beyond the horizon");
  BigRational total = 0;
  for (const auto& piece : x.intervals()) {
    if (piece.start > k) break;
    if (!piece.log2) return std::nullopt;
    const BigInt last = piece.end && *piece.end - 1 < k ? *piece.end - 1 : k;
    total += BigRational(last - piece.start + 1) * *piece.log2;
  }
  return total;
}

/// log2 (Tx)(k) = exact_prefix_log2(x, k) / (k + 1).
inline Log2Value exact_t_log2(const DyadicStepSeq& x, const BigInt& k) {
  Log2Value prefix = exact_prefix_log2(x, k);
  if (prefix) *prefix /= BigRational(k + 1);
  return prefix;
}

/// Whether x <<_log y on the common horizon.  Prefix log-sums are linear on
/// each elementary interval, so comparing at both ends of every piece is
/// exhaustive.
inline ExactVerdict exact_log_submajor(const DyadicStepSeq& x, const DyadicStepSeq& y) {
  const auto horizon = common_horizon({&x, &y});
  require(horizon.has_value(), "log-submajorization needs a finite horizon");
  const auto starts = refinement({&x, &y}, horizon);
  BigRational px = 0;
  BigRational py = 0;
  for (std::size_t i = 0; i < starts.size(); ++i) {
    const BigInt& s = starts[i];
    const BigInt end = i + 1 < starts.size() ? starts[i + 1] : *horizon;
    const Log2Value& vx = x.log2_at(s);
    const Log2Value& vy = y.log2_at(s);
    if (!vx) return {};
    if (!vy) {
      ExactVerdict v;
      v.status = Status::Fails;
      v.failure_index = s;
      return v;
    }
    // Ends of the piece: k = s and k = end - 1.
    for (const BigInt& len : {BigInt(1), BigInt(end - s)}) {
      if (px + BigRational(len) * *vx > py + BigRational(len) * *vy) {
        ExactVerdict v;
        v.status = Status::Fails;
        v.failure_index = s + len - 1;
        return v;
      }
    }
    px += BigRational(end - s) * *vx;
    py += BigRational(end - s) * *vy;
  }
  return {};
}

// ---------------------------------------------------------------------------
// Certified enclosures

/// Rational interval [lower, upper] known to contain a real quantity.
struct CertifiedBound {
  BigRational lower;
  BigRational upper;

  CertifiedBound(BigRational lo, BigRational hi) : lower(std::move(lo)), upper(std::move(hi)) {
    require(lower <= upper, "certified bound with lower > upper");
  }

  [[nodiscard]] bool contains(const BigRational& v) const { return lower <= v && v <= upper; }
};

/// 6931/10000 < ln 2 < 6932/10000.
inline CertifiedBound ln2_enclosure() { return {BigRational(6931, 10000), BigRational(6932, 10000)}; }

/// Encloses sum_{m=a}^{b-1} 1/(m+1) for a = 2^{ea} < b = 2^{eb} through
///   ln((b+1)/(a+1)) <= sum <= ln(b/a),
/// with ln((b+1)/(a+1)) >= (eb - ea) ln 2 - 1/a.  The correction 1/a is
/// bounded by 2^{-min(ea, 4096)} so huge exponents never materialize.
inline CertifiedBound harmonic_enclosure_pow2(const BigInt& ea, const BigInt& eb) {
  require(ea >= 0 && eb > ea, "need 0 <= ea < eb");
  const CertifiedBound ln2 = ln2_enclosure();
  const BigRational span(eb - ea);
  const BigInt capped = ea < 4096 ? ea : BigInt(4096);
  const BigRational correction(BigInt(1), pow2(capped));
  return {span * ln2.lower - correction, span * ln2.upper};
}

// ---------------------------------------------------------------------------
// Tower counterexample checks

struct TAuxPoint {
  BigInt k;
  BigRational lower;  // 7 gamma_n / (k + 1)
  BigRational value;  // log2( 2^{2^{3(n+1)}} (T mu(A))(k) )
  BigRational upper;  // 1 + 7 gamma_n / (k + 1)
  bool bounds_hold = false;
  bool identity_holds = false;  // (k+1) 2^{3(n+1)} + log2 prod = 14 + 7 sum_{s<=n} gamma_s
};

struct TAuxReport {
  unsigned n = 0;
  std::vector<TAuxPoint> points;
  [[nodiscard]] bool holds() const {
    return std::all_of(points.begin(), points.end(),
                       [](const TAuxPoint& p) { return p.bounds_hold && p.identity_holds; });
  }
};

inline BigInt tower_block_start(unsigned n) { return pow2(std::uint64_t(1) << (3 * n)); }

/// Two-sided estimate of the running geometric mean of the tower on block n,
/// checked in exact rational arithmetic at each k in [2^{2^{3n}}, 2^{2^{3(n+1)}}).
inline TAuxReport verify_t_aux(unsigned n, const std::vector<BigInt>& ks, const DyadicStepSeq* tower = nullptr) {
  require(n <= 4, "block index too large for exact evaluation");
  const DyadicStepSeq own = tower ? DyadicStepSeq() : tower_sequence(n + 1);
  const DyadicStepSeq& seq = tower ? *tower : own;
  const BigInt lo = tower_block_start(n);
  const BigInt hi = tower_block_start(n + 1);
  const BigInt top = pow2(std::uint64_t(3 * (n + 1)));
  const BigRational seven_gamma(7 * gamma_index(n));
  BigInt gamma_sum = 0;
  for (unsigned s = 1; s <= n; ++s) gamma_sum += gamma_index(s);
  const BigInt identity_rhs = 14 + 7 * gamma_sum;

  TAuxReport report;
  report.n = n;
  for (const BigInt& k : ks) {
    require(k >= lo && k < hi, "index " + describe_index(k) + " is outside block " + std::to_string(n));
    const Log2Value prefix = exact_prefix_log2(seq, k);
    if (!prefix) throw computation_error("tower prefix product vanished");
    TAuxPoint p;
    p.k = k;
    p.lower = seven_gamma / BigRational(k + 1);
    p.upper = p.lower + 1;
    p.value = BigRational(top) + *prefix / BigRational(k + 1);
    p.bounds_hold = p.lower <= p.value && p.value <= p.upper;
    p.identity_holds = BigRational(k + 1) * BigRational(top) + *prefix == BigRational(identity_rhs);
    report.points.push_back(std::move(p));
  }
  return report;
}

/// Block endpoints, gamma_n and its neighbours, plus log-uniformly spread
/// random indices in block n.
template <typename Rng>
std::vector<BigInt> sample_t_aux_indices(unsigned n, std::size_t count, Rng& rng) {
  const BigInt lo = tower_block_start(n);
  const BigInt hi = tower_block_start(n + 1);
  std::vector<BigInt> ks{lo, hi - 1};
  for (const BigInt& k : {BigInt(gamma_index(n) - 1), gamma_index(n), BigInt(gamma_index(n) + 1)})
    if (k >= lo && k < hi) ks.push_back(k);
  const std::uint64_t e_lo = std::uint64_t(1) << (3 * n);
  const std::uint64_t e_hi = std::uint64_t(1) << (3 * (n + 1));
  std::uniform_int_distribution<std::uint64_t> exponent(e_lo, e_hi - 1);
  while (ks.size() < count) {
    const std::uint64_t e = exponent(rng);
    BigInt k = pow2(e);
    BigInt noise = 0;
    for (std::uint64_t bits = 0; bits < e; bits += 64) noise = (noise << 64) + BigInt(rng());
    k += noise % pow2(e);
    ks.push_back(k);
  }
  ks.resize(count);
  return ks;
}

struct TMainReport {
  unsigned l = 0;
  unsigned n = 0;
  CertifiedBound harmonic{0, 0};     // encloses sum_{m=2^{2^{3n}}}^{gamma_n - 1} 1/(m+1)
  bool harmonic_at_least_n = false;  // lower end >= n
  BigInt probe_exponent;             // right side evaluated at k = 2^{probe_exponent} - 1
  BigInt left_exponent;              // 7n: log2 of the left side, above 2^{-2^{3(n+1)}}
  BigInt right_exponent;             // l + 1 + 7 2^l: same for the right side
  bool integer_inequality = false;   // left_exponent >= right_exponent
  bool strict = false;
  std::optional<bool> exact_cross_check;  // t-aux bounds at the probe, when the horizon is tractable

  [[nodiscard]] bool certified() const {
    return harmonic_at_least_n && integer_inequality && exact_cross_check.value_or(true);
  }
};

/// Certifies (T^2 mu(A))(gamma_n - 1) >= (2^l sigma_{2^l} T mu(A))(gamma_n - 1)
/// through the chain
///   left  >= 2^{-2^{3(n+1)}} 2^{7 sum 1/(m+1)} >= 2^{7n - 2^{3(n+1)}},
///   right =  2^l (T mu(A))(2^{3n-l+2^{3n}} - 1) <= 2^{l+1+7 2^l - 2^{3(n+1)}},
/// which reduces to 7n >= l + 1 + 7 2^l.  Requires n >= 2^{l+1}.
inline TMainReport verify_t_main(unsigned l, unsigned n) {
  require(l >= 1, "l must be at least 1");
  require(l < 16, "l too large");
  require(n >= (1u << (l + 1)), "precondition n >= 2^{l+1} violated: n = " + std::to_string(n) +
                                     ", 2^{l+1} = " + std::to_string(1u << (l + 1)));
  require(n <= 20, "n too large for the block exponent bookkeeping");

  TMainReport r;
  r.l = l;
  r.n = n;
  const BigInt block = BigInt(std::uint64_t(1) << (3 * n));  // 2^{3n}
  r.harmonic = harmonic_enclosure_pow2(block, block + 3 * n);
  r.harmonic_at_least_n = r.harmonic.lower >= BigRational(n);
  r.left_exponent = 7 * BigInt(n);

  // gamma_n / 2^{probe_exponent} = 2^l, hence 7 gamma_n / (k + 1) = 7 2^l.
  r.probe_exponent = BigInt(3 * n - l) + block;
  const BigInt ratio_exponent = BigInt(3 * n) + block - r.probe_exponent;
  r.right_exponent = BigInt(l) + 1 + 7 * pow2(ratio_exponent);
  r.integer_inequality = r.left_exponent >= r.right_exponent;
  r.strict = r.left_exponent > r.right_exponent;

  if (3 * (n + 1) <= 15) {
    const BigInt probe = pow2(r.probe_exponent) - 1;
    const TAuxReport aux = verify_t_aux(n, {probe});
    const auto& p = aux.points.front();
    r.exact_cross_check = aux.holds() && BigRational(l) + p.value <= BigRational(r.right_exponent);
  }
  return r;
}

struct ArithmeticFact {
  unsigned n = 0;
  BigInt lhs;  // 3n + l + 2^{3n}
  BigInt rhs;  // 2^{3(n+1)}
  bool holds = false;
};

struct A0BoundReport {
  unsigned l = 0;
  unsigned n_max = 0;
  StepComparison comparison;
  std::vector<ArithmeticFact> facts;
  [[nodiscard]] bool holds() const {
    return comparison.holds() &&
           std::all_of(facts.begin(), facts.end(), [](const ArithmeticFact& f) { return f.holds; });
  }
};

/// sigma_{2^l} mu(A_0) <= sigma_{2^l} sup_{0<=n<l} (...) + mu(A), checked on
/// every piece up to 2^l gamma_{n_max}, together with
/// 3n + l + 2^{3n} <= 2^{3(n+1)} for l <= n <= n_max.
inline A0BoundReport verify_a0_bound(unsigned l, unsigned n_max) {
  require(l >= 1, "l must be at least 1");
  require(l <= 7, "l too large for the tower horizon");
  require(n_max <= 6, "n_max too large");
  A0BoundReport r;
  r.l = l;
  r.n_max = n_max;
  const DyadicStepSeq lhs = dilate_pow2(a0_sequence(n_max), l);
  r.comparison = dominated_by_sum(lhs, {dilate_pow2(a0_head(l), l), tower_sequence(n_max + 1)});
  for (unsigned n = l; n <= n_max; ++n) {
    ArithmeticFact f;
    f.n = n;
    f.lhs = BigInt(3 * n + l) + pow2(std::uint64_t(3 * n));
    f.rhs = pow2(std::uint64_t(3 * (n + 1)));
    f.holds = f.lhs <= f.rhs;
    r.facts.push_back(std::move(f));
  }
  return r;
}

struct HorrorPiece {
  BigInt start;
  std::string region;
  Log2Value value;
  std::string dominant_term;
  bool holds = false;
};

struct HorrorReport {
  unsigned l = 0;
  bool log_submajorized = false;  // b <<_log mu(A) on the horizon
  std::vector<HorrorPiece> pieces;
  [[nodiscard]] bool holds() const {
    return !pieces.empty() &&
           std::all_of(pieces.begin(), pieces.end(), [](const HorrorPiece& p) { return p.holds; });
  }
};

/// Which of the four ranges used in the case analysis contains k:
/// [2^{2^{3n}}, 2^{1+2^{3n}}), [2^{1+2^{3n}}, 2^{l+2^{3n}}),
/// [2^{l+2^{3n}}, gamma_n) and [gamma_n, 2^{2^{3(n+1)}}).
inline std::string horror_region(const BigInt& k, unsigned l) {
  if (k < 2) return "head";
  unsigned n = 0;
  while (k >= tower_block_start(n + 1)) ++n;
  const std::uint64_t e = std::uint64_t(1) << (3 * n);
  const std::string tag = " (n=" + std::to_string(n) + ")";
  if (k < pow2(e + 1)) return "block-start" + tag;
  if (k < pow2(e + l)) return "log-mean-fourth-power" + tag;
  if (k < gamma_index(n) && 3 * n > l) return "dilation-witness" + tag;
  return "log-mean-tail" + tag;
}

/// mu(B) <= 2^l mu(A_0) + 256 sigma_2 mu(A) + sigma_{2^l}(mu(A)^4) at every
/// piece of the common refinement, for B given exactly.  B must satisfy the
/// ideal witness bound B <= 2^l sigma_{2^l} mu(A); log-submajorization by
/// mu(A) is reported, not required.
inline HorrorReport verify_horror(const DyadicStepSeq& b, unsigned l, unsigned n_max = 3) {
  require(l <= 8, "l too large");
  require(n_max >= 1 && n_max <= 4, "n_max must lie in [1, 4]");
  const DyadicStepSeq tower = tower_sequence(n_max);
  const DyadicStepSeq witness = scale_pow2(dilate_pow2(tower, l), BigRational(l));
  {
    const auto cmp = dominated_by_sum(b, {witness});
    require(cmp.holds(), "precondition b <= 2^l sigma_{2^l} mu(A) fails at " +
                             describe_index(cmp.first_violation.value_or(cmp.first_undecided.value_or(0))));
  }

  const std::vector<DyadicStepSeq> terms{scale_pow2(a0_sequence(n_max), BigRational(l)),
                                         scale_pow2(dilate_pow2(tower, 1), BigRational(8)),
                                         dilate_pow2(power(tower, 4), l)};
  static const char* const names[] = {"2^l mu(A0)", "256 sigma_2 mu(A)", "sigma_{2^l} mu(A)^4"};

  HorrorReport r;
  r.l = l;
  r.log_submajorized = exact_log_submajor(truncate(b, std::min(*b.horizon(), *tower.horizon())), tower).holds();
  std::vector<const DyadicStepSeq*> all{&b};
  for (const auto& t : terms) all.push_back(&t);
  const auto horizon = common_horizon(all);
  for (const BigInt& k : refinement(all, horizon)) {
    HorrorPiece p;
    p.start = k;
    p.region = horror_region(k, l);
    p.value = b.log2_at(k);
    std::vector<Log2Value> values;
    std::size_t best = 0;
    for (std::size_t i = 0; i < terms.size(); ++i) {
      values.push_back(terms[i].log2_at(k));
      if (log2_less(values[best], values[i])) best = i;
    }
    p.dominant_term = names[best];
    p.holds = pow2_sum_dominates(p.value, values).value_or(false);
    r.pieces.push_back(std::move(p));
  }
  return r;
}

}  // namespace majorize
