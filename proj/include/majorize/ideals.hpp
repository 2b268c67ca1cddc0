#pragma once

// Finite models of a principal ideal I_A and its logarithmic envelope.  A
// sequence x belongs to I_A iff x <= 2^l sigma_{2^l} mu(A) for some l; the
// search over l is bounded by l_max, so a floating truncation can confirm
// membership but never refute it.

#include <algorithm>
#include <cmath>
#include <cstddef>
#include <stdexcept>
#include <string>
#include <vector>

#include "majorize/config.hpp"
#include "majorize/dyadic.hpp"
#include "majorize/linalg.hpp"
#include "majorize/orders.hpp"
#include "majorize/seq_core.hpp"

namespace majorize {

/// generator: mu(A); l_max: largest dilation exponent tried; truncation: when
/// nonzero, comparisons stop at this index.
struct PrincipalIdealModel {
  NonincreasingSeq generator;
  std::size_t l_max = 8;
  std::size_t truncation = 0;

  PrincipalIdealModel(NonincreasingSeq g, std::size_t l_max_ = 8, std::size_t truncation_ = 0)
      : generator(std::move(g)), l_max(l_max_), truncation(truncation_) {
    require(l_max >= 1, "l_max must be at least 1");
    require(!generator.empty(), "generator must be nonempty");
  }
};

/// 2^l sigma_{2^l} g, cut to `length` entries (zero beyond the data).
inline std::vector<double> ideal_envelope(const NonincreasingSeq& g, std::size_t l, std::size_t length) {
  const std::size_t stretch = std::size_t(1) << l;
  const double factor = std::ldexp(1.0, static_cast<int>(l));
  std::vector<double> out(length, 0.0);
  for (std::size_t k = 0; k < length; ++k) {
    const std::size_t src = k / stretch;
    if (src < g.size()) out[k] = factor * g[src];
  }
  return out;
}

namespace detail {

// Entries the comparison is allowed to look at: inside the truncation and
// inside the data that 2^l sigma_{2^l} g actually covers.
inline std::size_t comparable_length(const PrincipalIdealModel& ideal, std::size_t x_len, std::size_t l) {
  std::size_t n = std::min(x_len, ideal.generator.size() << l);
  if (ideal.truncation > 0) n = std::min(n, ideal.truncation);
  return n;
}

inline OrderVerdict unresolved(std::size_t l_max) {
  OrderVerdict v;
  v.status = Status::Inconclusive;
  v.bound_searched = l_max;
  v.note = "no witness l <= l_max on the available horizon";
  return v;
}

}  // namespace detail

/// Smallest l in [0, l_max] with x <= 2^l sigma_{2^l} g entrywise on the
/// truncation; Inconclusive otherwise.
inline OrderVerdict ideal_member(const NonincreasingSeq& x, const PrincipalIdealModel& ideal,
                                 const Tolerances& tol = {}) {
  for (std::size_t l = 0; l <= ideal.l_max; ++l) {
    const std::size_t n = detail::comparable_length(ideal, x.size(), l);
    const auto env = ideal_envelope(ideal.generator, l, n);
    bool ok = true;
    for (std::size_t k = 0; k < n && ok; ++k) ok = x[k] <= env[k] * (1 + tol.sum) + tol.prod_floor;
    if (ok) {
      OrderVerdict v;
      v.witness = l;
      return v;
    }
  }
  return detail::unresolved(ideal.l_max);
}

/// Smallest l in [0, l_max] with b <<_log 2^l sigma_{2^l} g on the truncation.
inline OrderVerdict le_member(const NonincreasingSeq& b, const PrincipalIdealModel& ideal,
                              const Tolerances& tol = {}) {
  bool saw_inconclusive = false;
  for (std::size_t l = 0; l <= ideal.l_max; ++l) {
    const std::size_t n = detail::comparable_length(ideal, b.size(), l);
    const NonincreasingSeq env(ideal_envelope(ideal.generator, l, n));
    const OrderVerdict v = check_log_submajor(truncate(b, n), env, tol);
    if (v.holds()) {
      OrderVerdict out;
      out.witness = l;
      return out;
    }
    saw_inconclusive = saw_inconclusive || v.inconclusive();
  }
  OrderVerdict v = detail::unresolved(ideal.l_max);
  if (saw_inconclusive) v.note += "; some l failed only within rounding";
  return v;
}

struct MembershipPair {
  OrderVerdict ideal;
  OrderVerdict le;
};

/// Both memberships, with the implication ideal => LE (witness not larger)
/// enforced.
inline MembershipPair membership_pair(const NonincreasingSeq& x, const PrincipalIdealModel& ideal,
                                      const Tolerances& tol = {}) {
  MembershipPair p{ideal_member(x, ideal, tol), le_member(x, ideal, tol)};
  if (p.ideal.holds() && !(p.le.holds() && *p.le.witness <= *p.ideal.witness))
    throw std::logic_error("ideal membership without logarithmic-envelope membership");
  return p;
}

/// T g in I_g, where T is the running geometric mean.
inline OrderVerdict geom_stable_check(const PrincipalIdealModel& ideal, const Tolerances& tol = {}) {
  return ideal_member(t_transform(ideal.generator, tol.prod_floor), ideal, tol);
}

/// T in Com(I) iff C lambda(T) in I; decided through mu(C lambda(T)).
inline OrderVerdict commutator_member(const DenseMatrix& t, const PrincipalIdealModel& ideal,
                                      const Tolerances& tol = {}) {
  return ideal_member(mu(cesaro(std::span<const Complex>(eigen_seq(t)))), ideal, tol);
}

// ---------------------------------------------------------------------------
// Exact models

/// Exact membership: decided on every piece of the common refinement, so a
/// violation at every l <= l_max is reported as Fails (refuted for all
/// l <= l_max, with failure_index the violation for l = l_max).
inline ExactVerdict exact_ideal_member(const DyadicStepSeq& x, const DyadicStepSeq& generator, std::size_t l_max) {
  require(l_max >= 1, "l_max must be at least 1");
  ExactVerdict v;
  bool undecided = false;
  for (std::size_t l = 0; l <= l_max; ++l) {
    const auto lu = static_cast<unsigned>(l);
    const auto cmp = dominated_by_sum(x, {scale_pow2(dilate_pow2(generator, lu), BigRational(lu))});
    if (cmp.holds()) {
      ExactVerdict ok;
      ok.witness = l;
      return ok;
    }
    if (!cmp.first_violation) undecided = true;
    v.failure_index = cmp.first_violation;
  }
  v.status = undecided ? Status::Inconclusive : Status::Fails;
  v.bound_searched = l_max;
  return v;
}

struct GeomStabilityWitness {
  std::size_t l = 0;
  std::optional<BigInt> index;   // k with (T g)(k) > 2^l g(floor(k / 2^l))
  BigRational t_log2;            // log2 (T g)(k)
  BigRational envelope_log2;     // l + log2 g(floor(k / 2^l))
};

struct ExactGeomStability {
  ExactVerdict verdict;
  std::vector<GeomStabilityWitness> witnesses;  // one per l that was refuted
};

/// Decides T g in I_g exactly on the horizon of g.  The envelope
/// 2^l sigma_{2^l} g is constant on [2^l s, 2^l e) for every piece [s, e) of
/// g, and T g is nonincreasing, so comparing at the left ends k = 2^l s is
/// exhaustive.  Holds with the smallest surviving l; Fails when every
/// l <= l_max is refuted at an explicit index.
inline ExactGeomStability exact_geom_stable_check(const DyadicStepSeq& g, std::size_t l_max) {
  require(l_max >= 1, "l_max must be at least 1");
  require(g.horizon().has_value(), "generator needs a finite horizon");
  ExactGeomStability out;
  for (std::size_t l = 0; l <= l_max; ++l) {
    GeomStabilityWitness w;
    w.l = l;
    const auto lu = static_cast<unsigned>(l);
    for (const auto& piece : g.intervals()) {
      const BigInt k = piece.start << lu;
      if (!g.covers(k)) break;
      const Log2Value t = exact_t_log2(g, k);
      if (!t) break;
      const Log2Value env = piece.log2 ? Log2Value(BigRational(lu) + *piece.log2) : std::nullopt;
      if (log2_less(env, t)) {
        w.index = k;
        w.t_log2 = *t;
        if (env) w.envelope_log2 = *env;
        break;
      }
    }
    if (!w.index) {
      out.verdict = {};
      out.verdict.witness = l;
      out.verdict.note = "checked on the whole horizon";
      return out;
    }
    out.witnesses.push_back(std::move(w));
  }
  out.verdict.status = Status::Fails;
  out.verdict.bound_searched = l_max;
  out.verdict.failure_index = out.witnesses.back().index;
  out.verdict.note = "refuted for every l <= l_max at exact indices";
  return out;
}

}  // namespace majorize
