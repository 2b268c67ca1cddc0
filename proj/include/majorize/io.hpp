#pragma once

// File formats and JSON serialization.
//
//   sequence:  JSON array of finite numbers, or one decimal number per line
//   complex:   JSON array whose items are numbers or [re, im] pairs
//   matrix:    {"dim": n, "entries": [[re, im], ...]} in row-major order
//   dyadic:    {"intervals": [{"start": "0", "end": "2" | "inf", "log2": "-1" | "p/q" | "-inf"}]}

#include <json.hpp>

#include <cmath>
#include <fstream>
#include <sstream>
#include <string>
#include <vector>

#include "majorize/config.hpp"
#include "majorize/dyadic.hpp"
#include "majorize/linalg.hpp"
#include "majorize/orders.hpp"
#include "majorize/seq_core.hpp"
#include "majorize/spectral.hpp"

namespace majorize {

using Json = nlohmann::json;

inline std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw input_error("cannot open " + path);
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

inline Json parse_json(const std::string& text, const std::string& what) {
  try {
    return Json::parse(text);
  } catch (const Json::parse_error& e) {
    throw input_error(what + ": malformed JSON (" + e.what() + ")");
  }
}

namespace detail {

inline double finite_number(const Json& v, const std::string& what) {
  if (!v.is_number()) throw input_error(what + ": expected a number");
  const double d = v.get<double>();
  if (!std::isfinite(d)) throw input_error(what + ": non-finite number");
  return d;
}

inline bool looks_like_json(const std::string& text) {
  const auto pos = text.find_first_not_of(" \t\r\n");
  return pos != std::string::npos && (text[pos] == '[' || text[pos] == '{');
}

}  // namespace detail

/// Real values from a JSON array or newline-delimited text.
inline RealSeq parse_real_seq(const std::string& text, const std::string& what = "sequence") {
  RealSeq out;
  if (detail::looks_like_json(text)) {
    const Json j = parse_json(text, what);
    if (!j.is_array()) throw input_error(what + ": expected a JSON array");
    for (const auto& v : j) out.push_back(detail::finite_number(v, what));
    return out;
  }
  std::istringstream in(text);
  std::string line;
  std::size_t line_no = 0;
  while (std::getline(in, line)) {
    ++line_no;
    const auto first = line.find_first_not_of(" \t\r");
    if (first == std::string::npos) continue;
    const auto last = line.find_last_not_of(" \t\r");
    const std::string token = line.substr(first, last - first + 1);
    std::size_t used = 0;
    double v = 0;
    try {
      v = std::stod(token, &used);
    } catch (const std::exception&) {
      used = 0;
    }
    if (used != token.size() || !std::isfinite(v))
      throw input_error(what + ": line " + std::to_string(line_no) + " is not a finite decimal number");
    out.push_back(v);
  }
  return out;
}

/// A nonincreasing nonnegative sequence; the input must already be in order.
inline NonincreasingSeq parse_nonincreasing(const std::string& text, const std::string& what = "sequence") {
  return NonincreasingSeq(parse_real_seq(text, what));
}

inline ComplexSeq parse_complex_seq(const std::string& text, const std::string& what = "complex sequence") {
  if (!detail::looks_like_json(text)) {
    ComplexSeq out;
    for (double v : parse_real_seq(text, what)) out.emplace_back(v, 0.0);
    return out;
  }
  const Json j = parse_json(text, what);
  if (!j.is_array()) throw input_error(what + ": expected a JSON array");
  ComplexSeq out;
  for (const auto& v : j) {
    if (v.is_array()) {
      if (v.size() != 2) throw input_error(what + ": complex entries are [re, im]");
      out.emplace_back(detail::finite_number(v[0], what), detail::finite_number(v[1], what));
    } else {
      out.emplace_back(detail::finite_number(v, what), 0.0);
    }
  }
  return out;
}

inline DenseMatrix parse_matrix(const std::string& text, const std::string& what = "matrix") {
  const Json j = parse_json(text, what);
  if (!j.is_object() || !j.contains("dim") || !j.contains("entries"))
    throw input_error(what + ": expected {\"dim\": n, \"entries\": [...]}");
  if (!j["dim"].is_number_integer() || j["dim"].get<long long>() < 1)
    throw input_error(what + ": dim must be a positive integer");
  const auto dim = j["dim"].get<long long>();
  if (dim > static_cast<long long>(kDeskLimit)) throw input_error(what + ": dim exceeds desk limit");
  const Json& entries = j["entries"];
  if (!entries.is_array() || entries.size() != static_cast<std::size_t>(dim * dim))
    throw input_error(what + ": entries must hold dim*dim [re, im] pairs");
  Eigen::MatrixXcd m(dim, dim);
  for (long long i = 0; i < dim * dim; ++i) {
    const Json& e = entries[static_cast<std::size_t>(i)];
    if (e.is_array() && e.size() == 2) {
      m(i / dim, i % dim) = {detail::finite_number(e[0], what), detail::finite_number(e[1], what)};
    } else if (e.is_number()) {
      m(i / dim, i % dim) = {detail::finite_number(e, what), 0.0};
    } else {
      throw input_error(what + ": entry " + std::to_string(i) + " is not [re, im]");
    }
  }
  return DenseMatrix(std::move(m));
}

inline Json matrix_to_json(const Eigen::MatrixXcd& m) {
  Json entries = Json::array();
  for (Eigen::Index i = 0; i < m.rows(); ++i)
    for (Eigen::Index j = 0; j < m.cols(); ++j) entries.push_back({m(i, j).real(), m(i, j).imag()});
  return {{"dim", m.rows()}, {"entries", std::move(entries)}};
}

namespace detail {

inline BigInt parse_big_int(const Json& v, const std::string& what) {
  std::string s;
  if (v.is_string()) {
    s = v.get<std::string>();
  } else if (v.is_number_unsigned() || v.is_number_integer()) {
    s = std::to_string(v.get<long long>());
  } else {
    throw input_error(what + ": expected a decimal string");
  }
  if (s.empty() || s.find_first_not_of("0123456789") != std::string::npos)
    throw input_error(what + ": '" + s + "' is not a nonnegative decimal integer");
  return BigInt(s);
}

inline Log2Value parse_log2(const Json& v, const std::string& what) {
  if (v.is_number_integer()) return BigRational(v.get<long long>());
  if (!v.is_string()) throw input_error(what + ": log2 must be a string \"p/q\" or \"-inf\"");
  const std::string s = v.get<std::string>();
  if (s == "-inf") return std::nullopt;
  const auto slash = s.find('/');
  auto integer = [&](const std::string& t) {
    const std::size_t skip = !t.empty() && t[0] == '-' ? 1 : 0;
    if (t.size() == skip || t.find_first_not_of("0123456789", skip) != std::string::npos)
      throw input_error(what + ": '" + s + "' is not a rational p/q");
    return BigInt(t);
  };
  if (slash == std::string::npos) return BigRational(integer(s));
  const BigInt den = integer(s.substr(slash + 1));
  if (den <= 0) throw input_error(what + ": denominator must be positive");
  return BigRational(integer(s.substr(0, slash)), den);
}

}  // namespace detail

inline DyadicStepSeq parse_dyadic(const std::string& text, const std::string& what = "step sequence") {
  const Json j = parse_json(text, what);
  if (!j.is_object() || !j.contains("intervals") || !j["intervals"].is_array())
    throw input_error(what + ": expected {\"intervals\": [...]}");
  std::vector<StepInterval> iv;
  for (const auto& item : j["intervals"]) {
    if (!item.is_object() || !item.contains("start") || !item.contains("end") || !item.contains("log2"))
      throw input_error(what + ": every interval needs start, end and log2");
    StepInterval p;
    p.start = detail::parse_big_int(item["start"], what);
    if (item["end"].is_string() && item["end"].get<std::string>() == "inf") {
      p.end = std::nullopt;
    } else {
      p.end = detail::parse_big_int(item["end"], what);
    }
    p.log2 = detail::parse_log2(item["log2"], what);
    iv.push_back(std::move(p));
  }
  return DyadicStepSeq(std::move(iv));
}

inline Json dyadic_to_json(const DyadicStepSeq& x) {
  Json out = Json::array();
  for (const auto& p : x.intervals())
    out.push_back({{"start", p.start.str()}, {"end", p.end ? p.end->str() : "inf"}, {"log2", to_string(p.log2)}});
  return {{"intervals", std::move(out)}};
}

// ---------------------------------------------------------------------------
// Reports

inline Json to_json(const RealSeq& x) { return Json(x); }
inline Json to_json(const NonincreasingSeq& x) { return Json(x.vector()); }

inline Json to_json(const ComplexSeq& x) {
  Json out = Json::array();
  for (const auto& v : x) out.push_back({v.real(), v.imag()});
  return out;
}

template <typename Index>
Json to_json(const BasicVerdict<Index>& v) {
  auto index = [](const auto& i) -> Json {
    if constexpr (std::is_same_v<std::decay_t<decltype(i)>, BigInt>) {
      return describe_index(i);
    } else {
      return i;
    }
  };
  Json j{{"status", to_string(v.status)}};
  j["witness"] = v.witness ? Json(*v.witness) : Json(nullptr);
  j["failure_index"] = v.failure_index ? index(*v.failure_index) : Json(nullptr);
  if (v.failure_window) j["failure_window"] = index(*v.failure_window);
  if (v.bound_searched) j["bound_searched"] = *v.bound_searched;
  if (!v.note.empty()) j["note"] = v.note;
  return j;
}

inline Json to_json(const TrialReport& r) {
  return {{"trials", r.trials},
          {"failures", r.failures},
          {"inconclusive", r.inconclusive},
          {"max_witness", r.max_witness},
          {"notes", r.notes}};
}

inline Json to_json(const RingroseDiagnostics& d) {
  return {{"norm", d.norm},
          {"reconstruction_error", d.reconstruction_error},
          {"q_spectral_radius", d.q_spectral_radius},
          {"q_lower_residual", d.q_lower_residual},
          {"eigen_mismatch", d.eigen_mismatch},
          {"normality_defect", d.normality_defect}};
}

inline Json to_json(const TraceIdentity& t) {
  return {{"trace", {t.trace.real(), t.trace.imag()}},
          {"eigen_sum", {t.eigen_sum.real(), t.eigen_sum.imag()}},
          {"error", t.error},
          {"allowed", t.allowed},
          {"holds", t.holds()}};
}

inline Json to_json(const SpectralSumBound& b) { return {{"lhs", b.lhs}, {"rhs", b.rhs}, {"holds", b.holds()}}; }

inline Json to_json(const EntrywiseBound& b) {
  Json j{{"lhs", b.lhs}, {"rhs", b.rhs}, {"holds", b.holds()}};
  j["first_violation"] = b.first_violation ? Json(*b.first_violation) : Json(nullptr);
  return j;
}

/// Exact "p/q" unless numerator or denominator exceeds 4096 bits.
inline std::string rational_string(const BigRational& q) {
  const BigInt num = boost::multiprecision::numerator(q);
  const BigInt den = boost::multiprecision::denominator(q);
  auto bits = [](const BigInt& v) { return v == 0 ? std::size_t(0) : boost::multiprecision::msb(abs(v)); };
  if (bits(num) < 4096 && bits(den) < 4096) return to_string(q);
  return describe_index(num) + "/" + describe_index(den);
}

inline Json to_json(const TAuxReport& r) {
  Json points = Json::array();
  for (const auto& p : r.points)
    points.push_back({{"k", describe_index(p.k)},
                      {"lower", rational_string(p.lower)},
                      {"value", rational_string(p.value)},
                      {"upper", rational_string(p.upper)},
                      {"bounds_hold", p.bounds_hold},
                      {"identity_holds", p.identity_holds}});
  return {{"n", r.n}, {"holds", r.holds()}, {"points", std::move(points)}};
}

inline Json to_json(const TMainReport& r) {
  Json j{{"l", r.l},
         {"n", r.n},
         {"harmonic_lower", to_string(r.harmonic.lower)},
         {"harmonic_upper", to_string(r.harmonic.upper)},
         {"harmonic_at_least_n", r.harmonic_at_least_n},
         {"probe_index", "2^" + r.probe_exponent.str() + "-1"},
         {"left_exponent", r.left_exponent.str()},
         {"right_exponent", r.right_exponent.str()},
         {"integer_inequality", r.integer_inequality},
         {"strict", r.strict},
         {"certified", r.certified()}};
  j["exact_cross_check"] = r.exact_cross_check ? Json(*r.exact_cross_check) : Json("skipped");
  return j;
}

inline Json to_json(const StepComparison& c) {
  Json j{{"pieces_checked", c.pieces_checked}, {"holds", c.holds()}};
  j["first_violation"] = c.first_violation ? Json(describe_index(*c.first_violation)) : Json(nullptr);
  j["first_undecided"] = c.first_undecided ? Json(describe_index(*c.first_undecided)) : Json(nullptr);
  return j;
}

inline Json to_json(const A0BoundReport& r) {
  Json facts = Json::array();
  for (const auto& f : r.facts) facts.push_back({{"n", f.n}, {"lhs", f.lhs.str()}, {"rhs", f.rhs.str()}, {"holds", f.holds}});
  return {{"l", r.l}, {"n_max", r.n_max}, {"comparison", to_json(r.comparison)}, {"facts", facts}, {"holds", r.holds()}};
}

inline Json to_json(const HorrorReport& r) {
  Json pieces = Json::array();
  for (const auto& p : r.pieces)
    pieces.push_back({{"start", describe_index(p.start)},
                      {"region", p.region},
                      {"log2_value", to_string(p.value)},
                      {"dominant_term", p.dominant_term},
                      {"holds", p.holds}});
  return {{"l", r.l}, {"log_submajorized", r.log_submajorized}, {"holds", r.holds()}, {"pieces", std::move(pieces)}};
}

}  // namespace majorize
