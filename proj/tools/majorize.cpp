// majorize: command-line front end.
//
// Exit codes: 0 holds / all pass, 1 a check fails, 2 inconclusive only,
// 64 bad usage or input, 70 numerical failure.

#include <CLI11.hpp>

#include <cstdint>
#include <fstream>
#include <iostream>
#include <optional>
#include <string>
#include <vector>

#include "majorize.hpp"

namespace {

using namespace majorize;

constexpr int kExitUsage = 64;
constexpr int kExitSoftware = 70;

struct Globals {
  std::uint64_t seed = 1;
  std::string out;
  std::optional<double> tol_log;
  std::size_t lambda_max = 64;
  std::size_t l_max = 8;
  bool json = false;
  bool timing = false;

  [[nodiscard]] Tolerances tolerances() const {
    Tolerances t;
    if (tol_log) t.log = *tol_log;
    return t;
  }
};

int status_code(Status s) {
  switch (s) {
    case Status::Holds: return 0;
    case Status::Fails: return 1;
    case Status::Inconclusive: return 2;
  }
  return kExitSoftware;
}

void emit(const Globals& g, const Json& j, const std::string& text) {
  const std::string body = g.json ? j.dump(2) + "\n" : text;
  if (g.out.empty()) {
    std::cout << body;
    return;
  }
  std::ofstream f(g.out, std::ios::binary);
  if (!f) throw input_error("cannot write " + g.out);
  f << body;
}

std::string verdict_line(const Json& v) {
  std::string s = v["status"].get<std::string>();
  if (!v["witness"].is_null()) s += " witness=" + v["witness"].dump();
  if (!v["failure_index"].is_null()) s += " failure_index=" + v["failure_index"].dump();
  if (v.contains("bound_searched")) s += " bound_searched=" + v["bound_searched"].dump();
  return s + "\n";
}

std::string seq_line(const std::vector<double>& v) {
  std::string s;
  for (std::size_t i = 0; i < v.size(); ++i) s += (i ? " " : "") + Json(v[i]).dump();
  return s + "\n";
}

bool is_dyadic_file(const std::string& text) {
  const auto pos = text.find_first_not_of(" \t\r\n");
  return pos != std::string::npos && text[pos] == '{';
}

// ---------------------------------------------------------------------------

struct SeqArgs {
  std::string op, in, with;
  std::size_t n = 2;
};

int run_seq(const Globals& g, const SeqArgs& a) {
  const std::string text = read_file(a.in);
  RealSeq result;
  if (a.op == "mu") {
    result = mu(parse_complex_seq(text, a.in)).vector();
  } else if (a.op == "cesaro") {
    result = cesaro(parse_real_seq(text, a.in));
  } else if (a.op == "dilate") {
    result = dilate(parse_real_seq(text, a.in), a.n);
  } else if (a.op == "half-dilate") {
    result = half_dilate(parse_real_seq(text, a.in));
  } else if (a.op == "direct-sum") {
    if (a.with.empty()) throw input_error("direct-sum needs --with FILE");
    result = direct_sum(parse_nonincreasing(text, a.in), parse_nonincreasing(read_file(a.with), a.with)).vector();
  } else if (a.op == "s") {
    result = s_transform(parse_nonincreasing(text, a.in), g.tolerances().prod_floor).vector();
  } else if (a.op == "t") {
    result = t_transform(parse_nonincreasing(text, a.in), g.tolerances().prod_floor).vector();
  }
  emit(g, {{"op", a.op}, {"result", result}}, seq_line(result));
  return 0;
}

struct OrderArgs {
  std::string kind, b, a;
};

int run_order(const Globals& g, const OrderArgs& a) {
  const NonincreasingSeq b = parse_nonincreasing(read_file(a.b), a.b);
  const NonincreasingSeq x = parse_nonincreasing(read_file(a.a), a.a);
  const Tolerances tol = g.tolerances();
  OrderVerdict v;
  if (a.kind == "hl") v = check_hl_submajor(b, x, tol);
  if (a.kind == "log") v = check_log_submajor(b, x, tol);
  if (a.kind == "uniform") v = check_uniform_submajor(b, x, g.lambda_max, tol);
  Json j = to_json(v);
  j["kind"] = a.kind;
  emit(g, j, verdict_line(j));
  return status_code(v.status);
}

struct MatrixArgs {
  std::string op, in, y, x;
};

int run_matrix(const Globals& g, const MatrixArgs& a) {
  const Tolerances tol = g.tolerances();
  if (a.op == "construct") {
    if (a.y.empty() || a.x.empty()) throw input_error("construct needs --y FILE and --x FILE");
    const ComplexSeq y = parse_complex_seq(read_file(a.y), a.y);
    const NonincreasingSeq x = parse_nonincreasing(read_file(a.x), a.x);
    const DenseMatrix m = construct_from_spectrum(y, x, tol);
    const Json j{{"op", a.op},
                 {"matrix", matrix_to_json(m.matrix())},
                 {"eigenvalues", to_json(eigen_seq(m))},
                 {"singular_values", to_json(sv_seq(m))}};
    emit(g, j, j["matrix"].dump() + "\n");
    return 0;
  }
  if (a.in.empty()) throw input_error("--in FILE is required for op " + a.op);
  const DenseMatrix m = parse_matrix(read_file(a.in), a.in);
  Json j{{"op", a.op}};
  int code = 0;
  if (a.op == "weyl") {
    const OrderVerdict v = weyl_check(m, tol);
    j["verdict"] = to_json(v);
    code = status_code(v.status);
  } else if (a.op == "lidskii") {
    const TraceIdentity r = lidskii_check(m, tol);
    j["report"] = to_json(r);
    code = r.holds() ? 0 : 1;
  } else if (a.op == "ringrose") {
    const RingroseSplit split = ringrose_decompose(m);
    const RingroseDiagnostics d = ringrose_diagnostics(m, split);
    j["n_part"] = matrix_to_json(split.n_part);
    j["q_part"] = matrix_to_json(split.q_part);
    j["diagnostics"] = to_json(d);
    const bool ok = d.reconstruction_error <= tol.recon * std::max(1.0, d.norm) &&
                    d.q_spectral_radius <= tol.eig * std::max(1.0, d.norm) && d.eigen_mismatch <= tol.eig;
    j["holds"] = ok;
    code = ok ? 0 : 1;
  } else if (a.op == "qn400") {
    const QuasinilpotentSumCheck r = quasinilpotent_sum_check(m, tol);
    j["real_part"] = to_json(r.real_part);
    j["imag_part"] = to_json(r.imag_part);
    code = r.holds() ? 0 : 1;
  } else if (a.op == "prefinal") {
    const PrefinalCheck r = prefinal_bound_check(m, tol);
    j["real_part"] = to_json(r.real_part);
    j["imag_part"] = to_json(r.imag_part);
    code = r.holds() ? 0 : 1;
  } else if (a.op == "geom") {
    const GeomEstimateCheck r = geom_estimate_check(m, tol);
    j["real_part"] = to_json(r.real_part);
    j["imag_part"] = to_json(r.imag_part);
    code = std::max(status_code(r.real_part.status), status_code(r.imag_part.status));
    if (r.real_part.fails() || r.imag_part.fails()) code = 1;
  }
  emit(g, j, j.dump() + "\n");
  return code;
}

struct IdealArgs {
  std::string op, generator, in;
  unsigned n_max = 5;
};

int run_ideal(const Globals& g, const IdealArgs& a) {
  const Tolerances tol = g.tolerances();
  const std::string gen_text = read_file(a.generator);
  Json j{{"op", a.op}};
  Status status = Status::Holds;

  if (is_dyadic_file(gen_text)) {
    const DyadicStepSeq gen = parse_dyadic(gen_text, a.generator);
    if (a.op == "geom-stable") {
      const ExactGeomStability r = exact_geom_stable_check(gen, g.l_max);
      j["verdict"] = to_json(r.verdict);
      Json w = Json::array();
      for (const auto& x : r.witnesses)
        w.push_back({{"l", x.l}, {"index", describe_index(*x.index)}, {"t_log2", rational_string(x.t_log2)},
                     {"envelope_log2", rational_string(x.envelope_log2)}});
      j["refutations"] = w;
      status = r.verdict.status;
    } else if (a.op == "member") {
      if (a.in.empty()) throw input_error("member needs --in FILE");
      const ExactVerdict v = exact_ideal_member(parse_dyadic(read_file(a.in), a.in), gen, g.l_max);
      j["verdict"] = to_json(v);
      status = v.status;
    } else {
      throw input_error("op " + a.op + " needs a numeric generator");
    }
    emit(g, j, verdict_line(j["verdict"]));
    return status_code(status);
  }

  const PrincipalIdealModel ideal(parse_nonincreasing(gen_text, a.generator), g.l_max);
  OrderVerdict v;
  if (a.op == "geom-stable") {
    v = geom_stable_check(ideal, tol);
  } else if (a.op == "commutator") {
    if (a.in.empty()) throw input_error("commutator needs --in MATRIX");
    v = commutator_member(parse_matrix(read_file(a.in), a.in), ideal, tol);
  } else {
    if (a.in.empty()) throw input_error(a.op + " needs --in FILE");
    const NonincreasingSeq x = parse_nonincreasing(read_file(a.in), a.in);
    v = a.op == "member" ? ideal_member(x, ideal, tol) : le_member(x, ideal, tol);
  }
  j["verdict"] = to_json(v);
  emit(g, j, verdict_line(j["verdict"]));
  return status_code(v.status);
}

struct CounterexampleArgs {
  std::string check, b;
  std::optional<unsigned> n, l;
  std::size_t count = 50;
};

int run_counterexample(const Globals& g, const CounterexampleArgs& a) {
  Json j{{"check", a.check}};
  bool confirmed = false;
  if (a.check == "taux") {
    const unsigned n = a.n.value_or(1);
    require(n <= 2, "taux supports n <= 2");
    Rng rng = trial_rng(g.seed, 7, n);
    const TAuxReport r = verify_t_aux(n, sample_t_aux_indices(n, a.count, rng));
    j["report"] = to_json(r);
    confirmed = r.holds();
  } else if (a.check == "tmain") {
    const TMainReport r = verify_t_main(a.l.value_or(1), a.n.value_or(4));
    j["report"] = to_json(r);
    confirmed = r.certified();
  } else if (a.check == "a0") {
    const A0BoundReport r = verify_a0_bound(a.l.value_or(1), a.n.value_or(4));
    j["report"] = to_json(r);
    confirmed = r.holds();
  } else if (a.check == "horror") {
    const unsigned l = a.l.value_or(0);
    const unsigned n_max = a.n.value_or(3);
    const DyadicStepSeq b = a.b.empty() ? tower_sequence(n_max) : parse_dyadic(read_file(a.b), a.b);
    const HorrorReport r = verify_horror(b, l, n_max);
    j["report"] = to_json(r);
    confirmed = r.holds();
  } else if (a.check == "geomstable") {
    const ExactGeomStability r = exact_geom_stable_check(tower_sequence(a.n.value_or(5)), g.l_max);
    j["verdict"] = to_json(r.verdict);
    confirmed = r.verdict.fails();
  }
  j["confirmed"] = confirmed;
  emit(g, j, a.check + (confirmed ? ": confirmed\n" : ": not confirmed\n"));
  return confirmed ? 0 : 1;
}

struct SuiteArgs {
  std::size_t trials = 200;
  std::size_t max_dim = 8;
  std::vector<std::string> only;
};

int run_suite_command(const Globals& g, const SuiteArgs& a) {
  SuiteConfig c;
  c.seed = g.seed;
  c.trials = a.trials;
  c.max_dim = a.max_dim;
  c.lambda_max = g.lambda_max;
  c.l_max = g.l_max;
  c.tol = g.tolerances();
  c.timing = g.timing;
  c.only = a.only;
  const SuiteReport r = run_suite(c);
  std::string text;
  for (const auto& check : r.checks)
    text += check.status() + "  " + check.name + "  (" + std::to_string(check.report.trials) + " trials)\n";
  emit(g, to_json(r, c), text);
  return r.exit_code();
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Submajorization, spectral and exact counterexample checks"};
  app.require_subcommand(1);
  Globals g;
  app.add_option("--seed", g.seed, "Random seed")->capture_default_str();
  app.add_option("--out", g.out, "Write output to FILE instead of stdout");
  app.add_option("--tol-log", g.tol_log, "Log-product tolerance")->check(CLI::NonNegativeNumber);
  app.add_option("--lambda-max", g.lambda_max, "Largest window stretch tried")->check(CLI::PositiveNumber);
  app.add_option("--l-max", g.l_max, "Largest dilation exponent tried")->check(CLI::Range(1, 8));
  app.add_flag("--json", g.json, "Emit JSON");
  app.add_flag("--timing", g.timing, "Include runtimes in suite reports (not reproducible)");

  SeqArgs seq;
  auto* seq_cmd = app.add_subcommand("seq", "Sequence transforms");
  seq_cmd->add_option("--op", seq.op)->required()->check(
      CLI::IsMember({"mu", "cesaro", "dilate", "half-dilate", "direct-sum", "s", "t"}));
  seq_cmd->add_option("--in", seq.in, "Input sequence")->required();
  seq_cmd->add_option("--with", seq.with, "Second sequence for direct-sum");
  seq_cmd->add_option("--n", seq.n, "Dilation factor")->check(CLI::PositiveNumber);

  OrderArgs order;
  auto* order_cmd = app.add_subcommand("order", "Submajorization deciders");
  order_cmd->add_option("--kind", order.kind)->required()->check(CLI::IsMember({"hl", "log", "uniform"}));
  order_cmd->add_option("--b", order.b, "Left sequence")->required();
  order_cmd->add_option("--a", order.a, "Right sequence")->required();
  order_cmd->add_option("--lambda-max", g.lambda_max, "Largest window stretch tried")->check(CLI::PositiveNumber);

  MatrixArgs matrix;
  auto* matrix_cmd = app.add_subcommand("matrix", "Matrix checks and constructions");
  matrix_cmd->add_option("--op", matrix.op)->required()->check(
      CLI::IsMember({"weyl", "lidskii", "ringrose", "qn400", "prefinal", "geom", "construct"}));
  matrix_cmd->add_option("--in", matrix.in, "Input matrix");
  matrix_cmd->add_option("--y", matrix.y, "Target eigenvalues");
  matrix_cmd->add_option("--x", matrix.x, "Singular value bounds");

  IdealArgs ideal;
  auto* ideal_cmd = app.add_subcommand("ideal", "Principal ideal queries");
  ideal_cmd->add_option("--op", ideal.op)->required()->check(
      CLI::IsMember({"member", "le", "geom-stable", "commutator"}));
  ideal_cmd->add_option("--generator", ideal.generator, "Generator sequence or step sequence")->required();
  ideal_cmd->add_option("--in", ideal.in, "Queried sequence or matrix");
  ideal_cmd->add_option("--l-max", g.l_max, "Largest dilation exponent tried")->check(CLI::Range(1, 8));

  CounterexampleArgs cx;
  auto* cx_cmd = app.add_subcommand("counterexample", "Exact tower-sequence checks");
  cx_cmd->add_option("--check", cx.check)->required()->check(
      CLI::IsMember({"taux", "tmain", "a0", "horror", "geomstable"}));
  cx_cmd->add_option("--n", cx.n, "Block index, or n_max for a0/horror/geomstable");
  cx_cmd->add_option("--l", cx.l, "Dilation exponent");
  cx_cmd->add_option("--b", cx.b, "Step sequence for horror");
  cx_cmd->add_option("--count", cx.count, "Sampled indices for taux")->check(CLI::PositiveNumber);

  SuiteArgs suite;
  auto* suite_cmd = app.add_subcommand("suite", "Run every registered check");
  suite_cmd->add_option("--trials", suite.trials, "Trials per randomized check")->check(CLI::PositiveNumber);
  suite_cmd->add_option("--max-dim", suite.max_dim, "Largest matrix dimension")->check(CLI::Range(1, 64));
  suite_cmd->add_option("--only", suite.only, "Run only the named checks");

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return kExitUsage;
  }

  try {
    if (*seq_cmd) return run_seq(g, seq);
    if (*order_cmd) return run_order(g, order);
    if (*matrix_cmd) return run_matrix(g, matrix);
    if (*ideal_cmd) return run_ideal(g, ideal);
    if (*cx_cmd) return run_counterexample(g, cx);
    if (*suite_cmd) return run_suite_command(g, suite);
  } catch (const input_error& e) {
    std::cerr << "majorize: " << e.what() << "\n";
    return kExitUsage;
  } catch (const computation_error& e) {
    std::cerr << "majorize: computation failed: " << e.what() << "\n";
    return kExitSoftware;
  } catch (const std::exception& e) {
    std::cerr << "majorize: internal error: " << e.what() << "\n";
    return kExitSoftware;
  }
  return kExitUsage;
}
