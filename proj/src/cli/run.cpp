#include <fstream>
#include <functional>
#include <map>
#include <optional>
#include <sstream>

#include "CLI11.hpp"
#include "ckms/cli.hpp"
#include "ckms/errors.hpp"
#include "ckms/tensorops.hpp"
#include "io.hpp"

namespace ckms::cli {
namespace {

struct Document {
  std::string command;
  Json inputs = Json::object();
  Json result = Json::object();
  bool heuristic = false;
  std::optional<double> residual;
  std::vector<std::string> warnings;
  int exit_code = 0;

  Json to_json() const {
    return {{"command", command},
            {"inputs", inputs},
            {"result", result},
            {"mode", heuristic ? "heuristic" : "exact"},
            {"residual", residual ? Json(*residual) : Json(nullptr)},
            {"warnings", warnings}};
  }
};

/// Raw option strings of every subcommand; unused ones stay empty.
struct Options {
  std::string matrix, matrix_a, matrix_b;
  std::string vector, vector_a, vector_b, a, b;
  std::string omega, omega_a, omega_b;
  std::string word, x, y, strategy = "leftmost";
  std::string exponents, dims, lambda, mu;
  long k = 0, p = 0, q = 0;
  int n = 0;
};

struct Param {
  ParamVector param;
  std::optional<Interval> beta;
  Json description;
};

/// ρ_a for an explicit vector, the solution of the β-equation for ω, or the canonical point e(A) by default.
Param resolve_param(const ZeroOneMatrix& A, const std::string& vector, const std::string& omega, const RunConfig& cfg) {
  if (!vector.empty() && !omega.empty()) throw UsageError("give either a parameter vector or frequencies, not both");
  if (!vector.empty()) {
    const Membership m = in_lambda(A, parse_vector(vector), cfg.tolerance);
    if (!m.accepted)
      throw Rejection("parameter vector is not in Lambda(A): PFE enclosure [" + fmt17(m.pfe.lo) + ", " + fmt17(m.pfe.hi) + "]");
    return {*m.param, std::nullopt, {{"source", "vector"}, {"pfe", describe(m.pfe)}}};
  }
  if (!omega.empty()) {
    const auto w = parse_rationals(omega);
    auto sol = solve_beta(A, FrequencyVector::from_rationals(w), cfg.precision);
    return {sol.param, sol.beta, {{"source", "frequencies"}, {"beta", describe(sol.beta)}}};
  }
  return {canonical_point(A, cfg.precision), std::nullopt, {{"source", "canonical point e(A)"}}};
}

Json describe_param(const Param& p) {
  Json j = p.description;
  Json entries = Json::array();
  for (std::size_t i = 0; i < p.param.enclosures.size(); ++i)
    entries.push_back(i < p.param.entries.size() ? describe(p.param.entries[i]) : describe(p.param.enclosures[i]));
  j["a"] = entries;
  return j;
}

/// A word already in normal order s_J s_K^*.
Monomial parse_monomial(const std::string& text, std::size_t n) {
  const Word w = parse_word(text, n);
  Monomial m;
  bool seen_star = false;
  for (const auto& l : w) {
    if (!l.starred && seen_star) throw UsageError("'" + text + "' is not of the form s_J s_K*");
    seen_star = seen_star || l.starred;
    (l.starred ? m.K : m.J).push_back(l.index);
  }
  std::reverse(m.K.begin(), m.K.end());
  return m;
}

void require(const std::string& value, const std::string& flag) {
  if (value.empty()) throw UsageError("missing required option " + flag);
}

ClassifyOptions classify_options(const RunConfig& cfg) {
  ClassifyOptions o;
  o.denominator_bound = cfg.denominator_bound;
  o.tolerance = cfg.tolerance;
  return o;
}

std::vector<Scalar> classify_input(const Options& o, Document& doc) {
  if (!o.exponents.empty()) {
    if (!o.vector.empty()) throw UsageError("give either --vector or --exponents");
    const auto p = parse_longs(o.exponents);
    const Scalar x = solve_power_equation(p, Rational(1, Integer(1) << 60));
    std::vector<Scalar> a;
    for (long e : p) a.push_back(Scalar::power(x, e));
    doc.inputs["base"] = describe(x);
    return a;
  }
  require(o.vector, "--vector");
  return parse_vector(o.vector);
}

void record_label(Document& doc, const TypeLabel& label) {
  doc.result = describe(label);
  doc.heuristic = label.mode == TypeLabel::Mode::heuristic;
  doc.warnings.insert(doc.warnings.end(), label.warnings.begin(), label.warnings.end());
}

// -- subcommands -------------------------------------------------------------

void cmd_pf(const Options& o, const RunConfig& cfg, Document& doc) {
  require(o.matrix, "--matrix");
  const ZeroOneMatrix A = parse_matrix(o.matrix);
  doc.inputs["matrix"] = to_json(A);
  PerronOptions po;
  po.precision = cfg.precision;
  const PFData pf = pf_data(to_interval_matrix(A), po);
  const Scalar c = perron_value(A, cfg.precision);
  Json vec = Json::array();
  for (const auto& iv : pf.eigenvector) vec.push_back(describe(iv));
  doc.result = {{"pfe", describe(c)},
                {"pfe_bracket", describe(pf.eigenvalue)},
                {"eigenvector", vec},
                {"eigenvector_rigorous", pf.eigenvector_rigorous},
                {"iterations", pf.iterations},
                {"in_class", in_class_cdm(A)}};
  if (in_class_cdm(A)) {
    Json e = Json::array();
    for (const auto& s : canonical_point(A, cfg.precision).entries) e.push_back(describe(s));
    doc.result["canonical_point"] = e;
  }
  doc.residual = pf.eigenvalue.hi - pf.eigenvalue.lo;
  doc.heuristic = !pf.eigenvector_rigorous || !c.is_exact();
}

void cmd_solve_beta(const Options& o, const RunConfig& cfg, Document& doc) {
  require(o.matrix, "--matrix");
  require(o.omega, "--omega");
  const ZeroOneMatrix A = parse_matrix(o.matrix);
  const auto w = parse_rationals(o.omega);
  doc.inputs = {{"matrix", to_json(A)}, {"omega", Json::array()}};
  for (const auto& r : w) doc.inputs["omega"].push_back(to_string(r));
  const BetaSolution sol = solve_beta(A, FrequencyVector::from_rationals(w), cfg.precision);
  Json a = Json::array();
  for (const auto& iv : sol.param.enclosures) a.push_back(describe(iv));
  const GroupModulus g = group_modulus(sol.beta, w);
  doc.result = {{"beta", describe(sol.beta)},
                {"a", a},
                {"group_modulus", {{"generator", to_string(g.generator)}, {"r", describe(g.r)}, {"lambda", describe(g.lambda)}}}};
  doc.residual = sol.beta.hi - sol.beta.lo;
}

void cmd_membership(const Options& o, const RunConfig& cfg, Document& doc) {
  require(o.matrix, "--matrix");
  require(o.vector, "--vector");
  const ZeroOneMatrix A = parse_matrix(o.matrix);
  const auto v = parse_vector(o.vector);
  doc.inputs["matrix"] = to_json(A);
  for (const auto& s : v) doc.inputs["vector"].push_back(to_json(s));
  const Membership m = in_lambda(A, v, cfg.tolerance);
  doc.result = {{"accepted", m.accepted}, {"pfe", describe(m.pfe)}};
  doc.residual = m.pfe.contains(1.0) ? 0.0 : std::min(std::abs(m.pfe.lo - 1.0), std::abs(m.pfe.hi - 1.0));
  doc.exit_code = m.accepted ? 0 : 1;
}

void cmd_normalize(const Options& o, const RunConfig&, Document& doc) {
  require(o.matrix, "--matrix");
  require(o.word, "--word");
  const ZeroOneMatrix A = parse_matrix(o.matrix);
  Strategy s;
  if (o.strategy == "leftmost")
    s = Strategy::leftmost;
  else if (o.strategy == "rightmost")
    s = Strategy::rightmost;
  else
    throw UsageError("--strategy must be leftmost or rightmost");
  const Word w = parse_word(o.word, A.dim());
  doc.inputs = {{"matrix", to_json(A)}, {"word", to_string(w)}, {"strategy", o.strategy}};
  std::vector<RewriteStep> trace;
  const NormalForm nf = normalize(A, w, s, &trace);
  doc.result = {{"normal_form", to_json(nf)}, {"text", to_string(nf)}, {"rewrite_steps", trace.size()}};
}

void cmd_state_eval(const Options& o, const RunConfig& cfg, Document& doc) {
  require(o.matrix, "--matrix");
  require(o.word, "--word");
  const ZeroOneMatrix A = parse_matrix(o.matrix);
  const Word w = parse_word(o.word, A.dim());
  doc.inputs = {{"matrix", to_json(A)}, {"word", to_string(w)}};
  const Param p = resolve_param(A, o.vector, o.omega, cfg);
  const StateSpec spec(p.param, cfg.precision);
  const NormalForm nf = normalize(A, w);
  const Enclosure v = eval_state(spec, nf);
  doc.result = {{"parameter", describe_param(p)}, {"normal_form", to_string(nf)}, {"value", describe(v)}};
  doc.residual = v.value.hi - v.value.lo;
  doc.heuristic = !v.exact && !spec.pf().eigenvector_rigorous;
}

void cmd_kms_check(const Options& o, const RunConfig& cfg, std::size_t max_len, Document& doc) {
  require(o.matrix, "--matrix");
  const ZeroOneMatrix A = parse_matrix(o.matrix);
  const std::vector<Rational> w = o.omega.empty() ? std::vector<Rational>(A.dim(), Rational(1)) : parse_rationals(o.omega);
  doc.inputs = {{"matrix", to_json(A)}, {"omega", Json::array()}};
  for (const auto& r : w) doc.inputs["omega"].push_back(to_string(r));
  const FrequencyVector fw = FrequencyVector::from_rationals(w);
  const BetaSolution sol = solve_beta(A, fw, cfg.precision);
  const StateSpec spec(sol.param, cfg.precision);

  std::vector<std::pair<Monomial, Monomial>> pairs;
  if (!o.x.empty() || !o.y.empty()) {
    require(o.x, "--x");
    require(o.y, "--y");
    pairs.emplace_back(parse_monomial(o.x, A.dim()), parse_monomial(o.y, A.dim()));
    doc.inputs["x"] = o.x;
    doc.inputs["y"] = o.y;
  } else {
    const auto words = admissible_words(A, max_len);
    std::vector<Monomial> monos;
    for (const auto& J : words)
      for (const auto& K : words) monos.push_back({J, K});
    for (const auto& x : monos)
      for (const auto& y : monos) pairs.emplace_back(x, y);
    doc.inputs["max_word_len"] = max_len;
  }

  double worst = 0.0;
  std::size_t worst_at = 0, failures = 0;
  for (std::size_t i = 0; i < pairs.size(); ++i) {
    const KmsResult r = kms_check(spec, fw, sol.beta, pairs[i].first, pairs[i].second, cfg.tolerance);
    if (!r.passed) ++failures;
    if (r.residual > worst) {
      worst = r.residual;
      worst_at = i;
    }
  }
  doc.result = {{"beta", describe(sol.beta)},
                {"pairs_checked", pairs.size()},
                {"failures", failures},
                {"passed", failures == 0},
                {"worst", {{"x", to_json(pairs[worst_at].first)}, {"y", to_json(pairs[worst_at].second)}}}};
  doc.residual = worst;
  doc.exit_code = failures == 0 ? 0 : 1;
}

struct TensorInputs {
  ZeroOneMatrix A, B;
  Param pa, pb;
};

TensorInputs tensor_inputs(const Options& o, const RunConfig& cfg, Document& doc) {
  require(o.matrix_a, "--matrix-a");
  require(o.matrix_b, "--matrix-b");
  const ZeroOneMatrix A = parse_matrix(o.matrix_a), B = parse_matrix(o.matrix_b);
  if (A.dim() * B.dim() > cfg.dimension_cap) throw Rejection("A⊠B exceeds the dimension cap");
  TensorInputs t{A, B, resolve_param(A, o.vector_a, o.omega_a, cfg), resolve_param(B, o.vector_b, o.omega_b, cfg)};
  doc.inputs = {{"matrix_a", to_json(t.A)}, {"matrix_b", to_json(t.B)}};
  return t;
}

void cmd_tensor_state(const Options& o, const RunConfig& cfg, Document& doc) {
  require(o.word, "--word");
  const TensorInputs t = tensor_inputs(o, cfg, doc);
  const ZeroOneMatrix AB = kronecker(t.A, t.B, cfg.dimension_cap);
  const Word w = parse_word(o.word, AB.dim());
  doc.inputs["word"] = to_string(w);
  const StateSpec sa(t.pa.param, cfg.precision), sb(t.pb.param, cfg.precision);
  const StateSpec sab(kronecker_param(t.pa.param, t.pb.param), cfg.precision);
  const NormalForm nf = normalize(AB, w);
  const Enclosure lhs = tensor_state_eval(sa, sb, nf);
  const Enclosure rhs = eval_state(sab, nf);
  const double residual = max_distance(lhs.value, rhs.value);
  doc.result = {{"parameter_a", describe_param(t.pa)},
                {"parameter_b", describe_param(t.pb)},
                {"normal_form", to_string(nf)},
                {"tensor_state", describe(lhs)},
                {"kronecker_state", describe(rhs)},
                {"passed", residual <= cfg.tolerance}};
  doc.residual = residual;
  doc.exit_code = residual <= cfg.tolerance ? 0 : 1;
}

void cmd_verify_homomorphism(const Options& o, const RunConfig& cfg, Document& doc) {
  const TensorInputs t = tensor_inputs(o, cfg, doc);
  doc.inputs["max_word_len"] = cfg.max_word_len;
  const StateSpec sa(t.pa.param, cfg.precision), sb(t.pb.param, cfg.precision);
  const TensorReport r = verify_tensor_identity(sa, sb, cfg.max_word_len, cfg.tolerance);
  doc.result = {{"parameter_a", describe_param(t.pa)},
                {"parameter_b", describe_param(t.pb)},
                {"monomials_checked", r.monomials_checked},
                {"max_residual", r.max_residual},
                {"worst", to_json(r.worst)},
                {"passed", r.max_residual <= cfg.tolerance}};
  doc.residual = r.max_residual;
  doc.exit_code = r.max_residual <= cfg.tolerance ? 0 : 1;
}

void cmd_coassoc(const Options& o, const RunConfig&, Document& doc) {
  std::vector<std::array<std::size_t, 3>> triples;
  if (!o.dims.empty()) {
    const auto d = parse_longs(o.dims);
    if (d.size() != 3 || d[0] < 1 || d[1] < 1 || d[2] < 1) throw UsageError("--dims needs three positive integers");
    triples.push_back({static_cast<std::size_t>(d[0]), static_cast<std::size_t>(d[1]), static_cast<std::size_t>(d[2])});
  } else {
    for (std::size_t a : {2, 3})
      for (std::size_t b : {2, 3})
        for (std::size_t c : {2, 3}) triples.push_back({a, b, c});
  }
  bool all = true;
  Json rows = Json::array();
  for (const auto& [a, b, c] : triples) {
    const bool ok = check_coassociativity(a, b, c);
    all = all && ok;
    rows.push_back({{"dims", {a, b, c}}, {"passed", ok}});
  }
  doc.result = {{"triples", rows}, {"passed", all}};
  doc.exit_code = all ? 0 : 1;
}

void cmd_classify(const Options& o, const RunConfig& cfg, Document& doc) {
  const auto a = classify_input(o, doc);
  for (const auto& s : a) doc.inputs["vector"].push_back(to_json(s));
  const TypeLabel label = detect_lambda(a, classify_options(cfg));
  record_label(doc, label);
  if (o.matrix.empty()) {
    doc.warnings.push_back("vector is not certified as a point of any Lambda(A); pass --matrix to certify it");
  } else {
    const ZeroOneMatrix A = parse_matrix(o.matrix);
    doc.inputs["matrix"] = to_json(A);
    const Membership m = in_lambda(A, a, cfg.tolerance);
    doc.result["certified"] = m.accepted;
    if (!m.accepted) doc.warnings.push_back("vector is not in Lambda(A) for the given matrix");
  }
}

void cmd_tensor_type(const Options& o, const RunConfig& cfg, Document& doc) {
  require(o.a, "--a");
  require(o.b, "--b");
  const auto a = parse_vector(o.a), b = parse_vector(o.b);
  for (const auto& s : a) doc.inputs["a"].push_back(to_json(s));
  for (const auto& s : b) doc.inputs["b"].push_back(to_json(s));
  record_label(doc, tensor_type(a, b, classify_options(cfg)));
}

void cmd_power_type(const Options& o, const RunConfig& cfg, Document& doc) {
  if (o.k < 1) throw UsageError("--k must be a positive integer");
  doc.inputs["k"] = o.k;
  if (o.p != 0 || o.q != 0) {
    if (o.p < 1 || o.q < 1) throw UsageError("--p and --q must both be positive");
    doc.inputs["p"] = o.p;
    doc.inputs["q"] = o.q;
    const long r = power_type_ck2(o.p, o.q, o.k);
    const auto pair = power_pair(o.p, o.q);
    const TypeLabel direct = power_type_direct(pair, o.k, classify_options(cfg), cfg.dimension_cap);
    const Scalar x = solve_power_equation({o.p, o.q}, Rational(1, Integer(1) << 60));
    const Scalar formula = pow(x, r);
    const bool agree = same_lambda(direct.lambda, formula);
    doc.result = {{"r", r}, {"lambda_formula", describe(formula)}, {"direct", describe(direct)}, {"agree", agree}};
    doc.heuristic = direct.mode == TypeLabel::Mode::heuristic;
    doc.exit_code = agree ? 0 : 1;
    return;
  }
  const auto a = classify_input(o, doc);
  for (const auto& s : a) doc.inputs["vector"].push_back(to_json(s));
  record_label(doc, power_type_direct(a, o.k, classify_options(cfg), cfg.dimension_cap));
}

void cmd_afd_rule(const Options& o, const RunConfig& cfg, Document& doc) {
  require(o.lambda, "--lambda");
  require(o.mu, "--mu");
  const Scalar l = parse_scalar(o.lambda), m = parse_scalar(o.mu);
  doc.inputs = {{"lambda", to_json(l)}, {"mu", to_json(m)}};
  record_label(doc, afd_tensor_rule(l, m, classify_options(cfg)));
}

void cmd_iii1_family(const Options& o, const RunConfig& cfg, Document& doc) {
  if (o.n < 2) throw UsageError("--n must be at least 2");
  doc.inputs["n"] = o.n;
  const auto v = iii1_family(o.n);
  Json vec = Json::array();
  for (const auto& r : v) vec.push_back(to_string(r));
  const TypeLabel label = detect_lambda({v.begin(), v.end()}, classify_options(cfg));
  doc.result = {{"vector", vec}, {"type", describe(label)}};
}

void cmd_reproduce(const RunConfig& cfg, Document& doc) {
  const Report report = reproduce_paper(cfg);
  Json checks = Json::array();
  std::size_t passed = 0;
  for (const auto& c : report.checks) {
    checks.push_back({{"id", c.id}, {"claim", c.claim}, {"expected", c.expected}, {"observed", c.observed}, {"passed", c.passed}});
    passed += c.passed ? 1 : 0;
  }
  doc.inputs["seed"] = cfg.seed;
  doc.result = {{"checks", checks}, {"flags", report.flags}, {"passed", passed}, {"failed", report.checks.size() - passed}};
  doc.exit_code = passed == report.checks.size() ? 0 : 1;
}

// -- rendering ---------------------------------------------------------------

void flatten(const Json& j, const std::string& prefix, std::ostream& out) {
  if (j.is_object()) {
    for (const auto& [k, v] : j.items()) flatten(v, prefix.empty() ? k : prefix + "." + k, out);
  } else if (j.is_array() && !j.empty() && (j.front().is_object() || j.front().is_array())) {
    for (std::size_t i = 0; i < j.size(); ++i) flatten(j[i], prefix + "[" + std::to_string(i) + "]", out);
  } else {
    out << prefix << ": " << (j.is_string() ? j.get<std::string>() : j.dump()) << "\n";
  }
}

std::string render(const Document& doc, const std::string& format) {
  if (format == "json") return doc.to_json().dump(2) + "\n";
  std::ostringstream out;
  if (doc.command == "reproduce-paper") {
    for (const auto& c : doc.result["checks"])
      out << (c["passed"].get<bool>() ? "PASS  " : "FAIL  ") << c["id"].get<std::string>() << "  "
          << c["claim"].get<std::string>() << "  expected " << c["expected"].get<std::string>() << ", observed "
          << c["observed"].get<std::string>() << "\n";
    for (const auto& f : doc.result["flags"]) out << "FLAG  " << f.get<std::string>() << "\n";
    out << doc.result["passed"].dump() << " passed, " << doc.result["failed"].dump() << " failed\n";
    return out.str();
  }
  flatten(doc.to_json(), "", out);
  return out.str();
}

}  // namespace

RunOutput run(const std::vector<std::string>& args) {
  RunConfig cfg;
  Options o;
  CLI::App app{"KMS states over Cuntz-Krieger algebras: Perron-Frobenius data, tensor products and type III labels", "ckms"};
  app.require_subcommand(1);
  app.add_option("--tolerance", cfg.tolerance, "acceptance tolerance")->check(CLI::PositiveNumber);
  app.add_option("--precision", cfg.precision, "numeric precision of enclosures")->check(CLI::PositiveNumber);
  auto* max_len_opt = app.add_option("--max-word-len", cfg.max_word_len, "word length bound")->check(CLI::Range(1, 8));
  app.add_option("--dimension-cap", cfg.dimension_cap, "largest Kronecker dimension")->check(CLI::PositiveNumber);
  app.add_option("--denominator-bound", cfg.denominator_bound, "continued-fraction denominator bound")
      ->check(CLI::PositiveNumber);
  app.add_option("--seed", cfg.seed, "seed for randomized checks");
  app.add_option("--out", cfg.out, "also write the output to this file");
  app.add_option("--format", cfg.format, "output format")->check(CLI::IsMember({"json", "table"}));

  std::map<std::string, std::function<void(Document&)>> handlers;
  auto sub = [&](const std::string& name, const std::string& help, std::function<void(Document&)> fn) {
    auto* s = app.add_subcommand(name, help);
    s->fallthrough();
    handlers[name] = std::move(fn);
    return s;
  };
  auto params = [&](CLI::App* s, const std::string& suffix, std::string& matrix, std::string& vec, std::string& omega) {
    s->add_option("--matrix" + suffix, matrix, "0-1 matrix: F<n> or JSON rows");
    s->add_option("--vector" + suffix, vec, "parameter vector in Lambda(A)");
    s->add_option("--omega" + suffix, omega, "frequencies; the parameter is exp(-beta omega) at the critical beta");
  };

  auto* pf = sub("pf", "Perron-Frobenius data of a matrix", [&](Document& d) { cmd_pf(o, cfg, d); });
  pf->add_option("--matrix", o.matrix, "0-1 matrix")->required();
  auto* sb = sub("solve-beta", "critical inverse temperature for frequencies", [&](Document& d) { cmd_solve_beta(o, cfg, d); });
  sb->add_option("--matrix", o.matrix)->required();
  sb->add_option("--omega", o.omega, "positive rational frequencies")->required();
  auto* mem = sub("membership", "test a in Lambda(A)", [&](Document& d) { cmd_membership(o, cfg, d); });
  mem->add_option("--matrix", o.matrix)->required();
  mem->add_option("--vector", o.vector)->required();
  auto* nrm = sub("normalize", "normal form of a word", [&](Document& d) { cmd_normalize(o, cfg, d); });
  nrm->add_option("--matrix", o.matrix)->required();
  nrm->add_option("--word", o.word, "e.g. \"s1* s1\"")->required();
  nrm->add_option("--strategy", o.strategy)->check(CLI::IsMember({"leftmost", "rightmost"}));
  auto* se = sub("state-eval", "evaluate rho_a on a word", [&](Document& d) { cmd_state_eval(o, cfg, d); });
  params(se, "", o.matrix, o.vector, o.omega);
  se->add_option("--word", o.word)->required();
  auto* kc = sub("kms-check", "KMS condition on monomial pairs", [&](Document& d) {
    cmd_kms_check(o, cfg, max_len_opt->count() > 0 ? cfg.max_word_len : 2, d);
  });
  kc->add_option("--matrix", o.matrix)->required();
  kc->add_option("--omega", o.omega, "frequencies (default all ones)");
  kc->add_option("--x", o.x, "monomial s_J s_K*");
  kc->add_option("--y", o.y, "monomial s_J s_K*");
  auto* ts = sub("tensor-state", "evaluate the tensor-product state on a word over A⊠B",
                 [&](Document& d) { cmd_tensor_state(o, cfg, d); });
  params(ts, "-a", o.matrix_a, o.vector_a, o.omega_a);
  params(ts, "-b", o.matrix_b, o.vector_b, o.omega_b);
  ts->add_option("--word", o.word)->required();
  auto* vh = sub("verify-homomorphism", "compare the tensor-product state with rho_{a⊠b}",
                 [&](Document& d) { cmd_verify_homomorphism(o, cfg, d); });
  params(vh, "-a", o.matrix_a, o.vector_a, o.omega_a);
  params(vh, "-b", o.matrix_b, o.vector_b, o.omega_b);
  auto* co = sub("coassoc", "coassociativity of the generator split", [&](Document& d) { cmd_coassoc(o, cfg, d); });
  co->add_option("--dims", o.dims, "three dimensions, e.g. 2,3,2 (default: all of {2,3}^3)");
  auto* cl = sub("classify", "type III_lambda label of a vector", [&](Document& d) { cmd_classify(o, cfg, d); });
  cl->add_option("--vector", o.vector);
  cl->add_option("--exponents", o.exponents, "power form (x^p1, ..., x^pn) with x^p1 + ... + x^pn = 1");
  cl->add_option("--matrix", o.matrix, "certify the vector against this matrix");
  auto* tt = sub("tensor-type", "label of a⊠b", [&](Document& d) { cmd_tensor_type(o, cfg, d); });
  tt->add_option("--a", o.a)->required();
  tt->add_option("--b", o.b)->required();
  auto* pt = sub("power-type", "label of the k-th Kronecker power", [&](Document& d) { cmd_power_type(o, cfg, d); });
  pt->add_option("--k", o.k)->required();
  pt->add_option("--vector", o.vector);
  pt->add_option("--exponents", o.exponents);
  pt->add_option("--p", o.p, "exponent p of (x^p, x^q)");
  pt->add_option("--q", o.q, "exponent q of (x^p, x^q)");
  auto* af = sub("afd-rule", "type of the tensor product of two AFD factors", [&](Document& d) { cmd_afd_rule(o, cfg, d); });
  af->add_option("--lambda", o.lambda)->required();
  af->add_option("--mu", o.mu)->required();
  auto* fam = sub("iii1-family", "type III_1 vectors a_n", [&](Document& d) { cmd_iii1_family(o, cfg, d); });
  fam->add_option("--n", o.n)->required();
  sub("reproduce-paper", "recompute every worked example", [&](Document& d) { cmd_reproduce(cfg, d); });

  RunOutput result;
  std::ostringstream out, err;
  try {
    std::vector<std::string> reversed(args.rbegin(), args.rend());
    app.parse(reversed);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return {code == 0 ? 0 : 2, out.str(), err.str()};
  }

  Document doc;
  doc.command = app.get_subcommands().front()->get_name();
  try {
    handlers.at(doc.command)(doc);
  } catch (const UsageError& e) {
    return {2, "", "usage error: " + std::string(e.what()) + "\n"};
  } catch (const Json::exception& e) {
    return {2, "", "malformed JSON input: " + std::string(e.what()) + "\n"};
  } catch (const DomainError& e) {
    return {2, "", "invalid input: " + std::string(e.what()) + "\n"};
  } catch (const InvalidScalar& e) {
    return {2, "", "invalid scalar: " + std::string(e.what()) + "\n"};
  } catch (const DimensionMismatch& e) {
    return {2, "", "dimension mismatch: " + std::string(e.what()) + "\n"};
  } catch (const std::exception& e) {
    doc.result = {{"error", e.what()}};
    doc.exit_code = 1;
    err << "rejected: " << e.what() << "\n";
  }

  const std::string text = render(doc, cfg.format);
  if (!cfg.out.empty()) {
    std::ofstream file(cfg.out);
    if (!file) return {2, text, err.str() + "cannot write " + cfg.out + "\n"};
    file << text;
  }
  return {doc.exit_code, text, err.str()};
}

}  // namespace ckms::cli
