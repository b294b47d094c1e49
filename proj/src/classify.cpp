#include "ckms/classify.hpp"

#include <cmath>
#include <numeric>

#include "ckms/errors.hpp"
#include "ckms/tensorops.hpp"

namespace ckms {

namespace {

void check_open_unit(const Scalar& s) {
  const Interval e = enclose(s);
  if (e.hi <= 0.0 || e.lo >= 1.0) throw DomainError("entries must lie strictly between 0 and 1: " + to_string(s));
  if (auto r = s.as_rational(); r && (*r <= 0 || *r >= 1))
    throw DomainError("entries must lie strictly between 0 and 1: " + to_string(s));
}

std::optional<bool> exact_equal(const Scalar& x, const Scalar& y) {
  const auto a = to_mult_term(x), b = to_mult_term(y);
  if (!a || !b) return std::nullopt;
  if (a->coeff != b->coeff || a->powers.size() != b->powers.size()) return false;
  for (const auto& [base, e] : a->powers) {
    bool found = false;
    for (const auto& [base2, e2] : b->powers)
      if (e == e2 && same_value(base, base2)) found = true;
    if (!found) return false;
  }
  return true;
}

TypeLabel heuristic_lambda(const std::vector<Scalar>& a, const ClassifyOptions& opts) {
  TypeLabel out;
  out.mode = TypeLabel::Mode::heuristic;
  out.warnings.push_back("heuristic classification: log ratios matched by continued fractions, not proved");
  // log a_i = (p_i / q_i) log a_0
  std::vector<long> num, den;
  for (const auto& x : a) {
    const LogRatio r = log_ratio_rational(x, a[0], opts.denominator_bound, opts.tolerance);
    if (r.kind != LogRatio::Kind::rational) {
      out.warnings.push_back("no rational log ratio within the denominator bound; reporting lambda = 1");
      return out;
    }
    num.push_back(r.p);
    den.push_back(r.q);
  }
  long l = 1;
  for (long q : den) l = std::lcm(l, q);
  std::vector<long> e;
  long g = 0;
  for (std::size_t i = 0; i < num.size(); ++i) {
    e.push_back(num[i] * (l / den[i]));
    g = std::gcd(g, e.back());
  }
  for (auto& v : e) v /= g;
  const double base = std::exp(std::log(a[0].approx()) * static_cast<double>(g) / static_cast<double>(l));
  out.lambda = Scalar::floating(base);
  out.decomposition = BaseDecomposition{out.lambda, e};
  return out;
}

std::vector<Scalar> distinct(const std::vector<Scalar>& v) {
  std::vector<Scalar> out;
  for (const auto& x : v) {
    bool seen = false;
    for (const auto& y : out) {
      const auto eq = exact_equal(x, y);
      if (eq ? *eq : (x.is_float() && y.is_float() && x.approx() == y.approx())) {
        seen = true;
        break;
      }
    }
    if (!seen) out.push_back(x);
  }
  return out;
}

}  // namespace

TypeLabel detect_lambda(const std::vector<Scalar>& a, const ClassifyOptions& opts) {
  if (a.empty()) throw DomainError("detect_lambda: empty vector");
  for (const auto& x : a) check_open_unit(x);
  const CommonBaseResult exact = common_base_exact(a);
  if (!exact.decidable) {
    TypeLabel out = heuristic_lambda(a, opts);
    if (!exact.reason.empty()) out.warnings.insert(out.warnings.begin(), exact.reason);
    return out;
  }
  TypeLabel out;
  if (exact.decomposition) {
    out.lambda = exact.decomposition->base;
    out.decomposition = exact.decomposition;
  }
  return out;
}

bool same_lambda(const Scalar& x, const Scalar& y) {
  if (auto eq = exact_equal(x, y)) return *eq;
  return enclose(x).intersects(enclose(y)) || std::abs(x.approx() - y.approx()) <= 1e-9;
}

TypeLabel tensor_type(const std::vector<Scalar>& a, const std::vector<Scalar>& b, const ClassifyOptions& opts) {
  TypeLabel out = detect_lambda(kronecker_vector(a, b), opts);
  if (out.mode == TypeLabel::Mode::heuristic)
    out.warnings.push_back("factors could not be combined exactly; tensor label is heuristic");
  return out;
}

TypeLabel power_type_direct(const std::vector<Scalar>& a, long k, const ClassifyOptions& opts, std::size_t dimension_cap) {
  if (k < 1) throw DomainError("power_type_direct: k must be positive");
  if (a.empty()) throw DomainError("power_type_direct: empty vector");
  double size = 1.0;
  for (long i = 0; i < k; ++i) size *= static_cast<double>(a.size());
  if (size > static_cast<double>(dimension_cap))
    throw ResourceLimit("Kronecker power of dimension " + std::to_string(static_cast<long long>(size)) + " exceeds cap " +
                        std::to_string(dimension_cap));
  const std::vector<Scalar> base = distinct(a);
  std::vector<Scalar> power = base;
  for (long i = 1; i < k; ++i) power = distinct(kronecker_vector(power, base));
  return detect_lambda(power, opts);
}

long power_type_ck2(long p, long q, long k) {
  if (p < 1 || q < 1 || k < 1) throw DomainError("power_type_ck2: p, q and k must be positive");
  if (std::gcd(p, q) != 1) throw PreconditionViolation("power_type_ck2: gcd(p, q) must be 1");
  const long d = std::labs(p - q);
  return d == 0 ? k : std::gcd(d, k);
}

std::vector<Scalar> power_pair(long p, long q) {
  const Scalar x = solve_power_equation({p, q}, Rational(1, 1000000000));
  return {pow(x, p), pow(x, q)};
}

TypeLabel afd_tensor_rule(const Scalar& lambda, const Scalar& mu, const ClassifyOptions& opts) {
  for (const auto* s : {&lambda, &mu}) {
    const Interval e = enclose(*s);
    if (e.hi <= 0.0 || e.lo > 1.0) throw DomainError("afd_tensor_rule: arguments must lie in (0,1]");
  }
  auto is_one = [](const Scalar& s) {
    const auto r = s.as_rational();
    return r ? *r == 1 : (!s.is_exact() && s.approx() == 1.0);
  };
  if (is_one(lambda) || is_one(mu)) return TypeLabel{};
  return detect_lambda({lambda, mu}, opts);
}

std::vector<Rational> iii1_family(int n) {
  if (n < 2) throw DomainError("iii1_family: n must be at least 2");
  std::vector<Rational> out;
  if (n % 2 == 0) {
    for (int i = 0; i < n - 1; ++i) out.emplace_back(1, n + 1);
    out.emplace_back(2, n + 1);
  } else {
    for (int i = 0; i < n - 2; ++i) out.emplace_back(1, n + 2);
    out.emplace_back(2, n + 2);
    out.emplace_back(2, n + 2);
  }
  return out;
}

GroupModulus group_modulus(const Interval& beta, const std::vector<Rational>& omega) {
  if (omega.empty()) throw DomainError("group_modulus: empty frequency vector");
  Integer num = 0, den = 1;
  for (const auto& w : omega) {
    if (w <= 0) throw DomainError("group_modulus: frequencies must be positive");
    den = boost::multiprecision::lcm(den, boost::multiprecision::denominator(w));
  }
  for (const auto& w : omega) num = boost::multiprecision::gcd(num, boost::multiprecision::numerator(w * Rational(den)));
  GroupModulus out;
  out.generator = Rational(num, den);
  out.r = beta * enclose(out.generator);
  out.lambda = exp(-out.r);
  return out;
}

}  // namespace ckms
