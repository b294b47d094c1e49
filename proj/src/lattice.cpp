#include "ckms/lattice.hpp"

#include <algorithm>
#include <cmath>
#include <cstdint>
#include <numeric>
#include <set>
#include <variant>

#include "ckms/errors.hpp"

namespace ckms {

namespace {

constexpr std::uint32_t kPrimeLimit = 1u << 20;

/// Sieve up to kPrimeLimit, computed once; read-only afterwards.
const std::vector<std::uint32_t>& prime_table() {
  static const std::vector<std::uint32_t> primes = [] {
    std::vector<bool> composite(kPrimeLimit + 1, false);
    std::vector<std::uint32_t> out;
    for (std::uint32_t i = 2; i <= kPrimeLimit; ++i) {
      if (composite[i]) continue;
      out.push_back(i);
      for (std::uint64_t j = std::uint64_t(i) * i; j <= kPrimeLimit; j += i) composite[j] = true;
    }
    return out;
  }();
  return primes;
}

Rational rpow(const Rational& r, long e) {
  if (e == 0) return 1;
  const auto n = static_cast<unsigned>(e < 0 ? -e : e);
  Rational out(boost::multiprecision::pow(boost::multiprecision::numerator(r), n),
               boost::multiprecision::pow(boost::multiprecision::denominator(r), n));
  return e < 0 ? Rational(1) / out : out;
}

/// Floor of the k-th root.
Integer iroot(const Integer& v, unsigned k) {
  Integer lo = 1, hi = 1;
  while (boost::multiprecision::pow(hi, k) <= v) hi <<= 1;
  while (hi - lo > 1) {
    Integer m = (lo + hi) >> 1;
    if (boost::multiprecision::pow(m, k) <= v) lo = m; else hi = m;
  }
  return lo;
}

Integer perfect_power_root(Integer v) {
  for (bool changed = true; changed;) {
    changed = false;
    const unsigned bits = static_cast<unsigned>(boost::multiprecision::msb(v)) + 1;
    for (unsigned k = bits; k >= 2; --k) {
      const Integer r = iroot(v, k);
      if (r > 1 && boost::multiprecision::pow(r, k) == v) {
        v = r;
        changed = true;
        break;
      }
    }
  }
  return v;
}

std::vector<Integer> coprime_base(std::vector<Integer> atoms) {
  for (bool changed = true; changed;) {
    changed = false;
    std::sort(atoms.begin(), atoms.end());
    atoms.erase(std::unique(atoms.begin(), atoms.end()), atoms.end());
    atoms.erase(std::remove(atoms.begin(), atoms.end(), Integer(1)), atoms.end());
    for (std::size_t i = 0; i < atoms.size() && !changed; ++i) {
      for (std::size_t j = i + 1; j < atoms.size() && !changed; ++j) {
        const Integer g = boost::multiprecision::gcd(atoms[i], atoms[j]);
        if (g == 1) continue;
        const Integer a = atoms[i] / g, b = atoms[j] / g;
        atoms[i] = g;
        atoms[j] = a;
        atoms.push_back(b);
        changed = true;
      }
    }
  }
  for (auto& a : atoms) a = perfect_power_root(a);
  std::sort(atoms.begin(), atoms.end());
  atoms.erase(std::unique(atoms.begin(), atoms.end()), atoms.end());
  return atoms;
}

int sign_in_unit_interval(const Scalar& s) {
  // -1: <= 0, 0: inside (0,1), +1: >= 1
  if (auto r = s.as_rational()) return *r <= 0 ? -1 : (*r >= 1 ? 1 : 0);
  const Interval quick = enclose(s);
  if (quick.lo > 0.0 && quick.hi < 1.0) return 0;
  Rational prec(1, 1 << 20);
  for (int i = 0; i < 12; ++i, prec /= 1 << 20) {
    const auto iv = refine(s, prec);
    if (iv.lo > 0 && iv.hi < 1) return 0;
    if (iv.hi <= 0) return -1;
    if (iv.lo >= 1) return 1;
  }
  throw NumericalFailure("cannot decide whether the value lies in (0,1)");
}

void require_unit_interval(const std::vector<Scalar>& values) {
  for (const auto& v : values)
    if (sign_in_unit_interval(v) != 0) throw DomainError("value " + to_string(v) + " is not strictly between 0 and 1");
}

/// Exponent vectors of multiplicative terms over a common generator list.
struct Lattice {
  std::vector<Integer> primes;        // generators from rational parts
  std::optional<Algebraic> base;      // at most one algebraic generator, last coordinate
  std::vector<std::vector<long>> vectors;
};

/// Builds the lattice when membership in it is decidable; otherwise returns the reason.
std::variant<Lattice, std::string> build_lattice(const std::vector<MultTerm>& terms) {
  Lattice lat;
  bool nontrivial_coeff = false;
  for (const auto& t : terms) {
    if (t.coeff != 1) nontrivial_coeff = true;
    for (const auto& [b, e] : t.powers) {
      if (!lat.base) {
        lat.base = b;
      } else if (!same_value(*lat.base, b)) {
        return std::string("several distinct algebraic bases");
      }
    }
  }
  if (lat.base && nontrivial_coeff && !lat.base->is_unit())
    return std::string("algebraic base is not a certified unit; independence from rationals unknown");

  std::vector<Rational> coeffs;
  for (const auto& t : terms) coeffs.push_back(t.coeff < 0 ? Rational(-t.coeff) : t.coeff);
  const auto maps = factorize_jointly(coeffs);
  std::set<Integer> keys;
  for (const auto& m : maps)
    for (const auto& [p, e] : m) keys.insert(p);
  lat.primes.assign(keys.begin(), keys.end());
  const std::size_t dim = lat.primes.size() + (lat.base ? 1 : 0);
  for (std::size_t i = 0; i < terms.size(); ++i) {
    std::vector<long> v(dim, 0);
    for (const auto& [p, e] : maps[i]) {
      const auto it = std::lower_bound(lat.primes.begin(), lat.primes.end(), p);
      v[static_cast<std::size_t>(it - lat.primes.begin())] = e;
    }
    for (const auto& [b, e] : terms[i].powers) v.back() += e;
    lat.vectors.push_back(std::move(v));
  }
  return lat;
}

long vec_gcd(const std::vector<long>& v) {
  long g = 0;
  for (long x : v) g = std::gcd(g, x);
  return g;
}

/// t with v == t*u, if any.
std::optional<long> multiple_of(const std::vector<long>& v, const std::vector<long>& u) {
  std::size_t c = 0;
  while (c < u.size() && u[c] == 0) ++c;
  if (c == u.size()) return std::nullopt;
  if (v[c] % u[c] != 0) return std::nullopt;
  const long t = v[c] / u[c];
  for (std::size_t i = 0; i < u.size(); ++i)
    if (v[i] != t * u[i]) return std::nullopt;
  return t;
}

std::optional<BaseDecomposition> rank_one(const Lattice& lat) {
  if (lat.vectors.empty()) return std::nullopt;
  const long g0 = vec_gcd(lat.vectors.front());
  if (g0 == 0) return std::nullopt;
  std::vector<long> u = lat.vectors.front();
  for (auto& x : u) x /= g0;
  std::vector<long> t;
  for (const auto& v : lat.vectors) {
    auto m = multiple_of(v, u);
    if (!m || *m == 0) return std::nullopt;
    t.push_back(*m);
  }
  long g = 0;
  for (long x : t) g = std::gcd(g, x);
  const long sign = t.front() > 0 ? 1 : -1;
  for (long x : t)
    if ((x > 0 ? 1 : -1) != sign) return std::nullopt;
  BaseDecomposition out;
  MultTerm base;
  for (std::size_t i = 0; i < lat.primes.size(); ++i) base.coeff *= rpow(Rational(lat.primes[i]), sign * g * u[i]);
  if (lat.base && u.back() != 0) base.powers.emplace_back(*lat.base, sign * g * u.back());
  out.base = from_mult_term(base);
  for (long x : t) out.exponents.push_back(x / (sign * g));
  return out;
}

}  // namespace

// ---------------------------------------------------------------- MultTerm

std::optional<MultTerm> to_mult_term(const Scalar& s) {
  const auto& v = s.value();
  if (const auto* r = std::get_if<Rational>(&v)) return MultTerm{*r, {}};
  if (std::holds_alternative<double>(v)) return std::nullopt;
  if (const auto* a = std::get_if<Algebraic>(&v)) {
    if (auto r = a->rational_value()) return MultTerm{*r, {}};
    return MultTerm{1, {{*a, 1}}};
  }
  if (const auto* p = std::get_if<PowerForm>(&v)) {
    auto t = to_mult_term(*p->base);
    if (!t) return std::nullopt;
    MultTerm out;
    out.coeff = rpow(t->coeff, p->exp);
    if (p->exp != 0)
      for (const auto& [b, e] : t->powers) out.powers.emplace_back(b, e * p->exp);
    return out;
  }
  MultTerm acc;
  for (const auto& f : std::get<ProductForm>(v).factors) {
    auto t = to_mult_term(f);
    if (!t) return std::nullopt;
    acc = multiply(acc, *t);
  }
  return acc;
}

Scalar from_mult_term(const MultTerm& t) {
  std::vector<Scalar> factors;
  if (t.coeff != 1 || t.powers.empty()) factors.emplace_back(t.coeff);
  for (const auto& [b, e] : t.powers) {
    if (e == 0) continue;
    factors.push_back(e == 1 ? Scalar(b) : Scalar::power(Scalar(b), e));
  }
  if (factors.empty()) return Scalar(Rational(1));
  return Scalar::product(std::move(factors));
}

MultTerm multiply(const MultTerm& a, const MultTerm& b) {
  MultTerm out = a;
  out.coeff *= b.coeff;
  for (const auto& [base, e] : b.powers) {
    auto it = std::find_if(out.powers.begin(), out.powers.end(),
                           [&](const auto& pe) { return same_value(pe.first, base); });
    if (it == out.powers.end()) {
      out.powers.emplace_back(base, e);
    } else {
      it->second += e;
      if (it->second == 0) out.powers.erase(it);
    }
  }
  return out;
}

// ---------------------------------------------------------------- factorization

std::map<Integer, long> factorize(const Integer& v0) {
  if (v0 <= 0) throw DomainError("factorize: expected a positive integer");
  std::map<Integer, long> out;
  Integer v = v0;
  for (std::uint32_t p : prime_table()) {
    if (Integer(p) * p > v) break;
    while (v % p == 0) {
      v /= p;
      ++out[Integer(p)];
    }
  }
  if (v > 1) ++out[v];  // prime when below kPrimeLimit^2, otherwise an unsplit atom
  return out;
}

std::vector<std::map<Integer, long>> factorize_jointly(const std::vector<Rational>& values) {
  const Integer bound = Integer(kPrimeLimit) * kPrimeLimit;
  std::vector<std::map<Integer, long>> out;
  std::vector<Integer> atoms;
  for (const auto& r : values) {
    if (r <= 0) throw DomainError("factorize_jointly: expected positive rationals");
    std::map<Integer, long> m = factorize(boost::multiprecision::numerator(r));
    if (boost::multiprecision::denominator(r) != 1)
      for (const auto& [p, e] : factorize(boost::multiprecision::denominator(r))) m[p] -= e;
    for (const auto& [p, e] : m)
      if (p >= bound) atoms.push_back(p);
    out.push_back(std::move(m));
  }
  if (atoms.empty()) return out;
  const auto base = coprime_base(atoms);
  for (auto& m : out) {
    std::map<Integer, long> refined;
    for (const auto& [p, e] : m) {
      if (p < bound) {
        refined[p] += e;
        continue;
      }
      Integer rest = p;
      for (const auto& b : base) {
        while (rest % b == 0) {
          rest /= b;
          refined[b] += e;
        }
      }
      if (rest != 1) throw NumericalFailure("coprime base refinement failed");
    }
    for (auto it = refined.begin(); it != refined.end();) it = it->second == 0 ? refined.erase(it) : std::next(it);
    m = std::move(refined);
  }
  return out;
}

// ---------------------------------------------------------------- common base

std::optional<BaseDecomposition> common_base_rationals(const std::vector<Rational>& values) {
  std::vector<Scalar> scalars(values.begin(), values.end());
  auto res = common_base_exact(scalars);
  return res.decomposition;
}

CommonBaseResult common_base_exact(const std::vector<Scalar>& values) {
  CommonBaseResult res;
  if (values.empty()) throw DomainError("common base of an empty list");
  std::vector<MultTerm> terms;
  for (const auto& v : values) {
    auto t = to_mult_term(v);
    if (!t) {
      require_unit_interval(values);
      res.reason = "float entries";
      return res;
    }
    terms.push_back(std::move(*t));
  }
  require_unit_interval(values);
  auto lat = build_lattice(terms);
  if (auto* why = std::get_if<std::string>(&lat)) {
    res.reason = *why;
    return res;
  }
  res.decidable = true;
  res.decomposition = rank_one(std::get<Lattice>(lat));
  return res;
}

// ---------------------------------------------------------------- log ratios

LogRatio log_ratio_rational(const Scalar& x, const Scalar& y, long denominator_bound, double tolerance) {
  require_unit_interval({x, y});
  LogRatio out;
  auto tx = to_mult_term(x);
  auto ty = to_mult_term(y);
  if (tx && ty) {
    auto lat = build_lattice({*tx, *ty});
    if (auto* l = std::get_if<Lattice>(&lat)) {
      out.exact = true;
      const auto& vx = l->vectors[0];
      const auto& vy = l->vectors[1];
      // log x / log y = p/q  iff  q*vx == p*vy
      std::size_t c = 0;
      while (c < vy.size() && vy[c] == 0) ++c;
      long p = vx[c], q = vy[c];
      const long g = std::gcd(p, q);
      p /= g;
      q /= g;
      if (q < 0) {
        p = -p;
        q = -q;
      }
      bool parallel = true;
      for (std::size_t i = 0; i < vx.size(); ++i)
        if (q * vx[i] != p * vy[i]) parallel = false;
      if (parallel) {
        out.kind = LogRatio::Kind::rational;
        out.p = p;
        out.q = q;
      } else {
        out.kind = LogRatio::Kind::irrational;
      }
      return out;
    }
  }
  double r = std::log(x.approx()) / std::log(y.approx());
  const double target = r;
  long h1 = 1, h2 = 0, k1 = 0, k2 = 1;
  for (int step = 0; step < 64; ++step) {
    const double a = std::floor(r);
    if (std::fabs(a) > 1e15) break;
    const long ai = static_cast<long>(a);
    const long h = ai * h1 + h2;
    const long k = ai * k1 + k2;
    if (k > denominator_bound) break;
    // Every real has convergents within 1/k^2, so a hit only counts when it beats that bound by a wide margin.
    const double err = std::fabs(target - static_cast<double>(h) / static_cast<double>(k));
    const double kd = static_cast<double>(k);
    if (err <= tolerance && err * kd * kd <= 1e-3) {
      out.kind = LogRatio::Kind::rational;
      out.p = h;
      out.q = k;
      return out;
    }
    h2 = h1;
    h1 = h;
    k2 = k1;
    k1 = k;
    const double frac = r - a;
    if (frac <= 0.0) break;
    r = 1.0 / frac;
  }
  out.kind = LogRatio::Kind::undecided;
  return out;
}

}  // namespace ckms
