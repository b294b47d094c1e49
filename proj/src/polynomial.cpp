#include "ckms/polynomial.hpp"

#include <sstream>

#include "ckms/errors.hpp"

namespace ckms {

namespace {

using QPoly = std::vector<Rational>;

void trim(QPoly& p) {
  while (!p.empty() && p.back() == 0) p.pop_back();
}

QPoly to_q(const Poly& p) {
  QPoly q(p.begin(), p.end());
  trim(q);
  return q;
}

Poly to_z(QPoly q) {
  trim(q);
  Integer l = 1;
  for (const auto& c : q) l = boost::multiprecision::lcm(l, boost::multiprecision::denominator(c));
  Poly out;
  out.reserve(q.size());
  for (const auto& c : q) out.push_back(boost::multiprecision::numerator(c) * (l / boost::multiprecision::denominator(c)));
  return normalize_poly(std::move(out));
}

QPoly rem(QPoly a, const QPoly& b) {
  if (b.empty()) throw DomainError("polynomial remainder by zero");
  trim(a);
  while (a.size() >= b.size() && !a.empty()) {
    const Rational f = a.back() / b.back();
    const std::size_t shift = a.size() - b.size();
    for (std::size_t i = 0; i < b.size(); ++i) a[shift + i] -= f * b[i];
    a.pop_back();
    trim(a);
  }
  return a;
}

int sign_of(const Rational& r) { return r > 0 ? 1 : (r < 0 ? -1 : 0); }

Rational qeval(const QPoly& p, const Rational& x) {
  Rational acc = 0;
  for (auto it = p.rbegin(); it != p.rend(); ++it) acc = acc * x + *it;
  return acc;
}

std::vector<QPoly> sturm_chain(const Poly& p) {
  std::vector<QPoly> chain;
  chain.push_back(to_q(squarefree_part(p)));
  QPoly d;
  for (std::size_t i = 1; i < chain[0].size(); ++i) d.push_back(chain[0][i] * static_cast<long>(i));
  trim(d);
  if (d.empty()) return chain;
  chain.push_back(d);
  for (;;) {
    QPoly r = rem(chain[chain.size() - 2], chain.back());
    if (r.empty()) break;
    for (auto& c : r) c = -c;
    chain.push_back(std::move(r));
  }
  return chain;
}

int variations(const std::vector<QPoly>& chain, const Rational& x) {
  int count = 0;
  int prev = 0;
  for (const auto& q : chain) {
    const int s = sign_of(qeval(q, x));
    if (s == 0) continue;
    if (prev != 0 && s != prev) ++count;
    prev = s;
  }
  return count;
}

std::vector<Integer> divisors(Integer v) {
  if (v < 0) v = -v;
  std::vector<Integer> small, large;
  for (Integer d = 1; d * d <= v; ++d) {
    if (v % d == 0) {
      small.push_back(d);
      if (d * d != v) large.push_back(v / d);
    }
  }
  small.insert(small.end(), large.rbegin(), large.rend());
  return small;
}

}  // namespace

int degree(const Poly& p) {
  for (std::size_t i = p.size(); i-- > 0;)
    if (p[i] != 0) return static_cast<int>(i);
  return -1;
}

Poly normalize_poly(Poly p) {
  while (!p.empty() && p.back() == 0) p.pop_back();
  if (p.empty()) return p;
  Integer g = 0;
  for (const auto& c : p) g = boost::multiprecision::gcd(g, c);
  if (g < 0) g = -g;
  if (p.back() < 0) g = -g;
  for (auto& c : p) c /= g;
  return p;
}

Rational eval(const Poly& p, const Rational& x) {
  Rational acc = 0;
  for (auto it = p.rbegin(); it != p.rend(); ++it) acc = acc * x + Rational(*it);
  return acc;
}

int sign_at(const Poly& p, const Rational& x) { return sign_of(eval(p, x)); }

Poly derivative(const Poly& p) {
  Poly d;
  for (std::size_t i = 1; i < p.size(); ++i) d.push_back(p[i] * static_cast<long>(i));
  while (!d.empty() && d.back() == 0) d.pop_back();
  return d;
}

Poly poly_gcd(const Poly& a, const Poly& b) {
  QPoly x = to_q(a);
  QPoly y = to_q(b);
  while (!y.empty()) {
    QPoly r = rem(x, y);
    x = std::move(y);
    y = std::move(r);
  }
  return to_z(std::move(x));
}

Poly squarefree_part(const Poly& p) {
  const Poly np = normalize_poly(p);
  if (degree(np) < 1) return np;
  const Poly g = poly_gcd(np, derivative(np));
  if (degree(g) < 1) return np;
  QPoly num = to_q(np);
  const QPoly den = to_q(g);
  // exact division num / den
  QPoly quot(num.size() - den.size() + 1);
  while (num.size() >= den.size() && !num.empty()) {
    const Rational f = num.back() / den.back();
    const std::size_t shift = num.size() - den.size();
    quot[shift] = f;
    for (std::size_t i = 0; i < den.size(); ++i) num[shift + i] -= f * den[i];
    num.pop_back();
    trim(num);
  }
  return to_z(std::move(quot));
}

int count_roots(const Poly& p, const Rational& lo, const Rational& hi) {
  if (degree(p) < 1) {
    if (degree(p) < 0) throw InvalidScalar("count_roots: zero polynomial");
    return 0;
  }
  if (hi < lo) return 0;
  const auto chain = sturm_chain(p);
  return variations(chain, lo) - variations(chain, hi);
}

std::optional<Rational> rational_root_in(const Poly& p0, const Rational& lo0, const Rational& hi0) {
  const Poly p = normalize_poly(p0);
  if (degree(p) < 1) return std::nullopt;
  if (sign_at(p, lo0) == 0) return lo0;
  if (sign_at(p, hi0) == 0) return hi0;
  const Poly s = squarefree_part(p);
  Rational lo = lo0, hi = hi0;
  const Integer lead = p.back();
  const Rational target = Rational(1) / (Rational(lead) * 4);
  // Narrow the interval by bisection while it has a sign change, so that at most one
  // candidate with denominator dividing `lead` remains per divisor.
  const int slo = sign_at(s, lo);
  const int shi = sign_at(s, hi);
  if (slo != 0 && shi != 0 && slo != shi) {
    while (hi - lo > target) {
      const Rational m = (lo + hi) / 2;
      const int sm = sign_at(s, m);
      if (sm == 0) return m;
      if (sm == slo) lo = m; else hi = m;
    }
  }
  for (const auto& q : divisors(lead)) {
    const Rational ql = lo * q;
    const Rational qh = hi * q;
    Integer k0 = boost::multiprecision::numerator(ql) / boost::multiprecision::denominator(ql) - 1;
    Integer k1 = boost::multiprecision::numerator(qh) / boost::multiprecision::denominator(qh) + 1;
    if (k1 - k0 > 100000) continue;
    for (Integer k = k0; k <= k1; ++k) {
      const Rational c(k, q);
      if (c < lo || c > hi) continue;
      if (sign_at(p, c) == 0) return c;
    }
  }
  return std::nullopt;
}

Poly reversed(const Poly& p) {
  Poly q = normalize_poly(p);
  Poly r(q.rbegin(), q.rend());
  return normalize_poly(std::move(r));
}

std::string poly_to_string(const Poly& p) {
  std::ostringstream os;
  bool first = true;
  for (std::size_t i = p.size(); i-- > 0;) {
    const Integer& c = p[i];
    if (c == 0) continue;
    Integer a = c < 0 ? Integer(-c) : c;
    if (first) {
      if (c < 0) os << "-";
    } else {
      os << (c < 0 ? "-" : "+");
    }
    if (a != 1 || i == 0) os << a;
    if (i >= 1) os << "x";
    if (i >= 2) os << "^" << i;
    first = false;
  }
  if (first) os << "0";
  return os.str();
}

}  // namespace ckms
