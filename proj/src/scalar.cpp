#include "ckms/scalar.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <ostream>
#include <sstream>

#include "ckms/errors.hpp"
#include "ckms/lattice.hpp"

namespace ckms {

std::ostream& operator<<(std::ostream& os, const Interval& iv) {
  char buf[96];
  std::snprintf(buf, sizeof buf, "[%.17g, %.17g]", iv.lo, iv.hi);
  return os << buf;
}

namespace {

Rational rpow(const Rational& r, long e) {
  if (e == 0) return 1;
  if (r == 0 && e < 0) throw DomainError("negative power of zero");
  const auto n = static_cast<unsigned>(e < 0 ? -e : e);
  Rational out(boost::multiprecision::pow(boost::multiprecision::numerator(r), n),
               boost::multiprecision::pow(boost::multiprecision::denominator(r), n));
  return e < 0 ? Rational(1) / out : out;
}

RationalInterval mul(const RationalInterval& a, const RationalInterval& b) {
  const Rational c[4] = {a.lo * b.lo, a.lo * b.hi, a.hi * b.lo, a.hi * b.hi};
  RationalInterval out{c[0], c[0]};
  for (const auto& v : c) {
    if (v < out.lo) out.lo = v;
    if (v > out.hi) out.hi = v;
  }
  return out;
}

RationalInterval ipow(const RationalInterval& a, long e) {
  RationalInterval acc{1, 1};
  for (long i = 0; i < (e < 0 ? -e : e); ++i) acc = mul(acc, a);
  if (e < 0) {
    if (acc.lo <= 0 && acc.hi >= 0) throw DomainError("negative power of an interval containing zero");
    acc = {Rational(1) / acc.hi, Rational(1) / acc.lo};
  }
  return acc;
}

RationalInterval refine_at(const Scalar& s, const Rational& precision);

RationalInterval refine_at(const Scalar& s, const Rational& precision) {
  const auto& v = s.value();
  if (const auto* r = std::get_if<Rational>(&v)) return {*r, *r};
  if (const auto* a = std::get_if<Algebraic>(&v)) return a->refine(precision);
  if (const auto* d = std::get_if<double>(&v)) return {Rational(*d), Rational(*d)};
  if (const auto* p = std::get_if<PowerForm>(&v)) return ipow(refine_at(*p->base, precision), p->exp);
  const auto& f = std::get<ProductForm>(v);
  RationalInterval acc{1, 1};
  for (const auto& x : f.factors) acc = mul(acc, refine_at(x, precision));
  return acc;
}

}  // namespace

// ---------------------------------------------------------------- Algebraic

Algebraic::Algebraic(Poly poly, Rational lo, Rational hi)
    : poly_(normalize_poly(std::move(poly))), lo_(std::move(lo)), hi_(std::move(hi)) {
  if (degree(poly_) < 1) throw InvalidScalar("algebraic scalar needs a polynomial of degree >= 1");
  if (hi_ < lo_) throw InvalidScalar("algebraic scalar: empty isolating interval");
  squarefree_ = squarefree_part(poly_);
  if (lo_ == hi_) {
    if (sign_at(poly_, lo_) != 0) throw InvalidScalar("algebraic scalar: degenerate interval is not a root");
  } else {
    const int roots = count_roots(squarefree_, lo_, hi_) + (sign_at(squarefree_, lo_) == 0 ? 1 : 0);
    if (roots != 1) {
      throw InvalidScalar("algebraic scalar: interval [" + to_string(lo_) + ", " + to_string(hi_) + "] holds " +
                          std::to_string(roots) + " roots of " + poly_to_string(poly_) + ", expected exactly one");
    }
  }
  rational_ = rational_root_in(poly_, lo_, hi_);
  const auto iv = refine(Rational(1, Integer(1) << 70));
  enclosure_ = Interval(enclose(iv.lo).lo, enclose(iv.hi).hi);
  approx_ = static_cast<double>((iv.lo + iv.hi) / 2);
}

RationalInterval Algebraic::refine(const Rational& precision) const {
  if (precision <= 0) throw DomainError("refine: precision must be positive");
  Rational lo = lo_, hi = hi_;
  const int slo = sign_at(squarefree_, lo);
  if (slo == 0) return {lo, lo};
  const int shi = sign_at(squarefree_, hi);
  if (shi == 0) return {hi, hi};
  if (slo == shi) throw InvalidScalar("algebraic scalar: no sign change on the isolating interval");
  while (hi - lo > precision) {
    const Rational m = (lo + hi) / 2;
    const int sm = sign_at(squarefree_, m);
    if (sm == 0) return {m, m};
    if (sm == slo) lo = m; else hi = m;
  }
  return {lo, hi};
}

Algebraic Algebraic::refined(const Rational& precision) const {
  const auto iv = refine(precision);
  return Algebraic(poly_, iv.lo, iv.hi);
}


bool Algebraic::is_unit() const {
  if (poly_.empty()) return false;
  const Integer& lead = poly_.back();
  const Integer& c0 = poly_.front();
  return (lead == 1 || lead == -1) && (c0 == 1 || c0 == -1) && !rational_value();
}


bool same_value(const Algebraic& a, const Algebraic& b) {
  const Rational lo = a.lo() > b.lo() ? a.lo() : b.lo();
  const Rational hi = a.hi() < b.hi() ? a.hi() : b.hi();
  if (hi < lo) return false;
  if (a.poly() == b.poly()) {
    if (a.lo() == b.lo() && a.hi() == b.hi()) return true;
    if (sign_at(a.poly(), lo) == 0) return true;
    return lo < hi && count_roots(a.poly(), lo, hi) >= 1;
  }
  const Poly g = poly_gcd(a.poly(), b.poly());
  if (degree(g) < 1) return false;
  if (sign_at(g, lo) == 0) return true;
  return lo < hi && count_roots(g, lo, hi) >= 1;
}

// ---------------------------------------------------------------- Scalar

Scalar Scalar::floating(double v) {
  if (!std::isfinite(v)) throw InvalidScalar("float scalar must be finite");
  return Scalar(Value(v));
}

Scalar Scalar::power(Scalar base, long exp) {
  return Scalar(Value(PowerForm{std::make_shared<const Scalar>(std::move(base)), exp}));
}

Scalar Scalar::product(std::vector<Scalar> factors) {
  if (factors.empty()) return Scalar(Rational(1));
  if (factors.size() == 1) return std::move(factors.front());
  return Scalar(Value(ProductForm{std::move(factors)}));
}

bool Scalar::is_exact() const {
  if (std::holds_alternative<double>(value_)) return false;
  if (const auto* p = std::get_if<PowerForm>(&value_)) return p->base->is_exact();
  if (const auto* f = std::get_if<ProductForm>(&value_)) {
    for (const auto& x : f->factors)
      if (!x.is_exact()) return false;
  }
  return true;
}

std::optional<Rational> Scalar::as_rational() const {
  if (const auto* r = std::get_if<Rational>(&value_)) return *r;
  if (const auto* a = std::get_if<Algebraic>(&value_)) return a->rational_value();
  if (std::holds_alternative<double>(value_)) return std::nullopt;
  if (const auto* p = std::get_if<PowerForm>(&value_)) {
    auto b = p->base->as_rational();
    if (!b) return std::nullopt;
    return rpow(*b, p->exp);
  }
  Rational acc = 1;
  for (const auto& x : std::get<ProductForm>(value_).factors) {
    auto r = x.as_rational();
    if (!r) return std::nullopt;
    acc *= *r;
  }
  return acc;
}

double Scalar::approx() const {
  if (const auto* r = std::get_if<Rational>(&value_)) return static_cast<double>(*r);
  if (const auto* a = std::get_if<Algebraic>(&value_)) return a->approx();
  if (const auto* d = std::get_if<double>(&value_)) return *d;
  if (const auto* p = std::get_if<PowerForm>(&value_)) return std::pow(p->base->approx(), static_cast<double>(p->exp));
  double acc = 1.0;
  for (const auto& x : std::get<ProductForm>(value_).factors) acc *= x.approx();
  return acc;
}

RationalInterval refine(const Scalar& s, const Rational& precision) {
  if (precision <= 0) throw DomainError("refine: precision must be positive");
  Rational step = precision;
  for (int guard = 0; guard < 200; ++guard) {
    auto iv = refine_at(s, step);
    if (iv.width() <= precision) return iv;
    step /= 16;
  }
  throw NumericalFailure("refine: enclosure did not shrink to the requested precision");
}

Interval enclose(const Rational& r) {
  double d = static_cast<double>(r);
  double lo = d, hi = d;
  while (Rational(lo) > r) lo = detail::down(lo);
  while (Rational(hi) < r) hi = detail::up(hi);
  return {lo, hi};
}

Interval enclose(const Scalar& s) {
  const auto& v = s.value();
  if (const auto* r = std::get_if<Rational>(&v)) return enclose(*r);
  if (const auto* d = std::get_if<double>(&v)) return Interval(*d);
  if (const auto* a = std::get_if<Algebraic>(&v)) return a->enclosure();
  if (const auto* p = std::get_if<PowerForm>(&v)) {
    Interval b = enclose(*p->base);
    Interval acc(1.0);
    // square-and-multiply keeps the rounding growth logarithmic in the exponent
    for (long n = p->exp < 0 ? -p->exp : p->exp; n > 0; n >>= 1) {
      if (n & 1) acc *= b;
      if (n > 1) b *= b;
    }
    return p->exp < 0 ? Interval(1.0) / acc : acc;
  }
  Interval acc(1.0);
  for (const auto& x : std::get<ProductForm>(v).factors) acc *= enclose(x);
  return acc;
}

Scalar operator*(const Scalar& a, const Scalar& b) {
  if (!a.is_exact() || !b.is_exact()) return Scalar::floating(a.approx() * b.approx());
  return from_mult_term(multiply(*to_mult_term(a), *to_mult_term(b)));
}

Scalar pow(const Scalar& s, long exp) {
  if (!s.is_exact()) return Scalar::floating(std::pow(s.approx(), static_cast<double>(exp)));
  auto t = *to_mult_term(s);
  MultTerm out;
  out.coeff = rpow(t.coeff, exp);
  if (exp != 0)
    for (auto& [base, e] : t.powers) out.powers.emplace_back(base, e * exp);
  return from_mult_term(out);
}

std::string to_string(const Rational& r) {
  std::ostringstream os;
  os << boost::multiprecision::numerator(r);
  if (boost::multiprecision::denominator(r) != 1) os << "/" << boost::multiprecision::denominator(r);
  return os.str();
}

std::string to_string(const Scalar& s) {
  const auto& v = s.value();
  if (const auto* r = std::get_if<Rational>(&v)) return to_string(*r);
  if (const auto* a = std::get_if<Algebraic>(&v))
    return "root(" + poly_to_string(a->poly()) + " in [" + to_string(a->lo()) + ", " + to_string(a->hi()) + "])";
  if (const auto* d = std::get_if<double>(&v)) {
    char buf[64];
    std::snprintf(buf, sizeof buf, "%.15g", *d);
    return buf;
  }
  if (const auto* p = std::get_if<PowerForm>(&v)) return "(" + to_string(*p->base) + ")^" + std::to_string(p->exp);
  std::string out;
  for (const auto& x : std::get<ProductForm>(v).factors) {
    if (!out.empty()) out += "*";
    out += to_string(x);
  }
  return out;
}

namespace {
Integer parse_integer(std::string t) {
  bool neg = false;
  if (!t.empty() && (t[0] == '-' || t[0] == '+')) {
    neg = t[0] == '-';
    t.erase(0, 1);
  }
  if (t.empty() || t.find_first_not_of("0123456789") != std::string::npos)
    throw DomainError("not an integer literal: '" + t + "'");
  t.erase(0, std::min(t.find_first_not_of('0'), t.size() - 1));
  Integer v(t);
  return neg ? Integer(-v) : v;
}
}  // namespace

Rational parse_rational(const std::string& text) {
  auto fail = [&] { return DomainError("not a rational literal: '" + text + "'"); };
  if (text.empty()) throw fail();
  try {
    if (auto slash = text.find('/'); slash != std::string::npos) {
      const Integer num = parse_integer(text.substr(0, slash));
      const Integer den = parse_integer(text.substr(slash + 1));
      if (den == 0) throw fail();
      return Rational(num, den);
    }
    std::string mant = text;
    long exp10 = 0;
    if (auto e = text.find_first_of("eE"); e != std::string::npos) {
      exp10 = std::stol(text.substr(e + 1));
      mant = text.substr(0, e);
    }
    bool neg = false;
    if (!mant.empty() && (mant[0] == '-' || mant[0] == '+')) {
      neg = mant[0] == '-';
      mant = mant.substr(1);
    }
    std::string digits;
    for (char c : mant) {
      if (c == '.') continue;
      if (c < '0' || c > '9') throw fail();
      digits += c;
    }
    if (std::count(mant.begin(), mant.end(), '.') > 1) throw fail();
    if (auto dot = mant.find('.'); dot != std::string::npos) exp10 -= static_cast<long>(mant.size() - dot - 1);
    if (digits.empty()) throw fail();
    // boost parses a leading zero as octal
    digits.erase(0, std::min(digits.find_first_not_of('0'), digits.size() - 1));
    Rational r{Integer(digits)};
    const Integer p10 = boost::multiprecision::pow(Integer(10), static_cast<unsigned>(exp10 < 0 ? -exp10 : exp10));
    r = exp10 < 0 ? r / p10 : r * p10;
    return neg ? -r : r;
  } catch (const DomainError&) {
    throw;
  } catch (const std::exception&) {
    throw fail();
  }
}

}  // namespace ckms
