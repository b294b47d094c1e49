#pragma once

#include <memory>
#include <optional>
#include <string>
#include <utility>
#include <variant>
#include <vector>

#include "ckms/interval.hpp"
#include "ckms/polynomial.hpp"

namespace ckms {

struct RationalInterval {
  Rational lo;
  Rational hi;
  Rational width() const { return hi - lo; }
};

/// A real algebraic number: an integer polynomial together with a rational
/// interval holding exactly one of its real roots.
class Algebraic {
 public:
  /// Throws InvalidScalar unless [lo, hi] isolates exactly one real root of `poly`.
  Algebraic(Poly poly, Rational lo, Rational hi);

  const Poly& poly() const { return poly_; }
  const Rational& lo() const { return lo_; }
  const Rational& hi() const { return hi_; }

  /// Bisection of the isolating interval; the returned interval has width <= precision.
  RationalInterval refine(const Rational& precision) const;
  Algebraic refined(const Rational& precision) const;

  std::optional<Rational> rational_value() const { return rational_; }

  /// True when the root is certified to be an algebraic unit (monic integer polynomial
  /// with constant term +-1), hence multiplicatively independent of the nonzero rationals
  /// whenever it lies strictly inside (0, 1).
  bool is_unit() const;

  double approx() const { return approx_; }
  /// Outward-rounded double enclosure of the root.
  Interval enclosure() const { return enclosure_; }

 private:
  Poly poly_;
  Poly squarefree_;
  Rational lo_;
  Rational hi_;
  std::optional<Rational> rational_;
  Interval enclosure_;
  double approx_ = 0.0;
};

/// True iff the two algebraic numbers are the same real number.
bool same_value(const Algebraic& a, const Algebraic& b);

class Scalar;

struct PowerForm {
  std::shared_ptr<const Scalar> base;
  long exp = 1;
};

struct ProductForm {
  std::vector<Scalar> factors;
};

/// Exact number tower: rational, algebraic, float, and formal powers/products of these.
class Scalar {
 public:
  using Value = std::variant<Rational, Algebraic, double, PowerForm, ProductForm>;

  Scalar() : value_(Rational(0)) {}
  Scalar(Rational r) : value_(std::move(r)) {}  // NOLINT
  Scalar(Algebraic a) : value_(std::move(a)) {}  // NOLINT

  static Scalar rational(long num, long den = 1) { return Scalar(Rational(num, den)); }
  static Scalar floating(double v);
  static Scalar power(Scalar base, long exp);
  static Scalar product(std::vector<Scalar> factors);

  const Value& value() const { return value_; }
  bool is_rational() const { return std::holds_alternative<Rational>(value_); }
  bool is_float() const { return std::holds_alternative<double>(value_); }
  bool is_power() const { return std::holds_alternative<PowerForm>(value_); }

  /// False when a float occurs anywhere in the representation.
  bool is_exact() const;

  /// The value as a rational, when it is one (including rational powers and products).
  std::optional<Rational> as_rational() const;

  double approx() const;

 private:
  explicit Scalar(Value v) : value_(std::move(v)) {}
  Value value_;
};

/// Enclosing rational interval of width <= precision.
RationalInterval refine(const Scalar& s, const Rational& precision);

/// Outward-rounded double enclosure.
Interval enclose(const Scalar& s);

/// Tightest double interval containing the rational.
Interval enclose(const Rational& r);

/// Exact product; formal when a closed form is unavailable, float when either side is float.
Scalar operator*(const Scalar& a, const Scalar& b);
Scalar pow(const Scalar& s, long exp);

std::string to_string(const Scalar& s);
std::string to_string(const Rational& r);

/// Parses "p/q", "p" or a decimal literal such as "0.25" into an exact rational.
Rational parse_rational(const std::string& text);

}  // namespace ckms
