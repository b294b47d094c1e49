#pragma once

#include <optional>
#include <string>
#include <vector>

#include <boost/multiprecision/cpp_int.hpp>

namespace ckms {

using Integer = boost::multiprecision::number<boost::multiprecision::cpp_int_backend<>, boost::multiprecision::et_off>;
using Rational = boost::multiprecision::number<boost::multiprecision::rational_adaptor<boost::multiprecision::cpp_int_backend<>>,
                                               boost::multiprecision::et_off>;

/// Integer polynomial, constant term first.
using Poly = std::vector<Integer>;

int degree(const Poly& p);

/// Strips trailing zeros, divides by the content and makes the leading coefficient positive.
Poly normalize_poly(Poly p);

Rational eval(const Poly& p, const Rational& x);
int sign_at(const Poly& p, const Rational& x);
Poly derivative(const Poly& p);

/// Greatest common divisor over Q, returned as a normalized integer polynomial.
Poly poly_gcd(const Poly& a, const Poly& b);

Poly squarefree_part(const Poly& p);

/// Number of distinct real roots in the half-open interval (lo, hi], by Sturm's theorem.
int count_roots(const Poly& p, const Rational& lo, const Rational& hi);

/// Rational root of p in [lo, hi], if any.
std::optional<Rational> rational_root_in(const Poly& p, const Rational& lo, const Rational& hi);

/// x^deg * p(1/x).
Poly reversed(const Poly& p);

std::string poly_to_string(const Poly& p);

}  // namespace ckms
