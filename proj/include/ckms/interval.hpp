#pragma once

#include <algorithm>
#include <cmath>
#include <iosfwd>
#include <limits>
#include <stdexcept>

namespace ckms {

/// Closed interval of doubles with outward rounding.
///
/// Every arithmetic result is widened by one ulp on each side, which keeps the
/// enclosure valid under IEEE round-to-nearest for +, -, *, / and for the libm
/// exp/log (both accurate to well under one ulp on glibc). Transcendentals get
/// two ulps.
struct Interval {
  double lo = 0.0;
  double hi = 0.0;

  constexpr Interval() = default;
  constexpr Interval(double v) : lo(v), hi(v) {}  // NOLINT: implicit point interval
  Interval(double l, double h) : lo(l), hi(h) {
    if (!(l <= h)) throw std::invalid_argument("Interval: lower bound exceeds upper bound");
  }

  double mid() const { return lo + 0.5 * (hi - lo); }
  double width() const { return hi - lo; }
  double mag() const { return std::max(std::fabs(lo), std::fabs(hi)); }
  bool contains(double v) const { return lo <= v && v <= hi; }
  bool contains(const Interval& o) const { return lo <= o.lo && o.hi <= hi; }
  bool intersects(const Interval& o) const { return lo <= o.hi && o.lo <= hi; }
  bool positive() const { return lo > 0.0; }

  static Interval hull(const Interval& a, const Interval& b) {
    return {std::min(a.lo, b.lo), std::max(a.hi, b.hi)};
  }
};

namespace detail {
inline double down(double v, int ulps = 1) {
  for (int i = 0; i < ulps; ++i) v = std::nextafter(v, -std::numeric_limits<double>::infinity());
  return v;
}
inline double up(double v, int ulps = 1) {
  for (int i = 0; i < ulps; ++i) v = std::nextafter(v, std::numeric_limits<double>::infinity());
  return v;
}
inline Interval widen(double l, double h, int ulps = 1) { return {down(l, ulps), up(h, ulps)}; }
}  // namespace detail

inline Interval operator+(const Interval& a, const Interval& b) {
  return detail::widen(a.lo + b.lo, a.hi + b.hi);
}
inline Interval operator-(const Interval& a) { return {-a.hi, -a.lo}; }
inline Interval operator-(const Interval& a, const Interval& b) {
  return detail::widen(a.lo - b.hi, a.hi - b.lo);
}
inline Interval operator*(const Interval& a, const Interval& b) {
  if (a.lo == a.hi && b.lo == b.hi) {
    const double p = a.lo * b.lo;
    return detail::widen(p, p);
  }
  const double c[4] = {a.lo * b.lo, a.lo * b.hi, a.hi * b.lo, a.hi * b.hi};
  return detail::widen(*std::min_element(c, c + 4), *std::max_element(c, c + 4));
}
inline Interval operator/(const Interval& a, const Interval& b) {
  if (b.lo <= 0.0 && b.hi >= 0.0) throw std::domain_error("Interval: division by an interval containing zero");
  const double c[4] = {a.lo / b.lo, a.lo / b.hi, a.hi / b.lo, a.hi / b.hi};
  return detail::widen(*std::min_element(c, c + 4), *std::max_element(c, c + 4));
}
inline Interval& operator+=(Interval& a, const Interval& b) { return a = a + b; }
inline Interval& operator-=(Interval& a, const Interval& b) { return a = a - b; }
inline Interval& operator*=(Interval& a, const Interval& b) { return a = a * b; }
inline Interval& operator/=(Interval& a, const Interval& b) { return a = a / b; }

inline Interval exp(const Interval& a) { return detail::widen(std::exp(a.lo), std::exp(a.hi), 2); }
inline Interval log(const Interval& a) {
  if (a.lo <= 0.0) throw std::domain_error("Interval: log of a non-positive interval");
  return detail::widen(std::log(a.lo), std::log(a.hi), 2);
}

/// Largest distance between a point of `a` and a point of `b`.
inline double max_distance(const Interval& a, const Interval& b) {
  return std::max(std::fabs(a.hi - b.lo), std::fabs(b.hi - a.lo));
}

std::ostream& operator<<(std::ostream& os, const Interval& iv);

}  // namespace ckms
