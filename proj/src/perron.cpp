#include "ckms/perron.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <numeric>

#include "ckms/errors.hpp"

namespace ckms {

namespace {

constexpr double kEps = std::numeric_limits<double>::epsilon();

IntervalMatrix multiply(const IntervalMatrix& a, const IntervalMatrix& b) {
  const std::size_t n = a.size();
  IntervalMatrix c(n, std::vector<Interval>(n, Interval(0.0)));
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t k = 0; k < n; ++k) {
      if (a[i][k].hi == 0.0) continue;
      for (std::size_t j = 0; j < n; ++j) c[i][j] += a[i][k] * b[k][j];
    }
  return c;
}

bool pattern_irreducible(const IntervalMatrix& m) {
  const std::size_t n = m.size();
  std::vector<std::uint8_t> e(n * n);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) e[i * n + j] = m[i][j].hi > 0.0 ? 1 : 0;
  return is_irreducible(ZeroOneMatrix(n, std::move(e)));
}

/// Componentwise log-radius D with x*_i in x_i [e^-D, e^D], or infinity when no bound is available.
double eigenvector_radius(const IntervalMatrix& m, const std::vector<double>& x) {
  const std::size_t n = m.size();
  IntervalMatrix p = m;
  for (std::size_t i = 0; i < n; ++i) p[i][i] += Interval(1.0);
  for (std::size_t k = 1; k < n - 1; k *= 2) p = multiply(p, p);

  // Projective diameter of P via column ratios.
  std::vector<double> r(n * n, 0.0);
  for (std::size_t j = 0; j < n; ++j)
    for (std::size_t l = 0; l < n; ++l) {
      double best = 0.0;
      for (std::size_t i = 0; i < n; ++i) {
        if (p[i][l].lo <= 0.0) return std::numeric_limits<double>::infinity();
        best = std::max(best, detail::up(p[i][j].hi / p[i][l].lo));
      }
      r[j * n + l] = best;
    }
  double diameter = 0.0;
  for (std::size_t j = 0; j < n; ++j)
    for (std::size_t l = 0; l < n; ++l) diameter = std::max(diameter, detail::up(std::log(detail::up(r[j * n + l] * r[l * n + j])), 2));
  const double tau = detail::up(std::tanh(diameter / 4.0), 2);
  if (!(tau < 1.0)) return std::numeric_limits<double>::infinity();

  double rmax = 0.0, rmin = std::numeric_limits<double>::infinity();
  for (std::size_t i = 0; i < n; ++i) {
    Interval y(0.0);
    for (std::size_t j = 0; j < n; ++j) y += p[i][j] * Interval(x[j]);
    const Interval ratio = y / Interval(x[i]);
    rmax = std::max(rmax, ratio.hi);
    rmin = std::min(rmin, ratio.lo);
  }
  const double dh = detail::up(std::log(detail::up(rmax / rmin)), 2);
  // x sums to 1 only up to rounding; cover that with a few n*eps.
  return detail::up(dh / detail::down(1.0 - tau), 2) + 4.0 * static_cast<double>(n) * kEps;
}

}  // namespace

IntervalMatrix scaled(const std::vector<Interval>& a, const ZeroOneMatrix& A) {
  if (a.size() != A.dim()) throw DimensionMismatch("parameter vector length does not match matrix dimension");
  const std::size_t n = A.dim();
  IntervalMatrix m(n, std::vector<Interval>(n, Interval(0.0)));
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j)
      if (A(i, j)) m[i][j] = a[i];
  return m;
}

IntervalMatrix to_interval_matrix(const ZeroOneMatrix& A) {
  return scaled(std::vector<Interval>(A.dim(), Interval(1.0)), A);
}

PFData pf_data(const IntervalMatrix& m, const PerronOptions& opts) {
  const std::size_t n = m.size();
  if (n < 2) throw DomainError("pf_data: dimension must be at least 2");
  for (const auto& row : m) {
    if (row.size() != n) throw DimensionMismatch("pf_data: matrix is not square");
    for (const auto& e : row)
      if (e.lo < 0.0) throw PreconditionViolation("pf_data: matrix has negative entries");
  }
  if (!pattern_irreducible(m)) throw PreconditionViolation("pf_data: matrix is not irreducible");

  std::vector<std::vector<double>> mid(n, std::vector<double>(n));
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) mid[i][j] = m[i][j].mid();

  std::vector<double> x = opts.start.size() == n ? opts.start : std::vector<double>(n, 1.0);
  auto normalize = [&](std::vector<double>& v) {
    const double s = std::accumulate(v.begin(), v.end(), 0.0);
    for (auto& e : v) e /= s;
  };
  normalize(x);

  PFData out;
  std::vector<double> mx(n), y(n);
  bool converged = false;
  for (int it = 0; it < opts.max_iterations; ++it) {
    out.iterations = it;
    double rmin = std::numeric_limits<double>::infinity(), rmax = 0.0;
    for (std::size_t i = 0; i < n; ++i) {
      double s = 0.0;
      for (std::size_t j = 0; j < n; ++j) s += mid[i][j] * x[j];
      mx[i] = s;
      const double r = s / x[i];
      rmin = std::min(rmin, r);
      rmax = std::max(rmax, r);
    }
    if (!(rmin > 0.0) || !std::isfinite(rmax)) throw NumericalFailure("pf_data: power iteration lost positivity");
    if (rmax - rmin <= std::max(opts.precision / 2.0, 64.0 * kEps * rmax)) {
      converged = true;
      break;
    }
    // power step with M + I (primitive whenever M is irreducible)
    for (std::size_t i = 0; i < n; ++i) y[i] = mx[i] + x[i];
    normalize(y);
    x.swap(y);
  }
  if (!converged) throw NumericalFailure("pf_data: no convergence within the iteration cap");

  double lo = std::numeric_limits<double>::infinity(), hi = 0.0;
  for (std::size_t i = 0; i < n; ++i) {
    Interval s(0.0);
    for (std::size_t j = 0; j < n; ++j) s += m[i][j] * Interval(x[j]);
    const Interval r = s / Interval(x[i]);
    lo = std::min(lo, r.lo);
    hi = std::max(hi, r.hi);
  }
  out.eigenvalue = Interval(lo, hi);
  out.eigenvector_mid = x;

  double radius = std::numeric_limits<double>::infinity();
  if (opts.eigenvector_enclosure && n <= 128) radius = eigenvector_radius(m, x);
  out.eigenvector_rigorous = std::isfinite(radius);
  if (!out.eigenvector_rigorous) {
    // a-posteriori estimate from the Collatz–Wielandt spread
    radius = 16.0 * (hi - lo) / lo + 16.0 * static_cast<double>(n) * kEps;
  }
  const Interval factor(detail::down(std::exp(-radius), 2), detail::up(std::exp(radius), 2));
  out.eigenvector.reserve(n);
  for (double xi : x) out.eigenvector.push_back(Interval(xi) * factor);
  return out;
}

// ---------------------------------------------------------------- frequencies

FrequencyVector::FrequencyVector(std::vector<Interval> e) : entries(std::move(e)) {
  for (const auto& w : entries)
    if (!(w.lo > 0.0)) throw DomainError("frequency vector entries must be strictly positive");
}

FrequencyVector FrequencyVector::from_rationals(const std::vector<Rational>& w) {
  std::vector<Interval> e;
  for (const auto& r : w) {
    if (r <= 0) throw DomainError("frequency vector entries must be strictly positive");
    e.push_back(enclose(r));
  }
  return FrequencyVector(std::move(e));
}

// ---------------------------------------------------------------- Λ(A)

Membership in_lambda(const ZeroOneMatrix& A, const std::vector<Scalar>& a, double tolerance) {
  if (!in_class_cdm(A)) throw PreconditionViolation("in_lambda: matrix is not nondegenerate irreducible non-permutation");
  if (a.size() != A.dim()) throw DimensionMismatch("in_lambda: vector length does not match matrix dimension");
  std::vector<Interval> enc;
  for (const auto& s : a) {
    const Interval e = enclose(s);
    if (!(e.lo > 0.0 && e.hi < 1.0)) throw DomainError("in_lambda: entries must lie strictly between 0 and 1");
    enc.push_back(e);
  }
  PerronOptions opts;
  opts.precision = tolerance / 4.0;
  opts.eigenvector_enclosure = false;
  const PFData pf = pf_data(scaled(enc, A), opts);
  Membership out;
  out.pfe = pf.eigenvalue;
  out.accepted = pf.eigenvalue.intersects(Interval(1.0 - tolerance, 1.0 + tolerance));
  if (out.accepted) out.param = ParamVector{A, a, enc, Certificate{Certificate::Kind::verified, tolerance}};
  return out;
}

Poly characteristic_polynomial(const ZeroOneMatrix& A) {
  // Faddeev–LeVerrier over the integers.
  const std::size_t n = A.dim();
  std::vector<std::vector<Integer>> m(n, std::vector<Integer>(n, 0));
  Poly c(n + 1, 0);
  c[n] = 1;
  for (std::size_t k = 1; k <= n; ++k) {
    std::vector<std::vector<Integer>> am(n, std::vector<Integer>(n, 0));
    for (std::size_t i = 0; i < n; ++i)
      for (std::size_t l = 0; l < n; ++l) {
        if (!A(i, l)) continue;
        for (std::size_t j = 0; j < n; ++j) am[i][j] += m[l][j];
      }
    for (std::size_t i = 0; i < n; ++i) am[i][i] += c[n - k + 1];
    m = std::move(am);
    Integer tr = 0;
    for (std::size_t i = 0; i < n; ++i)
      for (std::size_t l = 0; l < n; ++l)
        if (A(i, l)) tr += m[l][i];
    c[n - k] = -tr / static_cast<long>(k);
  }
  return c;
}

Scalar perron_value(const ZeroOneMatrix& A, double precision, std::size_t exact_dimension_limit) {
  PerronOptions opts;
  opts.precision = precision;
  opts.eigenvector_enclosure = false;
  const PFData pf = pf_data(to_interval_matrix(A), opts);
  if (A.dim() > exact_dimension_limit) return Scalar::floating(pf.eigenvalue.mid());
  const Poly chi = characteristic_polynomial(A);
  const Rational pad(std::max(pf.eigenvalue.width(), 1e-12));
  const Rational lo = Rational(pf.eigenvalue.lo) - pad;
  const Rational hi = Rational(pf.eigenvalue.hi) + pad;
  if (auto r = rational_root_in(chi, lo, hi)) return Scalar(*r);
  try {
    return Scalar(Algebraic(chi, lo, hi));
  } catch (const InvalidScalar& e) {
    throw NumericalFailure(std::string("perron_value: could not isolate the Perron root: ") + e.what());
  }
}

ParamVector canonical_point(const ZeroOneMatrix& A, double precision) {
  if (!in_class_cdm(A)) throw PreconditionViolation("canonical_point: matrix is not in the admissible class");
  const Scalar c = perron_value(A, precision);
  Scalar inv;
  if (auto r = c.as_rational()) {
    inv = Scalar(Rational(1) / *r);
  } else if (const auto* alg = std::get_if<Algebraic>(&c.value())) {
    inv = Scalar(Algebraic(reversed(alg->poly()), Rational(1) / alg->hi(), Rational(1) / alg->lo()));
  } else {
    inv = Scalar::floating(1.0 / c.approx());
  }
  const Interval e = enclose(inv);
  return ParamVector{A, std::vector<Scalar>(A.dim(), inv), std::vector<Interval>(A.dim(), e),
                     Certificate{Certificate::Kind::exact_by_construction, 0.0}};
}

BetaSolution solve_beta(const ZeroOneMatrix& A, const FrequencyVector& omega, double precision, int max_doublings) {
  if (!in_class_cdm(A)) throw PreconditionViolation("solve_beta: matrix is not in the admissible class");
  if (omega.size() != A.dim()) throw DimensionMismatch("solve_beta: frequency vector length does not match");
  const std::size_t n = A.dim();
  std::vector<double> warm;
  auto params = [&](const Interval& beta) {
    std::vector<Interval> a;
    a.reserve(n);
    for (const auto& w : omega.entries) a.push_back(exp(-(beta * w)));
    return a;
  };
  // -1: PFE < 1 (β too large), +1: PFE > 1 (β too small), 0: undecided at this resolution
  auto side = [&](double beta) {
    PerronOptions opts;
    opts.precision = 1e-15;
    opts.eigenvector_enclosure = false;
    opts.start = warm;
    const PFData pf = pf_data(scaled(params(Interval(beta)), A), opts);
    warm = pf.eigenvector_mid;
    if (pf.eigenvalue.lo > 1.0) return 1;
    if (pf.eigenvalue.hi < 1.0) return -1;
    return 0;
  };

  double lo = 0.0, hi = 1.0;
  int doublings = 0;
  for (int s = side(hi); s >= 0; s = side(hi)) {
    if (s == 0) break;
    lo = hi;
    hi *= 2.0;
    if (++doublings > max_doublings) throw NumericalFailure("solve_beta: no bracket within the doubling cap");
  }
  while (hi - lo > precision) {
    const double m = lo + 0.5 * (hi - lo);
    if (m <= lo || m >= hi) break;
    const int s = side(m);
    if (s > 0) {
      lo = m;
    } else if (s < 0) {
      hi = m;
    } else {
      const double d = precision / 4.0;
      if (side(m - d) > 0) lo = std::max(lo, m - d);
      if (side(m + d) < 0) hi = std::min(hi, m + d);
      if (hi - lo > precision)
        throw NumericalFailure("solve_beta: requested precision is below the numerical resolution");
    }
  }
  BetaSolution out{Interval(lo, hi), ParamVector{A, {}, params(Interval(lo, hi)),
                                                 Certificate{Certificate::Kind::exact_by_construction, 0.0}}};
  for (const auto& e : out.param.enclosures) out.param.entries.push_back(Scalar::floating(e.mid()));
  return out;
}

Scalar solve_power_equation(const std::vector<long>& exponents, const Rational& precision) {
  if (exponents.size() < 2)
    throw DomainError("solve_power_equation: need at least two exponents (one exponent forces x = 1)");
  long top = 0;
  for (long p : exponents) {
    if (p <= 0) throw DomainError("solve_power_equation: exponents must be positive");
    top = std::max(top, p);
  }
  Poly poly(static_cast<std::size_t>(top) + 1, 0);
  for (long p : exponents) poly[static_cast<std::size_t>(p)] += 1;
  poly[0] -= 1;
  const Algebraic root(poly, Rational(0), Rational(1));
  if (auto r = root.rational_value()) return Scalar(*r);
  return Scalar(root.refined(precision));
}

}  // namespace ckms
