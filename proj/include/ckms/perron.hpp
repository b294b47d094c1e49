#pragma once

#include <optional>
#include <vector>

#include "ckms/interval.hpp"
#include "ckms/matrix01.hpp"
#include "ckms/scalar.hpp"

namespace ckms {

/// Square matrix of interval entries, row-major rows.
using IntervalMatrix = std::vector<std::vector<Interval>>;

/// diag(a) * A.
IntervalMatrix scaled(const std::vector<Interval>& a, const ZeroOneMatrix& A);
IntervalMatrix to_interval_matrix(const ZeroOneMatrix& A);

struct PerronOptions {
  double precision = 1e-12;
  int max_iterations = 100000;
  /// Skip the (cubic-cost) eigenvector enclosure when only the eigenvalue is needed.
  bool eigenvector_enclosure = true;
  /// Warm start for the power iteration; all-ones when empty.
  std::vector<double> start;
};

/// Perron–Frobenius eigenvalue and eigenvector of an irreducible nonnegative matrix.
///
/// `eigenvalue` is a Collatz–Wielandt bracket, valid for every matrix inside the interval
/// entries. `eigenvector` (normalized to sum 1) is enclosed through the Birkhoff contraction
/// bound of a positive power of M + I when `eigenvector_rigorous` is set.
struct PFData {
  Interval eigenvalue;
  std::vector<Interval> eigenvector;
  std::vector<double> eigenvector_mid;
  bool eigenvector_rigorous = false;
  int iterations = 0;
};

PFData pf_data(const IntervalMatrix& m, const PerronOptions& opts = {});

/// Membership certificate of a parameter vector in Λ(A).
struct Certificate {
  enum class Kind { exact_by_construction, verified };
  Kind kind = Kind::verified;
  double tolerance = 0.0;
};

/// A point a of Λ(A): PFE(diag(a) A) = 1.
struct ParamVector {
  ZeroOneMatrix matrix;
  std::vector<Scalar> entries;
  std::vector<Interval> enclosures;
  Certificate certificate;
};

/// Strictly positive frequencies ω.
struct FrequencyVector {
  std::vector<Interval> entries;

  FrequencyVector() = default;
  explicit FrequencyVector(std::vector<Interval> e);
  static FrequencyVector from_rationals(const std::vector<Rational>& w);
  std::size_t size() const { return entries.size(); }
};

struct Membership {
  bool accepted = false;
  Interval pfe;
  std::optional<ParamVector> param;
};

/// PFE(diag(a) A) to precision tolerance/4; accepted iff the enclosure meets [1-tol, 1+tol].
Membership in_lambda(const ZeroOneMatrix& A, const std::vector<Scalar>& a, double tolerance);

/// PFE(A) as an exact scalar: rational when it is an integer, otherwise an algebraic number
/// isolated from the characteristic polynomial. Float beyond `exact_dimension_limit`.
Scalar perron_value(const ZeroOneMatrix& A, double precision = 1e-12, std::size_t exact_dimension_limit = 24);

/// e(A) = (1/c_A, ..., 1/c_A).
ParamVector canonical_point(const ZeroOneMatrix& A, double precision = 1e-12);

struct BetaSolution {
  Interval beta;
  ParamVector param;
};

/// The unique β > 0 with PFE(diag(e^{-βω}) A) = 1, by bracketing and bisection.
BetaSolution solve_beta(const ZeroOneMatrix& A, const FrequencyVector& omega, double precision = 1e-12,
                        int max_doublings = 64);

/// The root in (0,1) of Σ x^{p_i} = 1.
Scalar solve_power_equation(const std::vector<long>& exponents, const Rational& precision);

/// Characteristic polynomial det(xI - A), constant term first.
Poly characteristic_polynomial(const ZeroOneMatrix& A);

}  // namespace ckms
