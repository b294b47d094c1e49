#pragma once

#include <optional>
#include <vector>

#include "ckms/ckwords.hpp"
#include "ckms/interval.hpp"
#include "ckms/perron.hpp"

namespace ckms {

/// A value known to lie in `value`, and known exactly when `exact` is set.
struct Enclosure {
  Interval value;
  std::optional<Rational> exact;

  static Enclosure of(const Rational& r);
  static const Enclosure& zero();
  static const Enclosure& one();
  double mid() const { return exact ? static_cast<double>(*exact) : value.mid(); }
};

Enclosure operator+(const Enclosure& a, const Enclosure& b);
Enclosure operator*(const Enclosure& a, const Enclosure& b);
Enclosure operator*(const Rational& c, const Enclosure& a);

/// The KMS state ρ_a: a parameter vector together with the Perron eigenvector x of âA.
class StateSpec {
 public:
  /// Throws PreconditionViolation when the eigenvalue enclosure of âA misses 1 by more than the certificate tolerance.
  explicit StateSpec(ParamVector param, double precision = 1e-13);

  const ZeroOneMatrix& matrix() const { return param_.matrix; }
  const ParamVector& param() const { return param_; }
  const PFData& pf() const { return pf_; }
  const std::vector<Enclosure>& a() const { return a_; }
  const std::vector<Enclosure>& x() const { return x_; }

 private:
  ParamVector param_;
  PFData pf_;
  std::vector<Enclosure> a_;
  std::vector<Enclosure> x_;
};

/// ρ_a(s_J s_K^*) = δ_JK a_{j_1} ... a_{j_{m-1}} x_{j_m}, and ρ_a(1) = 1.
Enclosure eval_state(const StateSpec& spec, const Monomial& m);
Enclosure eval_state(const StateSpec& spec, const NormalForm& x);

/// δ_JK n^{-|J|}.
Rational quasi_free_eval(int n, const Indices& J, const Indices& K);

/// e^{-β(ω(J) - ω(K))}.
Interval gauge_factor(const FrequencyVector& omega, const Interval& beta, const Monomial& m);

struct KmsResult {
  bool passed = false;
  double residual = 0.0;
  Enclosure lhs;
  Enclosure rhs;
};

/// Compares ρ(x α_{iβ}(y)) with ρ(y x).
KmsResult kms_check(const StateSpec& spec, const FrequencyVector& omega, const Interval& beta, const Monomial& x,
                    const Monomial& y, double tolerance);

}  // namespace ckms
