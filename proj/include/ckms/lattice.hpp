#pragma once

#include <map>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "ckms/scalar.hpp"

namespace ckms {

/// Multiplicative normal form r * b_1^{e_1} * ... * b_k^{e_k} with r rational and
/// pairwise distinct irrational algebraic bases b_i.
struct MultTerm {
  Rational coeff{1};
  std::vector<std::pair<Algebraic, long>> powers;
};

/// Nullopt for anything containing a float.
std::optional<MultTerm> to_mult_term(const Scalar& s);
Scalar from_mult_term(const MultTerm& t);
MultTerm multiply(const MultTerm& a, const MultTerm& b);

/// Prime (or pairwise-coprime atom) factorization of a positive integer.
/// Trial division against a memoized prime table; cofactors left over after the
/// table are kept as atoms.
std::map<Integer, long> factorize(const Integer& v);

/// Joint factorization of several positive rationals over one pairwise-coprime base,
/// so that exponent vectors are comparable even when large cofactors are not split.
std::vector<std::map<Integer, long>> factorize_jointly(const std::vector<Rational>& values);

/// values_i = base^{exponents_i} with gcd(exponents) = 1 and 0 < base < 1.
struct BaseDecomposition {
  Scalar base;
  std::vector<long> exponents;
};

/// Exact common-base search for rationals in (0,1). Throws DomainError for values outside (0,1).
std::optional<BaseDecomposition> common_base_rationals(const std::vector<Rational>& values);

/// Exact common-base search over scalars.
///
/// Decidable when every entry is float-free, at most one distinct irrational algebraic
/// base occurs, and that base is a certified unit whenever rational factors other than 1
/// are present. `decomposition` is meaningful only when `decidable` is true.
struct CommonBaseResult {
  bool decidable = false;
  std::optional<BaseDecomposition> decomposition;
  std::string reason;
};
CommonBaseResult common_base_exact(const std::vector<Scalar>& values);

struct LogRatio {
  enum class Kind { rational, irrational, undecided };
  Kind kind = Kind::undecided;
  long p = 0;
  long q = 1;
  bool exact = false;
};

/// Whether log x / log y is rational. Exact through exponent lattices whenever the pair is
/// decidable in the sense of common_base_exact; otherwise a continued-fraction search that
/// never reports `irrational`.
LogRatio log_ratio_rational(const Scalar& x, const Scalar& y, long denominator_bound,
                            double tolerance);

}  // namespace ckms
