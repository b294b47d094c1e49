#pragma once

#include <optional>
#include <string>
#include <vector>

#include "ckms/lattice.hpp"
#include "ckms/perron.hpp"

namespace ckms {

/// The type III_λ label of a parameter vector.
struct TypeLabel {
  enum class Mode { exact, heuristic };
  Scalar lambda = Scalar::rational(1);
  Mode mode = Mode::exact;
  /// Present iff λ < 1; then the vector is (λ^{p_1}, ..., λ^{p_n}) with gcd(p) = 1.
  std::optional<BaseDecomposition> decomposition;
  std::vector<std::string> warnings;

  bool is_one() const { return !decomposition; }
};

struct ClassifyOptions {
  long denominator_bound = 1000000;
  double tolerance = 1e-9;
};

/// Exact when the entries are rational, or powers of a single certified base; heuristic (continued fractions on
/// log ratios) otherwise. Throws DomainError for entries outside (0,1).
TypeLabel detect_lambda(const std::vector<Scalar>& a, const ClassifyOptions& opts = {});

/// Exact comparison where both sides admit one, otherwise enclosure overlap.
bool same_lambda(const Scalar& x, const Scalar& y);

TypeLabel tensor_type(const std::vector<Scalar>& a, const std::vector<Scalar>& b, const ClassifyOptions& opts = {});

/// λ of the k-fold Kronecker power. The label depends only on the set of entries, so the power is built on
/// distinct values; ResourceLimit when n^k exceeds `dimension_cap`.
TypeLabel power_type_direct(const std::vector<Scalar>& a, long k, const ClassifyOptions& opts = {},
                            std::size_t dimension_cap = kDefaultDimensionCap);

/// r = gcd(|p - q|, k) with gcd(k, 0) = k; the k-th power of (x^p, x^q) has type III_{x^r}.
long power_type_ck2(long p, long q, long k);

/// (x^p, x^q) with x the root in (0,1) of x^p + x^q = 1.
std::vector<Scalar> power_pair(long p, long q);

/// Type of the tensor product of AFD factors of types III_λ and III_μ: τ when (λ, μ) = (τ^p, τ^q) with gcd(p,q) = 1,
/// and 1 otherwise.
TypeLabel afd_tensor_rule(const Scalar& lambda, const Scalar& mu, const ClassifyOptions& opts = {});

/// n-1 copies of 1/(n+1) followed by 2/(n+1) for even n; n-2 copies of 1/(n+2) followed by 2/(n+2) twice for odd n.
std::vector<Rational> iii1_family(int n);

/// λ = e^{-r} where rZ is the group generated by β ω_i (rational ω).
struct GroupModulus {
  Rational generator;  // gcd of the ω_i
  Interval r;          // β * generator
  Interval lambda;     // e^{-r}
};
GroupModulus group_modulus(const Interval& beta, const std::vector<Rational>& omega);

}  // namespace ckms
