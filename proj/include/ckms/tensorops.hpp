#pragma once

#include <utility>
#include <vector>

#include "ckms/states.hpp"

namespace ckms {

/// u = m(i-1) + j between 1..nm and (i, j) in 1..n × 1..m.
struct IndexSplit {
  std::size_t n = 0;
  std::size_t m = 0;

  IndexSplit(std::size_t n_, std::size_t m_);
  std::pair<int, int> split(int u) const;
  int join(int i, int j) const;
};

/// (v⊠w)_{m(i-1)+j} = v_i w_j.
std::vector<Scalar> kronecker_vector(const std::vector<Scalar>& v, const std::vector<Scalar>& w);
std::vector<Interval> kronecker_vector(const std::vector<Interval>& v, const std::vector<Interval>& w);

/// Letterwise image of a monomial over A⊠B under the generator split.
std::pair<Monomial, Monomial> embed_monomial(const IndexSplit& split, const Monomial& m);

/// (ρ_a ⊗ ρ_b)(m) = ρ_a(m_1) ρ_b(m_2).
Enclosure tensor_state_eval(const StateSpec& a, const StateSpec& b, const Monomial& m);
Enclosure tensor_state_eval(const StateSpec& a, const StateSpec& b, const NormalForm& x);

/// a⊠b as a point of Λ(A⊠B).
ParamVector kronecker_param(const ParamVector& a, const ParamVector& b);

struct TensorReport {
  bool passed = false;
  double max_residual = 0.0;
  std::size_t monomials_checked = 0;
  Monomial worst;
};

/// Compares the tensor-product state with ρ_{a⊠b} on every admissible s_J s_K^* over A⊠B with |J| = |K| <= max_len.
/// `word_cap` bounds the number of admissible words enumerated (ResourceLimit beyond it).
TensorReport verify_tensor_identity(const StateSpec& a, const StateSpec& b, std::size_t max_len, double tolerance,
                                    std::size_t word_cap = 100000);

/// Ω_{m(i-1)+j} = β_1 ω_i + β_2 ω'_j.
FrequencyVector combined_frequencies(const IndexSplit& split, const FrequencyVector& omega1, const Interval& beta1,
                                     const FrequencyVector& omega2, const Interval& beta2);

/// Splitting through (A⊠B)⊠C and through A⊠(B⊠C) gives the same triple for every generator.
bool check_coassociativity(std::size_t nA, std::size_t nB, std::size_t nC);

}  // namespace ckms
