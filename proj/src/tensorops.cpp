#include "ckms/tensorops.hpp"

#include "ckms/errors.hpp"

namespace ckms {

IndexSplit::IndexSplit(std::size_t n_, std::size_t m_) : n(n_), m(m_) {
  if (n < 1 || m < 1) throw DomainError("index split needs positive dimensions");
}

std::pair<int, int> IndexSplit::split(int u) const {
  if (u < 1 || static_cast<std::size_t>(u) > n * m)
    throw DomainError("composite index " + std::to_string(u) + " outside 1.." + std::to_string(n * m));
  const int mm = static_cast<int>(m);
  return {(u - 1) / mm + 1, (u - 1) % mm + 1};
}

int IndexSplit::join(int i, int j) const {
  if (i < 1 || static_cast<std::size_t>(i) > n || j < 1 || static_cast<std::size_t>(j) > m)
    throw DomainError("index pair outside the split");
  return static_cast<int>(m) * (i - 1) + j;
}

std::vector<Scalar> kronecker_vector(const std::vector<Scalar>& v, const std::vector<Scalar>& w) {
  std::vector<Scalar> out;
  out.reserve(v.size() * w.size());
  for (const auto& x : v)
    for (const auto& y : w) out.push_back(x * y);
  return out;
}

std::vector<Interval> kronecker_vector(const std::vector<Interval>& v, const std::vector<Interval>& w) {
  std::vector<Interval> out;
  out.reserve(v.size() * w.size());
  for (const auto& x : v)
    for (const auto& y : w) out.push_back(x * y);
  return out;
}

std::pair<Monomial, Monomial> embed_monomial(const IndexSplit& split, const Monomial& m) {
  std::pair<Monomial, Monomial> out;
  for (auto* part : {&out.first, &out.second}) {
    part->J.reserve(m.J.size());
    part->K.reserve(m.K.size());
  }
  for (int u : m.J) {
    const auto [i, j] = split.split(u);
    out.first.J.push_back(i);
    out.second.J.push_back(j);
  }
  for (int u : m.K) {
    const auto [i, j] = split.split(u);
    out.first.K.push_back(i);
    out.second.K.push_back(j);
  }
  return out;
}

Enclosure tensor_state_eval(const StateSpec& a, const StateSpec& b, const Monomial& m) {
  const auto [ma, mb] = embed_monomial(IndexSplit(a.matrix().dim(), b.matrix().dim()), m);
  return eval_state(a, ma) * eval_state(b, mb);
}

Enclosure tensor_state_eval(const StateSpec& a, const StateSpec& b, const NormalForm& x) {
  Enclosure sum = Enclosure::zero();
  for (const auto& [m, c] : x.terms()) sum = sum + c * tensor_state_eval(a, b, m);
  return sum;
}

ParamVector kronecker_param(const ParamVector& a, const ParamVector& b) {
  const bool exact = a.certificate.kind == Certificate::Kind::exact_by_construction &&
                     b.certificate.kind == Certificate::Kind::exact_by_construction;
  const double ta = a.certificate.tolerance, tb = b.certificate.tolerance;
  Certificate cert{exact ? Certificate::Kind::exact_by_construction : Certificate::Kind::verified, ta + tb + ta * tb};
  return ParamVector{kronecker(a.matrix, b.matrix), kronecker_vector(a.entries, b.entries),
                     kronecker_vector(a.enclosures, b.enclosures), cert};
}

TensorReport verify_tensor_identity(const StateSpec& a, const StateSpec& b, std::size_t max_len, double tolerance,
                                    std::size_t word_cap) {
  const StateSpec ab(kronecker_param(a.param(), b.param()));
  const auto words = admissible_words(ab.matrix(), max_len, word_cap);
  TensorReport report;
  // words come grouped by length, so each block pairs with itself
  std::size_t begin = 0;
  while (begin < words.size()) {
    std::size_t end = begin;
    while (end < words.size() && words[end].size() == words[begin].size()) ++end;
    for (std::size_t p = begin; p < end; ++p)
      for (std::size_t q = begin; q < end; ++q) {
        const Monomial m{words[p], words[q]};
        const double r = max_distance(tensor_state_eval(a, b, m).value, eval_state(ab, m).value);
        ++report.monomials_checked;
        if (r > report.max_residual) {
          report.max_residual = r;
          report.worst = m;
        }
      }
    begin = end;
  }
  report.passed = report.max_residual <= tolerance;
  return report;
}

FrequencyVector combined_frequencies(const IndexSplit& split, const FrequencyVector& omega1, const Interval& beta1,
                                     const FrequencyVector& omega2, const Interval& beta2) {
  if (omega1.size() != split.n || omega2.size() != split.m)
    throw DimensionMismatch("combined_frequencies: frequency vectors do not match the split");
  if (!(beta1.lo > 0.0 && beta2.lo > 0.0)) throw DomainError("combined_frequencies: inverse temperatures must be positive");
  std::vector<Interval> out;
  for (const auto& w1 : omega1.entries)
    for (const auto& w2 : omega2.entries) out.push_back(beta1 * w1 + beta2 * w2);
  return FrequencyVector(std::move(out));
}

bool check_coassociativity(std::size_t nA, std::size_t nB, std::size_t nC) {
  if (nA < 2 || nB < 2 || nC < 2) throw DomainError("coassociativity check needs three dimensions of at least 2");
  const IndexSplit left_outer(nA * nB, nC), left_inner(nA, nB);
  const IndexSplit right_outer(nA, nB * nC), right_inner(nB, nC);
  const int total = static_cast<int>(nA * nB * nC);
  for (int u = 1; u <= total; ++u) {
    const auto [ab, k] = left_outer.split(u);
    const auto [i, j] = left_inner.split(ab);
    const auto [i2, bc] = right_outer.split(u);
    const auto [j2, k2] = right_inner.split(bc);
    if (i != i2 || j != j2 || k != k2) return false;
  }
  return true;
}

}  // namespace ckms
