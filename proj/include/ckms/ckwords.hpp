#pragma once

#include <compare>
#include <functional>
#include <map>
#include <string>
#include <vector>

#include "ckms/matrix01.hpp"
#include "ckms/polynomial.hpp"

namespace ckms {

/// Generator s_index (1-based) or its adjoint.
struct Letter {
  int index = 1;
  bool starred = false;
  friend auto operator<=>(const Letter&, const Letter&) = default;
};

using Word = std::vector<Letter>;
using Indices = std::vector<int>;

/// s_J s_K^*; both empty is the unit.
struct Monomial {
  Indices J;
  Indices K;
  friend auto operator<=>(const Monomial&, const Monomial&) = default;
};

/// Finite linear combination of admissible monomials with nonzero rational coefficients.
class NormalForm {
 public:
  using Terms = std::map<Monomial, Rational>;

  NormalForm() = default;
  static NormalForm unit();
  static NormalForm monomial(Indices J, Indices K, Rational coeff = 1);

  const Terms& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }
  std::size_t size() const { return terms_.size(); }

  void add(const Monomial& m, const Rational& c);
  NormalForm& operator+=(const NormalForm& o);
  NormalForm& operator-=(const NormalForm& o);
  NormalForm& operator*=(const Rational& c);

  friend NormalForm operator+(NormalForm a, const NormalForm& b) { return a += b; }
  friend NormalForm operator-(NormalForm a, const NormalForm& b) { return a -= b; }
  friend NormalForm operator*(const Rational& c, NormalForm a) { return a *= c; }
  friend bool operator==(const NormalForm&, const NormalForm&) = default;

 private:
  Terms terms_;
};

bool is_admissible(const ZeroOneMatrix& A, const Indices& J);

/// s_J followed by the letters of s_K^*.
Word to_word(const Monomial& m);

enum class Strategy { leftmost, rightmost };

/// One rewrite step: termination measure of the rewritten word before, and the largest measure among its successors.
struct RewriteStep {
  long before = 0;
  long after = -1;
};

/// Σ over starred letters of the number of unstarred letters to their right.
long termination_measure(const Word& w);

/// Rewrites s_i^* s_j → δ_ij Σ_k A_ik s_k s_k^* until every starred letter follows every unstarred one.
/// Words with an inadmissible adjacent pair are dropped as zero.
NormalForm normalize(const ZeroOneMatrix& A, const Word& word, Strategy strategy = Strategy::leftmost,
                     std::vector<RewriteStep>* trace = nullptr);

NormalForm multiply(const ZeroOneMatrix& A, const NormalForm& x, const NormalForm& y);

NormalForm adjoint(const NormalForm& x);

/// Equality in the algebra. Distinct normal forms can be equal (s_1 = s_1 s_1 s_1^* + s_1 s_2 s_2^* over F_2),
/// so both sides are expanded through s_J s_K^* = Σ_l A_{j,l} s_{Jl} s_{Kl}^* to a common depth first.
bool equivalent(const ZeroOneMatrix& A, const NormalForm& x, const NormalForm& y);

/// Parses "s1 s2* s1". Throws DomainError on bad syntax or an index outside 1..n.
Word parse_word(const std::string& text, std::size_t n);

std::string to_string(const Word& w);
std::string to_string(const Monomial& m);
std::string to_string(const NormalForm& x);

/// All admissible index sequences of each length 0..max_len, shortest first, in lexicographic order.
/// Stops with ResourceLimit once more than `cap` sequences would be produced.
std::vector<Indices> admissible_words(const ZeroOneMatrix& A, std::size_t max_len, std::size_t cap = 100000);

}  // namespace ckms
