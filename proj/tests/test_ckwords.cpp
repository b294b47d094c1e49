#include <random>

#include "ckms/ckwords.hpp"
#include "ckms/errors.hpp"
#include "doctest.h"

using namespace ckms;

namespace {

const ZeroOneMatrix kF2 = ZeroOneMatrix::full(2);
const ZeroOneMatrix kGolden = ZeroOneMatrix::from_rows({{1, 1}, {1, 0}});
const ZeroOneMatrix kCycle3 = ZeroOneMatrix::from_rows({{1, 1, 0}, {0, 1, 1}, {1, 0, 1}});

Word random_word(std::mt19937_64& rng, std::size_t n, std::size_t max_len) {
  std::uniform_int_distribution<std::size_t> len(0, max_len);
  std::uniform_int_distribution<int> idx(1, static_cast<int>(n));
  std::bernoulli_distribution star(0.5);
  Word w(len(rng));
  for (auto& l : w) l = {idx(rng), star(rng)};
  return w;
}

NormalForm random_form(std::mt19937_64& rng, const ZeroOneMatrix& A, std::size_t terms) {
  std::uniform_int_distribution<long> coeff(-3, 3);
  NormalForm x;
  for (std::size_t t = 0; t < terms; ++t) x += Rational(coeff(rng)) * normalize(A, random_word(rng, A.dim(), 3));
  return x;
}

NormalForm projection_sum(const ZeroOneMatrix& A) {
  NormalForm u;
  for (int i = 1; i <= static_cast<int>(A.dim()); ++i) u += NormalForm::monomial({i}, {i});
  return u;
}

}  // namespace

TEST_CASE("admissibility") {
  CHECK(is_admissible(kF2, {1, 2, 1, 2}));
  CHECK_FALSE(is_admissible(kGolden, {2, 2}));
  CHECK(is_admissible(kGolden, {1}));
  CHECK(is_admissible(kGolden, {}));
  CHECK_THROWS_AS(is_admissible(kGolden, {3}), DomainError);
}

TEST_CASE("normalize examples") {
  CHECK(normalize(kF2, parse_word("s1* s1", 2)) == NormalForm::monomial({1}, {1}) + NormalForm::monomial({2}, {2}));
  CHECK(normalize(kF2, parse_word("s1* s2", 2)).is_zero());
  CHECK(normalize(kGolden, parse_word("s1* s2", 2)).is_zero());

  // s1 s1* s1 s2 = s1 s2 in the algebra; the rewrite lands on s1 s2 s1 s1*
  const auto nf = normalize(kGolden, parse_word("s1 s1* s1 s2", 2));
  CHECK(nf == NormalForm::monomial({1, 2, 1}, {1}));
  CHECK(equivalent(kGolden, nf, NormalForm::monomial({1, 2}, {})));
  CHECK_FALSE(equivalent(kGolden, nf, NormalForm::monomial({1, 2}, {2})));
}

TEST_CASE("inadmissible words vanish") {
  CHECK(normalize(kGolden, parse_word("s2 s2", 2)).is_zero());
  CHECK(normalize(kGolden, parse_word("s2* s2*", 2)).is_zero());
  CHECK(normalize(kGolden, parse_word("s2 s1*", 2)) == NormalForm::monomial({2}, {1}));
  CHECK(normalize(kGolden, {}) == NormalForm::unit());
}

TEST_CASE("multiply examples") {
  const auto p1 = NormalForm::monomial({1}, {1});
  const auto p2 = NormalForm::monomial({2}, {2});
  // equal as algebra elements; the rewrite expands s1* s1 inside the product
  CHECK(multiply(kF2, p1, p1) == NormalForm::monomial({1, 1}, {1, 1}) + NormalForm::monomial({1, 2}, {1, 2}));
  CHECK(equivalent(kF2, multiply(kF2, p1, p1), p1));
  CHECK(multiply(kF2, p1, p2).is_zero());
  CHECK(multiply(kF2, p1, NormalForm::unit()) == p1);
  CHECK(multiply(kF2, NormalForm::unit(), p2) == p2);
  CHECK_THROWS_AS(normalize(kF2, {{3, false}}), DomainError);
}

TEST_CASE("adjoint") {
  CHECK(adjoint(NormalForm::monomial({1, 2}, {2})) == NormalForm::monomial({2}, {1, 2}));
  CHECK(adjoint(NormalForm::unit()) == NormalForm::unit());
  CHECK(adjoint(NormalForm::monomial({1}, {2}, 2)) == NormalForm::monomial({2}, {1}, 2));
  std::mt19937_64 rng(3);
  for (int t = 0; t < 50; ++t) {
    const auto x = random_form(rng, kCycle3, 4);
    CHECK(adjoint(adjoint(x)) == x);
  }
}

TEST_CASE("word parsing") {
  const Word w = parse_word("s1 s2* s1", 2);
  REQUIRE(w.size() == 3);
  CHECK(w[1] == Letter{2, true});
  CHECK(to_string(w) == "s1 s2* s1");
  CHECK(parse_word("  ", 2).empty());
  CHECK_THROWS_AS(parse_word("s3", 2), DomainError);
  CHECK_THROWS_AS(parse_word("t1", 2), DomainError);
  CHECK_THROWS_AS(parse_word("s", 2), DomainError);
  CHECK_THROWS_AS(parse_word("s0", 2), DomainError);
  CHECK(to_string(NormalForm::monomial({1}, {1}) + NormalForm::monomial({2}, {2}, 3)) == "s1 s1* + (3) s2 s2*");
}

TEST_CASE("termination measure decreases at every step") {
  std::mt19937_64 rng(11);
  const std::vector<ZeroOneMatrix> pool{kF2, kGolden, kCycle3, ZeroOneMatrix::full(3)};
  for (int t = 0; t < 500; ++t) {
    const auto& A = pool[t % pool.size()];
    std::vector<RewriteStep> trace;
    normalize(A, random_word(rng, A.dim(), 6), Strategy::leftmost, &trace);
    for (const auto& s : trace) CHECK(s.after < s.before);
  }
}

TEST_CASE("leftmost and rightmost strategies agree") {
  std::mt19937_64 rng(5);
  const std::vector<ZeroOneMatrix> pool{kF2, kGolden, kCycle3, ZeroOneMatrix::full(3)};
  for (int t = 0; t < 1000; ++t) {
    const auto& A = pool[t % pool.size()];
    const Word w = random_word(rng, A.dim(), 6);
    CHECK(normalize(A, w, Strategy::leftmost) == normalize(A, w, Strategy::rightmost));
  }
}

TEST_CASE("normal forms put unstarred letters first and are admissible") {
  std::mt19937_64 rng(9);
  for (int t = 0; t < 300; ++t) {
    const auto nf = normalize(kCycle3, random_word(rng, 3, 6));
    for (const auto& [m, c] : nf.terms()) {
      CHECK(c != 0);
      CHECK(is_admissible(kCycle3, m.J));
      CHECK(is_admissible(kCycle3, m.K));
      const Word w = to_word(m);
      CHECK(termination_measure(w) == 0);
    }
  }
}

TEST_CASE("associativity and the adjoint reverses products") {
  std::mt19937_64 rng(13);
  for (const auto& A : {kF2, kGolden, kCycle3}) {
    for (int t = 0; t < 40; ++t) {
      const auto x = random_form(rng, A, 3), y = random_form(rng, A, 3), z = random_form(rng, A, 3);
      CHECK(multiply(A, multiply(A, x, y), z) == multiply(A, x, multiply(A, y, z)));
      CHECK(adjoint(multiply(A, x, y)) == multiply(A, adjoint(y), adjoint(x)));
    }
  }
}

TEST_CASE("the projection sum acts as the unit") {
  std::mt19937_64 rng(17);
  for (const auto& A : {kF2, kGolden, kCycle3}) {
    const auto u = projection_sum(A);
    CHECK(equivalent(A, u, NormalForm::unit()));
    for (int t = 0; t < 60; ++t) {
      const auto x = random_form(rng, A, 3);
      CHECK(equivalent(A, multiply(A, u, x), x));
      CHECK(equivalent(A, multiply(A, x, u), x));
    }
  }
}

TEST_CASE("equivalence separates distinct elements") {
  CHECK_FALSE(equivalent(kF2, NormalForm::monomial({1}, {1}), NormalForm::unit()));
  CHECK_FALSE(equivalent(kF2, NormalForm::monomial({1}, {}), NormalForm::monomial({2}, {})));
  CHECK(equivalent(kF2, NormalForm::monomial({1}, {}), NormalForm::monomial({1, 1}, {1}) + NormalForm::monomial({1, 2}, {2})));
  // s2 s1* vanishes over a matrix where 1 and 2 share no successor
  const auto A = ZeroOneMatrix::from_rows({{1, 0, 1}, {0, 1, 1}, {1, 1, 0}});
  CHECK_FALSE(equivalent(A, NormalForm::monomial({2}, {1}), NormalForm{}));
  const auto B = ZeroOneMatrix::from_rows({{0, 1, 0}, {0, 0, 1}, {1, 1, 1}});
  CHECK(equivalent(B, NormalForm::monomial({1}, {2}), NormalForm{}));
}

TEST_CASE("admissible word enumeration") {
  const auto words = admissible_words(kGolden, 3);
  // Fibonacci counts: 1, 2, 3, 5
  CHECK(words.size() == 11);
  for (const auto& w : words) CHECK(is_admissible(kGolden, w));
  CHECK(admissible_words(kF2, 2).size() == 7);
  CHECK_THROWS_AS(admissible_words(ZeroOneMatrix::full(9), 6, 1000), ResourceLimit);
}
