#include <cmath>
#include <random>

#include "ckms/errors.hpp"
#include "ckms/tensorops.hpp"
#include "doctest.h"

using namespace ckms;

namespace {

const ZeroOneMatrix kF2 = ZeroOneMatrix::full(2);
const ZeroOneMatrix kGolden = ZeroOneMatrix::from_rows({{1, 1}, {1, 0}});
const ZeroOneMatrix kCycle3 = ZeroOneMatrix::from_rows({{1, 1, 0}, {0, 1, 1}, {1, 0, 1}});
constexpr double kPhi = 1.6180339887498949;

StateSpec rational_state(const ZeroOneMatrix& A, const std::vector<Rational>& a) {
  std::vector<Scalar> s(a.begin(), a.end());
  auto m = in_lambda(A, s, 1e-12);
  REQUIRE(m.accepted);
  return StateSpec(*m.param);
}

Scalar golden() { return Algebraic({-1, 1, 1}, Rational(0), Rational(1)); }

}  // namespace

TEST_CASE("index split round trip") {
  const IndexSplit s(3, 4);
  for (int u = 1; u <= 12; ++u) {
    const auto [i, j] = s.split(u);
    CHECK(s.join(i, j) == u);
  }
  CHECK(IndexSplit(2, 2).split(2) == std::pair{1, 2});
  CHECK(IndexSplit(2, 2).split(3) == std::pair{2, 1});
  CHECK_THROWS_AS(s.split(13), DomainError);
  CHECK_THROWS_AS(s.join(4, 1), DomainError);
}

TEST_CASE("kronecker vector examples") {
  const auto v = kronecker_vector({Scalar::rational(1, 3), Scalar::rational(2, 3)}, {Scalar::rational(1, 2), Scalar::rational(1, 2)});
  REQUIRE(v.size() == 4);
  CHECK(v[0].as_rational() == Rational(1, 6));
  CHECK(v[1].as_rational() == Rational(1, 6));
  CHECK(v[2].as_rational() == Rational(1, 3));
  CHECK(v[3].as_rational() == Rational(1, 3));

  const Scalar c = golden();
  const auto g = kronecker_vector({Scalar::rational(1, 2), Scalar::rational(1, 2)}, {c, pow(c, 2)});
  const double s5 = std::sqrt(5.0);
  for (int k : {0, 2}) CHECK(std::abs(g[static_cast<std::size_t>(k)].approx() - (s5 - 1) / 4) < 1e-15);
  for (int k : {1, 3}) CHECK(std::abs(g[static_cast<std::size_t>(k)].approx() - (s5 - 1) * (s5 - 1) / 8) < 1e-15);
  for (const auto& x : g) CHECK(x.is_exact());

  const auto same = kronecker_vector({Scalar::rational(1, 5), c}, {Scalar::rational(1)});
  CHECK(same[0].as_rational() == Rational(1, 5));
  CHECK(std::abs(same[1].approx() - 1 / kPhi) < 1e-15);
}

TEST_CASE("kronecker vector is associative") {
  std::mt19937_64 rng(2);
  std::uniform_int_distribution<long> d(1, 9);
  for (int t = 0; t < 20; ++t) {
    std::vector<Scalar> u, v, w;
    for (int k = 0; k < 2; ++k) {
      u.push_back(Scalar(Rational(d(rng), 10)));
      v.push_back(Scalar(Rational(d(rng), 11)));
      w.push_back(Scalar(Rational(d(rng), 13)));
    }
    const auto l = kronecker_vector(kronecker_vector(u, v), w);
    const auto r = kronecker_vector(u, kronecker_vector(v, w));
    for (std::size_t i = 0; i < l.size(); ++i) CHECK(l[i].as_rational() == r[i].as_rational());
  }
}

TEST_CASE("embed_monomial examples") {
  const IndexSplit s(2, 2);
  auto [a, b] = embed_monomial(s, Monomial{{2}, {}});
  CHECK(a == Monomial{{1}, {}});
  CHECK(b == Monomial{{2}, {}});
  std::tie(a, b) = embed_monomial(s, Monomial{{3}, {}});
  CHECK(a == Monomial{{2}, {}});
  CHECK(b == Monomial{{1}, {}});
  std::tie(a, b) = embed_monomial(s, Monomial{});
  CHECK(a == Monomial{});
  CHECK(b == Monomial{});
  CHECK_THROWS_AS(embed_monomial(s, Monomial{{5}, {}}), DomainError);
}

TEST_CASE("embedding preserves admissibility") {
  for (const auto& [A, B] : {std::pair{kGolden, kCycle3}, std::pair{kCycle3, kGolden}, std::pair{kGolden, kGolden}}) {
    const auto AB = kronecker(A, B);
    const IndexSplit s(A.dim(), B.dim());
    std::vector<Indices> all{{}};
    for (int len = 1; len <= 3; ++len) {
      std::vector<Indices> next;
      for (const auto& w : all)
        if (static_cast<int>(w.size()) == len - 1)
          for (int u = 1; u <= static_cast<int>(AB.dim()); ++u) {
            auto x = w;
            x.push_back(u);
            next.push_back(x);
          }
      all.insert(all.end(), next.begin(), next.end());
    }
    for (const auto& J : all) {
      const auto [ma, mb] = embed_monomial(s, Monomial{J, {}});
      CHECK(is_admissible(AB, J) == (is_admissible(A, ma.J) && is_admissible(B, mb.J)));
    }
  }
}

TEST_CASE("tensor_state_eval examples") {
  const StateSpec q2 = StateSpec(canonical_point(kF2));
  const StateSpec q3 = StateSpec(canonical_point(ZeroOneMatrix::full(3)));
  for (int u = 1; u <= 6; ++u) {
    const auto v = tensor_state_eval(q2, q3, Monomial{{u}, {u}});
    REQUIRE(v.exact);
    CHECK(*v.exact == Rational(1, 6));
  }
  CHECK(*tensor_state_eval(q2, q3, Monomial{{1}, {2}}).exact == 0);
  const StateSpec a = rational_state(kF2, {Rational(1, 3), Rational(2, 3)});
  const StateSpec b = rational_state(kF2, {Rational(1, 2), Rational(1, 2)});
  CHECK(*tensor_state_eval(a, b, Monomial{{1}, {1}}).exact == Rational(1, 6));
  CHECK(*tensor_state_eval(a, b, NormalForm::monomial({1}, {1}) + NormalForm::monomial({4}, {4}, 2)).exact ==
        Rational(1, 6) + Rational(2, 3));
}

TEST_CASE("verify_tensor_identity examples") {
  const StateSpec a = rational_state(kF2, {Rational(1, 3), Rational(2, 3)});
  const StateSpec b = rational_state(kF2, {Rational(1, 2), Rational(1, 2)});
  const auto r = verify_tensor_identity(a, b, 3, 1e-9);
  CHECK(r.passed);
  CHECK(r.max_residual <= 1e-9);
  CHECK(r.monomials_checked == 1 + 16 + 256 + 4096);

  const StateSpec g(canonical_point(kGolden));
  const auto rg = verify_tensor_identity(g, g, 3, 1e-9);
  CHECK(rg.passed);

  const auto r0 = verify_tensor_identity(g, a, 0, 1e-9);
  CHECK(r0.passed);
  CHECK(r0.monomials_checked == 1);

  CHECK_THROWS_AS(verify_tensor_identity(a, b, 6, 1e-9, 1000), ResourceLimit);
}

TEST_CASE("homomorphism law over the matrix pool") {
  std::mt19937_64 rng(23);
  std::uniform_int_distribution<long> num(1, 9), den(1, 4);
  std::vector<StateSpec> specs;
  for (const auto& A : {kF2, ZeroOneMatrix::full(3), kGolden, kCycle3}) {
    std::vector<Rational> w;
    for (std::size_t i = 0; i < A.dim(); ++i) w.emplace_back(num(rng), den(rng));
    specs.emplace_back(solve_beta(A, FrequencyVector::from_rationals(w)).param);
  }
  for (const auto& a : specs)
    for (const auto& b : specs) {
      const auto r = verify_tensor_identity(a, b, 3, 1e-9);
      CHECK(r.passed);
    }
}

TEST_CASE("combined frequencies") {
  const Interval log2 = log(Interval(2.0)), logphi = log(Interval(kPhi));
  const auto w11 = FrequencyVector::from_rationals({1, 1});
  const auto o = combined_frequencies(IndexSplit(2, 2), w11, log2, w11, log2);
  for (const auto& x : o.entries) CHECK(std::abs(x.mid() - 2 * std::log(2.0)) < 1e-14);

  const auto o2 = combined_frequencies(IndexSplit(2, 2), FrequencyVector::from_rationals({1, 2}), logphi, w11, log2);
  const double lp = std::log(kPhi), l2 = std::log(2.0);
  const std::vector<double> expected{lp + l2, lp + l2, 2 * lp + l2, 2 * lp + l2};
  for (std::size_t u = 0; u < 4; ++u) CHECK(std::abs(o2.entries[u].mid() - expected[u]) < 1e-14);

  const auto o3 = combined_frequencies(IndexSplit(2, 3), FrequencyVector::from_rationals({1, 2}), Interval(1.0),
                                       FrequencyVector::from_rationals({1, 3, 5}), Interval(1.0));
  CHECK(o3.entries[4].contains(5.0));
  CHECK_THROWS_AS(combined_frequencies(IndexSplit(2, 3), w11, log2, w11, log2), DimensionMismatch);
}

TEST_CASE("product state is KMS at inverse temperature one") {
  const auto w1 = FrequencyVector::from_rationals({1, 2});
  const auto w2 = FrequencyVector::from_rationals({Rational(3, 2), 1, Rational(1, 2)});
  const auto b1 = solve_beta(kGolden, w1);
  const auto b2 = solve_beta(kCycle3, w2);
  const StateSpec ab(kronecker_param(b1.param, b2.param));
  const auto omega = combined_frequencies(IndexSplit(2, 3), w1, b1.beta, w2, b2.beta);
  const auto words = admissible_words(ab.matrix(), 2);
  std::vector<Monomial> pool;
  for (const auto& J : words)
    for (const auto& K : words)
      if (J.size() + K.size() <= 2) pool.push_back({J, K});
  for (const auto& x : pool)
    for (const auto& y : pool) REQUIRE(kms_check(ab, omega, Interval(1.0), x, y, 1e-9).passed);
}

TEST_CASE("coassociativity of the index splits") {
  for (std::size_t a : {2, 3})
    for (std::size_t b : {2, 3})
      for (std::size_t c : {2, 3}) CHECK(check_coassociativity(a, b, c));
  CHECK(check_coassociativity(2, 5, 7));
  CHECK_THROWS_AS(check_coassociativity(1, 2, 2), DomainError);
}
