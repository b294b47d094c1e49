#include <algorithm>
#include <cmath>
#include <random>

#include "ckms/classify.hpp"
#include "ckms/errors.hpp"
#include "ckms/tensorops.hpp"
#include "doctest.h"

using namespace ckms;

namespace {

Scalar q(long n, long d = 1) { return Scalar(Rational(n, d)); }
Scalar golden() { return Algebraic({-1, 1, 1}, Rational(0), Rational(1)); }

std::vector<Scalar> scalars(const std::vector<Rational>& v) { return {v.begin(), v.end()}; }

}  // namespace

TEST_CASE("detect_lambda examples") {
  const auto b = detect_lambda({q(1, 2), q(1, 2)});
  CHECK(b.mode == TypeLabel::Mode::exact);
  CHECK(b.lambda.as_rational() == Rational(1, 2));
  REQUIRE(b.decomposition);
  CHECK(b.decomposition->exponents == std::vector<long>{1, 1});

  const auto a = detect_lambda({q(1, 3), q(2, 3)});
  CHECK(a.mode == TypeLabel::Mode::exact);
  CHECK(a.is_one());
  CHECK(a.lambda.as_rational() == Rational(1));

  const Scalar c = golden();
  const auto g = detect_lambda({c, pow(c, 2)});
  CHECK(g.mode == TypeLabel::Mode::exact);
  CHECK(same_lambda(g.lambda, c));
  CHECK(std::abs(g.lambda.approx() - (std::sqrt(5.0) - 1) / 2) < 1e-15);
  CHECK(g.decomposition->exponents == std::vector<long>{1, 2});

  CHECK_THROWS_AS(detect_lambda({q(1), q(1, 2)}), DomainError);
  CHECK_THROWS_AS(detect_lambda({q(3, 2)}), DomainError);
}

TEST_CASE("power-form inputs are normalized by the exponent gcd") {
  const Scalar c = golden();
  const auto l = detect_lambda({pow(c, 2), pow(c, 4), pow(c, 6)});
  CHECK(l.mode == TypeLabel::Mode::exact);
  CHECK(same_lambda(l.lambda, pow(c, 2)));
  CHECK(l.decomposition->exponents == std::vector<long>{1, 2, 3});
}

TEST_CASE("float inputs are classified heuristically") {
  const auto l = detect_lambda({Scalar::floating(0.25), Scalar::floating(0.5)});
  CHECK(l.mode == TypeLabel::Mode::heuristic);
  CHECK(std::abs(l.lambda.approx() - 0.5) < 1e-12);
  CHECK(l.decomposition->exponents == std::vector<long>{2, 1});
  CHECK_FALSE(l.warnings.empty());

  const auto one = detect_lambda({Scalar::floating(1.0 / 3.0), Scalar::floating(2.0 / 3.0)});
  CHECK(one.mode == TypeLabel::Mode::heuristic);
  CHECK(one.is_one());
}

TEST_CASE("tensor_type examples") {
  CHECK(tensor_type({q(1, 3), q(2, 3)}, {q(1, 2), q(1, 2)}).is_one());
  const Scalar c = golden();
  const auto mixed = tensor_type({q(1, 2), q(1, 2)}, {c, pow(c, 2)});
  CHECK(mixed.mode == TypeLabel::Mode::exact);
  CHECK(mixed.is_one());
  const auto e = tensor_type(canonical_point(ZeroOneMatrix::full(2)).entries, canonical_point(ZeroOneMatrix::full(3)).entries);
  CHECK(e.lambda.as_rational() == Rational(1, 6));
}

TEST_CASE("canonical points multiply under tensor products") {
  for (std::size_t n = 2; n <= 4; ++n)
    for (std::size_t m = 2; m <= 4; ++m) {
      const auto l = tensor_type(canonical_point(ZeroOneMatrix::full(n)).entries, canonical_point(ZeroOneMatrix::full(m)).entries);
      CHECK(l.mode == TypeLabel::Mode::exact);
      CHECK(l.lambda.as_rational() == Rational(1, static_cast<long>(n * m)));
    }
}

TEST_CASE("power_type_direct examples") {
  const auto e = power_type_direct(canonical_point(ZeroOneMatrix::full(2)).entries, 3);
  CHECK(e.lambda.as_rational() == Rational(1, 8));
  CHECK(power_type_direct({q(1, 3), q(2, 3)}, 2).is_one());
  const Scalar x = golden();
  const auto p = power_type_direct({pow(x, 2), x}, 5);
  CHECK(p.mode == TypeLabel::Mode::exact);
  CHECK(same_lambda(p.lambda, x));
  CHECK_THROWS_AS(power_type_direct({q(1, 3), q(2, 3)}, 13), ResourceLimit);
}

TEST_CASE("power_type_ck2 examples") {
  for (long k = 1; k <= 12; ++k) CHECK(power_type_ck2(1, 2, k) == 1);
  CHECK(power_type_ck2(1, 3, 4) == 2);
  CHECK(power_type_ck2(1, 3, 5) == 1);
  CHECK(power_type_ck2(5, 11, 6) == 6);
  CHECK(power_type_ck2(1, 1, 7) == 7);
  CHECK_THROWS_AS(power_type_ck2(2, 4, 3), PreconditionViolation);
}

TEST_CASE("power formula agrees with the direct Kronecker power") {
  for (const auto& [p, qq] : {std::pair{1L, 1L}, std::pair{1L, 2L}, std::pair{1L, 3L}, std::pair{5L, 11L}}) {
    const auto a = power_pair(p, qq);
    const Scalar x = solve_power_equation({p, qq}, Rational(1, 1000000000));
    for (long k = 1; k <= 12; ++k) {
      const long r = power_type_ck2(p, qq, k);
      const auto label = power_type_direct(a, k);
      CHECK(label.mode == TypeLabel::Mode::exact);
      CHECK(same_lambda(label.lambda, pow(x, r)));
    }
  }
}

TEST_CASE("mod-6 table for x^11 + x^5 = 1") {
  // r = gcd(6, k): 6 at k = 0, 3 at k = 3, 2 at k = 2 and at k = 4 (mod 6), 1 otherwise
  const std::vector<long> expected{6, 1, 2, 3, 2, 1};
  for (long k = 1; k <= 12; ++k) CHECK(power_type_ck2(5, 11, k) == expected[static_cast<std::size_t>(k % 6)]);
}

TEST_CASE("afd tensor rule") {
  CHECK(afd_tensor_rule(q(1, 4), q(1, 8)).lambda.as_rational() == Rational(1, 2));
  CHECK(afd_tensor_rule(q(1, 2), q(1, 3)).is_one());
  CHECK(afd_tensor_rule(q(1, 5), q(1)).is_one());
  CHECK(afd_tensor_rule(q(1), q(1)).is_one());
  CHECK_THROWS_AS(afd_tensor_rule(q(3, 2), q(1, 2)), DomainError);

  std::mt19937_64 rng(99);
  std::uniform_int_distribution<long> d(2, 30);
  for (int t = 0; t < 20; ++t) {
    const long den = d(rng);
    std::uniform_int_distribution<long> nn(1, den - 1);
    const Rational tau(nn(rng), den);
    const auto l = afd_tensor_rule(Scalar(tau * tau), Scalar(tau * tau * tau));
    CHECK(l.lambda.as_rational() == tau);
  }
  const Scalar c = golden();
  CHECK(same_lambda(afd_tensor_rule(pow(c, 2), pow(c, 3)).lambda, c));
}

TEST_CASE("iii1 family") {
  CHECK(iii1_family(2) == std::vector<Rational>{Rational(1, 3), Rational(2, 3)});
  CHECK(iii1_family(3) == std::vector<Rational>{Rational(1, 5), Rational(2, 5), Rational(2, 5)});
  CHECK(iii1_family(4) == std::vector<Rational>{Rational(1, 5), Rational(1, 5), Rational(1, 5), Rational(2, 5)});
  for (int n = 2; n <= 9; ++n) {
    const auto a = iii1_family(n);
    CHECK(a.size() == static_cast<std::size_t>(n));
    Rational s = 0;
    for (const auto& x : a) s += x;
    CHECK(s == 1);
    CHECK(in_lambda(ZeroOneMatrix::full(static_cast<std::size_t>(n)), scalars(a), 1e-12).accepted);
  }
  CHECK_THROWS_AS(iii1_family(1), DomainError);
}

TEST_CASE("iii1 family and its tensor products have lambda one") {
  for (int n = 2; n <= 6; ++n) {
    const auto a = detect_lambda(scalars(iii1_family(n)));
    CHECK(a.mode == TypeLabel::Mode::exact);
    CHECK(a.is_one());
    for (int m = 2; m <= 6; ++m) {
      const auto t = tensor_type(scalars(iii1_family(n)), scalars(iii1_family(m)));
      CHECK(t.mode == TypeLabel::Mode::exact);
      CHECK(t.is_one());
    }
  }
}

TEST_CASE("lambda one persists under tensor powers") {
  for (int n = 2; n <= 4; ++n)
    for (long k = 1; k <= 4; ++k) CHECK(power_type_direct(scalars(iii1_family(n)), k).is_one());
  CHECK(power_type_direct({q(1, 2), q(1, 4), q(1, 7)}, 3).is_one());
}

TEST_CASE("labels are symmetric and permutation invariant") {
  const Scalar c = golden();
  const std::vector<std::vector<Scalar>> pool{{q(1, 3), q(2, 3)},  {q(1, 2), q(1, 2)}, {c, pow(c, 2)},
                                              {q(1, 4), q(1, 2)},  {q(1, 6), q(1, 6), q(1, 6), q(1, 6), q(1, 6), q(1, 6)},
                                              {pow(c, 3), pow(c, 6)}};
  for (const auto& a : pool)
    for (const auto& b : pool) {
      const auto ab = tensor_type(a, b), ba = tensor_type(b, a);
      CHECK(ab.mode == TypeLabel::Mode::exact);
      CHECK(ab.is_one() == ba.is_one());
      CHECK(same_lambda(ab.lambda, ba.lambda));
    }
  std::mt19937_64 rng(4);
  for (auto v : pool) {
    const auto base = detect_lambda(v);
    for (int t = 0; t < 5; ++t) {
      std::shuffle(v.begin(), v.end(), rng);
      CHECK(same_lambda(detect_lambda(v).lambda, base.lambda));
    }
  }
}

TEST_CASE("lambda is not multiplicative") {
  const Scalar c = golden();
  const std::vector<Scalar> b{q(1, 2), q(1, 2)}, g{c, pow(c, 2)};
  const auto lb = detect_lambda(b), lg = detect_lambda(g), lbg = tensor_type(b, g);
  CHECK_FALSE(same_lambda(lbg.lambda, lb.lambda * lg.lambda));
  CHECK(lbg.is_one());
}

TEST_CASE("group modulus cross-check") {
  const std::vector<std::pair<ZeroOneMatrix, std::vector<Rational>>> cases{
      {ZeroOneMatrix::full(2), {1, 1}},
      {ZeroOneMatrix::full(2), {1, 2}},
      {ZeroOneMatrix::from_rows({{1, 1}, {1, 0}}), {Rational(2, 3), Rational(4, 3)}},
      {ZeroOneMatrix::full(3), {2, 4, 6}},
      {ZeroOneMatrix::from_rows({{1, 1, 0}, {0, 1, 1}, {1, 0, 1}}), {Rational(1, 2), Rational(3, 4), 1}}};
  for (const auto& [A, w] : cases) {
    const auto sol = solve_beta(A, FrequencyVector::from_rationals(w));
    const auto g = group_modulus(sol.beta, w);
    const auto label = detect_lambda(sol.param.entries);
    CHECK(label.mode == TypeLabel::Mode::heuristic);
    REQUIRE_FALSE(label.is_one());
    CHECK(std::abs(label.lambda.approx() - g.lambda.mid()) < 1e-9);
  }
  CHECK(group_modulus(Interval(1.0), {Rational(1, 2), Rational(3, 4)}).generator == Rational(1, 4));
}
