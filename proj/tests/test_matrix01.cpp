#include "ckms/errors.hpp"
#include "ckms/matrix01.hpp"
#include "doctest.h"

using namespace ckms;

namespace {

const ZeroOneMatrix kGolden = ZeroOneMatrix::from_rows({{1, 1}, {1, 0}});

std::vector<ZeroOneMatrix> all_class_members(std::size_t n) {
  std::vector<ZeroOneMatrix> out;
  const std::size_t cells = n * n;
  for (std::size_t mask = 0; mask < (std::size_t{1} << cells); ++mask) {
    std::vector<std::uint8_t> e(cells);
    for (std::size_t k = 0; k < cells; ++k) e[k] = (mask >> k) & 1;
    ZeroOneMatrix a(n, std::move(e));
    if (in_class_cdm(a)) out.push_back(a);
  }
  return out;
}

}  // namespace

TEST_CASE("construction validates entries and dimension") {
  CHECK_THROWS_AS(ZeroOneMatrix(1, {1}), DomainError);
  CHECK_THROWS_AS(ZeroOneMatrix(2, {1, 1, 1}), DomainError);
  CHECK_THROWS_AS(ZeroOneMatrix::from_rows({{1, 2}, {0, 1}}), DomainError);
  CHECK_THROWS_AS(ZeroOneMatrix::from_rows({{1, 1}, {0}}), DomainError);
}

TEST_CASE("nondegeneracy") {
  CHECK(is_nondegenerate(ZeroOneMatrix::full(2)));
  CHECK_FALSE(is_nondegenerate(ZeroOneMatrix::from_rows({{1, 0}, {0, 0}})));
  CHECK(is_nondegenerate(kGolden));
  CHECK_FALSE(is_nondegenerate(ZeroOneMatrix::from_rows({{1, 0}, {1, 0}})));
}

TEST_CASE("irreducibility") {
  CHECK(is_irreducible(kGolden));
  CHECK_FALSE(is_irreducible(ZeroOneMatrix::from_rows({{1, 0}, {0, 1}})));
  CHECK(is_irreducible(ZeroOneMatrix::full(3)));
  CHECK(is_irreducible(ZeroOneMatrix::from_rows({{0, 1, 0}, {0, 0, 1}, {1, 0, 0}})));
  CHECK_FALSE(is_irreducible(ZeroOneMatrix::from_rows({{1, 1, 0}, {0, 1, 1}, {0, 0, 1}})));
}

TEST_CASE("class membership") {
  CHECK_FALSE(in_class_cdm(ZeroOneMatrix::from_rows({{0, 1}, {1, 0}})));
  CHECK(in_class_cdm(kGolden));
  CHECK_FALSE(in_class_cdm(ZeroOneMatrix::from_rows({{1, 1}, {0, 0}})));
  CHECK(in_class_cdm(ZeroOneMatrix::from_rows({{1, 1, 0}, {0, 1, 1}, {1, 0, 1}})));
}

TEST_CASE("kronecker examples") {
  CHECK(kronecker(ZeroOneMatrix::full(2), ZeroOneMatrix::full(2)) == ZeroOneMatrix::full(4));
  const auto gg = kronecker(kGolden, kGolden);
  CHECK(gg == ZeroOneMatrix::from_rows({{1, 1, 1, 1}, {1, 0, 1, 0}, {1, 1, 0, 0}, {1, 0, 0, 0}}));
  const auto perm = ZeroOneMatrix::from_rows({{0, 1}, {1, 0}});
  const auto gp = kronecker(kGolden, perm);
  CHECK(gp.dim() == 4);
  CHECK(gp == ZeroOneMatrix::from_rows({{0, 1, 0, 1}, {1, 0, 1, 0}, {0, 1, 0, 0}, {1, 0, 0, 0}}));
}

TEST_CASE("kronecker dimension cap") {
  CHECK_THROWS_AS(kronecker(ZeroOneMatrix::full(70), ZeroOneMatrix::full(70)), ResourceLimit);
  CHECK_THROWS_AS(kronecker(ZeroOneMatrix::full(3), ZeroOneMatrix::full(3), 8), ResourceLimit);
  CHECK(kronecker(ZeroOneMatrix::full(3), ZeroOneMatrix::full(3), 9).dim() == 9);
}

TEST_CASE("full matrices multiply under kronecker") {
  for (std::size_t n = 2; n <= 5; ++n)
    for (std::size_t m = 2; m <= 5; ++m) CHECK(kronecker(ZeroOneMatrix::full(n), ZeroOneMatrix::full(m)) == ZeroOneMatrix::full(n * m));
}

TEST_CASE("class closure over all 2x2 and 3x3 members") {
  auto pool = all_class_members(2);
  const auto three = all_class_members(3);
  CHECK(pool.size() == 3);
  pool.insert(pool.end(), three.begin(), three.end());
  std::size_t failures = 0;
  for (const auto& a : pool)
    for (const auto& b : pool)
      if (!in_class_cdm(kronecker(a, b))) {
        if (failures == 0) MESSAGE("first counterexample: A = " << to_string(a) << ", B = " << to_string(b));
        ++failures;
      }
  CHECK(failures == 0);
}

TEST_CASE("periodic members break closure") {
  const auto bipartite = ZeroOneMatrix::from_rows({{0, 1, 1}, {1, 0, 0}, {1, 0, 0}});
  REQUIRE(in_class_cdm(bipartite));
  CHECK_FALSE(is_irreducible(kronecker(bipartite, bipartite)));
}

TEST_CASE("class closure holds for members with a loop") {
  // a diagonal 1 makes an irreducible matrix aperiodic, and products of aperiodic irreducible matrices stay irreducible
  auto pool = all_class_members(2);
  for (const auto& a : all_class_members(3)) pool.push_back(a);
  std::vector<ZeroOneMatrix> looped;
  for (const auto& a : pool)
    for (std::size_t i = 0; i < a.dim(); ++i)
      if (a(i, i)) {
        looped.push_back(a);
        break;
      }
  CHECK(looped.size() > 20);
  for (const auto& a : looped)
    for (const auto& b : looped) REQUIRE(in_class_cdm(kronecker(a, b)));
}

TEST_CASE("kronecker is associative") {
  const auto two = all_class_members(2);
  const auto c = ZeroOneMatrix::from_rows({{1, 1, 0}, {0, 1, 1}, {1, 0, 1}});
  for (const auto& a : two)
    for (const auto& b : two) CHECK(kronecker(kronecker(a, b), c) == kronecker(a, kronecker(b, c)));
}

TEST_CASE("to_string") { CHECK(to_string(kGolden) == "[[1,1],[1,0]]"); }
