#include <doctest.h>

#include "mdeg/semigroup.hpp"

using namespace mdeg;

namespace {

bool brute_member(i64 target, i64 m, i64 M, bool positive) {
  const i64 lo = positive ? 1 : 0;
  for (i64 i = lo; i * m <= target; ++i)
    for (i64 j = lo; i * m + j * M <= target; ++j) {
      if (i == 0 && j == 0) continue;
      if (i * m + j * M == target) return true;
    }
  return false;
}

}  // namespace

TEST_CASE("member spec examples") {
  const auto r1 = member(5, 2, 3, CoeffMode::Positive);
  REQUIRE(r1.has_value());
  CHECK(r1->i == 1);
  CHECK(r1->j == 1);

  CHECK(!member(7, 3, 5, CoeffMode::Positive));

  const auto r2 = member(8, 4, 6, CoeffMode::NonNegative);
  REQUIRE(r2.has_value());
  CHECK(r2->i == 2);
  CHECK(r2->j == 0);
  CHECK(!member(8, 4, 6, CoeffMode::Positive));

  CHECK_THROWS_AS(member(0, 1, 1, CoeffMode::NonNegative), std::invalid_argument);
}

TEST_CASE("member agrees with brute force and returned witnesses verify") {
  for (i64 m = 1; m <= 15; ++m)
    for (i64 M = 1; M <= 15; ++M)
      for (i64 target = 1; target <= 40; ++target) {
        const auto nn = member(target, m, M, CoeffMode::NonNegative);
        const auto pos = member(target, m, M, CoeffMode::Positive);
        CHECK(nn.has_value() == brute_member(target, m, M, false));
        CHECK(pos.has_value() == brute_member(target, m, M, true));
        if (nn) CHECK(nn->valid());
        if (pos) {
          CHECK(pos->valid());
          CHECK(pos->i >= 1);
          CHECK(pos->j >= 1);
          CHECK(nn.has_value());  // positive solutions embed into nonneg ones
        }
      }
}

TEST_CASE("lemma31_check spec examples") {
  const auto r1 = lemma31_check(3, 3);
  CHECK(r1.lhs);
  CHECK(r1.rhs);
  CHECK(r1.equal);

  const auto r2 = lemma31_check(3, 1);
  CHECK(!r2.lhs);
  CHECK(!r2.rhs);
  CHECK(r2.equal);

  const auto r3 = lemma31_check(4, 2);
  CHECK(r3.lhs);
  CHECK(r3.rhs);
  CHECK(r3.equal);

  // degenerate progression: a | 0 on both sides
  const auto r4 = lemma31_check(7, 0);
  CHECK(r4.lhs);
  CHECK(r4.rhs);
  CHECK(r4.equal);
}

TEST_CASE("lemma31 equivalence on a 120x120 grid") {
  for (i64 a = 1; a <= 120; ++a)
    for (i64 d = 0; d <= 120; ++d) CHECK(lemma31_check(a, d).equal);
}
