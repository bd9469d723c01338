#include <doctest.h>

#include <algorithm>

#include "mdeg/automorphism.hpp"
#include "mdeg/classify.hpp"
#include "mdeg/exclusion.hpp"

using namespace mdeg;

TEST_CASE("APTriple bookkeeping") {
  const auto t = APTriple::make(12, 8);
  CHECK(t.b == 4);
  CHECK(t.a_bar == 3);
  CHECK(t.d_bar == 2);
  CHECK(t.triple == std::array<i64, 3>{12, 20, 28});

  const auto degenerate = APTriple::make(5, 0);
  CHECK(degenerate.b == 5);
  CHECK(degenerate.a_bar == 1);
  CHECK(degenerate.d_bar == 0);

  // a not dividing 2d forces a_bar >= 3
  for (i64 a = 1; a <= 60; ++a)
    for (i64 d = 0; d <= 60; ++d)
      if ((2 * d) % a != 0) CHECK(APTriple::make(a, d).a_bar >= 3);
}

TEST_CASE("exceptional_form") {
  const auto e1 = exceptional_form(8, 2);
  REQUIRE(e1.has_value());
  CHECK(*e1 == std::pair<i64, i64>{2, 1});

  const auto e2 = exceptional_form(12, 3);
  REQUIRE(e2.has_value());
  CHECK(*e2 == std::pair<i64, i64>{3, 1});

  CHECK(!exceptional_form(6, 3));   // 4 does not divide 6
  CHECK(!exceptional_form(4, 2));   // j = 2 even
  CHECK(!exceptional_form(8, 3));   // 8 does not divide 12

  // given a | 4d, the shape is exceptional exactly when a does not divide 2d
  for (i64 a = 4; a <= 100; a += 4)
    for (i64 d = 1; d <= 100; ++d)
      if ((4 * d) % a == 0)
        CHECK(exceptional_form(a, d).has_value() == ((2 * d) % a != 0));
}

TEST_CASE("classify_ap verdicts") {
  const auto in = classify_ap(1, 1);
  CHECK(in.status == Status::In);
  CHECK(in.triple == std::array<i64, 3>{1, 2, 3});
  REQUIRE(in.representation.has_value());
  CHECK(in.representation->valid());

  const auto fact = classify_ap(4, 1);
  CHECK(fact.status == Status::NotIn);
  CHECK(fact.rule == Rule::KnownNonTame);

  const auto open = classify_ap(8, 2);
  CHECK(open.status == Status::Unknown);
  CHECK(open.rule == Rule::ExceptionalFamily);
  CHECK(open.exceptional_ij == std::pair<i64, i64>{2, 1});

  const auto notin = classify_ap(5, 2);
  CHECK(notin.status == Status::NotIn);
  CHECK(notin.rule == Rule::ElementaryReductionExcluded);

  const auto degenerate = classify_ap(9, 0);
  CHECK(degenerate.status == Status::In);
}

TEST_CASE("fact table entries are load-bearing") {
  // without the (4,5,6) entry the verdict honestly degrades to Unknown
  const auto without = classify_ap_with_facts(4, 1, {});
  CHECK(without.status == Status::Unknown);
  CHECK(without.rule == Rule::ExceptionalFamily);
  // (3,4,5) stays NotIn either way: the degree argument covers it
  CHECK(classify_ap_with_facts(3, 1, {}).status == Status::NotIn);
}

TEST_CASE("classify_triple verdicts") {
  const auto divides = classify_triple(3, 6, 7);
  CHECK(divides.status == Status::In);
  CHECK(divides.rule == Rule::Divides);

  const auto fact = classify_triple(3, 4, 5);
  CHECK(fact.status == Status::NotIn);
  CHECK(fact.rule == Rule::KnownNonTame);

  const auto outside = classify_triple(5, 6, 13);
  CHECK(outside.status == Status::Unknown);
  CHECK(outside.rule == Rule::OutOfScope);

  // 9 = 3*3 + 0*5: zero coefficients admitted by the sufficient condition
  const auto rep = classify_triple(3, 5, 9);
  CHECK(rep.status == Status::In);
  CHECK(rep.rule == Rule::Representable);

  const auto ap = classify_triple(8, 10, 12);
  CHECK(ap.status == Status::Unknown);
  CHECK(ap.rule == Rule::ExceptionalFamily);
}

TEST_CASE("classify_triple is permutation invariant") {
  const std::array<std::array<i64, 3>, 6> triples = {
      {{2, 3, 4}, {3, 4, 5}, {8, 10, 12}, {5, 7, 9}, {3, 5, 9}, {5, 6, 13}}};
  for (const auto& t : triples) {
    std::array<i64, 3> perm = t;
    std::sort(perm.begin(), perm.end());
    const auto reference = classify_triple(perm[0], perm[1], perm[2]);
    do {
      const auto v = classify_triple(perm[0], perm[1], perm[2]);
      CHECK(v.status == reference.status);
      CHECK(v.rule == reference.rule);
      CHECK(v.triple == reference.triple);
    } while (std::next_permutation(perm.begin(), perm.end()));
  }
}

TEST_CASE("corollary families at small scale") {
  const auto consecutive = corollary_sweep(CorollaryKind::Consecutive, 12);
  REQUIRE(consecutive.size() == 12);
  for (std::size_t k = 0; k < consecutive.size(); ++k) {
    const i64 d1 = static_cast<i64>(k) + 1;
    const auto expected = d1 <= 2 ? Status::In : Status::NotIn;
    CHECK(consecutive[k].status == expected);
  }

  const auto odds = corollary_sweep(CorollaryKind::ConsecutiveOdd, 15);
  REQUIRE(odds.size() == 8);
  CHECK(odds[0].status == Status::In);  // (1,3,5)
  for (std::size_t k = 1; k < odds.size(); ++k) CHECK(odds[k].status == Status::NotIn);

  const auto evens = corollary_sweep(CorollaryKind::ConsecutiveEven, 16);
  REQUIRE(evens.size() == 8);
  for (std::size_t k = 0; k < evens.size(); ++k) {
    const i64 d1 = 2 * (static_cast<i64>(k) + 1);
    if (d1 <= 4)
      CHECK(evens[k].status == Status::In);
    else if (d1 == 8)
      CHECK(evens[k].status == Status::Unknown);
    else
      CHECK(evens[k].status == Status::NotIn);
  }
}

TEST_CASE("classifier consistency with the exclusion machinery and the builder") {
  for (i64 a = 1; a <= 40; ++a) {
    for (i64 d = 0; d <= 40; ++d) {
      const auto verdict = classify_ap(a, d);
      // (4,5,6) is NotIn by the fact table yet lies in the exceptional
      // family, where the B=2 analysis leaves the middle position open.
      if (verdict.status == Status::NotIn && d >= 1 && !exceptional_form(a, d)) {
        CHECK(exclude_all(verdict.triple).all_excluded);
        CHECK(!type_iii_possible(verdict.triple));
      }
      if (verdict.status == Status::In && a <= 12 && d <= 12) {
        const auto witness = build_witness(verdict.triple[0], verdict.triple[1],
                                           verdict.triple[2]);
        REQUIRE(witness.has_value());
        const auto mdeg = multidegree(*witness);
        CHECK(mdeg[0] == Degree(verdict.triple[0]));
        CHECK(mdeg[1] == Degree(verdict.triple[1]));
        CHECK(mdeg[2] == Degree(verdict.triple[2]));
      }
    }
  }
}
