#include <doctest.h>

#include "mdeg/polynomial.hpp"
#include "test_support.hpp"

using namespace mdeg;
using mdeg::testing::naive_eval;
using mdeg::testing::random_nonzero_poly;
using mdeg::testing::random_point;
using mdeg::testing::random_poly;
using mdeg::testing::Rng;

TEST_CASE("parse basics") {
  const auto zero = Polynomial::parse("0", 3);
  CHECK(zero.is_zero());
  CHECK(zero.total_degree() == Degree::neg_inf());

  const auto p = Polynomial::parse("x^2*y + 3/2*z^7", 3);
  CHECK(p.term_count() == 2);
  CHECK(p.total_degree() == Degree(7));

  CHECK(Polynomial::parse("x + y - x", 3) == Polynomial::parse("y", 3));
  CHECK(Polynomial::parse("2x y", 3) == Polynomial::parse("2*x*y", 3));
  CHECK(Polynomial::parse("x*x", 3) == Polynomial::parse("x^2", 3));
  CHECK(Polynomial::parse("x1*x2^2", 3) == Polynomial::parse("x*y^2", 3));
}

TEST_CASE("parse errors") {
  CHECK_THROWS_AS(Polynomial::parse("", 3), ParseError);
  CHECK_THROWS_AS(Polynomial::parse("x +", 3), ParseError);
  CHECK_THROWS_AS(Polynomial::parse("x4", 3), ParseError);   // unknown variable
  CHECK_THROWS_AS(Polynomial::parse("w", 3), ParseError);
  CHECK_THROWS_AS(Polynomial::parse("z", 2), ParseError);    // index 3 in dimension 2
  CHECK_THROWS_AS(Polynomial::parse("x^20000000", 3), ParseError);
  CHECK_THROWS_AS(Polynomial::parse("1/0", 3), ParseError);
  CHECK_THROWS_AS(Polynomial::parse("3*", 3), ParseError);

  try {
    Polynomial::parse("x + @", 3);
    CHECK(false);
  } catch (const ParseError& e) {
    CHECK(e.position == 4);
  }
}

TEST_CASE("ring operations") {
  const auto x = Polynomial::variable(3, 1);
  const auto y = Polynomial::variable(3, 2);
  CHECK((x + y) * (x - y) == Polynomial::parse("x^2 - y^2", 3));

  Rng rng(11);
  for (int k = 0; k < 30; ++k) {
    const auto p = random_poly(rng, 3, 5, 6);
    CHECK((p + (-p)).is_zero());
  }

  // (x + z^2)^3: frozen from the binomial expansion, cross-checked by
  // evaluation at rational points.
  const auto base = Polynomial::parse("x + z^2", 3);
  const auto cube = base.pow(3);
  CHECK(cube == Polynomial::parse("z^6 + 3*x*z^4 + 3*x^2*z^2 + x^3", 3));
  CHECK(cube.top() == Polynomial::parse("z^6", 3));
  for (int k = 0; k < 5; ++k) {
    const auto pt = random_point(rng, 3);
    const Q b = naive_eval(base, pt);
    CHECK(naive_eval(cube, pt) == b * b * b);
  }

  CHECK_THROWS_AS(Polynomial::variable(2, 1) + Polynomial::variable(3, 1),
                  std::invalid_argument);
}

TEST_CASE("total_degree and top") {
  CHECK(Polynomial::parse("x^2*y + z", 3).total_degree() == Degree(3));
  CHECK(Polynomial::parse("5", 3).total_degree() == Degree(0));
  CHECK(Polynomial::zero(3).total_degree() == Degree::neg_inf());
  CHECK(Degree::neg_inf() < Degree(0));

  CHECK(Polynomial::parse("x^2 + y", 3).top() == Polynomial::parse("x^2", 3));
  const auto homog = Polynomial::parse("x^2 + x*y + z^2", 3);
  CHECK(homog.top() == homog);
  CHECK(Polynomial::parse("x + z^2", 3).pow(2).top() == Polynomial::parse("z^4", 3));
  CHECK_THROWS_AS(Polynomial::zero(3).top(), std::invalid_argument);
}

TEST_CASE("substitution") {
  const auto G = Polynomial::parse("x*y", 2);
  const std::vector<Polynomial> args{Polynomial::parse("x+1", 2), Polynomial::parse("y", 2)};
  CHECK(G.substitute(args) == Polynomial::parse("x*y + y", 2));

  const auto sq = Polynomial::parse("x^2", 1);
  const auto f = Polynomial::parse("x + y^3", 2);
  CHECK(sq.substitute(std::vector<Polynomial>{f}) == f * f);

  const auto H = Polynomial::parse("x^2 + y", 2);
  const std::vector<Polynomial> zz{Polynomial::parse("z^2", 3), Polynomial::parse("z^3", 3)};
  CHECK(H.substitute(zz) == Polynomial::parse("z^4 + z^3", 3));

  CHECK_THROWS_AS(G.substitute(std::vector<Polynomial>{f}), std::invalid_argument);
}

TEST_CASE("exact division") {
  const auto q1 = try_divide(Polynomial::parse("x^2 - y^2", 2), Polynomial::parse("x - y", 2));
  REQUIRE(q1.has_value());
  CHECK(*q1 == Polynomial::parse("x + y", 2));

  CHECK(!try_divide(Polynomial::parse("x^2 + 1", 2), Polynomial::parse("x", 2)));

  const auto h = Polynomial::parse("x + 2*y", 2);
  const auto q2 = try_divide(h.pow(3), h);
  REQUIRE(q2.has_value());
  CHECK(*q2 == h.pow(2));

  CHECK_THROWS_AS(try_divide(h, Polynomial::zero(2)), std::invalid_argument);
}

TEST_CASE("algebra properties on random polynomials") {
  Rng rng(42);
  for (int k = 0; k < 60; ++k) {
    const auto p = random_poly(rng, 3, 6, 7);
    const auto q = random_poly(rng, 3, 6, 7);
    CHECK(p + q - q == p);
  }
  for (int k = 0; k < 60; ++k) {
    const auto p = random_nonzero_poly(rng, 3, 6, 7);
    const auto q = random_nonzero_poly(rng, 3, 6, 7);
    const auto prod = p * q;
    // no top cancellation over an integral domain
    CHECK(prod.total_degree() == p.total_degree() + q.total_degree());
    CHECK(prod.top() == p.top() * q.top());
  }
  for (int k = 0; k < 40; ++k) {
    const auto q = random_nonzero_poly(rng, 3, 4, 5);
    const auto h = random_nonzero_poly(rng, 3, 4, 5);
    const auto recovered = try_divide(q * h, h);
    REQUIRE(recovered.has_value());
    CHECK(*recovered == q);            // quotients are unique over a domain
    CHECK(*recovered * h == q * h);
  }
}

TEST_CASE("canonical printer round trip") {
  CHECK(Polynomial::parse("y - x", 3).str() == "-x+y");
  CHECK(Polynomial::parse("1/2 - z", 3).str() == "-z+1/2");
  CHECK(Polynomial::parse("-x*y", 3).str() == "-x*y");
  CHECK(Polynomial::variable(4, 4).str() == "x4");
  CHECK(Polynomial::zero(3).str() == "0");

  Rng rng(7);
  for (int k = 0; k < 80; ++k) {
    const auto p = random_poly(rng, 3, 6, 8);
    CHECK(Polynomial::parse(p.str(), 3) == p);
  }
  for (int k = 0; k < 20; ++k) {
    const auto p = random_poly(rng, 5, 4, 6);
    CHECK(Polynomial::parse(p.str(), 5) == p);
  }
}
