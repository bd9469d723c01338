#include <doctest.h>

#include "json_io.hpp"

using namespace mdeg;
using mdeg::io::json;

TEST_CASE("verdict schema") {
  const auto doc = io::verdict_json(classify_ap(8, 2));
  CHECK(doc.at("triple") == json({8, 10, 12}));
  CHECK(doc.at("status") == "Unknown");
  CHECK(doc.at("why").at("rule") == "exceptional-family");
  CHECK(doc.at("why").at("i") == 2);
  CHECK(doc.at("why").at("j") == 1);

  const auto in_doc = io::verdict_json(classify_ap(2, 1));
  CHECK(in_doc.at("status") == "In");
  const auto& rep = in_doc.at("why").at("representation");
  CHECK(rep.at("target") == 4);
  CHECK(rep.at("i").get<i64>() * rep.at("gens")[0].get<i64>() +
            rep.at("j").get<i64>() * rep.at("gens")[1].get<i64>() ==
        4);
}

TEST_CASE("polymap json round trip") {
  const auto witness = build_witness(2, 3, 7);
  REQUIRE(witness.has_value());
  const auto doc = io::polymap_json(*witness);
  const auto back = io::polymap_from_json(doc);
  CHECK(back.n == witness->n);
  CHECK(back.components == witness->components);
  REQUIRE(back.inverse.has_value());
  CHECK(*back.inverse == *witness->inverse);

  // maps without a tracked inverse serialize it as null
  PolyMap no_inverse{3, witness->components, std::nullopt};
  const auto doc2 = io::polymap_json(no_inverse);
  CHECK(doc2.at("inverse").is_null());
  CHECK(!io::polymap_from_json(doc2).inverse.has_value());
}

TEST_CASE("degree json uses null for -infinity") {
  CHECK(io::degree_json(Degree(3)) == json(3));
  CHECK(io::degree_json(Degree::neg_inf()).is_null());
}

TEST_CASE("exclusion summary json carries the three positions in order") {
  const auto doc = io::exclusion_summary_json(exclude_all({5, 7, 9}));
  CHECK(doc.at("all_excluded") == true);
  REQUIRE(doc.at("positions").size() == 3);
  for (int t = 0; t < 3; ++t) CHECK(doc.at("positions")[t].at("position") == t + 1);
}
