#include <doctest.h>

#include "torica/error.hpp"
#include "torica/io.hpp"

using namespace torica;
using torica::io::json;

TEST_SUITE("io") {

TEST_CASE("fan documents") {
  const Fan p2 = io::fan_from_json(json::parse(R"({"rays": [[1,0],[0,1],[-1,-1]]})"));
  CHECK(p2 == fans::projective_plane());
  const Fan f = io::fan_from_json(json::parse(R"({"profile": [0,-2,0,2]})"));
  CHECK(canonical_profile(f) == canonical_profile(fans::hirzebruch(2)));
  CHECK(io::fan_from_json(io::fan_to_json(fans::hexagon())) == fans::hexagon());
  try {
    io::fan_from_json(json::parse(R"({"rays": [[1,0],[0,1],[-1,0],[0,-1],[1,1]]})"));
    FAIL("accepted");
  } catch (const Error& e) {
    CHECK(e.index() == 4);
  }
  for (const char* bad : {R"({"ray": []})", R"({"rays": [[1,0],[0]]})", R"({"rays": "x"})", R"([1,2])",
                          R"({"rays": [[1.5,0],[0,1],[-1,-1]]})"}) {
    try {
      io::fan_from_json(json::parse(bad));
      FAIL("accepted " << bad);
    } catch (const Error& e) {
      CHECK(e.code() == ErrorCode::ParseError);
    }
  }
}

TEST_CASE("divisor documents") {
  const Fan p2 = fans::projective_plane();
  const auto a = io::divisor_from_json(p2, json::parse(R"({"coefficients": [2,0,0]})"));
  CHECK_FALSE(a.given_as_degrees);
  const auto b = io::divisor_from_json(p2, json::parse(R"({"degrees": [2,2,2]})"));
  CHECK(b.given_as_degrees);
  CHECK(linear_equivalent(a.divisor, b.divisor));
  const json out = io::divisor_to_json(a.divisor);
  CHECK(out["degrees"] == json::parse("[2,2,2]"));
  CHECK_THROWS_AS(io::divisor_from_json(p2, json::parse(R"({"coefficients": [1,0]})")), Error);
  CHECK_THROWS_AS(io::divisor_from_json(p2, json::parse(R"({"degrees": [1,1,2]})")), Error);
}

TEST_CASE("big integers survive a round trip") {
  Integer big = 1;
  big <<= 80;
  const json j = io::to_json(big);
  CHECK(j.is_string());
  CHECK(io::integer_from_json(j) == big);
  CHECK(io::to_json(Integer(-7)).is_number_integer());
  CHECK(io::integer_from_json(json("-12")) == -12);
  CHECK(io::to_json(Rational(179, 4)) == json("179/4"));
  CHECK(io::to_json(Rational(8, 4)) == json(2));
}

TEST_CASE("report serialization") {
  const auto seq = iterated_sequence(Integer(3) * DivisorClass::invariant(fans::projective_plane(), 0));
  const json j = io::to_json(seq);
  CHECK(j.dump().find("AntiCanonical") != std::string::npos);
  const auto rows = table1_catalogue();
  CHECK(io::to_json(rows.front()).contains("c1^2"));
}

}  // TEST_SUITE
