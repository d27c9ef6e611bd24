#include <doctest.h>

#include <random>

#include "../oracles/oracles.hpp"
#include "../support/random_fans.hpp"
#include "torica/error.hpp"
#include "torica/fan.hpp"

using namespace torica;

namespace {

std::vector<LatticeVector> rays_of(std::initializer_list<std::pair<long, long>> list) {
  std::vector<LatticeVector> out;
  for (auto [x, y] : list) out.emplace_back(Integer(x), Integer(y));
  return out;
}

IntegerVector ints(std::initializer_list<long> list) {
  IntegerVector out;
  for (long v : list) out.emplace_back(v);
  return out;
}

ErrorCode code_of(auto&& fn) {
  try {
    fn();
  } catch (const Error& e) {
    return e.code();
  }
  FAIL("expected an error");
  return ErrorCode::InvalidArgument;
}

}  // namespace

TEST_SUITE("fan_core") {

TEST_CASE("standard fans validate") {
  const Fan p2 = validate_fan(rays_of({{1, 0}, {0, 1}, {-1, -1}}));
  CHECK(p2.euler() == 3);
  CHECK(p2.profile().values == ints({1, 1, 1}));
  for (long a = 0; a <= 4; ++a) {
    const Fan f = validate_fan(rays_of({{1, 0}, {0, 1}, {-1, a}, {0, -1}}));
    CHECK(f.euler() == 4);
    CHECK(f.profile().values == ints({0, -a, 0, a}));
  }
  CHECK(fans::hirzebruch(2).profile().values == ints({0, -2, 0, 2}));
}

TEST_CASE("invalid fans are rejected with the failing invariant") {
  CHECK(code_of([] { validate_fan(rays_of({{1, 0}, {0, 1}})); }) == ErrorCode::TooFewRays);
  CHECK(code_of([] { validate_fan(rays_of({{2, 0}, {0, 1}, {-1, -1}})); }) == ErrorCode::NonPrimitiveRay);
  try {
    validate_fan(rays_of({{1, 0}, {0, 1}, {-1, 0}, {0, -1}, {1, 1}}));
    FAIL("accepted");
  } catch (const Error& e) {
    CHECK((e.code() == ErrorCode::NotUnimodular || e.code() == ErrorCode::NotComplete));
    CHECK(e.index() == 4);
  }
  // Winds twice: consecutive determinants are all one.
  CHECK(code_of([] {
          validate_fan(rays_of({{1, 0}, {0, 1}, {-1, 0}, {0, -1}, {1, 0}, {0, 1}, {-1, 0}, {0, -1}}));
        }) == ErrorCode::NotComplete);
  // Clockwise order is not silently fixed.
  CHECK(code_of([] { validate_fan(rays_of({{1, 0}, {-1, -1}, {0, 1}})); }) == ErrorCode::NotUnimodular);
}

TEST_CASE("self-intersection profile of the 12-ray example") {
  IntegerVector alt;
  for (int k = 0; k < 6; ++k) {
    alt.emplace_back(-3);
    alt.emplace_back(-1);
  }
  const Fan f = realize_profile(alt);
  CHECK(f.euler() == 12);
  CHECK(self_intersections(f).values == alt);
  Integer sum = 0;
  for (const auto& d : alt) sum += d;
  CHECK(sum == 12 - 3 * 12);
}

TEST_CASE("realize_profile") {
  CHECK(canonical_profile(realize_profile(ints({1, 1, 1}))) == canonical_profile(fans::projective_plane()));
  CHECK(code_of([] { realize_profile(ints({0, 0, 0})); }) == ErrorCode::NotRealizable);
  CHECK(code_of([] { realize_profile(ints({0, 0, 0, 1})); }) == ErrorCode::NotRealizable);
  // Brute force: every profile in [-3, 3]^4 closes up iff it is a Hirzebruch profile.
  long realizable = 0;
  for (long a = -3; a <= 3; ++a)
    for (long b = -3; b <= 3; ++b)
      for (long c = -3; c <= 3; ++c)
        for (long d = -3; d <= 3; ++d) {
          try {
            const Fan f = realize_profile(ints({a, b, c, d}));
            ++realizable;
            CHECK(a + c == 0);
            CHECK(b + d == 0);
            std::vector<std::pair<long, long>> r;
            for (const auto& v : f.rays()) r.emplace_back(v.x.get_si(), v.y.get_si());
            CHECK(oracle::winding(r) == 1);
          } catch (const Error& e) {
            CHECK(e.code() == ErrorCode::NotRealizable);
          }
        }
  // (0,-a,0,a) and (a,0,-a,0) for a in [-3,3]: 7 + 7 - 1 (the zero profile counted twice).
  CHECK(realizable == 13);
}

TEST_CASE("blowup and blowdown") {
  const Fan f1 = blowup(fans::projective_plane(), 0);
  CHECK(canonical_profile(f1) == canonical_profile(fans::hirzebruch(1)));
  CHECK(f1.self_intersection(1) == -1);
  for (std::size_t corner = 0; corner < 3; ++corner) {
    const Fan b = blowup(fans::projective_plane(), corner);
    CHECK(b.self_intersection(corner + 1) == -1);
    const BlowdownRecord rec = blowdown(b, corner + 1);
    CHECK(rec.child == fans::projective_plane());
    CHECK(rec.parent == b);
  }
  const Fan h1 = fans::hirzebruch(1);
  CHECK(canonical_profile(blowdown(h1, 1).child) == canonical_profile(fans::projective_plane()));
  for (std::size_t i = 0; i < 4; ++i)
    CHECK(code_of([&] { blowdown(fans::hirzebruch(0), i); }) == ErrorCode::NotMinusOneCurve);
  CHECK(code_of([] { blowdown(fans::projective_plane(), 0); }) == ErrorCode::NotMinusOneCurve);
  CHECK(code_of([] { blowup(fans::projective_plane(), 3); }) == ErrorCode::IndexOutOfRange);
}

TEST_CASE("blowup effect on the profile, 100 random fans") {
  std::mt19937_64 rng(11);
  for (int k = 0; k < 100; ++k) {
    const Fan f = testing_support::random_fan(rng);
    const std::size_t c = rng() % f.euler();
    const Fan g = blowup(f, c);
    CHECK(g.euler() == f.euler() + 1);
    CHECK(g.self_intersection(c + 1) == -1);
    CHECK(g.self_intersection(c < c + 1 ? c : 0) == f.self_intersection(c) - 1);
    const std::size_t after = (c + 2) % g.euler();
    CHECK(g.self_intersection(after) == f.self_intersection(f.next(c)) - 1);
    CHECK(blowdown(g, c + 1).child == f);
  }
}

TEST_CASE("nine blowups of P2 reach the 12-ray profile") {
  // Blow up all three corners, then the six new corners next to the old rays.
  Fan f = fans::projective_plane();
  f = blowup(f, 2);
  f = blowup(f, 1);
  f = blowup(f, 0);  // hexagon
  CHECK(canonical_profile(f) == canonical_profile(fans::hexagon()));
  for (std::size_t i = 6; i-- > 0;) f = blowup(f, i);
  IntegerVector alt;
  for (int k = 0; k < 6; ++k) {
    alt.emplace_back(-3);
    alt.emplace_back(-1);
  }
  CHECK(canonical_profile(f) == canonical_form(SelfIntersectionProfile{alt}));
  // A different schedule reaches the same surface.
  Fan g = fans::hexagon();
  for (std::size_t i = 0; i < 6; ++i) g = blowup(g, 2 * i);
  CHECK(canonical_profile(g) == canonical_profile(f));
}

TEST_CASE("canonical profile is a lattice and reindexing invariant") {
  const Fan p2 = fans::projective_plane();
  CHECK(canonical_profile(transform(p2, 2, 1, 1, 1)).values == ints({1, 1, 1}));
  const Fan f1 = fans::hirzebruch(1);
  CHECK(canonical_profile(transform(f1, -1, 0, 0, 1)) == canonical_profile(f1));
  std::mt19937_64 rng(5);
  for (int k = 0; k < 50; ++k) {
    const Fan f = testing_support::random_fan(rng);
    const Fan g = rotate(testing_support::random_transform(f, rng), rng() % f.euler());
    CHECK(canonical_profile(g) == canonical_profile(f));
  }
}

TEST_CASE("dihedral maps reproduce the canonical form") {
  const SelfIntersectionProfile p{ints({-1, -2, 0, -1, -1, 1})};
  const auto maps = canonical_maps(p);
  REQUIRE(!maps.empty());
  for (const auto& m : maps) CHECK(m.apply(p.values) == canonical_form(p).values);
}

}  // TEST_SUITE
