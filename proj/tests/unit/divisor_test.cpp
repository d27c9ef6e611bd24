#include <doctest.h>

#include <random>

#include "../oracles/oracles.hpp"
#include "../support/random_fans.hpp"
#include "torica/divisor.hpp"
#include "torica/enumeration.hpp"
#include "torica/error.hpp"

using namespace torica;

namespace {

IntegerVector ints(std::initializer_list<long> list) {
  IntegerVector out;
  for (long v : list) out.emplace_back(v);
  return out;
}

Fan remark_fan() {
  IntegerVector alt;
  for (int k = 0; k < 6; ++k) {
    alt.emplace_back(-3);
    alt.emplace_back(-1);
  }
  return realize_profile(alt);
}

DivisorClass remark_class() {
  return DivisorClass(remark_fan(), ints({3, 5, 3, 5, 3, 5, 3, 5, 3, 5, 3, 5}));
}

}  // namespace

TEST_SUITE("divisors") {

TEST_CASE("canonical class squares") {
  const DivisorClass K2 = canonical_class(fans::projective_plane());
  CHECK(intersect(K2, K2) == 9);
  const DivisorClass K12 = canonical_class(remark_fan());
  CHECK(intersect(K12, K12) == 0);
  for (long a = 0; a <= 3; ++a) {
    const DivisorClass K = canonical_class(fans::hirzebruch(a));
    CHECK(intersect(K, K) == 8);
  }
  for (const auto& entry : enumerate_surfaces(10, 3).entries) {
    const DivisorClass K = canonical_class(entry.fan);
    CHECK(intersect(K, K) == 12 - static_cast<long>(entry.fan.euler()));
    CHECK_FALSE(is_nef(K));
    const DegreeVector t = degree_vector(K);
    for (std::size_t i = 0; i < t.size(); ++i) CHECK(t[i] == -2 - entry.fan.self_intersection(i));
  }
}

TEST_CASE("degree vectors") {
  const Fan p2 = fans::projective_plane();
  CHECK(degree_vector(DivisorClass(p2, ints({1, 0, 0}))).values == ints({1, 1, 1}));
  const DivisorClass L = remark_class();
  CHECK(degree_vector(L).values == IntegerVector(12, Integer(1)));
  CHECK(-intersect(canonical_class(L.fan()), L) == 12);
  CHECK(is_ample(L));
  CHECK(satisfies_closure(L.fan(), degree_vector(L)));
}

TEST_CASE("intersection numbers") {
  const Fan p2 = fans::projective_plane();
  CHECK(intersect(DivisorClass(p2, ints({2, 0, 0})), DivisorClass(p2, ints({3, 0, 0}))) == 6);
  const Fan f0 = fans::hirzebruch(0);
  const DivisorClass pq = DivisorClass::invariant(f0, 0) + Integer(2) * DivisorClass::invariant(f0, 1);
  CHECK(intersect(pq, pq) == 4);
  CHECK(degree_vector(pq).values == ints({2, 1, 2, 1}));
  const DivisorClass L = remark_class();
  CHECK(intersect(L, L) == 48);
  CHECK_THROWS_AS(intersect(L, DivisorClass::zero(p2)), Error);
}

TEST_CASE("nef and ample") {
  const Fan p2 = fans::projective_plane();
  CHECK(is_ample(DivisorClass::invariant(p2, 0)));
  CHECK(is_nef(DivisorClass::zero(p2)));
  CHECK_FALSE(is_ample(DivisorClass::zero(p2)));
  const Fan f2 = fans::hirzebruch(2);
  CHECK_FALSE(is_nef(DivisorClass::invariant(f2, 1)));
}

TEST_CASE("sectional genus") {
  const Fan p2 = fans::projective_plane();
  CHECK(sectional_genus(DivisorClass::invariant(p2, 0)) == 0);
  CHECK(sectional_genus(remark_class()) == 19);
  for (const auto& entry : enumerate_surfaces(8, 2).entries)
    CHECK(sectional_genus(-canonical_class(entry.fan)) == 1);
}

TEST_CASE("from_degrees") {
  const Fan p2 = fans::projective_plane();
  CHECK(linear_equivalent(from_degrees(p2, DegreeVector{ints({1, 1, 1})}), DivisorClass::invariant(p2, 0)));
  const Fan f0 = fans::hirzebruch(0);
  for (long p = 1; p <= 3; ++p)
    for (long q = 1; q <= 3; ++q) {
      const DivisorClass L = from_degrees(f0, DegreeVector{ints({q, p, q, p})});
      const DivisorClass expected = Integer(p) * DivisorClass::invariant(f0, 0) + Integer(q) * DivisorClass::invariant(f0, 1);
      CHECK(linear_equivalent(L, expected));
    }
  CHECK_THROWS_AS(from_degrees(p2, DegreeVector{ints({1, 1, 2})}), Error);
  try {
    from_degrees(p2, DegreeVector{ints({1, 1, 2})});
  } catch (const Error& e) {
    CHECK(e.code() == ErrorCode::InconsistentDegrees);
  }
}

TEST_CASE("from_degrees agrees with Gaussian elimination, 200 random cases") {
  std::mt19937_64 rng(3);
  for (int k = 0; k < 200; ++k) {
    const Fan f = testing_support::random_fan(rng);
    const DivisorClass L = testing_support::random_class(f, rng);
    const DegreeVector t = degree_vector(L);
    std::vector<long> d, tv;
    for (std::size_t i = 0; i < f.euler(); ++i) {
      d.push_back(f.self_intersection(i).get_si());
      tv.push_back(t[i].get_si());
    }
    const auto solved = oracle::solve_degrees(d, tv);
    REQUIRE(solved.has_value());
    const DivisorClass M = from_degrees(f, t);
    for (std::size_t i = 0; i < f.euler(); ++i) CHECK(Rational(M.coefficient(i)) == (*solved)[i]);
    CHECK(linear_equivalent(M, L));
  }
}

TEST_CASE("normalize and linear equivalence") {
  const Fan p2 = fans::projective_plane();
  CHECK(linear_equivalent(DivisorClass(p2, ints({0, 1, 0})), DivisorClass(p2, ints({1, 0, 0}))));
  CHECK_FALSE(linear_equivalent(DivisorClass(p2, ints({2, 0, 0})), DivisorClass(p2, ints({1, 0, 0}))));
  std::mt19937_64 rng(8);
  for (int k = 0; k < 50; ++k) {
    const Fan f = testing_support::random_fan(rng);
    const DivisorClass L = testing_support::random_class(f, rng);
    const DivisorClass M = L + principal(f, long(rng() % 7) - 3, long(rng() % 7) - 3);
    CHECK(linear_equivalent(L, M));
    const DivisorClass n = normalize(L);
    CHECK(n.coefficient(0) == 0);
    CHECK(n.coefficient(1) == 0);
    CHECK(normalize(n) == n);
    CHECK(degree_vector(n) == degree_vector(L));
    CHECK(picard_rank(f) == f.euler() - 2);
  }
}

TEST_CASE("positivity on the ample cone") {
  const Fan f0 = fans::hirzebruch(0);
  const DivisorClass fiber = DivisorClass::invariant(f0, 0);
  CHECK(is_positive_on_ample_cone(fiber));
  CHECK_FALSE(is_positive_on_ample_cone(fiber - DivisorClass::invariant(f0, 1)));
  CHECK_FALSE(is_positive_on_ample_cone(DivisorClass::zero(f0)));
  const Fan f1 = fans::hirzebruch(1);
  CHECK(is_positive_on_ample_cone(DivisorClass::invariant(f1, 1)));  // the (-1)-curve is effective
  CHECK(is_q_effective(DivisorClass::invariant(f1, 1)));
  CHECK_FALSE(is_q_effective(-DivisorClass::invariant(f1, 1)));
}

}  // TEST_SUITE
