#pragma once

#include <cstdint>
#include <functional>
#include <random>
#include <sstream>
#include <string>
#include <vector>

#include "random_fans.hpp"
#include "torica/bogomolov.hpp"
#include "torica/divisor.hpp"
#include "torica/fan.hpp"

namespace testing_support {

struct PropertyResult {
  std::string name;
  long cases = 0;
  long failures = 0;
  std::string first_failure;

  bool passed() const { return failures == 0 && cases > 0; }
};

// Runs `check` on `cases` seeds; a false return or an exception is a failure.
inline PropertyResult run_property(const std::string& name, long cases, std::uint64_t seed,
                                   const std::function<bool(std::mt19937_64&, std::string&)>& check) {
  PropertyResult result{name};
  std::mt19937_64 rng(seed);
  for (long k = 0; k < cases; ++k) {
    ++result.cases;
    std::string why;
    bool ok = false;
    try {
      ok = check(rng, why);
    } catch (const std::exception& e) {
      why = std::string("exception: ") + e.what();
    }
    if (!ok) {
      ++result.failures;
      if (result.first_failure.empty()) result.first_failure = "case " + std::to_string(k) + ": " + why;
    }
  }
  return result;
}

inline std::string describe(const Fan& f) { return to_string(f.profile()); }

inline std::vector<PropertyResult> run_property_suites(long cases = 500, std::uint64_t seed = 20240601) {
  std::vector<PropertyResult> out;

  out.push_back(run_property("fan: blowup then blowdown", cases, seed + 1, [](auto& rng, std::string& why) {
    const Fan f = random_fan(rng);
    const std::size_t c = rng() % f.euler();
    const Fan g = blowup(f, c);
    why = describe(f) + " corner " + std::to_string(c);
    return g.euler() == f.euler() + 1 && g.self_intersection(c + 1) == -1 && blowdown(g, c + 1).child == f;
  }));

  out.push_back(run_property("fan: blowdown then blowup", cases, seed + 2, [](auto& rng, std::string& why) {
    const Fan f = random_fan(rng, 8, 3);
    std::vector<std::size_t> minus_one;
    for (std::size_t i = 0; i < f.euler(); ++i)
      if (f.euler() > 3 && f.self_intersection(i) == -1 && f.ray(f.prev(i)) + f.ray(f.next(i)) == f.ray(i))
        minus_one.push_back(i);
    if (minus_one.empty()) return canonical_profile(f) == canonical_profile(realize_profile(f.profile()));
    const std::size_t i = minus_one[rng() % minus_one.size()];
    const Fan child = blowdown(f, i).child;
    why = describe(f) + " ray " + std::to_string(i);
    // Ray 0 re-enters at the end when it is the one removed.
    const Fan back = i == 0 ? rotate(blowup(child, child.euler() - 1), f.euler() - 1) : blowup(child, i - 1);
    return back == f;
  }));

  out.push_back(run_property("fan: profile realize and extract", cases, seed + 3, [](auto& rng, std::string& why) {
    const Fan f = random_transform(random_fan(rng), rng);
    const Fan g = realize_profile(self_intersections(f));
    why = describe(f);
    return g.profile() == f.profile() && canonical_profile(g) == canonical_profile(f) &&
           self_intersections(validate_fan(f.rays())) == f.profile();
  }));

  out.push_back(run_property("divisor: degrees and coefficients", cases, seed + 4, [](auto& rng, std::string& why) {
    const Fan f = random_fan(rng);
    const DivisorClass L = random_class(f, rng);
    const DegreeVector t = degree_vector(L);
    const DivisorClass M = from_degrees(f, t);
    why = describe(f);
    return satisfies_closure(f, t) && degree_vector(M) == t && linear_equivalent(M, L) &&
           intersect(M, M) == intersect(L, L);
  }));

  out.push_back(run_property("divisor: normalize idempotent", cases, seed + 5, [](auto& rng, std::string& why) {
    const Fan f = random_fan(rng);
    const DivisorClass L = random_class(f, rng) + principal(f, long(rng() % 9) - 4, long(rng() % 9) - 4);
    const DivisorClass n = normalize(L);
    why = describe(f);
    return normalize(n) == n && n.coefficient(0) == 0 && n.coefficient(1) == 0 &&
           degree_vector(n) == degree_vector(L);
  }));

  out.push_back(run_property("divisor: (K+L).L is even", cases, seed + 6, [](auto& rng, std::string& why) {
    const Fan f = random_fan(rng);
    const DivisorClass L = random_class(f, rng, 10);
    const Integer v = intersect(canonical_class(f) + L, L);
    why = describe(f) + " value " + v.get_str();
    return v % 2 == 0 && -intersect(canonical_class(f), L) == [&] {
      Integer s = 0;
      for (const auto& x : degree_vector(L).values) s += x;
      return s;
    }();
  }));

  out.push_back(run_property("divisor: Hodge inequality", cases, seed + 7, [](auto& rng, std::string& why) {
    const Fan f = random_fan(rng, 6, 3);
    const DivisorClass H = random_ample(f, rng);
    const DivisorClass A = random_class(f, rng, 5);
    // The destabilizer form: P = H - A, T = 2A - H, whenever P is ample.
    DivisorClass P = H - A;
    DivisorClass T = Integer(2) * A - H;
    if (!is_ample(P)) {
      P = H;
      T = A;
    }
    why = describe(f);
    return hodge_inequality_holds(P, T);
  }));

  return out;
}

}  // namespace testing_support
