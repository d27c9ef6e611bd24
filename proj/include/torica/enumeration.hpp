#pragma once

#include <cstddef>
#include <map>
#include <string>
#include <vector>

#include "torica/divisor.hpp"
#include "torica/fan.hpp"
#include "torica/numeric.hpp"

namespace torica {

struct SurfaceEntry {
  SelfIntersectionProfile profile;  // canonical
  Fan fan;                          // representative built by the schedule
  std::string seed;                 // "P2" or "F<a>"
  std::vector<std::size_t> schedule;  // corner indices blown up, in order
};

struct SurfaceInventory {
  long e_max = 0;
  long a_max = 0;
  std::vector<SurfaceEntry> entries;  // sorted by (e, canonical profile)
  std::string note;                   // declared incompleteness

  std::size_t size() const { return entries.size(); }
};

/// Closure of P^2 and F_0..F_a_max under corner blowups, up to e_max rays,
/// deduplicated by canonical profile.
SurfaceInventory enumerate_surfaces(long e_max, long a_max);

/// Degree vectors t with t_i in [1..t_max] and sum t_i v_i = 0, in
/// lexicographic order.
std::vector<DegreeVector> enumerate_ample_degrees(const Fan& fan, long t_max);

struct CounterexampleRecord {
  std::string bound;
  SelfIntersectionProfile profile;  // of the fan below, not canonicalized
  std::vector<LatticeVector> rays;
  DegreeVector degrees;
  long r = 0;
  Rational lhs;
  Rational rhs;
  std::string context;
};

struct CheckTally {
  long pass = 0;
  long fail = 0;
  std::vector<std::string> equality_cases;
};

struct VerificationParams {
  long e_min = 3;
  long t_max = 4;
  std::vector<long> r_set{1, 2, 3};
  std::size_t threads = 0;  // 0: worker_count()
};

struct VerificationReport {
  long e_max = 0;
  long a_max = 0;
  VerificationParams params;
  std::size_t surface_count = 0;
  std::size_t instance_count = 0;
  std::map<std::string, CheckTally> checks;
  std::vector<CounterexampleRecord> counterexamples;
  std::vector<std::string> findings;  // observations that are not counterexamples
  std::vector<std::string> exception_expected;  // fingerprints predicted within the sweep
  std::vector<std::string> exception_found;     // fingerprints with H^2 <= r e

  bool passed() const;
};

/// Fingerprint of (S, H): canonical profile plus the lexicographically least
/// degree vector over the symmetries realizing it.
std::string fingerprint(const DivisorClass& H);

/// The pairs (S, det E) with c1^2 <= r e from the classification of small
/// c1^2, as fingerprints keyed by r.
std::map<long, std::vector<std::string>> small_c1_exceptions();

VerificationReport run_verification(const SurfaceInventory& inventory, const VerificationParams& params);

struct ExtremalInstance {
  SelfIntersectionProfile profile;
  Fan fan;
  DivisorClass L;
  Integer L_sq;
  Integer genus;
};

/// All (S, H) in the inventory with -K.H = e(S), i.e. all degrees equal to 1.
std::vector<ExtremalInstance> find_extremal(const SurfaceInventory& inventory);

/// Repeatedly contracts the first (-1)-curve until none is left (e >= 5)
/// or the surface is P^2 or a Hirzebruch surface. Returns the blowdowns.
std::vector<BlowdownRecord> minimal_model_schedule(const Fan& fan);

struct TwelveRayReport {
  Fan fan;
  DivisorClass alternating;  // (3,5) x 6
  DegreeVector degrees;
  Integer minus_k_dot_l;
  Integer l_sq;
  Integer genus;
  IntegerVector printed;      // coefficients as printed in the source
  DegreeVector printed_degrees;
  std::vector<std::size_t> coefficient_mismatch;  // 1-based indices
  std::vector<std::size_t> degree_mismatch;       // 1-based indices
  std::size_t blowdowns_to_minimal = 0;
  std::string minimal_model;
  std::string note;
};

/// The 12-ray example with profile (-3,-1) x 6 and its alternating class.
TwelveRayReport twelve_ray_example();

}  // namespace torica
