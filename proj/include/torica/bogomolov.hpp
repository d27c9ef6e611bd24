#pragma once

#include <optional>
#include <set>
#include <string>
#include <vector>

#include "torica/chern_bounds.hpp"
#include "torica/divisor.hpp"
#include "torica/report.hpp"

namespace torica {

/// c1^2 > 4 c2. Throws RankNotTwo.
bool is_unstable(const ChernData& data);

/// A sub-line-bundle A of a rank-2 bundle with det H, quotient Q = H - A
/// (twisted by an ideal of colength deg_Z), and T = 2A - H.
struct DestabilizerCandidate {
  DivisorClass A;
  DivisorClass Q;
  DivisorClass T;
  Integer deg_Z;  // c2 - A.Q
};

struct DestabilizerSearch {
  long box = 0;
  std::vector<DestabilizerCandidate> candidates;  // sorted by normalized A
  std::string verdict;     // "candidates found" or "no destabilizer within box B"
  std::string positivity;  // how "T.L > 0 for every ample L" was checked
};

/// Enumerates normalized A (coefficients on rays 0 and 1 pinned to zero, the
/// others in [-box, box]) and keeps those with Q ample, T^2 > 0, T positive
/// on the whole ample cone (and in particular on the witness, H, Q and -K
/// when nef), and A.Q <= c2. The witness defaults to H.
/// Throws NotAmple if H has a degree below 2, NotUnstable if H^2 <= 4 c2.
DestabilizerSearch destabilizer_search(const DivisorClass& H, const Integer& c2, long box,
                                       const std::optional<DivisorClass>& witness = std::nullopt);

/// With Q = H - A and s = A.Q - Q^2: s >= 0 and s^2 >= Q^2, i.e.
/// A.Q >= Q^2 + sqrt(Q^2). Throws NonPositiveSquare if Q^2 <= 0.
bool eq1_check(const DivisorClass& A, const DivisorClass& H);

/// P^2 T^2 <= (P.T)^2.
bool hodge_inequality_holds(const DivisorClass& P, const DivisorClass& T);

enum class Case2Constraint { Bounds, Quotient, AlphaHalf, BetaHalf, TwistSquare, SecondChern };

std::string to_string(Case2Constraint constraint);

struct Case2Witness {
  long eps = 0, x = 0, y = 0, alpha = 0, beta = 0;
  friend bool operator==(const Case2Witness&, const Case2Witness&) = default;
};

struct Case2Result {
  BoundReport report;  // passed iff no solution exists
  std::vector<Case2Witness> witnesses;
  long examined = 0;
};

/// Brute force over eps in [1..eps_max], x in [3..x_max], y in [x eps + 2 .. y_max],
/// alpha in [-x_max, x_max], beta in [-y_max, y_max] of the Case II system
///   Bounds:      x >= 3, eps >= 1, y >= x eps + 2
///   Quotient:    x - alpha > 0, y - beta > 0, y >= beta + (x - alpha) eps + 1
///   AlphaHalf:   2 alpha > x
///   BetaHalf:    2 beta > y
///   TwistSquare: (2 alpha - x)(4 beta - 2 y - (2 alpha - x) eps) > 0
///   SecondChern: -alpha (x - alpha) eps + beta (x - alpha) + alpha (y - beta) <= 4
/// minus the dropped constraints. Stops after max_witnesses solutions.
Case2Result case2_infeasibility_oracle(long x_max, long y_max, long eps_max,
                                       const std::set<Case2Constraint>& dropped = {},
                                       std::size_t max_witnesses = 1);

/// Minimum of L^2 over ample classes with degrees in [1..t_max]; an upper
/// bound for the true minimum. Throws NoAmpleFound.
struct MinAmpleSquare {
  Integer value;
  DegreeVector degrees;
  long t_max = 0;
};
MinAmpleSquare min_ample_square(const Fan& fan, long t_max);

/// If (H^2, c2) is unstable with c2 <= e + sqrt(e) and S is not P^2 or F_0..F_2,
/// every destabilizer found within the box must violate eq1_check.
BoundReport bog_restriction_check(const DivisorClass& H, const Integer& c2, long box);

/// Names P^2, F_0, F_1, F_2 and the hexagon by canonical profile; empty otherwise.
std::string small_surface_name(const Fan& fan);

}  // namespace torica
