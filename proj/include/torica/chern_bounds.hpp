#pragma once

#include <optional>
#include <string>
#include <vector>

#include "torica/divisor.hpp"
#include "torica/numeric.hpp"
#include "torica/report.hpp"

namespace torica {

/// Chern data of a candidate ample rank-r bundle.
struct ChernData {
  long rank = 0;
  Integer c1_sq;
  Integer c2;
  std::optional<DivisorClass> c1_class;
  long surface_euler = 0;
};

enum class StabilityLabel { Unstable, Boundary, Stable };

char to_char(StabilityLabel label);

/// b = floor(log2((e-1)/6)), the unique b >= 0 with 2^b*6+1 <= e <= 2^b*12.
/// Throws EulerTooSmall for e <= 6.
long adjunction_depth(long e);

/// e(3r^2+2r+4br+2b-2) - 12(b+1)(b+2r) - 12r(r-1) + e/2^(b-1) - 2.
Rational c1sq_lower_bound(long r, long e);

/// -3(b+2)(b+3) + (5b+7)e/2 + e/2^(b+1) - 1/2, rank two.
Rational c2_lower_bound(long e);

/// Conjectured rank-r generalisation: (r-1)/(2r) times c1sq_lower_bound.
Rational conjectured_c2_bound(long r, long e);

/// c1^2 >= r^2 e for e >= 5; equality only for det = -rK on e = 6.
BoundReport easy_bound_check(const ChernData& data);

struct ClaimReport {
  std::string claim;
  std::string grid;
  bool passed = true;
  long checked = 0;
  std::vector<std::string> failures;  // "(r,e): lhs < rhs"
};

/// Sweeps every quantitative claim about the c1^2 bound over finite grids.
/// Unbounded claims are capped at e_max (>= 1000 recommended).
std::vector<ClaimReport> intro_claims_check(long e_max = 1000);

struct ChernPair {
  Integer c1_sq;
  Integer c2;
  friend bool operator==(const ChernPair&, const ChernPair&) = default;
};

/// Bundles p^*V (x) xi on F_eps with det E . E = d:
/// c1^2 = r^2 eps + 2 r d, c2 = C(r,2) eps + (r-1) d.
ChernPair hirzebruch_pullback_twist_chern(long r, const Integer& eps, const Integer& d);

/// Chern data of L_1 + ... + L_r: c1 = sum, c2 = sum_{i<j} L_i.L_j.
ChernData chern_of_split(const std::vector<DivisorClass>& line_classes);

/// Throws RankNotTwo.
StabilityLabel stability_label(const ChernData& data);

struct CatalogueRow {
  std::string surface;
  long euler = 0;
  std::string bundle;
  std::string construction;  // "split", "pullback-twist", "catalogue", "open"
  Integer c1_sq;
  Integer c2;
  StabilityLabel label = StabilityLabel::Boundary;
  bool recomputable = true;
  std::string note;
};

std::vector<CatalogueRow> table1_catalogue();

/// Recomputes every recomputable row from its construction. The open last
/// row is checked for arithmetic consistency only.
std::vector<BoundReport> verify_table1();

struct BoundSurfaceRow {
  long r = 0;
  long e = 0;
  long b = 0;
  Rational bound;
  std::string scaled;  // bound / (r e (3r + 4b)), 12 significant digits
};

/// Rows in (r, e) order, r outermost.
std::vector<BoundSurfaceRow> emit_bound_surface(long r_min, long r_max, long e_min, long e_max,
                                                bool scaled);

std::string bound_surface_csv(const std::vector<BoundSurfaceRow>& rows);

/// 18b^2 + 42b + 13 - 7eb + e - 3e/2^b, which must be <= 0 on each band.
Rational c2_contradiction_expression(long b, long e);

}  // namespace torica
