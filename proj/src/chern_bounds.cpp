#include "torica/chern_bounds.hpp"

#include <sstream>

#include "torica/error.hpp"

namespace torica {

char to_char(StabilityLabel label) {
  switch (label) {
    case StabilityLabel::Unstable: return 'U';
    case StabilityLabel::Boundary: return 'B';
    case StabilityLabel::Stable: return 'S';
  }
  return '?';
}

long adjunction_depth(long e) {
  if (e <= 6) throw Error(ErrorCode::EulerTooSmall, "adjunction depth needs e >= 7, got " + std::to_string(e));
  // floor(log2((e-1)/6)) without floating point: largest b with 6*2^b <= e-1.
  long b = 0;
  while (6L * (2L << b) <= e - 1) ++b;
  const long low = 6L * (1L << b) + 1;
  const long high = 12L * (1L << b);
  if (e < low || e > high) throw std::logic_error("adjunction_depth: band characterisation disagrees");
  return b;
}

Rational c1sq_lower_bound(long r, long e) {
  if (r < 1) throw Error(ErrorCode::InvalidArgument, "rank must be positive");
  const long b = adjunction_depth(e);
  const Integer R = r, E = e, B = b;
  Rational value = Rational(E * (3 * R * R + 2 * R + 4 * B * R + 2 * B - 2) -
                            12 * (B + 1) * (B + 2 * R) - 12 * R * (R - 1) - 2);
  value += Rational(E) * pow2(1 - b);  // e / 2^(b-1)
  value.canonicalize();
  return value;
}

Rational c2_lower_bound(long e) {
  const long b = adjunction_depth(e);
  const Integer E = e, B = b;
  Rational value = Rational(-3 * (B + 2) * (B + 3));
  value += Rational(Integer((5 * B + 7) * E), Integer(2));
  value += Rational(E) * pow2(-(b + 1));
  value -= Rational(1, 2);
  value.canonicalize();
  return value;
}

Rational conjectured_c2_bound(long r, long e) {
  Rational factor(Integer(r - 1), Integer(2 * r));
  factor.canonicalize();
  Rational value = factor * c1sq_lower_bound(r, e);
  value.canonicalize();
  return value;
}

BoundReport easy_bound_check(const ChernData& data) {
  BoundReport report;
  report.bound = "c1^2 >= r^2 e";
  const long e = data.surface_euler;
  const Integer r = data.rank;
  report.lhs = Rational(data.c1_sq);
  report.rhs = Rational(r * r * e);
  if (e < 5) {
    report.applicable = false;
    report.passed = true;
    report.note = "e < 5: outside the range of this bound; see the catalogue of small Chern numbers";
    return report;
  }
  report.passed = report.lhs >= report.rhs;
  report.equality = report.lhs == report.rhs;
  if (report.equality) {
    if (e != 6) {
      report.passed = false;
      report.note = "equality with e != 6";
    } else if (data.c1_class) {
      const DivisorClass minus_rk = -(r * canonical_class(data.c1_class->fan()));
      if (!linear_equivalent(*data.c1_class, minus_rk)) {
        report.passed = false;
        report.note = "equality but det is not -rK";
      } else {
        report.note = "equality: det = -rK, e = 6";
      }
    } else {
      report.note = "equality at e = 6 (no class supplied to confirm det = -rK)";
    }
  }
  return report;
}

namespace {

struct ClaimSweep {
  ClaimReport report;
  void check(bool ok, const std::string& where) {
    ++report.checked;
    if (!ok) {
      report.passed = false;
      report.failures.push_back(where);
    }
  }
};

std::string point(long r, long e) {
  return "(r=" + std::to_string(r) + ",e=" + std::to_string(e) + ")";
}

ClaimReport multiple_claim(const std::string& name, long multiple, long r_min, long r_max,
                           auto e_from, long e_max) {
  ClaimSweep sweep;
  sweep.report.claim = name;
  std::ostringstream grid;
  grid << "r in [" << r_min << ".." << r_max << "], e in [" << e_from(r_min) << ".." << e_max << "]";
  if (e_from(r_min) != e_from(r_max)) grid << " (lower e limit depends on r)";
  sweep.report.grid = grid.str();
  for (long r = r_min; r <= r_max; ++r) {
    for (long e = e_from(r); e <= e_max; ++e) {
      const Rational bound = c1sq_lower_bound(r, e);
      const Rational target(Integer(multiple * r * r) * e);
      sweep.check(bound >= target, point(r, e) + ": " + to_string(bound) + " < " + to_string(target));
    }
  }
  return sweep.report;
}

}  // namespace

std::vector<ClaimReport> intro_claims_check(long e_max) {
  std::vector<ClaimReport> out;
  auto from = [](long e0) { return [e0](long) { return e0; }; };
  out.push_back(multiple_claim("c1^2 >= 2r^2 e for e >= 13", 2, 1, 20, from(13), e_max));
  out.push_back(multiple_claim("c1^2 >= 2r^2 e for e >= 12", 2, 1, 20, from(12), e_max));
  out.push_back(multiple_claim("c1^2 >= 3r^2 e for r <= 3, e >= 13", 3, 1, 3, from(13), e_max));
  out.push_back(multiple_claim("c1^2 >= 3r^2 e for r <= 6, e >= 19", 3, 1, 6, from(19), e_max));
  out.push_back(multiple_claim("c1^2 >= 3r^2 e for r <= 141, e >= 100", 3, 1, 141, from(100), e_max));
  out.push_back(multiple_claim("c1^2 >= 3r^2 e for e >= 6r+7", 3, 1, 50,
                               [](long r) { return 6 * r + 7; }, e_max));
  out.push_back(multiple_claim("c1^2 >= 5r^2 e for r <= 10, e >= 100", 5, 1, 10, from(100), e_max));

  ClaimSweep strict;
  strict.report.claim = "c1^2 > r^2 e for e >= 7";
  strict.report.grid = "r in [1..50], e in [7.." + std::to_string(e_max) + "]";
  ClaimSweep mono_r;
  mono_r.report.claim = "bound non-decreasing in r";
  mono_r.report.grid = strict.report.grid;
  ClaimSweep mono_e;
  mono_e.report.claim = "bound non-decreasing in e";
  mono_e.report.grid = strict.report.grid;
  for (long r = 1; r <= 50; ++r) {
    for (long e = 7; e <= e_max; ++e) {
      const Rational bound = c1sq_lower_bound(r, e);
      strict.check(bound > Rational(Integer(r * r) * e), point(r, e));
      if (r < 50) mono_r.check(c1sq_lower_bound(r + 1, e) >= bound, point(r, e));
      if (e < e_max) mono_e.check(c1sq_lower_bound(r, e + 1) >= bound, point(r, e));
    }
  }
  out.push_back(strict.report);
  out.push_back(mono_r.report);
  out.push_back(mono_e.report);
  return out;
}

ChernPair hirzebruch_pullback_twist_chern(long r, const Integer& eps, const Integer& d) {
  if (r < 1) throw Error(ErrorCode::InvalidArgument, "rank must be positive");
  if (eps < 0) throw Error(ErrorCode::InvalidArgument, "Hirzebruch index must be >= 0");
  const Integer R = r;
  return {R * R * eps + 2 * R * d, (R * (R - 1) / 2) * eps + (R - 1) * d};
}

ChernData chern_of_split(const std::vector<DivisorClass>& line_classes) {
  if (line_classes.empty()) throw Error(ErrorCode::InvalidArgument, "empty split bundle");
  DivisorClass c1 = DivisorClass::zero(line_classes.front().fan());
  Integer c2 = 0;
  for (std::size_t i = 0; i < line_classes.size(); ++i) {
    c1 += line_classes[i];
    for (std::size_t j = i + 1; j < line_classes.size(); ++j) c2 += intersect(line_classes[i], line_classes[j]);
  }
  ChernData data;
  data.rank = static_cast<long>(line_classes.size());
  data.c1_sq = intersect(c1, c1);
  data.c2 = c2;
  data.surface_euler = static_cast<long>(c1.fan().euler());
  data.c1_class = std::move(c1);
  return data;
}

StabilityLabel stability_label(const ChernData& data) {
  if (data.rank != 2) throw Error(ErrorCode::RankNotTwo, "stability label needs rank two");
  const Integer four_c2 = 4 * data.c2;
  if (data.c1_sq > four_c2) return StabilityLabel::Unstable;
  if (data.c1_sq == four_c2) return StabilityLabel::Boundary;
  return StabilityLabel::Stable;
}

std::vector<BoundSurfaceRow> emit_bound_surface(long r_min, long r_max, long e_min, long e_max,
                                                bool scaled) {
  if (e_min < 7) throw Error(ErrorCode::EulerTooSmall, "bound surface needs e >= 7");
  if (r_min < 1 || r_max < r_min || e_max < e_min)
    throw Error(ErrorCode::InvalidArgument, "empty or invalid (r, e) range");
  std::vector<BoundSurfaceRow> rows;
  rows.reserve(static_cast<std::size_t>((r_max - r_min + 1) * (e_max - e_min + 1)));
  for (long r = r_min; r <= r_max; ++r) {
    for (long e = e_min; e <= e_max; ++e) {
      BoundSurfaceRow row{r, e, adjunction_depth(e), c1sq_lower_bound(r, e), {}};
      if (scaled) {
        Rational ratio = row.bound / Rational(Integer(r) * e * (3 * r + 4 * row.b));
        ratio.canonicalize();
        row.scaled = to_decimal(ratio, 12);
      }
      rows.push_back(std::move(row));
    }
  }
  return rows;
}

std::string bound_surface_csv(const std::vector<BoundSurfaceRow>& rows) {
  std::ostringstream os;
  os << "r,e,b,bound_num,bound_den,scaled\n";
  for (const auto& row : rows) {
    os << row.r << ',' << row.e << ',' << row.b << ',' << row.bound.get_num().get_str() << ','
       << row.bound.get_den().get_str() << ',' << row.scaled << '\n';
  }
  return os.str();
}

Rational c2_contradiction_expression(long b, long e) {
  const Integer B = b, E = e;
  Rational value(18 * B * B + 42 * B + 13 - 7 * E * B + E);
  value -= Rational(3 * E) * pow2(-b);
  value.canonicalize();
  return value;
}

}  // namespace torica
