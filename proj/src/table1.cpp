#include <functional>

#include "torica/chern_bounds.hpp"
#include "torica/error.hpp"

namespace torica {

namespace {

// Bidegree (p, q) = p D_0 + q D_1 on the F_0 fan.
DivisorClass bidegree(const Fan& f0, long p, long q) {
  return Integer(p) * DivisorClass::invariant(f0, 0) + Integer(q) * DivisorClass::invariant(f0, 1);
}

DivisorClass plane_line_multiple(long a) {
  return Integer(a) * DivisorClass::invariant(fans::projective_plane(), 0);
}

struct Construction {
  CatalogueRow row;
  // Recomputes (c1^2, c2) and, where possible, a determinant class.
  std::function<ChernData()> recompute;
};

Construction split_row(std::string surface, std::string bundle, std::vector<DivisorClass> summands,
                       long c1_sq, long c2, StabilityLabel label) {
  CatalogueRow row{std::move(surface), static_cast<long>(summands.front().fan().euler()), std::move(bundle),
                "split", c1_sq, c2, label, true, {}};
  return {std::move(row), [summands = std::move(summands)] { return chern_of_split(summands); }};
}

// p^*(O(alpha) + O(beta)) (x) xi on F_eps; det = 2 xi + (alpha+beta) F with
// xi = D_3 (square eps) and F = D_0.
Construction twist_row(long eps, long alpha, long beta, long c1_sq, long c2) {
  const std::string surface = eps == 0 ? "P1xP1" : "F" + std::to_string(eps);
  const std::string bundle = "p^*(O(" + std::to_string(alpha) + ")+O(" + std::to_string(beta) + "))(x)xi";
  CatalogueRow row{surface, 4, bundle, "pullback-twist", c1_sq, c2, StabilityLabel::Boundary, true, {}};
  return {std::move(row), [eps, alpha, beta] {
            const Fan fan = fans::hirzebruch(eps);
            const ChernPair pair = hirzebruch_pullback_twist_chern(2, eps, alpha + beta);
            ChernData data;
            data.rank = 2;
            data.c1_sq = pair.c1_sq;
            data.c2 = pair.c2;
            data.surface_euler = 4;
            data.c1_class = Integer(2) * DivisorClass::invariant(fan, 3) +
                            Integer(alpha + beta) * DivisorClass::invariant(fan, 0);
            return data;
          }};
}

std::vector<Construction> constructions() {
  const Fan f0 = fans::hirzebruch(0);
  const Fan dp6 = fans::hexagon();
  const DivisorClass minus_k = -canonical_class(dp6);
  using L = StabilityLabel;
  std::vector<Construction> rows;
  rows.push_back(split_row("P2", "O(1)+O(1)", {plane_line_multiple(1), plane_line_multiple(1)}, 4, 1, L::Boundary));
  rows.push_back(split_row("P2", "O(1)+O(2)", {plane_line_multiple(1), plane_line_multiple(2)}, 9, 2, L::Unstable));
  rows.push_back({CatalogueRow{"P2", 3, "T_P2", "catalogue", 9, 3, L::Stable, true,
                            "tangent bundle: (c1^2, c2) taken as catalogue data"},
                  [] {
                    ChernData data;
                    data.rank = 2;
                    data.c1_sq = 9;
                    data.c2 = 3;
                    data.surface_euler = 3;
                    data.c1_class = plane_line_multiple(3);
                    return data;
                  }});
  rows.push_back(split_row("P2", "O(1)+O(3)", {plane_line_multiple(1), plane_line_multiple(3)}, 16, 3, L::Unstable));
  rows.push_back(twist_row(0, 1, 1, 8, 2));
  rows.push_back(twist_row(0, 1, 2, 12, 3));
  rows.push_back(twist_row(0, 1, 3, 16, 4));
  rows.push_back(twist_row(0, 2, 2, 16, 4));
  rows.push_back(split_row("P1xP1", "O(1,1)+O(2,2)", {bidegree(f0, 1, 1), bidegree(f0, 2, 2)}, 18, 4, L::Unstable));
  rows.push_back(twist_row(1, 1, 1, 12, 3));
  rows.push_back(twist_row(1, 1, 2, 16, 4));
  rows.push_back(twist_row(2, 1, 1, 16, 4));
  rows.push_back(split_row("DelPezzo6", "(-K)+(-K)", {minus_k, minus_k}, 24, 6, L::Boundary));
  rows.push_back({CatalogueRow{"DelPezzo6", 6, "det = -2K (existence unknown)", "open", 24, 7, L::Stable, false,
                            "c2 >= 7 open"},
                  [dp6] {
                    ChernData data;
                    data.rank = 2;
                    data.c1_class = Integer(-2) * canonical_class(dp6);
                    data.c1_sq = intersect(*data.c1_class, *data.c1_class);
                    data.c2 = 7;
                    data.surface_euler = 6;
                    return data;
                  }});
  return rows;
}

}  // namespace

std::vector<CatalogueRow> table1_catalogue() {
  std::vector<CatalogueRow> out;
  for (auto& c : constructions()) out.push_back(std::move(c.row));
  return out;
}

std::vector<BoundReport> verify_table1() {
  std::vector<BoundReport> reports;
  std::size_t index = 0;
  for (const auto& c : constructions()) {
    ++index;
    const CatalogueRow& row = c.row;
    const ChernData data = c.recompute();
    BoundReport report;
    report.instance = "row " + std::to_string(index) + ": " + row.surface + ", " + row.bundle;
    report.bound = "table1";
    report.lhs = Rational(data.c1_sq);
    report.rhs = Rational(row.c1_sq);

    const bool det_consistent =
        !data.c1_class || intersect(*data.c1_class, *data.c1_class) == data.c1_sq;
    const bool det_ample_enough = !data.c1_class || min_degree(*data.c1_class) >= 2;
    const StabilityLabel label = stability_label(data);

    if (!row.recomputable) {
      // Only c1^2 is determined; a stable label needs c2 > c1^2 / 4 = 6.
      report.passed = data.c1_sq == row.c1_sq && det_consistent && 4 * Integer(7) > data.c1_sq;
      report.note = "c1^2 = " + data.c1_sq.get_str() + " recomputed from det = -2K; " + row.note;
    } else {
      report.passed = data.c1_sq == row.c1_sq && data.c2 == row.c2 && label == row.label &&
                      det_consistent && det_ample_enough;
      report.note = "recomputed (" + data.c1_sq.get_str() + ", " + data.c2.get_str() + ", " +
                    to_char(label) + ") expected (" + row.c1_sq.get_str() + ", " + row.c2.get_str() +
                    ", " + to_char(row.label) + ")";
      if (!row.note.empty()) report.note += "; " + row.note;
    }
    report.equality = label == StabilityLabel::Boundary;
    reports.push_back(std::move(report));
  }
  return reports;
}

}  // namespace torica
