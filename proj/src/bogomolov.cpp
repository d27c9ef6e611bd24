#include "torica/bogomolov.hpp"

#include <algorithm>
#include <limits>

#include "torica/enumeration.hpp"
#include "torica/error.hpp"
#include "torica/parallel.hpp"

namespace torica {

namespace {

long to_long(const Integer& v, const char* what) {
  if (!v.fits_slong_p() || abs(v) > Integer(1) << 24)
    throw Error(ErrorCode::InvalidArgument, std::string(what) + " too large for the search");
  return v.get_si();
}

// Integer data of the fan and H for the search loops.
struct SearchFrame {
  std::size_t e = 0;
  std::vector<long> d;    // self-intersections
  std::vector<long> tH;   // degrees of H
  long box = 0;
};

// All normalized A with Q = H - A ample, enumerated depth first. b[0] = b[1] = 0;
// once b[k] is fixed, the degree t_{k-1}(A) is known and must stay <= t_{k-1}(H) - 1.
void collect(const SearchFrame& f, std::vector<long>& b, std::size_t k,
             std::vector<std::vector<long>>& out) {
  const std::size_t e = f.e;
  if (k == e) {
    const long t_last = b[e - 2] + b[0] + f.d[e - 1] * b[e - 1];
    const long t_first = b[e - 1] + b[1] + f.d[0] * b[0];
    if (t_last <= f.tH[e - 1] - 1 && t_first <= f.tH[0] - 1) out.push_back(b);
    return;
  }
  // t_{k-1} = b[k-2] + b[k] + d_{k-1} b[k-1] <= tH_{k-1} - 1
  const long upper = std::min(f.box, f.tH[k - 1] - 1 - b[k - 2] - f.d[k - 1] * b[k - 1]);
  for (long v = -f.box; v <= upper; ++v) {
    b[k] = v;
    collect(f, b, k + 1, out);
  }
  b[k] = 0;
}

IntegerVector to_integers(const std::vector<long>& v) {
  IntegerVector out;
  out.reserve(v.size());
  for (long x : v) out.emplace_back(x);
  return out;
}

}  // namespace

bool is_unstable(const ChernData& data) {
  if (data.rank != 2) throw Error(ErrorCode::RankNotTwo, "instability is defined for rank two");
  return data.c1_sq > 4 * data.c2;
}

DestabilizerSearch destabilizer_search(const DivisorClass& H, const Integer& c2, long box,
                                       const std::optional<DivisorClass>& witness) {
  if (box < 0) throw Error(ErrorCode::InvalidArgument, "box must be nonnegative");
  if (min_degree(H) < 2)
    throw Error(ErrorCode::NotAmple, "H needs degree >= 2 on every invariant curve");
  const DivisorClass W = witness ? *witness : H;
  require_same_fan(H, W);
  if (!is_ample(W)) throw Error(ErrorCode::NotAmple, "witness is not ample");

  ChernData data;
  data.rank = 2;
  data.c1_sq = intersect(H, H);
  data.c2 = c2;
  if (!is_unstable(data))
    throw Error(ErrorCode::NotUnstable, "H^2 = " + data.c1_sq.get_str() + " <= 4 c2 = " +
                                             Integer(4 * c2).get_str());

  const Fan& fan = H.fan();
  const DivisorClass Hn = normalize(H);
  SearchFrame frame;
  frame.e = fan.euler();
  frame.box = box;
  const DegreeVector tH = degree_vector(H);
  for (std::size_t i = 0; i < frame.e; ++i) {
    frame.d.push_back(to_long(fan.self_intersection(i), "self-intersection"));
    frame.tH.push_back(to_long(tH[i], "degree of H"));
  }

  // Partition by the leading free coefficient b[2].
  const long first_upper = std::min(box, frame.tH[1] - 1);
  const std::size_t parts = first_upper >= -box ? static_cast<std::size_t>(first_upper + box + 1) : 0;
  const DivisorClass K = canonical_class(fan);
  const bool minus_k_nef = is_nef(-K);

  auto results = parallel_map(parts, [&](std::size_t part) {
    std::vector<long> b(frame.e, 0);
    std::vector<std::vector<long>> raw;
    b[2] = -box + static_cast<long>(part);
    collect(frame, b, 3, raw);
    std::vector<DestabilizerCandidate> kept;
    for (const auto& coeffs : raw) {
      DivisorClass A(fan, to_integers(coeffs));
      DivisorClass Q = Hn - A;
      const Integer aq = intersect(A, Q);
      if (aq > c2) continue;
      DivisorClass T = Integer(2) * A - Hn;
      if (intersect(T, T) <= 0) continue;
      if (intersect(T, W) <= 0 || intersect(T, Hn) <= 0 || intersect(T, Q) <= 0) continue;
      if (minus_k_nef && intersect(T, -K) <= 0) continue;
      if (!is_positive_on_ample_cone(T)) continue;
      kept.push_back({std::move(A), std::move(Q), std::move(T), c2 - aq});
    }
    return kept;
  });

  DestabilizerSearch search;
  search.box = box;
  for (auto& part : results)
    for (auto& c : part) search.candidates.push_back(std::move(c));
  std::sort(search.candidates.begin(), search.candidates.end(),
            [](const DestabilizerCandidate& a, const DestabilizerCandidate& b) {
              return std::lexicographical_compare(a.A.coefficients().begin(), a.A.coefficients().end(),
                                                  b.A.coefficients().begin(), b.A.coefficients().end());
            });
  search.verdict = search.candidates.empty() ? "no destabilizer within box " + std::to_string(box)
                                             : "candidates found";
  search.positivity =
      "T.L > 0 for every ample L, checked exactly (T is Q-effective and not numerically trivial); "
      "also against the witness, H, Q" + std::string(minus_k_nef ? " and -K" : "");
  return search;
}

bool eq1_check(const DivisorClass& A, const DivisorClass& H) {
  require_same_fan(A, H);
  const DivisorClass Q = H - A;
  const Integer qq = intersect(Q, Q);
  if (qq <= 0) throw Error(ErrorCode::NonPositiveSquare, "(H-A)^2 = " + qq.get_str());
  const Integer s = intersect(A, Q) - qq;
  return s >= 0 && s * s >= qq;
}

bool hodge_inequality_holds(const DivisorClass& P, const DivisorClass& T) {
  require_same_fan(P, T);
  const Integer pt = intersect(P, T);
  return intersect(P, P) * intersect(T, T) <= pt * pt;
}

std::string to_string(Case2Constraint constraint) {
  switch (constraint) {
    case Case2Constraint::Bounds: return "x>=3, y>=x*eps+2";
    case Case2Constraint::Quotient: return "x-alpha>0, y-beta>0, y>=beta+(x-alpha)*eps+1";
    case Case2Constraint::AlphaHalf: return "2*alpha>x";
    case Case2Constraint::BetaHalf: return "2*beta>y";
    case Case2Constraint::TwistSquare: return "(2*alpha-x)*(4*beta-2*y-(2*alpha-x)*eps)>0";
    case Case2Constraint::SecondChern: return "-alpha*(x-alpha)*eps+beta*(x-alpha)+alpha*(y-beta)<=4";
  }
  return "?";
}

Case2Result case2_infeasibility_oracle(long x_max, long y_max, long eps_max,
                                       const std::set<Case2Constraint>& dropped,
                                       std::size_t max_witnesses) {
  if (x_max < 1 || y_max < 1 || eps_max < 1)
    throw Error(ErrorCode::InvalidArgument, "caps must be positive");
  auto keep = [&](Case2Constraint c) { return !dropped.count(c); };
  const bool bounds = keep(Case2Constraint::Bounds), quotient = keep(Case2Constraint::Quotient),
             alpha_half = keep(Case2Constraint::AlphaHalf), beta_half = keep(Case2Constraint::BetaHalf),
             twist = keep(Case2Constraint::TwistSquare), chern = keep(Case2Constraint::SecondChern);

  Case2Result result;
  for (long eps = 1; eps <= eps_max; ++eps) {
    for (long x = bounds ? 3 : 1; x <= x_max; ++x) {
      for (long y = bounds ? x * eps + 2 : 1; y <= y_max; ++y) {
        for (long alpha = -x_max; alpha <= x_max; ++alpha) {
          if (quotient && x - alpha <= 0) continue;
          if (alpha_half && 2 * alpha <= x) continue;
          for (long beta = -y_max; beta <= y_max; ++beta) {
            ++result.examined;
            if (quotient && (y - beta <= 0 || y < beta + (x - alpha) * eps + 1)) continue;
            if (beta_half && 2 * beta <= y) continue;
            if (twist && (2 * alpha - x) * (4 * beta - 2 * y - (2 * alpha - x) * eps) <= 0) continue;
            if (chern && -alpha * (x - alpha) * eps + beta * (x - alpha) + alpha * (y - beta) > 4) continue;
            result.witnesses.push_back({eps, x, y, alpha, beta});
            if (result.witnesses.size() >= max_witnesses) goto done;
          }
        }
      }
    }
  }
done:
  BoundReport& r = result.report;
  r.instance = "x<=" + std::to_string(x_max) + ", y<=" + std::to_string(y_max) +
               ", eps<=" + std::to_string(eps_max);
  r.bound = "case2_infeasibility";
  r.lhs = Rational(static_cast<long>(result.witnesses.size()));
  r.rhs = 0;
  r.passed = result.witnesses.empty();
  if (dropped.empty()) {
    r.note = "full system";
  } else {
    r.note = "dropped:";
    for (auto c : dropped) r.note += " [" + to_string(c) + "]";
  }
  if (!result.witnesses.empty()) {
    const auto& w = result.witnesses.front();
    r.note += "; witness (eps,x,y,alpha,beta) = (" + std::to_string(w.eps) + "," + std::to_string(w.x) +
              "," + std::to_string(w.y) + "," + std::to_string(w.alpha) + "," + std::to_string(w.beta) + ")";
  }
  return result;
}

MinAmpleSquare min_ample_square(const Fan& fan, long t_max) {
  if (t_max < 1) throw Error(ErrorCode::InvalidArgument, "t_max must be >= 1");
  std::optional<MinAmpleSquare> best;
  for (const auto& t : enumerate_ample_degrees(fan, t_max)) {
    const DivisorClass L = from_degrees(fan, t);
    Integer sq = 0;
    for (std::size_t i = 0; i < t.size(); ++i) sq += L.coefficient(i) * t[i];
    if (!best || sq < best->value) best = MinAmpleSquare{sq, t, t_max};
  }
  if (!best)
    throw Error(ErrorCode::NoAmpleFound, "no ample degree vector with entries <= " + std::to_string(t_max));
  return *best;
}

std::string small_surface_name(const Fan& fan) {
  const SelfIntersectionProfile p = canonical_profile(fan);
  if (p == canonical_profile(fans::projective_plane())) return "P2";
  if (fan.euler() == 4) {
    for (long a = 0; a <= 2; ++a)
      if (p == canonical_profile(fans::hirzebruch(a))) return "F" + std::to_string(a);
  }
  if (p == canonical_profile(fans::hexagon())) return "DelPezzo6";
  return {};
}

BoundReport bog_restriction_check(const DivisorClass& H, const Integer& c2, long box) {
  const Fan& fan = H.fan();
  const Integer e = static_cast<long>(fan.euler());
  BoundReport report;
  report.instance = "profile " + to_string(fan.profile()) + ", H degrees (";
  const DegreeVector t = degree_vector(H);
  for (std::size_t i = 0; i < t.size(); ++i) report.instance += (i ? "," : "") + t[i].get_str();
  report.instance += "), c2 = " + c2.get_str();
  report.bound = "bog_restriction";
  report.lhs = Rational(intersect(H, H));
  report.rhs = Rational(4 * c2);
  report.passed = true;

  const std::string name = small_surface_name(fan);
  if (!is_ample(H)) throw Error(ErrorCode::NotAmple, "H is not ample");
  ChernData data;
  data.rank = 2;
  data.c1_sq = intersect(H, H);
  data.c2 = c2;
  if (!is_unstable(data)) {
    report.applicable = false;
    report.note = "not Bogomolov unstable (c1^2 <= 4 c2)";
    if (name == "DelPezzo6" && linear_equivalent(H, Integer(-2) * canonical_class(fan)))
      report.note += "; det = -2K on the degree-six del Pezzo: covered by the catalogue row with c1^2 = 24";
    return report;
  }
  if (min_degree(H) < 2) {
    report.applicable = false;
    report.note = "H has a degree below 2, so it is not the determinant of an ample rank-two bundle";
    return report;
  }
  if (c2 > e && (c2 - e) * (c2 - e) > e) {
    report.applicable = false;
    report.note = "c2 > e + sqrt(e)";
    return report;
  }
  if (name == "P2" || name == "F0" || name == "F1" || name == "F2") {
    report.note = "S is " + name + ": conclusion holds";
    return report;
  }
  const DestabilizerSearch search = destabilizer_search(H, c2, box);
  std::size_t survivors = 0;
  std::string list;
  for (const auto& c : search.candidates) {
    if (!eq1_check(c.A, H)) continue;
    ++survivors;
    list += " Q degrees (";
    const DegreeVector tq = degree_vector(c.Q);
    for (std::size_t i = 0; i < tq.size(); ++i) list += (i ? "," : "") + tq[i].get_str();
    list += "), Q^2 = " + intersect(c.Q, c.Q).get_str() + ";";
  }
  report.passed = survivors == 0;
  report.note = search.verdict + "; " + std::to_string(search.candidates.size()) + " candidates, " +
                std::to_string(survivors) + " satisfy EQ1";
  if (survivors) {
    report.note += ":" + list;
    if (name == "DelPezzo6") report.note += " (del Pezzo e = 6 case, Q^2 <= e allows Q = -K)";
  }
  return report;
}

}  // namespace torica
