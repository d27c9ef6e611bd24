#include "torica/adjunction.hpp"

#include <algorithm>
#include <numeric>

#include "torica/error.hpp"

namespace torica {

Contraction identity_contraction(const Fan& fan) { return Contraction{fan, fan, {}, {}}; }

Contraction contract(const Fan& fan, std::vector<std::size_t> rays) {
  const std::size_t e = fan.euler();
  std::sort(rays.begin(), rays.end());
  rays.erase(std::unique(rays.begin(), rays.end()), rays.end());
  for (std::size_t i : rays) {
    if (i >= e) throw Error(ErrorCode::IndexOutOfRange, "ray index", i);
    if (fan.self_intersection(i) != -1)
      throw Error(ErrorCode::NotMinusOneCurve, "D^2 = " + fan.self_intersection(i).get_str(), i);
  }
  for (std::size_t k = 0; k < rays.size(); ++k) {
    const std::size_t i = rays[k];
    const std::size_t j = rays[(k + 1) % rays.size()];
    if (rays.size() > 1 && fan.next(i) == j)
      throw Error(ErrorCode::AdjacentContractions, "rays " + std::to_string(i) + " and " +
                                                       std::to_string(j) + " are adjacent");
  }
  if (e - rays.size() < 3)
    throw Error(ErrorCode::NotRealizable, "contraction would leave fewer than 3 rays");

  Contraction out{fan, fan, rays, {}};
  for (auto it = rays.rbegin(); it != rays.rend(); ++it) {
    out.steps.push_back(blowdown(out.target, *it));
    out.target = out.steps.back().child;
  }
  return out;
}

DivisorClass pushforward_under_blowdown(const DivisorClass& L, const BlowdownRecord& record) {
  if (!(L.fan() == record.parent))
    throw Error(ErrorCode::IndexMismatch, "class does not live on the blowdown parent");
  IntegerVector b = L.coefficients();
  b.erase(b.begin() + static_cast<std::ptrdiff_t>(record.removed_ray_index));
  return DivisorClass(record.child, std::move(b));
}

DivisorClass pullback_under_blowdown(const DivisorClass& L, const BlowdownRecord& record) {
  if (!(L.fan() == record.child))
    throw Error(ErrorCode::IndexMismatch, "class does not live on the blowdown child");
  const std::size_t i = record.removed_ray_index;
  const std::size_t child_e = record.child.euler();
  IntegerVector b = L.coefficients();
  // Parent neighbours of ray i are child rays i-1 and i (mod child_e).
  Integer exceptional = b[(i + child_e - 1) % child_e] + b[i % child_e];
  b.insert(b.begin() + static_cast<std::ptrdiff_t>(i), std::move(exceptional));
  return DivisorClass(record.parent, std::move(b));
}

DivisorClass pushforward(const DivisorClass& L, const Contraction& contraction) {
  DivisorClass out = L;
  for (const auto& step : contraction.steps) out = pushforward_under_blowdown(out, step);
  return out;
}

DivisorClass pullback(const DivisorClass& L, const Contraction& contraction) {
  DivisorClass out = L;
  for (auto it = contraction.steps.rbegin(); it != contraction.steps.rend(); ++it)
    out = pullback_under_blowdown(out, *it);
  return out;
}

DivisorClass adjoint_class(const DivisorClass& L) { return canonical_class(L.fan()) + L; }

std::string_view outcome_name(const ReductionOutcome& outcome) {
  struct Visitor {
    std::string_view operator()(const outcome::Reduced&) const { return "Reduced"; }
    std::string_view operator()(const outcome::Fibration&) const { return "Fibration"; }
    std::string_view operator()(const outcome::AntiCanonical&) const { return "AntiCanonical"; }
    std::string_view operator()(const outcome::TerminalLowEuler&) const { return "TerminalLowEuler"; }
    std::string_view operator()(const outcome::AdjointAmple&) const { return "AdjointAmple"; }
  };
  return std::visit(Visitor{}, outcome);
}

namespace {

outcome::TerminalLowEuler terminal(const Fan& fan, std::string reason) {
  if (fan.euler() <= 4) reason += "; e <= 4, see the P^2 / Hirzebruch catalogue";
  return {std::move(reason)};
}

}  // namespace

ReductionOutcome classify_adjoint(const DivisorClass& L) {
  if (!is_ample(L)) throw Error(ErrorCode::NotAmple, "classify_adjoint needs an ample class");
  const Fan& fan = L.fan();
  const std::size_t e = fan.euler();
  const DivisorClass adjoint = adjoint_class(L);
  const DegreeVector a = degree_vector(adjoint);

  bool all_positive = true, all_zero = true, nef = true;
  for (const auto& v : a.values) {
    all_positive = all_positive && v >= 1;
    all_zero = all_zero && v == 0;
    nef = nef && v >= 0;
  }
  if (all_positive) return outcome::AdjointAmple{};
  if (all_zero) return outcome::AntiCanonical{};
  if (!nef) return terminal(fan, "adjoint class is not nef");

  if (intersect(adjoint, adjoint) == 0) {
    Integer g = 0;
    for (const auto& v : a.values) g = gcd(g, v);
    DegreeVector fiber_degrees = a;
    for (auto& v : fiber_degrees.values) v /= g;
    DivisorClass fiber = from_degrees(fan, fiber_degrees);
    Integer degree = intersect(L, fiber);
    return outcome::Fibration{std::move(fiber), std::move(degree)};
  }

  std::vector<std::size_t> zero_rays;
  for (std::size_t i = 0; i < e; ++i) {
    if (a[i] != 0) continue;
    if (fan.self_intersection(i) != -1)
      return terminal(fan, "adjoint vanishes on D_" + std::to_string(i) + " with D^2 = " +
                               fan.self_intersection(i).get_str());
    zero_rays.push_back(i);
  }
  // contract() rejects adjacent pairs with AdjacentContractions.
  Contraction contraction = contract(fan, zero_rays);
  DivisorClass pushed = pushforward(L, contraction);
  DivisorClass next = adjoint_class(pushed);
  return outcome::Reduced{std::move(contraction), std::move(pushed), std::move(next)};
}

AdjunctionSequence iterated_sequence(const DivisorClass& L) {
  if (!is_ample(L)) throw Error(ErrorCode::NotAmple, "iterated_sequence needs an ample class");
  AdjunctionSequence seq{L, {}, outcome::AdjointAmple{}};
  // Every step either drops e or lowers the degree on a ray with d >= -1,
  // so this bound is never reached on valid input.
  constexpr std::size_t kMaxSteps = 100000;
  while (seq.last().fan().euler() >= 7) {
    if (seq.steps.size() >= kMaxSteps)
      throw std::logic_error("iterated_sequence: no termination");
    const DivisorClass current = seq.last();
    ReductionOutcome result = classify_adjoint(current);
    AdjunctionStep step{identity_contraction(current.fan()), adjoint_class(current)};
    if (auto* reduced = std::get_if<outcome::Reduced>(&result)) {
      step = AdjunctionStep{reduced->contraction, reduced->next};
    } else if (!std::holds_alternative<outcome::AdjointAmple>(result)) {
      seq.terminal = std::move(result);
      return seq;
    }
    if (!is_ample(step.polarization))
      throw Error(ErrorCode::NotAmple, "adjunction produced a non-ample L_" +
                                           std::to_string(seq.steps.size() + 1));
    seq.steps.push_back(std::move(step));
  }
  seq.terminal = classify_adjoint(seq.last());
  return seq;
}

TelescopeReport telescoped_genus_check(const AdjunctionSequence& sequence) {
  TelescopeReport report;
  const std::size_t b = sequence.length();
  report.length = b;

  const DivisorClass& Lb = sequence.last();
  const DivisorClass Kb = canonical_class(Lb.fan());
  report.direct = intersect(Kb + Lb, Integer(2) * Kb + Lb);

  // K_i = canonical class of S_i pulled back to S_0.
  const DivisorClass& L0 = sequence.initial;
  std::vector<DivisorClass> pulled;
  pulled.push_back(canonical_class(L0.fan()));
  for (std::size_t i = 1; i <= b; ++i) {
    DivisorClass k = canonical_class(sequence.steps[i - 1].surface());
    for (std::size_t j = i; j-- > 0;) k = pullback(k, sequence.steps[j].contraction);
    pulled.push_back(std::move(k));
  }
  Integer sum = 0;
  for (std::size_t i = 0; i <= b; ++i) {
    // K_i^2 carries weight 2(b - i) + 2.
    sum += Integer(static_cast<unsigned long>(2 * (b - i) + 2)) * intersect(pulled[i], pulled[i]);
  }
  sum += Integer(static_cast<unsigned long>(2 * b + 3)) * intersect(pulled[0], L0);
  sum += intersect(L0, L0);
  report.telescoped = sum;

  report.identity_holds = report.direct == report.telescoped;
  // K_{S_b} + L_b is the pullback of L_{b+1} only when one more step exists.
  report.genus_applicable = std::holds_alternative<outcome::Reduced>(sequence.terminal) ||
                            std::holds_alternative<outcome::AdjointAmple>(sequence.terminal);
  report.genus_nonnegative = !report.genus_applicable || report.direct >= -2;
  if (!report.identity_holds)
    report.diff = "direct " + report.direct.get_str() + " != telescoped " + report.telescoped.get_str();
  else if (!report.genus_nonnegative)
    report.diff = "sectional genus negative: expression " + report.direct.get_str() + " < -2";
  return report;
}

Integer weighted_power_sum(unsigned b) {
  Integer sum = 0;
  for (unsigned j = 0; j <= b; ++j) {
    Integer p = 1;
    mpz_mul_2exp(p.get_mpz_t(), p.get_mpz_t(), j);
    sum += Integer(j + 1) * p;
  }
  return sum;
}

bool kl_check(const DivisorClass& H, const Integer& r) {
  const Integer minus_kh = -intersect(canonical_class(H.fan()), H);
  return minus_kh >= r * Integer(static_cast<unsigned long>(H.fan().euler()));
}

}  // namespace torica
