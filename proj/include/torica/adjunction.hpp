#pragma once

#include <cstddef>
#include <string>
#include <string_view>
#include <variant>
#include <vector>

#include "torica/divisor.hpp"
#include "torica/fan.hpp"

namespace torica {

/// An equivariant contraction S -> S1 of pairwise non-adjacent (-1)-curves,
/// stored as successive single-ray blowdowns (highest index first, so the
/// remaining indices stay valid).
struct Contraction {
  Fan source;
  Fan target;
  std::vector<std::size_t> contracted;  // ray indices on `source`, ascending
  std::vector<BlowdownRecord> steps;

  bool empty() const { return steps.empty(); }
};

/// Contracts the given rays simultaneously. Throws NotMinusOneCurve or
/// AdjacentContractions.
Contraction contract(const Fan& fan, std::vector<std::size_t> rays);
Contraction identity_contraction(const Fan& fan);

/// Drops the coefficient of the removed ray.
DivisorClass pushforward_under_blowdown(const DivisorClass& L, const BlowdownRecord& record);
/// Copies surviving coefficients; the exceptional coefficient becomes the
/// sum of its two neighbours.
DivisorClass pullback_under_blowdown(const DivisorClass& L, const BlowdownRecord& record);

DivisorClass pushforward(const DivisorClass& L, const Contraction& contraction);
DivisorClass pullback(const DivisorClass& L, const Contraction& contraction);

/// K_S + L.
DivisorClass adjoint_class(const DivisorClass& L);

namespace outcome {

struct Reduced {
  Contraction contraction;
  DivisorClass pushed;  // L' with L = pi^* L' - sum E
  DivisorClass next;    // L_1 = K_{S_1} + L'
};

struct Fibration {
  DivisorClass fiber;    // primitive class proportional to K + L
  Integer fiber_degree;  // L . F
};

struct AntiCanonical {};

struct TerminalLowEuler {
  std::string reason;
};

struct AdjointAmple {};

}  // namespace outcome

using ReductionOutcome = std::variant<outcome::Reduced, outcome::Fibration, outcome::AntiCanonical,
                                      outcome::TerminalLowEuler, outcome::AdjointAmple>;

std::string_view outcome_name(const ReductionOutcome& outcome);

/// One step of adjunction for an ample L. Throws NotAmple, and
/// AdjacentContractions if two adjacent (-1)-curves both have adjoint
/// degree zero.
ReductionOutcome classify_adjoint(const DivisorClass& L);

struct AdjunctionStep {
  Contraction contraction;    // from the previous surface to this one
  DivisorClass polarization;  // L_i on contraction.target
  const Fan& surface() const { return contraction.target; }
};

struct AdjunctionSequence {
  DivisorClass initial;              // (S, L)
  std::vector<AdjunctionStep> steps;  // (S_1, L_1), ..., (S_b, L_b)
  ReductionOutcome terminal;         // classification of (S_b, L_b)

  std::size_t length() const { return steps.size(); }
  const DivisorClass& last() const { return steps.empty() ? initial : steps.back().polarization; }
};

/// Repeats adjunction while e >= 7. A step with ample adjoint contracts
/// nothing (B is empty) and continues with L_1 = K + L on the same surface.
/// Stops at the first e <= 6. Throws NotAmple if some L_i is not ample, and
/// propagates classify_adjoint errors.
AdjunctionSequence iterated_sequence(const DivisorClass& L);

struct TelescopeReport {
  std::size_t length = 0;
  Integer direct;      // (K_{S_b}+L_b).(2K_{S_b}+L_b) on S_b
  Integer telescoped;  // 2K_b^2 + 4K_{b-1}^2 + ... + (2b+2)K_0^2 + (2b+3)K_0.L + L^2
  bool identity_holds = false;
  bool genus_applicable = false;  // K_{S_b}+L_b is nef and big (terminal Reduced or AdjointAmple)
  bool genus_nonnegative = false;  // direct >= -2, vacuously true when not applicable
  std::string diff;

  bool passed() const { return identity_holds && genus_nonnegative; }
};

/// Compares the sectional-genus expression computed on the last surface
/// with the telescoped sum computed upstairs from pulled-back canonical classes.
/// The bound g >= 0 is only demanded when K_{S_b}+L_b is the pullback of a
/// very ample L_{b+1}.
TelescopeReport telescoped_genus_check(const AdjunctionSequence& sequence);

/// sum_{j=0}^{b} (j+1) 2^j
Integer weighted_power_sum(unsigned b);

/// -K.H >= r e(S).
bool kl_check(const DivisorClass& H, const Integer& r);

}  // namespace torica
