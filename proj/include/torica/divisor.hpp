#pragma once

#include <cstddef>
#include <vector>

#include "torica/fan.hpp"
#include "torica/numeric.hpp"

namespace torica {

/// Degrees t_i = L . D_i of a class against the invariant curves.
struct DegreeVector {
  IntegerVector values;

  std::size_t size() const { return values.size(); }
  const Integer& operator[](std::size_t i) const { return values[i]; }
  friend bool operator==(const DegreeVector&, const DegreeVector&) = default;
};

/// L = sum_i b_i D_i on a fixed fan. Equality of objects is equality of
/// coefficient vectors; use linear_equivalent() for equality of classes.
class DivisorClass {
 public:
  /// Throws IndexMismatch when the coefficient count differs from the ray count.
  DivisorClass(Fan fan, IntegerVector coefficients);

  static DivisorClass zero(const Fan& fan);
  /// The invariant divisor D_i.
  static DivisorClass invariant(const Fan& fan, std::size_t i);

  const Fan& fan() const { return fan_; }
  const IntegerVector& coefficients() const { return coefficients_; }
  const Integer& coefficient(std::size_t i) const { return coefficients_[i]; }

  DivisorClass& operator+=(const DivisorClass& other);
  DivisorClass& operator-=(const DivisorClass& other);
  friend DivisorClass operator+(DivisorClass a, const DivisorClass& b) { return a += b; }
  friend DivisorClass operator-(DivisorClass a, const DivisorClass& b) { return a -= b; }
  friend DivisorClass operator*(const Integer& k, DivisorClass a);
  friend DivisorClass operator-(DivisorClass a) { return Integer(-1) * std::move(a); }

  friend bool operator==(const DivisorClass& a, const DivisorClass& b) {
    return a.fan_ == b.fan_ && a.coefficients_ == b.coefficients_;
  }

 private:
  Fan fan_;
  IntegerVector coefficients_;
};

/// Throws FanMismatch unless both classes live on the same fan.
void require_same_fan(const DivisorClass& a, const DivisorClass& b);

/// K_S = -sum D_i.
DivisorClass canonical_class(const Fan& fan);

/// t_i = b_{i-1} + b_{i+1} + d_i b_i.
DegreeVector degree_vector(const DivisorClass& L);

/// L . M = sum_i b_i(L) t_i(M).
Integer intersect(const DivisorClass& L, const DivisorClass& M);

Integer min_degree(const DivisorClass& L);
bool is_nef(const DivisorClass& L);
bool is_ample(const DivisorClass& L);
bool is_trivial(const DivisorClass& L);

/// g = 1 + (L^2 + K.L)/2.
Integer sectional_genus(const DivisorClass& L);

/// True iff sum_i t_i v_i = 0, the condition for t to be a degree vector.
bool satisfies_closure(const Fan& fan, const DegreeVector& t);

/// The class with the given degrees, normalized. Throws InconsistentDegrees.
DivisorClass from_degrees(const Fan& fan, const DegreeVector& t);

/// Principal divisor div(chi^u) = sum_i <u, v_i> D_i.
DivisorClass principal(const Fan& fan, const Integer& ux, const Integer& uy);

/// Representative with coefficients on rays 0 and 1 equal to zero.
DivisorClass normalize(const DivisorClass& L);
bool linear_equivalent(const DivisorClass& L, const DivisorClass& M);

std::size_t picard_rank(const Fan& fan);

/// True iff some rational multiple of L is linearly equivalent to an
/// effective combination of the D_i, i.e. the polygon
/// { u : <u, v_i> >= -b_i } is nonempty.
bool is_q_effective(const DivisorClass& L);

/// True iff L . M > 0 for every ample M. On a toric surface the Mori cone is
/// spanned by the D_i, so this is "Q-effective and not numerically trivial".
bool is_positive_on_ample_cone(const DivisorClass& L);

}  // namespace torica
