#include "torica/divisor.hpp"

#include <algorithm>
#include <stdexcept>

#include "torica/error.hpp"

namespace torica {

DivisorClass::DivisorClass(Fan fan, IntegerVector coefficients)
    : fan_(std::move(fan)), coefficients_(std::move(coefficients)) {
  if (coefficients_.size() != fan_.euler())
    throw Error(ErrorCode::IndexMismatch,
                std::to_string(coefficients_.size()) + " coefficients for " +
                    std::to_string(fan_.euler()) + " rays");
}

DivisorClass DivisorClass::zero(const Fan& fan) {
  return DivisorClass(fan, IntegerVector(fan.euler(), Integer(0)));
}

DivisorClass DivisorClass::invariant(const Fan& fan, std::size_t i) {
  if (i >= fan.euler()) throw Error(ErrorCode::IndexOutOfRange, "ray index", i);
  IntegerVector b(fan.euler(), Integer(0));
  b[i] = 1;
  return DivisorClass(fan, std::move(b));
}

void require_same_fan(const DivisorClass& a, const DivisorClass& b) {
  if (!(a.fan() == b.fan())) throw Error(ErrorCode::FanMismatch, "classes live on different fans");
}

DivisorClass& DivisorClass::operator+=(const DivisorClass& other) {
  require_same_fan(*this, other);
  for (std::size_t i = 0; i < coefficients_.size(); ++i) coefficients_[i] += other.coefficients_[i];
  return *this;
}

DivisorClass& DivisorClass::operator-=(const DivisorClass& other) {
  require_same_fan(*this, other);
  for (std::size_t i = 0; i < coefficients_.size(); ++i) coefficients_[i] -= other.coefficients_[i];
  return *this;
}

DivisorClass operator*(const Integer& k, DivisorClass a) {
  for (auto& c : a.coefficients_) c *= k;
  return a;
}

DivisorClass canonical_class(const Fan& fan) {
  return DivisorClass(fan, IntegerVector(fan.euler(), Integer(-1)));
}

DegreeVector degree_vector(const DivisorClass& L) {
  const Fan& fan = L.fan();
  const auto& b = L.coefficients();
  const std::size_t e = fan.euler();
  DegreeVector t;
  t.values.reserve(e);
  for (std::size_t i = 0; i < e; ++i)
    t.values.push_back(b[fan.prev(i)] + b[fan.next(i)] + fan.self_intersection(i) * b[i]);
  return t;
}

Integer intersect(const DivisorClass& L, const DivisorClass& M) {
  require_same_fan(L, M);
  const DegreeVector t = degree_vector(M);
  Integer sum = 0;
  for (std::size_t i = 0; i < t.size(); ++i) sum += L.coefficient(i) * t[i];
  return sum;
}

Integer min_degree(const DivisorClass& L) {
  const DegreeVector t = degree_vector(L);
  return *std::min_element(t.values.begin(), t.values.end());
}

bool is_nef(const DivisorClass& L) { return min_degree(L) >= 0; }
bool is_ample(const DivisorClass& L) { return min_degree(L) >= 1; }

bool is_trivial(const DivisorClass& L) {
  const DegreeVector t = degree_vector(L);
  return std::all_of(t.values.begin(), t.values.end(), [](const Integer& v) { return v == 0; });
}

Integer sectional_genus(const DivisorClass& L) {
  const Integer twice = intersect(L, L) + intersect(canonical_class(L.fan()), L);
  if (!mpz_even_p(twice.get_mpz_t()))
    throw std::logic_error("L^2 + K.L is odd; intersection data is corrupt");
  return 1 + twice / 2;
}

bool satisfies_closure(const Fan& fan, const DegreeVector& t) {
  if (t.size() != fan.euler()) return false;
  Integer sx = 0, sy = 0;
  for (std::size_t i = 0; i < t.size(); ++i) {
    sx += t[i] * fan.ray(i).x;
    sy += t[i] * fan.ray(i).y;
  }
  return sx == 0 && sy == 0;
}

DivisorClass from_degrees(const Fan& fan, const DegreeVector& t) {
  const std::size_t e = fan.euler();
  if (t.size() != e)
    throw Error(ErrorCode::IndexMismatch,
                std::to_string(t.size()) + " degrees for " + std::to_string(e) + " rays");
  if (!satisfies_closure(fan, t))
    throw Error(ErrorCode::InconsistentDegrees, "sum t_i v_i != 0");
  IntegerVector b(e, Integer(0));
  // b_0 = b_1 = 0; the relation at ray i determines b_{i+1}.
  for (std::size_t i = 1; i + 1 < e; ++i)
    b[i + 1] = t[i] - b[i - 1] - fan.self_intersection(i) * b[i];
  DivisorClass L(fan, std::move(b));
  if (!(degree_vector(L) == t))
    throw std::logic_error("from_degrees: closing relations failed despite closure");
  return L;
}

DivisorClass principal(const Fan& fan, const Integer& ux, const Integer& uy) {
  IntegerVector b;
  b.reserve(fan.euler());
  for (const auto& v : fan.rays()) b.push_back(ux * v.x + uy * v.y);
  return DivisorClass(fan, std::move(b));
}

DivisorClass normalize(const DivisorClass& L) {
  const Fan& fan = L.fan();
  const auto& v0 = fan.ray(0);
  const auto& v1 = fan.ray(1);
  // Solve <u, v0> = -b0, <u, v1> = -b1; the matrix with rows v0, v1 has det 1.
  const Integer r0 = -L.coefficient(0);
  const Integer r1 = -L.coefficient(1);
  const Integer ux = v1.y * r0 - v0.y * r1;
  const Integer uy = -v1.x * r0 + v0.x * r1;
  return L + principal(fan, ux, uy);
}

bool linear_equivalent(const DivisorClass& L, const DivisorClass& M) {
  require_same_fan(L, M);
  return normalize(L).coefficients() == normalize(M).coefficients();
}

std::size_t picard_rank(const Fan& fan) { return fan.euler() - 2; }

bool is_q_effective(const DivisorClass& L) {
  // The polygon P = { u : <u, v_i> + b_i >= 0 } is bounded because the rays
  // span the plane positively, so it is nonempty iff it has a vertex. Every
  // vertex lies on two non-parallel boundary lines.
  const Fan& fan = L.fan();
  const std::size_t e = fan.euler();
  const auto& b = L.coefficients();
  for (std::size_t i = 0; i < e; ++i) {
    for (std::size_t j = i + 1; j < e; ++j) {
      const auto& vi = fan.ray(i);
      const auto& vj = fan.ray(j);
      const Integer delta = det(vi, vj);
      if (delta == 0) continue;
      // u = (nx, ny) / delta solves <u,vi> = -b_i, <u,vj> = -b_j.
      const Integer nx = -b[i] * vj.y + b[j] * vi.y;
      const Integer ny = -vi.x * b[j] + vj.x * b[i];
      bool inside = true;
      for (std::size_t k = 0; k < e && inside; ++k) {
        const auto& vk = fan.ray(k);
        Integer slack = vk.x * nx + vk.y * ny + b[k] * delta;
        if (delta < 0) slack = -slack;
        inside = slack >= 0;
      }
      if (inside) return true;
    }
  }
  return false;
}

bool is_positive_on_ample_cone(const DivisorClass& L) {
  return !is_trivial(L) && is_q_effective(L);
}

}  // namespace torica
