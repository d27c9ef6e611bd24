#pragma once

#include <cstddef>
#include <memory>
#include <span>
#include <string>
#include <vector>

#include "torica/numeric.hpp"

namespace torica {

struct LatticeVector {
  Integer x;
  Integer y;

  LatticeVector() = default;
  LatticeVector(Integer x_, Integer y_) : x(std::move(x_)), y(std::move(y_)) {}

  bool is_primitive() const;

  friend bool operator==(const LatticeVector& a, const LatticeVector& b) {
    return a.x == b.x && a.y == b.y;
  }
  friend LatticeVector operator+(const LatticeVector& a, const LatticeVector& b) {
    return {a.x + b.x, a.y + b.y};
  }
  friend LatticeVector operator-(const LatticeVector& a, const LatticeVector& b) {
    return {a.x - b.x, a.y - b.y};
  }
  friend LatticeVector operator*(const Integer& k, const LatticeVector& v) {
    return {k * v.x, k * v.y};
  }
};

/// det(a, b) = a.x*b.y - a.y*b.x
Integer det(const LatticeVector& a, const LatticeVector& b);

/// Cyclic sequence of self-intersection numbers d_i = D_i^2.
struct SelfIntersectionProfile {
  IntegerVector values;

  std::size_t size() const { return values.size(); }
  const Integer& operator[](std::size_t i) const { return values[i]; }

  friend bool operator==(const SelfIntersectionProfile&, const SelfIntersectionProfile&) = default;
  friend bool operator<(const SelfIntersectionProfile& a, const SelfIntersectionProfile& b) {
    return std::lexicographical_compare(a.values.begin(), a.values.end(), b.values.begin(),
                                        b.values.end());
  }
};

std::string to_string(const SelfIntersectionProfile& profile);

/// A smooth complete fan in Z^2: primitive rays in strict counterclockwise
/// order, consecutive pairs of determinant one, winding once around the
/// origin. Immutable; copies share storage.
class Fan {
 public:
  const std::vector<LatticeVector>& rays() const { return data_->rays; }
  const LatticeVector& ray(std::size_t i) const { return data_->rays[i]; }
  /// Number of rays, equal to the Euler characteristic of the surface.
  std::size_t euler() const { return data_->rays.size(); }
  const SelfIntersectionProfile& profile() const { return data_->profile; }
  const Integer& self_intersection(std::size_t i) const { return data_->profile.values[i]; }

  std::size_t next(std::size_t i) const { return i + 1 == euler() ? 0 : i + 1; }
  std::size_t prev(std::size_t i) const { return i == 0 ? euler() - 1 : i - 1; }

  friend bool operator==(const Fan& a, const Fan& b) {
    return a.data_ == b.data_ || a.data_->rays == b.data_->rays;
  }

 private:
  struct Data {
    std::vector<LatticeVector> rays;
    SelfIntersectionProfile profile;
  };
  explicit Fan(std::shared_ptr<const Data> data) : data_(std::move(data)) {}
  friend Fan validate_fan(std::vector<LatticeVector> rays);

  std::shared_ptr<const Data> data_;
};

/// Checks every fan invariant and returns the fan. Never reorders the input.
/// Throws TooFewRays, NonPrimitiveRay(i), NotUnimodular(i) or NotComplete.
Fan validate_fan(std::vector<LatticeVector> rays);

SelfIntersectionProfile self_intersections(const Fan& fan);

/// Rebuilds a fan from its profile by the transfer recursion
/// v_{i+1} = -d_i v_i - v_{i-1}, starting at v_0=(1,0), v_1=(0,1).
Fan realize_profile(std::span<const Integer> profile);
Fan realize_profile(const SelfIntersectionProfile& profile);

/// Inserts v_i + v_{i+1} after position `corner` (appended when corner is
/// the last index). The new ray sits at index corner + 1.
Fan blowup(const Fan& fan, std::size_t corner);

struct BlowdownRecord {
  std::size_t removed_ray_index;
  Fan parent;
  Fan child;
};

/// Removes ray `index`; requires v_{i-1} + v_{i+1} = v_i. Throws NotMinusOneCurve.
BlowdownRecord blowdown(const Fan& fan, std::size_t index);

/// Rotation/reflection of a cyclic index set. Position j of the transformed
/// sequence reads position `source(j)` of the original.
struct DihedralMap {
  std::size_t size = 0;
  std::size_t shift = 0;
  bool reflected = false;

  std::size_t source(std::size_t j) const {
    return reflected ? (shift + size - j % size) % size : (j + shift) % size;
  }
  template <typename T>
  std::vector<T> apply(const std::vector<T>& values) const {
    std::vector<T> out;
    out.reserve(size);
    for (std::size_t j = 0; j < size; ++j) out.push_back(values[source(j)]);
    return out;
  }
};

/// All dihedral maps sending `profile` to its lexicographically least form.
std::vector<DihedralMap> canonical_maps(const SelfIntersectionProfile& profile);

SelfIntersectionProfile canonical_form(const SelfIntersectionProfile& profile);
SelfIntersectionProfile canonical_profile(const Fan& fan);

/// Applies the integer matrix [[a, b], [c, d]] (det = +-1) to every ray.
/// An orientation-reversing matrix also reverses the ray order so the
/// result stays counterclockwise.
Fan transform(const Fan& fan, const Integer& a, const Integer& b, const Integer& c,
              const Integer& d);

/// Cyclic re-indexing: ray j of the result is ray (j + shift) of the input.
Fan rotate(const Fan& fan, std::size_t shift);

namespace fans {

Fan projective_plane();
/// Hirzebruch surface F_a with rays (1,0),(0,1),(-1,a),(0,-1); profile (0,-a,0,a).
Fan hirzebruch(long a);
/// The toric del Pezzo surface of degree six (P^2 blown up at three points).
Fan hexagon();

}  // namespace fans

}  // namespace torica
