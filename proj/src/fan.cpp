#include "torica/fan.hpp"

#include <algorithm>
#include <sstream>

#include "torica/error.hpp"

namespace torica {

bool LatticeVector::is_primitive() const {
  if (x == 0 && y == 0) return false;
  return gcd(x, y) == 1;
}

Integer det(const LatticeVector& a, const LatticeVector& b) { return a.x * b.y - a.y * b.x; }

std::string to_string(const SelfIntersectionProfile& profile) {
  std::ostringstream os;
  os << '(';
  for (std::size_t i = 0; i < profile.size(); ++i) {
    if (i) os << ',';
    os << profile[i].get_str();
  }
  os << ')';
  return os.str();
}

namespace {

// Does the counterclockwise arc [a, b) (of angle < pi) contain direction (1,0)?
bool arc_contains_positive_x_axis(const LatticeVector& a, const LatticeVector& b) {
  const LatticeVector axis{1, 0};
  const Integer da = det(a, axis);
  if (da == 0) return a.x > 0;
  return da > 0 && det(axis, b) > 0;
}

}  // namespace

Fan validate_fan(std::vector<LatticeVector> rays) {
  const std::size_t e = rays.size();
  if (e < 3) throw Error(ErrorCode::TooFewRays, "a complete fan needs at least 3 rays");
  for (std::size_t i = 0; i < e; ++i) {
    if (!rays[i].is_primitive())
      throw Error(ErrorCode::NonPrimitiveRay, "(" + rays[i].x.get_str() + "," +
                                                  rays[i].y.get_str() + ")", i);
  }
  for (std::size_t i = 0; i < e; ++i) {
    const Integer d = det(rays[i], rays[(i + 1) % e]);
    if (d != 1)
      throw Error(ErrorCode::NotUnimodular,
                  "det(v_i, v_{i+1}) = " + d.get_str(), i);
  }
  // Each step turns strictly counterclockwise by less than pi, so the
  // winding number is the number of arcs crossing the positive x-axis.
  std::size_t winding = 0;
  for (std::size_t i = 0; i < e; ++i)
    if (arc_contains_positive_x_axis(rays[i], rays[(i + 1) % e])) ++winding;
  if (winding != 1)
    throw Error(ErrorCode::NotComplete, "rays wind " + std::to_string(winding) +
                                            " times around the origin");

  auto data = std::make_shared<Fan::Data>();
  data->profile.values.reserve(e);
  for (std::size_t i = 0; i < e; ++i) {
    // v_{i-1} + v_{i+1} = -d_i v_i, and det(v_i, v_{i+1}) = 1 gives
    // -d_i = det(v_{i-1} + v_{i+1}, v_{i+1}) = det(v_{i-1}, v_{i+1}).
    data->profile.values.push_back(-det(rays[(i + e - 1) % e], rays[(i + 1) % e]));
  }
  data->rays = std::move(rays);
  return Fan(std::move(data));
}

SelfIntersectionProfile self_intersections(const Fan& fan) { return fan.profile(); }

Fan realize_profile(std::span<const Integer> d) {
  const std::size_t e = d.size();
  if (e < 3) throw Error(ErrorCode::TooFewRays, "profile needs at least 3 entries");
  std::vector<LatticeVector> rays{{1, 0}, {0, 1}};
  rays.reserve(e + 1);
  for (std::size_t i = 1; i + 1 <= e; ++i)
    rays.push_back(-d[i] * rays[i] - rays[i - 1]);
  // The recursion closes iff v_e returns to v_0 and the relation at ray 0
  // reproduces v_1.
  if (!(rays[e] == rays[0]) || !(-d[0] * rays[0] - rays[e - 1] == rays[1]))
    throw Error(ErrorCode::NotRealizable, "transfer recursion does not close up");
  rays.pop_back();
  try {
    return validate_fan(std::move(rays));
  } catch (const Error& err) {
    throw Error(ErrorCode::NotRealizable, err.what());
  }
}

Fan realize_profile(const SelfIntersectionProfile& profile) {
  return realize_profile(std::span<const Integer>(profile.values));
}

Fan blowup(const Fan& fan, std::size_t corner) {
  const std::size_t e = fan.euler();
  if (corner >= e) throw Error(ErrorCode::IndexOutOfRange, "corner index", corner);
  std::vector<LatticeVector> rays = fan.rays();
  LatticeVector inserted = rays[corner] + rays[fan.next(corner)];
  rays.insert(rays.begin() + static_cast<std::ptrdiff_t>(corner + 1), std::move(inserted));
  return validate_fan(std::move(rays));
}

BlowdownRecord blowdown(const Fan& fan, std::size_t index) {
  const std::size_t e = fan.euler();
  if (index >= e) throw Error(ErrorCode::IndexOutOfRange, "ray index", index);
  if (e <= 3 || !(fan.ray(fan.prev(index)) + fan.ray(fan.next(index)) == fan.ray(index)))
    throw Error(ErrorCode::NotMinusOneCurve,
                "D^2 = " + fan.self_intersection(index).get_str(), index);
  std::vector<LatticeVector> rays = fan.rays();
  rays.erase(rays.begin() + static_cast<std::ptrdiff_t>(index));
  return BlowdownRecord{index, fan, validate_fan(std::move(rays))};
}

std::vector<DihedralMap> canonical_maps(const SelfIntersectionProfile& profile) {
  const std::size_t e = profile.size();
  std::vector<DihedralMap> best;
  IntegerVector best_values;
  for (int reflected = 0; reflected < 2; ++reflected) {
    for (std::size_t shift = 0; shift < e; ++shift) {
      DihedralMap map{e, shift, reflected != 0};
      IntegerVector candidate = map.apply(profile.values);
      if (best.empty() || candidate < best_values) {
        best_values = std::move(candidate);
        best.assign(1, map);
      } else if (candidate == best_values) {
        best.push_back(map);
      }
    }
  }
  return best;
}

SelfIntersectionProfile canonical_form(const SelfIntersectionProfile& profile) {
  if (profile.size() == 0) return profile;
  return {canonical_maps(profile).front().apply(profile.values)};
}

SelfIntersectionProfile canonical_profile(const Fan& fan) { return canonical_form(fan.profile()); }

Fan transform(const Fan& fan, const Integer& a, const Integer& b, const Integer& c,
              const Integer& d) {
  const Integer determinant = a * d - b * c;
  if (determinant != 1 && determinant != -1)
    throw Error(ErrorCode::InvalidArgument, "transform must be unimodular");
  std::vector<LatticeVector> rays;
  rays.reserve(fan.euler());
  for (const auto& v : fan.rays()) rays.push_back({a * v.x + b * v.y, c * v.x + d * v.y});
  if (determinant == -1) std::reverse(rays.begin(), rays.end());
  return validate_fan(std::move(rays));
}

Fan rotate(const Fan& fan, std::size_t shift) {
  const std::size_t e = fan.euler();
  std::vector<LatticeVector> rays;
  rays.reserve(e);
  for (std::size_t j = 0; j < e; ++j) rays.push_back(fan.ray((j + shift) % e));
  return validate_fan(std::move(rays));
}

namespace fans {

Fan projective_plane() { return validate_fan({{1, 0}, {0, 1}, {-1, -1}}); }

Fan hirzebruch(long a) { return validate_fan({{1, 0}, {0, 1}, {-1, a}, {0, -1}}); }

Fan hexagon() { return validate_fan({{1, 0}, {1, 1}, {0, 1}, {-1, 0}, {-1, -1}, {0, -1}}); }

}  // namespace fans

}  // namespace torica
