#include "torica/enumeration.hpp"

#include <algorithm>
#include <functional>
#include <map>
#include <optional>
#include <set>

#include "torica/adjunction.hpp"
#include "torica/error.hpp"
#include "torica/parallel.hpp"

namespace torica {

namespace {

std::string join(const IntegerVector& v) {
  std::string s = "(";
  for (std::size_t i = 0; i < v.size(); ++i) s += (i ? "," : "") + v[i].get_str();
  return s + ")";
}

long floor_half(long v) { return v / 2; }

}  // namespace

SurfaceInventory enumerate_surfaces(long e_max, long a_max) {
  if (e_max < 3) throw Error(ErrorCode::InvalidArgument, "e_max must be >= 3");
  if (a_max < 0) throw Error(ErrorCode::InvalidArgument, "a_max must be >= 0");
  SurfaceInventory inv;
  inv.e_max = e_max;
  inv.a_max = a_max;
  inv.note = "closure of P2 and F_0..F_" + std::to_string(a_max) +
             " under corner blowups; surfaces that only arise from F_a with a > " + std::to_string(a_max) +
             " are absent";

  std::map<SelfIntersectionProfile, std::size_t> seen;
  std::vector<std::vector<SurfaceEntry>> levels(static_cast<std::size_t>(e_max) + 1);
  auto add = [&](SurfaceEntry entry) {
    if (seen.count(entry.profile)) return;
    seen.emplace(entry.profile, 0);
    levels[entry.fan.euler()].push_back(std::move(entry));
  };
  const Fan p2 = fans::projective_plane();
  add({canonical_profile(p2), p2, "P2", {}});
  if (e_max >= 4) {
    for (long a = 0; a <= a_max; ++a) {
      const Fan f = fans::hirzebruch(a);
      add({canonical_profile(f), f, "F" + std::to_string(a), {}});
    }
  }
  for (long e = 3; e < e_max; ++e) {
    auto& level = levels[static_cast<std::size_t>(e)];
    std::sort(level.begin(), level.end(),
              [](const SurfaceEntry& a, const SurfaceEntry& b) { return a.profile < b.profile; });
    for (std::size_t k = 0; k < level.size(); ++k) {
      const SurfaceEntry& parent = level[k];
      for (std::size_t corner = 0; corner < parent.fan.euler(); ++corner) {
        Fan child = blowup(parent.fan, corner);
        SurfaceEntry entry{canonical_profile(child), child, parent.seed, parent.schedule};
        entry.schedule.push_back(corner);
        add(std::move(entry));
      }
    }
  }
  for (auto& level : levels) {
    std::sort(level.begin(), level.end(),
              [](const SurfaceEntry& a, const SurfaceEntry& b) { return a.profile < b.profile; });
    for (auto& entry : level) inv.entries.push_back(std::move(entry));
  }
  return inv;
}

std::vector<DegreeVector> enumerate_ample_degrees(const Fan& fan, long t_max) {
  if (t_max < 1) throw Error(ErrorCode::InvalidArgument, "t_max must be >= 1");
  const std::size_t e = fan.euler();
  std::vector<long> vx(e), vy(e);
  for (std::size_t i = 0; i < e; ++i) {
    vx[i] = fan.ray(i).x.get_si();
    vy[i] = fan.ray(i).y.get_si();
  }
  std::vector<DegreeVector> out;
  std::vector<long> t(e, 1);
  const std::size_t free = e - 2;
  std::function<void(std::size_t, long, long)> rec = [&](std::size_t i, long sx, long sy) {
    if (i == free) {
      // t_{e-2} v_{e-2} + t_{e-1} v_{e-1} = w, and det(v_{e-2}, v_{e-1}) = 1.
      const long wx = -sx, wy = -sy;
      const long a = wx * vy[e - 1] - wy * vx[e - 1];
      const long b = vx[e - 2] * wy - vy[e - 2] * wx;
      if (a < 1 || a > t_max || b < 1 || b > t_max) return;
      t[e - 2] = a;
      t[e - 1] = b;
      DegreeVector d;
      d.values.reserve(e);
      for (long v : t) d.values.emplace_back(v);
      out.push_back(std::move(d));
      return;
    }
    for (long v = 1; v <= t_max; ++v) {
      t[i] = v;
      rec(i + 1, sx + v * vx[i], sy + v * vy[i]);
    }
  };
  rec(0, 0, 0);
  return out;
}

std::string fingerprint(const DivisorClass& H) {
  const Fan& fan = H.fan();
  const DegreeVector t = degree_vector(H);
  std::optional<IntegerVector> best;
  for (const auto& map : canonical_maps(fan.profile())) {
    IntegerVector mapped = map.apply(t.values);
    if (!best || mapped < *best) best = std::move(mapped);
  }
  return to_string(canonical_profile(fan)) + " " + join(*best);
}

namespace {

struct Exception {
  long r;
  DivisorClass H;
};

std::vector<Exception> exception_classes() {
  const Fan p2 = fans::projective_plane();
  const Fan f0 = fans::hirzebruch(0), f1 = fans::hirzebruch(1), f2 = fans::hirzebruch(2);
  auto D = [](const Fan& f, std::size_t i) { return DivisorClass::invariant(f, i); };
  // On F_a: D_1 = E, D_0 = f.
  return {
      {1, D(p2, 0)},
      {1, D(f0, 1) + D(f0, 0)},
      {1, D(f0, 1) + Integer(2) * D(f0, 0)},
      {1, Integer(2) * D(f0, 1) + D(f0, 0)},
      {1, D(f1, 1) + Integer(2) * D(f1, 0)},
      {1, D(f2, 1) + Integer(3) * D(f2, 0)},
      {1, -canonical_class(fans::hexagon())},
      {2, Integer(2) * D(p2, 0)},
      {2, Integer(2) * (D(f0, 1) + D(f0, 0))},
      {3, Integer(3) * D(p2, 0)},
  };
}

}  // namespace

std::map<long, std::vector<std::string>> small_c1_exceptions() {
  std::map<long, std::vector<std::string>> out;
  for (const auto& ex : exception_classes()) {
    auto& list = out[ex.r];
    const std::string fp = fingerprint(ex.H);
    if (std::find(list.begin(), list.end(), fp) == list.end()) list.push_back(fp);
  }
  for (auto& [r, list] : out) std::sort(list.begin(), list.end());
  return out;
}

bool VerificationReport::passed() const {
  if (!counterexamples.empty()) return false;
  for (const auto& [name, tally] : checks)
    if (tally.fail) return false;
  return true;
}

namespace {

struct Partial {
  std::map<std::string, CheckTally> checks;
  std::vector<CounterexampleRecord> counterexamples;
  std::vector<std::string> findings;
  std::set<std::string> found;  // "r=<r> <fingerprint>"
  std::size_t instances = 0;
};

CounterexampleRecord record(std::string bound, const DivisorClass& H, long r, Rational lhs, Rational rhs,
                            std::string context) {
  return {std::move(bound), H.fan().profile(), H.fan().rays(), degree_vector(H), r, std::move(lhs),
          std::move(rhs), std::move(context)};
}

void tally(Partial& p, const std::string& name, bool ok) {
  auto& t = p.checks[name];
  (ok ? t.pass : t.fail) += 1;
}

// Step facts, telescope and fibration bound for one polarized surface.
void check_sequence(Partial& p, const DivisorClass& L, long r, const std::string& label) {
  const long e0 = static_cast<long>(L.fan().euler());
  auto fibration = [&](const ReductionOutcome& o, const DivisorClass& pol) {
    if (const auto* fib = std::get_if<outcome::Fibration>(&o)) {
      const long e = static_cast<long>(pol.fan().euler());
      const bool ok = e <= 2 + 2 * fib->fiber_degree;
      tally(p, "fibration_bound", ok);
      if (!ok)
        p.counterexamples.push_back(record("fibration_bound", pol, r, Rational(e),
                                           Rational(2 + 2 * fib->fiber_degree), label));
    }
  };
  try {
    fibration(classify_adjoint(L), L);
  } catch (const Error& err) {
    tally(p, "adjunction_steps", false);
    p.counterexamples.push_back(record("adjunction_steps", L, r, 0, 0, label + ": " + err.what()));
    return;
  }
  if (e0 < 7) return;
  std::optional<AdjunctionSequence> maybe;
  try {
    maybe = iterated_sequence(L);
  } catch (const Error& err) {
    tally(p, "adjunction_steps", false);
    p.counterexamples.push_back(record("adjunction_steps", L, r, 0, 0, label + ": " + err.what()));
    return;
  }
  const AdjunctionSequence& seq = *maybe;
  long prev = e0;
  bool steps_ok = true, blowup_ok = true;
  for (const auto& step : seq.steps) {
    const long e = static_cast<long>(step.surface().euler());
    if (e < floor_half(prev)) {
      steps_ok = false;
      p.counterexamples.push_back(record("adjunction_steps", L, r, Rational(e), Rational(floor_half(prev)),
                                         label + ": e(S_i+1) < floor(e(S_i)/2)"));
    }
    if (prev > 2 * e) {
      blowup_ok = false;
      p.counterexamples.push_back(
          record("blowup_euler", L, r, Rational(prev), Rational(2 * e), label + ": e(S) > 2 e(S')"));
    }
    prev = e;
  }
  tally(p, "adjunction_steps", steps_ok);
  tally(p, "blowup_euler", blowup_ok);

  // e >= 2^(b-1) 6 + 1 forces length >= b.
  long claimed = 0;  // largest b with 3 * 2^b + 1 <= e, since 2^(b-1) 6 = 3 2^b
  while (e0 >= (3L << (claimed + 1)) + 1) ++claimed;
  const bool length_ok = static_cast<long>(seq.length()) >= claimed;
  tally(p, "adjunction_length", length_ok);
  if (!length_ok)
    p.counterexamples.push_back(record("adjunction_length", L, r, Rational(static_cast<long>(seq.length())),
                                       Rational(claimed), label));

  if (seq.length() >= 1) {
    const TelescopeReport tel = telescoped_genus_check(seq);
    tally(p, "telescope", tel.passed());
    if (!tel.passed())
      p.counterexamples.push_back(record("telescope", L, r, Rational(tel.direct), Rational(tel.telescoped),
                                         label + ": " + tel.diff));
  }
  fibration(seq.terminal, seq.last());
}

Partial verify_instance(const DivisorClass& H, const VerificationParams& params) {
  Partial p;
  const Fan& fan = H.fan();
  const long e = static_cast<long>(fan.euler());
  const DivisorClass K = canonical_class(fan);
  const Integer h_sq = intersect(H, H);
  const Integer minus_kh = -intersect(K, H);
  const Integer min_deg = min_degree(H);
  const std::string fp = fingerprint(H);

  // The adjunction facts do not depend on r.
  check_sequence(p, H, 1, fp);

  for (long r : params.r_set) {
    if (min_deg < r) continue;
    ++p.instances;
    const std::string tag = "r=" + std::to_string(r) + " " + fp;

    // (a) -K.H >= r e
    const bool kl = kl_check(H, r);
    tally(p, "kl", kl);
    if (!kl) p.counterexamples.push_back(record("kl", H, r, Rational(minus_kh), Rational(r * e), tag));
    else if (minus_kh == r * e) p.checks["kl"].equality_cases.push_back(tag);

    // (b) H^2 >= r^2 e for e >= 5, equality only for H = -rK on e = 6
    if (e >= 5) {
      const Integer rhs = Integer(r * r) * e;
      bool ok = h_sq >= rhs;
      if (h_sq == rhs) {
        ok = e == 6 && linear_equivalent(H, Integer(-r) * K);
        p.checks["c1sq_r2e"].equality_cases.push_back(tag);
      }
      tally(p, "c1sq_r2e", ok);
      if (!ok) p.counterexamples.push_back(record("c1sq_r2e", H, r, Rational(h_sq), Rational(rhs), tag));
      const DivisorClass rkh = Integer(r) * K + H;
      if (!is_nef(rkh))
        p.findings.push_back(tag + ": rK+H is not nef (min degree " + min_degree(rkh).get_str() + ")");
    }

    // (c) H^2 <= r e only for the listed exceptions
    if (h_sq <= r * e) {
      p.found.insert(tag);
      const auto exceptions = small_c1_exceptions();
      const auto it = exceptions.find(r);
      const bool listed =
          it != exceptions.end() && std::find(it->second.begin(), it->second.end(), fp) != it->second.end();
      tally(p, "small_c1_exceptions", listed);
      if (listed) p.checks["small_c1_exceptions"].equality_cases.push_back(tag);
      else p.counterexamples.push_back(record("small_c1_exceptions", H, r, Rational(h_sq), Rational(r * e), tag));
    }
  }
  return p;
}

}  // namespace

VerificationReport run_verification(const SurfaceInventory& inventory, const VerificationParams& params) {
  if (inventory.entries.empty()) throw Error(ErrorCode::InvalidArgument, "empty inventory");
  VerificationReport report;
  report.e_max = inventory.e_max;
  report.a_max = inventory.a_max;
  report.params = params;

  std::vector<const SurfaceEntry*> surfaces;
  for (const auto& entry : inventory.entries)
    if (static_cast<long>(entry.fan.euler()) >= params.e_min) surfaces.push_back(&entry);
  report.surface_count = surfaces.size();

  std::vector<std::pair<const SurfaceEntry*, DegreeVector>> items;
  for (const auto* s : surfaces)
    for (auto& t : enumerate_ample_degrees(s->fan, params.t_max)) items.emplace_back(s, std::move(t));

  auto partials = parallel_map(
      items.size(),
      [&](std::size_t i) { return verify_instance(from_degrees(items[i].first->fan, items[i].second), params); },
      params.threads);

  for (const char* name : {"kl", "c1sq_r2e", "small_c1_exceptions", "adjunction_steps", "blowup_euler",
                           "adjunction_length", "telescope", "fibration_bound"})
    report.checks[name];
  std::set<std::string> found;
  for (auto& p : partials) {
    report.instance_count += p.instances;
    for (auto& [name, t] : p.checks) {
      auto& dst = report.checks[name];
      dst.pass += t.pass;
      dst.fail += t.fail;
      for (auto& s : t.equality_cases) dst.equality_cases.push_back(std::move(s));
    }
    for (auto& c : p.counterexamples) report.counterexamples.push_back(std::move(c));
    for (auto& f : p.findings) report.findings.push_back(std::move(f));
    found.insert(p.found.begin(), p.found.end());
  }

  // Exceptions predicted inside the sweep must all be found.
  std::set<SelfIntersectionProfile> profiles;
  for (const auto* s : surfaces) profiles.insert(s->profile);
  std::set<std::string> expected;
  for (const auto& ex : exception_classes()) {
    const DegreeVector t = degree_vector(ex.H);
    const Integer max_deg = *std::max_element(t.values.begin(), t.values.end());
    const bool in_scope = profiles.count(canonical_profile(ex.H.fan())) && max_deg <= params.t_max &&
                          min_degree(ex.H) >= ex.r &&
                          std::find(params.r_set.begin(), params.r_set.end(), ex.r) != params.r_set.end();
    if (in_scope) expected.insert("r=" + std::to_string(ex.r) + " " + fingerprint(ex.H));
  }
  report.exception_expected.assign(expected.begin(), expected.end());
  report.exception_found.assign(found.begin(), found.end());
  for (const auto& fp : expected) {
    if (found.count(fp)) continue;
    report.checks["small_c1_exceptions"].fail += 1;
    CounterexampleRecord missing;
    missing.bound = "small_c1_exceptions";
    missing.context = "listed exception not found in the sweep: " + fp;
    report.counterexamples.push_back(std::move(missing));
  }
  return report;
}

std::vector<ExtremalInstance> find_extremal(const SurfaceInventory& inventory) {
  std::vector<ExtremalInstance> out;
  for (const auto& entry : inventory.entries) {
    const std::size_t e = entry.fan.euler();
    DegreeVector ones{IntegerVector(e, Integer(1))};
    if (!satisfies_closure(entry.fan, ones)) continue;
    DivisorClass L = from_degrees(entry.fan, ones);
    const Integer sq = intersect(L, L);
    out.push_back({entry.profile, entry.fan, L, sq, sectional_genus(L)});
  }
  return out;
}

std::vector<BlowdownRecord> minimal_model_schedule(const Fan& fan) {
  const SelfIntersectionProfile plane = canonical_profile(fans::projective_plane());
  std::set<SelfIntersectionProfile> dead;  // cannot reach P2
  std::vector<BlowdownRecord> path;
  std::function<bool(const Fan&)> search = [&](const Fan& f) -> bool {
    const SelfIntersectionProfile canon = canonical_profile(f);
    if (canon == plane) return true;
    if (dead.count(canon)) return false;
    for (std::size_t i = 0; i < f.euler(); ++i) {
      if (f.self_intersection(i) != -1 || f.euler() <= 3) continue;
      BlowdownRecord rec = blowdown(f, i);
      const Fan child = rec.child;
      path.push_back(std::move(rec));
      if (search(child)) return true;
      path.pop_back();
    }
    dead.insert(canon);
    return false;
  };
  if (search(fan)) return path;
  // Not a blowup of P2: contract greedily down to a Hirzebruch surface.
  path.clear();
  Fan current = fan;
  while (current.euler() > 4) {
    std::size_t i = 0;
    while (current.self_intersection(i) != -1) ++i;
    path.push_back(blowdown(current, i));
    current = path.back().child;
  }
  return path;
}

TwelveRayReport twelve_ray_example() {
  IntegerVector profile;
  for (int k = 0; k < 6; ++k) {
    profile.emplace_back(-3);
    profile.emplace_back(-1);
  }
  const Fan fan = realize_profile(profile);
  IntegerVector alternating;
  for (int k = 0; k < 6; ++k) {
    alternating.emplace_back(3);
    alternating.emplace_back(5);
  }
  const IntegerVector printed{3, 5, 3, 5, 3, 5, 3, 5, 3, 3, 3, 5};

  TwelveRayReport rep{fan, DivisorClass(fan, alternating), {}, 0, 0, 0, printed, {}, {}, {}, 0, {}, {}};
  rep.degrees = degree_vector(rep.alternating);
  rep.minus_k_dot_l = -intersect(canonical_class(fan), rep.alternating);
  rep.l_sq = intersect(rep.alternating, rep.alternating);
  rep.genus = sectional_genus(rep.alternating);
  const DivisorClass printed_class(fan, printed);
  rep.printed_degrees = degree_vector(printed_class);
  for (std::size_t i = 0; i < printed.size(); ++i) {
    if (printed[i] != alternating[i]) rep.coefficient_mismatch.push_back(i + 1);
    if (rep.printed_degrees[i] != rep.degrees[i]) rep.degree_mismatch.push_back(i + 1);
  }
  const auto schedule = minimal_model_schedule(fan);
  rep.blowdowns_to_minimal = schedule.size();
  const Fan minimal = schedule.empty() ? fan : schedule.back().child;
  rep.minimal_model = minimal.euler() == 3 ? "P2" : "profile " + to_string(minimal.profile());

  rep.note = "printed class reads " + join(printed) + "; the coefficient of D_10 breaks the (3,5) pattern, so the "
             "printed D_10, D_11 coefficients (3, 3) should read (5, 3). Printed class degrees " +
             join(rep.printed_degrees.values) + " differ at indices";
  for (auto i : rep.degree_mismatch) rep.note += " " + std::to_string(i);
  rep.note += "; the alternating class has all degrees 1";
  return rep;
}

}  // namespace torica
