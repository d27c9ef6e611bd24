#include "torica/io.hpp"

#include <fstream>
#include <iostream>
#include <sstream>

#include "torica/error.hpp"

namespace torica::io {

namespace {

json degrees_json(const DivisorClass& L) { return to_json(degree_vector(L).values); }

json profile_json(const SelfIntersectionProfile& p) { return to_json(p.values); }

}  // namespace

json to_json(const Integer& v) {
  static const Integer limit = Integer(1) << 53;
  if (abs(v) < limit) return v.get_si();
  return v.get_str();
}

json to_json(const IntegerVector& v) {
  json out = json::array();
  for (const auto& x : v) out.push_back(to_json(x));
  return out;
}

json to_json(const Rational& q) {
  Rational c = q;
  c.canonicalize();
  if (c.get_den() == 1) return to_json(Integer(c.get_num()));
  return to_string(c);
}

Integer integer_from_json(const json& j) {
  if (j.is_number_integer()) return Integer(j.get<long>());
  if (j.is_string()) {
    Integer v;
    if (v.set_str(j.get<std::string>(), 10) != 0)
      throw Error(ErrorCode::ParseError, "not an integer: " + j.get<std::string>());
    return v;
  }
  throw Error(ErrorCode::ParseError, "expected an integer, got " + j.dump());
}

IntegerVector integers_from_json(const json& j) {
  if (!j.is_array()) throw Error(ErrorCode::ParseError, "expected an array, got " + j.dump());
  IntegerVector out;
  for (const auto& x : j) out.push_back(integer_from_json(x));
  return out;
}

Fan fan_from_json(const json& j) {
  if (!j.is_object()) throw Error(ErrorCode::ParseError, "fan document must be an object");
  if (j.contains("rays")) {
    const json& rays = j.at("rays");
    if (!rays.is_array()) throw Error(ErrorCode::ParseError, "\"rays\" must be an array");
    std::vector<LatticeVector> out;
    for (const auto& r : rays) {
      if (!r.is_array() || r.size() != 2) throw Error(ErrorCode::ParseError, "ray must be [x, y]: " + r.dump());
      out.emplace_back(integer_from_json(r[0]), integer_from_json(r[1]));
    }
    return validate_fan(std::move(out));
  }
  if (j.contains("profile")) return realize_profile(SelfIntersectionProfile{integers_from_json(j.at("profile"))});
  throw Error(ErrorCode::ParseError, "fan document needs \"rays\" or \"profile\"");
}

json fan_to_json(const Fan& fan) {
  json rays = json::array();
  for (const auto& v : fan.rays()) rays.push_back(json::array({to_json(v.x), to_json(v.y)}));
  return {{"rays", rays}};
}

DivisorInput divisor_from_json(const Fan& fan, const json& j) {
  if (!j.is_object()) throw Error(ErrorCode::ParseError, "divisor document must be an object");
  if (j.contains("coefficients")) return {DivisorClass(fan, integers_from_json(j.at("coefficients"))), false};
  if (j.contains("degrees")) return {from_degrees(fan, DegreeVector{integers_from_json(j.at("degrees"))}), true};
  throw Error(ErrorCode::ParseError, "divisor document needs \"coefficients\" or \"degrees\"");
}

json divisor_to_json(const DivisorClass& L) {
  return {{"coefficients", to_json(L.coefficients())}, {"degrees", degrees_json(L)}};
}

json read_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw Error(ErrorCode::ParseError, "cannot open " + path);
  try {
    return json::parse(in);
  } catch (const json::exception& e) {
    throw Error(ErrorCode::ParseError, path + ": " + e.what());
  }
}

void write_text(const std::string& path, const std::string& text) {
  if (path.empty() || path == "-") {
    std::cout << text;
    return;
  }
  std::ofstream out(path);
  if (!out) throw Error(ErrorCode::InvalidArgument, "cannot write " + path);
  out << text;
}

json to_json(const BoundReport& r) {
  return {{"instance", r.instance}, {"bound", r.bound},       {"lhs", to_json(r.lhs)},
          {"rhs", to_json(r.rhs)},  {"passed", r.passed},     {"applicable", r.applicable},
          {"equality", r.equality}, {"note", r.note}};
}

json to_json(const ClaimReport& r) {
  return {{"claim", r.claim},
          {"grid", r.grid},
          {"verdict", r.passed ? "pass" : "fail"},
          {"checked", r.checked},
          {"failures", r.failures}};
}

json to_json(const ReductionOutcome& o) {
  json out = {{"outcome", std::string(outcome_name(o))}};
  if (const auto* red = std::get_if<outcome::Reduced>(&o)) {
    out["contracted_rays"] = red->contraction.contracted;
    out["target"] = fan_to_json(red->contraction.target);
    out["pushed"] = divisor_to_json(red->pushed);
    out["next"] = divisor_to_json(red->next);
  } else if (const auto* fib = std::get_if<outcome::Fibration>(&o)) {
    out["fiber"] = divisor_to_json(fib->fiber);
    out["fiber_degree"] = to_json(fib->fiber_degree);
  } else if (const auto* low = std::get_if<outcome::TerminalLowEuler>(&o)) {
    out["reason"] = low->reason;
  }
  return out;
}

json to_json(const AdjunctionSequence& seq) {
  json steps = json::array();
  auto record = [](const DivisorClass& L) {
    return json{{"e", L.fan().euler()}, {"profile", profile_json(L.fan().profile())}, {"L_degrees", degrees_json(L)}};
  };
  for (const auto& step : seq.steps) {
    json s = record(step.polarization);
    s["contracted_rays"] = step.contraction.contracted;
    s["outcome"] = step.contraction.empty() ? "AdjointAmple" : "Reduced";
    steps.push_back(std::move(s));
  }
  return {{"initial", record(seq.initial)}, {"b", seq.length()}, {"steps", steps}, {"terminal", to_json(seq.terminal)}};
}

json to_json(const TelescopeReport& r) {
  return {{"b", r.length},
          {"direct", to_json(r.direct)},
          {"telescoped", to_json(r.telescoped)},
          {"identity_holds", r.identity_holds},
          {"genus_applicable", r.genus_applicable},
          {"genus_nonnegative", r.genus_nonnegative},
          {"diff", r.diff}};
}

json to_json(const DestabilizerSearch& search, const Integer& c2) {
  json candidates = json::array();
  for (const auto& c : search.candidates) {
    candidates.push_back({{"A", divisor_to_json(c.A)},
                          {"Q", divisor_to_json(c.Q)},
                          {"T", divisor_to_json(c.T)},
                          {"A.Q", to_json(intersect(c.A, c.Q))},
                          {"Q^2", to_json(intersect(c.Q, c.Q))},
                          {"T^2", to_json(intersect(c.T, c.T))},
                          {"deg_Z", to_json(c.deg_Z)},
                          {"eq1", eq1_check(c.A, c.A + c.Q)}});
  }
  return {{"c2", to_json(c2)},
          {"box", search.box},
          {"verdict", search.verdict},
          {"positivity", search.positivity},
          {"candidates", candidates}};
}

json to_json(const SurfaceInventory& inv) {
  json entries = json::array();
  for (const auto& e : inv.entries) {
    json rays = fan_to_json(e.fan)["rays"];
    entries.push_back({{"e", e.fan.euler()},
                       {"profile", profile_json(e.profile)},
                       {"rays", rays},
                       {"seed", e.seed},
                       {"schedule", e.schedule}});
  }
  return {{"params", {{"e_max", inv.e_max}, {"a_max", inv.a_max}}},
          {"surface_count", inv.size()},
          {"note", inv.note},
          {"entries", entries}};
}

json to_json(const CounterexampleRecord& rec) {
  json rays = json::array();
  for (const auto& v : rec.rays) rays.push_back(json::array({to_json(v.x), to_json(v.y)}));
  return {{"bound", rec.bound},
          {"profile", profile_json(rec.profile)},
          {"rays", rays},
          {"degrees", to_json(rec.degrees.values)},
          {"r", rec.r},
          {"lhs", to_json(rec.lhs)},
          {"rhs", to_json(rec.rhs)},
          {"context", rec.context}};
}

json to_json(const VerificationReport& report) {
  json checks = json::object();
  for (const auto& [name, t] : report.checks)
    checks[name] = {{"pass", t.pass}, {"fail", t.fail}, {"equality_cases", t.equality_cases}};
  json cex = json::array();
  for (const auto& c : report.counterexamples) cex.push_back(to_json(c));
  return {{"params",
           {{"e_min", report.params.e_min},
            {"e_max", report.e_max},
            {"a_max", report.a_max},
            {"t_max", report.params.t_max},
            {"r", report.params.r_set}}},
          {"surface_count", report.surface_count},
          {"instance_count", report.instance_count},
          {"checks", checks},
          {"exceptions", {{"expected", report.exception_expected}, {"found", report.exception_found}}},
          {"findings", report.findings},
          {"counterexamples", cex}};
}

json to_json(const CatalogueRow& row) {
  return {{"surface", row.surface},
          {"e", row.euler},
          {"bundle", row.bundle},
          {"construction", row.construction},
          {"c1^2", to_json(row.c1_sq)},
          {"c2", row.recomputable ? to_json(row.c2) : json("c2 >= " + row.c2.get_str() + " open")},
          {"label", std::string(1, to_char(row.label))},
          {"recomputable", row.recomputable},
          {"note", row.note}};
}

json to_json(const TwelveRayReport& r) {
  std::vector<std::size_t> coeff(r.coefficient_mismatch), deg(r.degree_mismatch);
  return {{"profile", profile_json(r.fan.profile())},
          {"rays", fan_to_json(r.fan)["rays"]},
          {"L", divisor_to_json(r.alternating)},
          {"-K.L", to_json(r.minus_k_dot_l)},
          {"L^2", to_json(r.l_sq)},
          {"genus", to_json(r.genus)},
          {"printed_coefficients", to_json(r.printed)},
          {"printed_degrees", to_json(r.printed_degrees.values)},
          {"coefficient_mismatch", coeff},
          {"degree_mismatch", deg},
          {"blowdowns_to_minimal", r.blowdowns_to_minimal},
          {"minimal_model", r.minimal_model},
          {"note", r.note}};
}

json to_json(const ExtremalInstance& x) {
  return {{"e", x.fan.euler()},
          {"profile", profile_json(x.profile)},
          {"rays", fan_to_json(x.fan)["rays"]},
          {"L", divisor_to_json(x.L)},
          {"L^2", to_json(x.L_sq)},
          {"genus", to_json(x.genus)}};
}

}  // namespace torica::io
