// Command-line front end. Exit codes: 0 ok, 1 configuration or input error,
// 2 invalid fan, 3 divisor not ample, 4 verification failure.
#include <iostream>
#include <optional>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "torica/adjunction.hpp"
#include "torica/bogomolov.hpp"
#include "torica/chern_bounds.hpp"
#include "torica/enumeration.hpp"
#include "torica/error.hpp"
#include "torica/io.hpp"

using namespace torica;
using io::json;

namespace {

constexpr int kOk = 0, kConfig = 1, kFanInvalid = 2, kNotAmple = 3, kVerifyFailed = 4;

int exit_code_for(ErrorCode code) {
  switch (code) {
    case ErrorCode::TooFewRays:
    case ErrorCode::NonPrimitiveRay:
    case ErrorCode::NotUnimodular:
    case ErrorCode::NotComplete:
    case ErrorCode::NotRealizable:
      return kFanInvalid;
    case ErrorCode::NotAmple:
      return kNotAmple;
    default:
      return kConfig;
  }
}

void emit(const json& j, const std::string& out) { io::write_text(out, j.dump(2) + "\n"); }

Fan load_fan(const std::string& path) { return io::fan_from_json(io::read_file(path)); }

io::DivisorInput load_divisor(const Fan& fan, const std::string& path) {
  return io::divisor_from_json(fan, io::read_file(path));
}

void require_ample(const DivisorClass& L) {
  if (!is_ample(L)) throw Error(ErrorCode::NotAmple, "min degree " + min_degree(L).get_str());
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Smooth toric surfaces, adjunction and Chern number bounds for ample bundles"};
  app.require_subcommand(1);
  std::string out;
  int status = kOk;

  // fan validate | info
  auto* fan_cmd = app.add_subcommand("fan", "Validate or describe a fan")->require_subcommand(1);
  std::string fan_path;
  auto* fan_validate = fan_cmd->add_subcommand("validate", "Check the smooth complete fan invariants");
  fan_validate->add_option("--fan", fan_path, "Fan JSON file")->required();
  fan_validate->callback([&] {
    const Fan fan = load_fan(fan_path);
    emit({{"valid", true}, {"e", fan.euler()}}, out);
  });
  auto* fan_info = fan_cmd->add_subcommand("info", "Euler number, profile, K^2, Picard rank");
  fan_info->add_option("--fan", fan_path, "Fan JSON file")->required();
  for (auto* c : {fan_validate, fan_info}) c->add_option("--out", out, "Output file (default stdout)");
  fan_info->callback([&] {
    const Fan fan = load_fan(fan_path);
    const DivisorClass K = canonical_class(fan);
    const Integer k_sq = intersect(K, K);
    const long e = static_cast<long>(fan.euler());
    emit({{"e", e},
          {"profile", io::to_json(fan.profile().values)},
          {"canonical_profile", io::to_json(canonical_profile(fan).values)},
          {"K^2", io::to_json(k_sq)},
          {"K^2 = 12 - e", k_sq == 12 - e},
          {"picard_rank", picard_rank(fan)}},
         out);
  });

  // divisor check
  auto* div_cmd = app.add_subcommand("divisor", "Divisor classes")->require_subcommand(1);
  std::string div_path;
  auto* div_check = div_cmd->add_subcommand("check", "Degrees, nef/ample, L^2, genus");
  div_check->add_option("--fan", fan_path, "Fan JSON file")->required();
  div_check->add_option("--divisor", div_path, "Divisor JSON file")->required();
  div_check->add_option("--out", out, "Output file (default stdout)");
  div_check->callback([&] {
    const Fan fan = load_fan(fan_path);
    const auto in = load_divisor(fan, div_path);
    const DivisorClass& L = in.divisor;
    const DivisorClass K = canonical_class(fan);
    json j = io::divisor_to_json(L);
    j["given_as"] = in.given_as_degrees ? "degrees" : "coefficients";
    j["normalized"] = io::to_json(normalize(L).coefficients());
    j["nef"] = is_nef(L);
    j["ample"] = is_ample(L);
    j["L^2"] = io::to_json(intersect(L, L));
    j["K.L"] = io::to_json(intersect(K, L));
    const Integer parity = intersect(K + L, L);
    j["genus"] = mpz_even_p(parity.get_mpz_t()) ? io::to_json(sectional_genus(L)) : json(nullptr);
    emit(j, out);
    if (!is_ample(L)) status = kNotAmple;
  });

  // adjoin
  auto* adjoin = app.add_subcommand("adjoin", "Run the iterated adjunction sequence");
  adjoin->add_option("--fan", fan_path, "Fan JSON file")->required();
  adjoin->add_option("--divisor", div_path, "Ample divisor JSON file")->required();
  adjoin->add_option("--out", out, "Output file (default stdout)");
  adjoin->callback([&] {
    const Fan fan = load_fan(fan_path);
    const DivisorClass L = load_divisor(fan, div_path).divisor;
    require_ample(L);
    json j;
    j["first_step"] = io::to_json(classify_adjoint(L));
    if (fan.euler() >= 7) {
      const AdjunctionSequence seq = iterated_sequence(L);
      j["sequence"] = io::to_json(seq);
      if (seq.length() >= 1) j["telescope"] = io::to_json(telescoped_genus_check(seq));
    } else {
      j["sequence"] = nullptr;
      j["note"] = "e <= 6: the sequence is empty";
    }
    emit(j, out);
  });

  // bounds [eval] | surface | claims
  auto* bounds = app.add_subcommand("bounds", "Evaluate the c1^2 and c2 lower bounds");
  bounds->require_subcommand(0, 1);
  long r = 0, e = 0, rmin = 1, rmax = 20, emin = 13, emax = 100, claims_emax = 1000;
  bool scaled = false;
  auto eval = [&] {
    if (r < 1 || e < 7) throw Error(ErrorCode::InvalidArgument, "need --r >= 1 and --e >= 7");
    json j = {{"r", r},
              {"e", e},
              {"b", adjunction_depth(e)},
              {"c1sq_lower_bound", io::to_json(c1sq_lower_bound(r, e))},
              {"r^2 e", r * r * e}};
    if (r == 2) j["c2_lower_bound"] = io::to_json(c2_lower_bound(e));
    if (r >= 2) j["conjectured_c2_bound"] = io::to_json(conjectured_c2_bound(r, e));
    emit(j, out);
  };
  bounds->add_option("--r", r, "Rank");
  bounds->add_option("--e", e, "Euler number");
  bounds->add_option("--out", out, "Output file (default stdout)");
  auto* b_eval = bounds->add_subcommand("eval", "Bounds at one (r, e)");
  b_eval->add_option("--r", r, "Rank")->required();
  b_eval->add_option("--e", e, "Euler number")->required();
  b_eval->add_option("--out", out, "Output file (default stdout)");
  b_eval->callback(eval);
  auto* b_surface = bounds->add_subcommand("surface", "CSV of the c1^2 bound over an (r, e) grid");
  b_surface->add_option("--rmin", rmin, "Smallest rank")->check(CLI::PositiveNumber);
  b_surface->add_option("--rmax", rmax, "Largest rank")->check(CLI::PositiveNumber);
  b_surface->add_option("--emin", emin, "Smallest Euler number")->check(CLI::Range(7L, 1L << 40));
  b_surface->add_option("--emax", emax, "Largest Euler number")->check(CLI::PositiveNumber);
  b_surface->add_flag("--scaled", scaled, "Add bound / (r e (3r + 4b))");
  b_surface->add_option("--out", out, "Output file (default stdout)");
  b_surface->callback([&] {
    io::write_text(out, bound_surface_csv(emit_bound_surface(rmin, rmax, emin, emax, scaled)));
  });
  auto* b_claims = bounds->add_subcommand("claims", "Check the quantitative claims about the bound");
  b_claims->add_option("--emax", claims_emax, "Cap for unbounded claims")->check(CLI::Range(13L, 1L << 20));
  b_claims->add_option("--out", out, "Output file (default stdout)");
  b_claims->callback([&] {
    json list = json::array();
    bool ok = true;
    for (const auto& c : intro_claims_check(claims_emax)) {
      ok = ok && c.passed;
      list.push_back(io::to_json(c));
    }
    emit(list, out);
    if (!ok) status = kVerifyFailed;
  });
  bounds->callback([&] {
    if (bounds->get_subcommands().empty()) eval();
  });

  // verify
  long amax = 3, tmax = 4, vemin = 5, vemax = 9;
  std::vector<long> rset{1, 2, 3};
  auto* verify = app.add_subcommand("verify", "Exhaustive bound checks over enumerated surfaces");
  verify->add_option("--emax", vemax, "Largest Euler number")->check(CLI::Range(3L, 64L));
  verify->add_option("--emin", vemin, "Smallest Euler number")->check(CLI::Range(3L, 64L));
  verify->add_option("--amax", amax, "Largest Hirzebruch seed")->check(CLI::NonNegativeNumber);
  verify->add_option("--tmax", tmax, "Largest sampled degree")->check(CLI::PositiveNumber);
  verify->add_option("--r", rset, "Ranks, comma separated")->delimiter(',')->check(CLI::PositiveNumber);
  verify->add_option("--out", out, "Output file (default stdout)");
  verify->callback([&] {
    VerificationParams params;
    params.e_min = vemin;
    params.t_max = tmax;
    params.r_set = rset;
    const VerificationReport report = run_verification(enumerate_surfaces(vemax, amax), params);
    emit(io::to_json(report), out);
    if (!report.passed()) status = kVerifyFailed;
  });

  // enumerate
  bool extremal = false;
  long en_emax = 8;
  auto* enumerate = app.add_subcommand("enumerate", "Smooth toric surfaces by blowup closure");
  enumerate->add_option("--emax", en_emax, "Largest Euler number")->check(CLI::Range(3L, 64L));
  enumerate->add_option("--amax", amax, "Largest Hirzebruch seed")->check(CLI::NonNegativeNumber);
  enumerate->add_flag("--extremal", extremal, "Also list pairs with -K.H = e and the 12-ray example");
  enumerate->add_option("--out", out, "Output file (default stdout)");
  enumerate->callback([&] {
    const SurfaceInventory inv = enumerate_surfaces(en_emax, amax);
    json j = io::to_json(inv);
    if (extremal) {
      json list = json::array();
      for (const auto& x : find_extremal(inv)) list.push_back(io::to_json(x));
      j["extremal"] = list;
      j["twelve_ray_example"] = io::to_json(twelve_ray_example());
    }
    emit(j, out);
  });

  // bogomolov search | restrict
  auto* bog = app.add_subcommand("bogomolov", "Rank-two instability")->require_subcommand(1);
  std::string h_path, witness_path;
  std::string c2_text;
  long box = 6;
  auto* bog_search = bog->add_subcommand("search", "Destabilizing sub-line-bundles within a box");
  auto* bog_restrict = bog->add_subcommand("restrict", "Check the small-c2 restriction on the surface");
  for (auto* c : {bog_search, bog_restrict}) {
    c->set_help_flag("--help", "Print this help message and exit");  // frees -h for --h
    c->add_option("--fan", fan_path, "Fan JSON file")->required();
    c->add_option("--h", h_path, "det E as a divisor JSON file")->required();
    c->add_option("--c2", c2_text, "Second Chern number")->required();
    c->add_option("--box", box, "Coefficient box")->check(CLI::NonNegativeNumber);
    c->add_option("--out", out, "Output file (default stdout)");
  }
  bog_search->add_option("--witness", witness_path, "Ample witness divisor JSON file (default H)");
  auto parse_c2 = [&] { return io::integer_from_json(json(c2_text)); };
  bog_search->callback([&] {
    const Fan fan = load_fan(fan_path);
    const DivisorClass H = load_divisor(fan, h_path).divisor;
    require_ample(H);
    std::optional<DivisorClass> witness;
    if (!witness_path.empty()) witness = load_divisor(fan, witness_path).divisor;
    const Integer c2 = parse_c2();
    emit(io::to_json(destabilizer_search(H, c2, box, witness), c2), out);
  });
  bog_restrict->callback([&] {
    const Fan fan = load_fan(fan_path);
    const DivisorClass H = load_divisor(fan, h_path).divisor;
    require_ample(H);
    const BoundReport report = bog_restriction_check(H, parse_c2(), box);
    emit(io::to_json(report), out);
    if (!report.passed) status = kVerifyFailed;
  });

  // table1
  auto* table1 = app.add_subcommand("table1", "Recompute the catalogue of small Chern numbers");
  table1->add_option("--out", out, "Output file (default stdout)");
  table1->callback([&] {
    json rows = json::array();
    for (const auto& row : table1_catalogue()) rows.push_back(io::to_json(row));
    json checks = json::array();
    bool ok = true;
    for (const auto& rep : verify_table1()) {
      ok = ok && rep.passed;
      checks.push_back(io::to_json(rep));
    }
    emit({{"rows", rows}, {"verification", checks}, {"verdict", ok ? "pass" : "fail"}}, out);
    if (!ok) status = kVerifyFailed;
  });

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return kConfig;
  } catch (const Error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return exit_code_for(e.code());
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kConfig;
  }
  return status;
}
