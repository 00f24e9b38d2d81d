#include <cstdlib>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>

#include "CLI11.hpp"

#include "solang/ehrhart.hpp"
#include "solang/families.hpp"
#include "solang/json_io.hpp"
#include "solang/solidpoly.hpp"
#include "solang/valuation.hpp"
#include "solang/verify.hpp"

using namespace solang;

namespace {

constexpr int kExitOk = 0;
constexpr int kExitUsage = 1;
constexpr int kExitViolation = 2;

struct GlobalOptions {
  std::string policy_name = "exact";
  std::uint64_t mc_samples = 1'000'000;
  std::uint64_t seed = 0;
  double tol = 1e-9;
  bool pretty = false;
  bool timing = false;

  EnginePolicy policy() const {
    EnginePolicy p = EnginePolicy::from_name(policy_name);
    p.mc_samples = mc_samples;
    p.seed = seed;
    p.tol = tol;
    return p;
  }
};

struct InputOptions {
  std::string file;
  std::string family;
  long h = 1;
  int d = 3;
  std::string pi;
  std::string hlist;
  std::string a = "0", b = "1";
};

std::vector<long> parse_long_list(const std::string& s) {
  std::vector<long> out;
  std::stringstream ss(s);
  std::string item;
  while (std::getline(ss, item, ',')) out.push_back(std::stol(item));
  return out;
}

FamilySpec family_spec_from(const InputOptions& in) {
  FamilySpec spec;
  spec.name = family_by_name(in.family);
  spec.h = in.h;
  spec.d = in.d;
  if (!in.pi.empty())
    for (long x : parse_long_list(in.pi)) spec.pi.push_back(static_cast<int>(x));
  if (!in.hlist.empty()) spec.h_list = parse_long_list(in.hlist);
  spec.a = parse_rational(in.a);
  spec.b = parse_rational(in.b);
  return spec;
}

Polytope load_polytope(const InputOptions& in) {
  if (!in.family.empty()) return build(family_spec_from(in));
  if (!in.file.empty()) return read_polytope_file(in.file);
  throw ValidationError("provide a polytope via --file or --family");
}

std::string digest_polytope(const Polytope& p) {
  std::uint64_t h = 0xCBF29CE484222325ULL;
  auto feed = [&h](const std::string& s) {
    for (unsigned char ch : s) {
      h ^= ch;
      h *= 0x100000001B3ULL;
    }
  };
  for (const auto& v : p.vertices())
    for (const auto& c : v) feed(rational_to_string(c));
  std::ostringstream os;
  os << std::hex << h;
  return os.str();
}

json report_shell(const std::string& command, const Polytope& p, const GlobalOptions& g) {
  return json{
      {"command", command},
      {"input", {{"dim", p.dim()},
                 {"vertex_count", p.vertices().size()},
                 {"digest", digest_polytope(p)}}},
      {"policy", {{"engine", g.policy_name},
                  {"mc_samples", g.mc_samples},
                  {"seed", g.seed},
                  {"tol", g.tol}}},
  };
}

void emit(const json& j, const GlobalOptions& g) {
  std::cout << (g.pretty ? j.dump(2) : j.dump()) << "\n";
}

json rational_list(const std::vector<Rational>& v) {
  json out = json::array();
  for (const auto& c : v) out.push_back(rational_to_string(c));
  return out;
}

void add_input_options(CLI::App* cmd, InputOptions& in) {
  cmd->add_option("--file", in.file, "polytope JSON file, or - for stdin");
  cmd->add_option("--family", in.family,
                  "built-in family: reeve|permutation|cube|delta|regular-tetrahedron|simplex|"
                  "half-prism|interval");
  cmd->add_option("--h", in.h, "family parameter h");
  cmd->add_option("--d", in.d, "family dimension");
  cmd->add_option("--pi", in.pi, "permutation, comma separated");
  cmd->add_option("--hlist", in.hlist, "delta slopes h_1..h_{d-1}, comma separated");
  cmd->add_option("--a", in.a, "interval left endpoint (rational)");
  cmd->add_option("--b", in.b, "interval right endpoint (rational)");
}

json solid_poly_json(const SolidPolynomial& sp) {
  json exact = json::array();
  for (const auto& e : sp.exact) exact.push_back(e ? json(rational_to_string(*e)) : json(nullptr));
  return json{{"coefficients", sp.coeffs},
              {"errors", sp.errors},
              {"exact", std::move(exact)},
              {"parity_enforced", sp.parity_enforced},
              {"provenance", sp.provenance},
              {"dim", sp.dim}};
}

json quasi_json(const SolidQuasiPolynomial& q) {
  return json{{"period", q.period},
              {"constituents", q.constituents},
              {"errors", q.errors},
              {"provenance", q.provenance},
              {"minimal_period", q.minimal_period()},
              {"coefficient_periods", q.coefficient_periods()}};
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"solid-angle and lattice-point polynomials of rational polytopes"};
  app.require_subcommand(1);
  // --h is a family parameter, so help stays on --help only
  app.set_help_flag("--help", "print help");

  GlobalOptions g;
  if (const char* env = std::getenv("SOLANG_POLICY")) g.policy_name = env;
  app.add_option("--policy", g.policy_name, "angle engine for quotient dimension >= 4")
      ->check(CLI::IsMember({"exact", "aomoto", "mc"}));
  app.add_option("--mc-samples", g.mc_samples, "Monte Carlo sample count");
  app.add_option("--seed", g.seed, "Monte Carlo seed");
  app.add_option("--tol", g.tol, "tolerance for exact-engine identities");
  app.add_flag("--pretty", g.pretty, "indent JSON output");
  app.add_flag("--json", "compact JSON output (default)");
  app.add_flag("--timing", g.timing, "include wall time (breaks byte determinism)");

  InputOptions in;

  auto add_sub = [](CLI::App* parent, const char* name, const char* desc) {
    auto* s = parent->add_subcommand(name, desc);
    s->set_help_flag("--help", "print help");
    s->fallthrough();  // global flags may follow the subcommand
    return s;
  };

  auto* cmd_family = add_sub(&app, "family", "emit a built-in polytope as JSON");
  std::string family_positional;
  cmd_family->add_option("name", family_positional, "family name")->required();
  add_input_options(cmd_family, in);

  auto* cmd_ehrhart = add_sub(&app, "ehrhart", "lattice-count (quasi)polynomial");
  add_input_options(cmd_ehrhart, in);

  auto* cmd_hstar = add_sub(&app, "hstar", "numerator of the lattice-count series");
  add_input_options(cmd_hstar, in);

  auto* cmd_solid = add_sub(&app, "solidpoly", "solid-angle (quasi)polynomial");
  add_input_options(cmd_solid, in);

  auto* cmd_numerator = add_sub(&app, "numerator", "numerator of the solid-angle series");
  add_input_options(cmd_numerator, in);

  auto* cmd_vertexsum = add_sub(&app, "vertexsum", "sum of vertex solid angles");
  add_input_options(cmd_vertexsum, in);

  auto* cmd_gram = add_sub(&app, "gram-check", "alternating face-angle sum residual");
  add_input_options(cmd_gram, in);

  auto* cmd_period = add_sub(&app, "period", "period-collapse report");
  add_input_options(cmd_period, in);

  auto* cmd_angle = add_sub(&app, "angle", "solid angle at a point");
  std::string point_str;
  cmd_angle->add_option("--point", point_str, "comma-separated rational coordinates")->required();
  add_input_options(cmd_angle, in);

  auto* cmd_val = add_sub(&app, "valuation", "generic valuation generating functions");
  cmd_val->require_subcommand(1);
  std::string val_name = "solid";
  auto* val_num = add_sub(cmd_val, "numerator", "numerator of the valuation series");
  val_num->add_option("--val", val_name, "solid|indicator");
  add_input_options(val_num, in);
  auto* val_mono = add_sub(cmd_val, "monotone", "compare numerators of nested polytopes");
  std::string mono_p, mono_q;
  val_mono->add_option("inner", mono_p, "inner polytope JSON file")->required();
  val_mono->add_option("outer", mono_q, "outer polytope JSON file")->required();
  val_mono->add_option("--val", val_name, "solid|indicator");
  auto* val_pi = add_sub(cmd_val, "pi-numerator",
                         "numerator from the half-open parallelepiped");
  std::string pi_file;
  val_pi->add_option("simplex", pi_file, "lattice simplex JSON file")->required();
  val_pi->add_option("--val", val_name, "solid|indicator");

  auto* cmd_verify = add_sub(&app, "verify", "run the theorem-verification suite");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    return app.exit(e) == 0 ? kExitOk : kExitUsage;
  }

  try {
    EnginePolicy policy = g.policy();

    if (cmd_family->parsed()) {
      in.family = family_positional;
      emit(polytope_to_json(build(family_spec_from(in))), g);
      return kExitOk;
    }

    if (cmd_ehrhart->parsed()) {
      Polytope p = load_polytope(in);
      auto q = fit_ehrhart(p);
      json rep = report_shell("ehrhart", p, g);
      if (q.is_polynomial()) {
        rep["outputs"] = {{"coefficients", rational_list(q.polynomial())}};
      } else {
        json cons = json::array();
        for (const auto& c : q.constituents) cons.push_back(rational_list(c));
        rep["outputs"] = {{"period", q.period},
                          {"constituents", std::move(cons)},
                          {"minimal_period", q.minimal_period()}};
      }
      emit(rep, g);
      return kExitOk;
    }

    if (cmd_hstar->parsed()) {
      Polytope p = load_polytope(in);
      auto h = hstar(p);
      json rep = report_shell("hstar", p, g);
      json entries = json::array();
      for (const auto& e : h.entries) entries.push_back(e.str());
      rep["outputs"] = {{"entries", std::move(entries)}, {"violations", h.violations}};
      emit(rep, g);
      return h.violations.empty() ? kExitOk : kExitViolation;
    }

    if (cmd_solid->parsed()) {
      Polytope p = load_polytope(in);
      json rep = report_shell("solidpoly", p, g);
      if (lcm_of_denominators(p.vertices()) == 1) {
        rep["outputs"] = solid_poly_json(fit_solid(p, policy));
      } else {
        rep["outputs"] = quasi_json(fit_solid_quasi(p, policy));
      }
      emit(rep, g);
      return kExitOk;
    }

    if (cmd_numerator->parsed()) {
      Polytope p = load_polytope(in);
      auto nv = solid_numerator(p, policy);
      json rep = report_shell("numerator", p, g);
      rep["outputs"] = numerator_to_json(nv);
      emit(rep, g);
      return nv.violations.empty() ? kExitOk : kExitViolation;
    }

    if (cmd_vertexsum->parsed()) {
      Polytope p = load_polytope(in);
      json rep = report_shell("vertexsum", p, g);
      json per_vertex = json::array();
      double total = 0.0, err = 0.0;
      for (const auto& v : p.vertices()) {
        AngleValue a = solid_angle(p, v, policy);
        total += a.value;
        err += a.abs_error;
        per_vertex.push_back(angle_to_json(a));
      }
      rep["outputs"] = {{"value", total}, {"abs_error", err}, {"per_vertex", per_vertex}};
      emit(rep, g);
      return kExitOk;
    }

    if (cmd_gram->parsed()) {
      Polytope p = load_polytope(in);
      auto gc = brianchon_gram_residual(p, policy);
      bool pass = gc.residual <= std::max(policy.tol, gc.error_bound);
      json rep = report_shell("gram-check", p, g);
      rep["outputs"] = {{"residual", gc.residual},
                        {"error_bound", gc.error_bound},
                        {"pass", pass}};
      emit(rep, g);
      return pass ? kExitOk : kExitViolation;
    }

    if (cmd_period->parsed()) {
      Polytope p = load_polytope(in);
      auto pr = period_report(p, policy);
      json rep = report_shell("period", p, g);
      json collapsed_coeffs = json::array();
      for (const auto& c : pr.collapsed_coefficients)
        collapsed_coeffs.push_back(c ? json(rational_to_string(*c)) : json(nullptr));
      rep["outputs"] = {{"declared_period", pr.declared_period},
                        {"quasipolynomial", quasi_json(pr.quasi)},
                        {"collapsed", pr.collapsed},
                        {"coefficient_periods", pr.coefficient_periods},
                        {"j_indices", pr.j_indices},
                        {"period_divides_j_index", pr.period_divides_j_index},
                        {"coefficient_is_zero", pr.coefficient_is_zero},
                        {"collapsed_coefficients", std::move(collapsed_coeffs)}};
      emit(rep, g);
      return kExitOk;
    }

    if (cmd_angle->parsed()) {
      Polytope p = load_polytope(in);
      RVec x;
      std::stringstream ss(point_str);
      std::string item;
      while (std::getline(ss, item, ',')) x.push_back(parse_rational(item));
      if (static_cast<int>(x.size()) != p.dim())
        throw ValidationError("point dimension does not match the polytope");
      json rep = report_shell("angle", p, g);
      rep["outputs"] = angle_to_json(solid_angle(p, x, policy));
      emit(rep, g);
      return kExitOk;
    }

    if (val_num->parsed()) {
      Polytope p = load_polytope(in);
      auto nv = g_numerator(p, valuation_by_name(val_name), policy);
      json rep = report_shell("valuation numerator", p, g);
      rep["outputs"] = numerator_to_json(nv);
      rep["outputs"]["valuation"] = val_name;
      emit(rep, g);
      return nv.violations.empty() ? kExitOk : kExitViolation;
    }

    if (val_mono->parsed()) {
      Polytope p = read_polytope_file(mono_p);
      Polytope q = read_polytope_file(mono_q);
      auto rep_m = monotonicity_compare(p, q, valuation_by_name(val_name), policy);
      json rep = report_shell("valuation monotone", p, g);
      rep["outputs"] = {{"valuation", val_name},
                        {"inner", numerator_to_json(rep_m.inner)},
                        {"outer", numerator_to_json(rep_m.outer)},
                        {"holds", rep_m.holds},
                        {"violated_indices", rep_m.violated_indices}};
      emit(rep, g);
      return rep_m.holds ? kExitOk : kExitViolation;
    }

    if (val_pi->parsed()) {
      Polytope p = read_polytope_file(pi_file);
      auto nv = parallelepiped_numerator(p, valuation_by_name(val_name), policy);
      json rep = report_shell("valuation pi-numerator", p, g);
      rep["outputs"] = numerator_to_json(nv);
      rep["outputs"]["valuation"] = val_name;
      rep["outputs"]["half_open_counts"] = half_open_parallelepiped_counts(p);
      emit(rep, g);
      return nv.violations.empty() ? kExitOk : kExitViolation;
    }

    if (cmd_verify->parsed()) {
      auto suite = run_verification(policy, &std::cerr);
      json rows = json::array();
      for (const auto& r : suite.results) {
        json row{{"id", r.id},
                 {"statement", r.statement},
                 {"pass", r.pass},
                 {"detail", r.detail}};
        if (g.timing) row["seconds"] = r.seconds;
        rows.push_back(std::move(row));
      }
      json rep{{"command", "verify"},
               {"policy", {{"engine", g.policy_name},
                           {"mc_samples", g.mc_samples},
                           {"seed", g.seed},
                           {"tol", g.tol}}},
               {"checks", std::move(rows)},
               {"all_pass", suite.all_pass()}};
      emit(rep, g);
      return suite.all_pass() ? kExitOk : kExitViolation;
    }
  } catch (const EngineAccuracyError& e) {
    std::cerr << "engine accuracy: " << e.what() << "\n";
    return kExitViolation;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitUsage;
  }
  return kExitUsage;
}
