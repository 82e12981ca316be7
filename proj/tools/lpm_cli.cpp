// Command-line front end. Every subcommand builds one JSON report; markdown is
// rendered from that same object. Exit status: 0 ok, 1 computation failure or
// mismatch, 2 usage error.

#include <fstream>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "lpm/report/json.hpp"
#include "lpm/report/markdown.hpp"

using namespace lpm;

namespace {

struct Output {
  std::string format = "json";
  std::string path;
};

// Status carried alongside a report; mismatches still print the report.
struct Result {
  Json report;
  bool ok = true;
};

std::vector<std::string> split(const std::string& s, char sep) {
  std::vector<std::string> out;
  std::stringstream ss(s);
  std::string item;
  while (std::getline(ss, item, sep))
    if (!item.empty()) out.push_back(item);
  return out;
}

IntVec parse_int_list(const std::string& s) {
  IntVec v;
  for (const auto& x : split(s, ',')) v.push_back(Int(x));
  return v;
}

// "name=value" pairs, value split further by the caller.
std::pair<std::string, std::string> parse_assignment(const std::string& s) {
  auto eq = s.find('=');
  if (eq == std::string::npos || eq == 0) throw CLI::ValidationError("expected name=value, got " + s);
  return {s.substr(0, eq), s.substr(eq + 1)};
}

// Root variables for computed face reports when none are given: the variable
// of each built-in family attached to its simple root.
std::map<std::string, IntVec> default_root_variables(const std::string& family, const Degree& d) {
  if (family == "f2" && d.str() == "8'") return {{"x", {-1, 1}}};
  throw AlgebraError("no default root variables for family " + family + " in degree " + d.str() +
                     "; pass --root-variable name=v1,v2,...");
}

void emit(const Output& out, const Json& report) {
  std::string text = out.format == "md" ? render_markdown(report) + "\n" : report.dump(2) + "\n";
  if (out.path.empty()) {
    std::cout << text;
    return;
  }
  std::ofstream f(out.path);
  if (!f) throw AlgebraError("cannot write " + out.path);
  f << text;
}

Result run_tables() {
  Json j = to_json(reproduce_tables());
  return {j, j.at("all_match").get<bool>()};
}

Result run_roots(const std::string& lattice, const std::string& functional) {
  IntegralLattice l = load_lattice(lattice);
  std::optional<Functional> fn;
  if (!functional.empty()) {
    fn = Functional{parse_int_list(functional), true};
    if (fn->weights.size() != l.rank()) throw AlgebraError("functional length differs from the lattice rank");
  }
  return {to_json(root_system(l, fn))};
}

Result run_cone(const std::string& degree, const std::string& spec) {
  auto pair = del_pezzo_pair(Degree::parse(degree));
  return {cone_json(parse_polarization(pair, spec), spec)};
}

Result run_mirror(const std::string& degree, const std::string& spec) {
  Degree d = Degree::parse(degree);
  auto pol = parse_polarization(del_pezzo_pair(d), spec);
  auto embs = enumerate_embeddings(d);
  Json j = to_json(mirror_lattice(d, pol.sublattice, embs.at(0)));
  j["polarization"] = spec;
  j["embedding_classes"] = embs.size();
  j["admissible_orbits"] = to_json(admissible_orbits(pol), *pol.pair.picard);
  return {j};
}

struct StrataArgs {
  std::string degree, polarization = "zero", loci, computed, generic = "x=3,y=5";
  std::vector<std::string> root_variables;
};

Result run_strata(const StrataArgs& a) {
  Degree d = Degree::parse(a.degree);
  auto pair = del_pezzo_pair(d);
  auto base = parse_polarization(pair, a.polarization);
  StrataPoset strata = strata_poset(d, base.sublattice);
  Json j = to_json(strata);
  j["polarization"] = a.polarization;
  auto full = parse_polarization(pair, "full");
  j["admissible_orbits"] = to_json(admissible_orbits(full), *pair.picard);
  if (a.loci.empty() && a.computed.empty()) return {j};

  // face reports pair the strata of f_d^perp with the nef faces of the full polarization
  if (a.polarization != "zero") throw AlgebraError("face reports need the strata of f_d^perp (--polarization zero)");
  FaceSubfamilyReport rep;
  if (!a.loci.empty()) {
    LociInput in = loci_from_json(read_json_file(a.loci));
    rep = face_subfamily_report(full, strata, in.root_variables, in.loci, in.mode);
  } else {
    PencilFamily f = load_family(a.computed);
    if (f.degree.str() != d.str()) throw AlgebraError("family " + f.name + " has degree " + f.degree.str());
    std::map<std::string, IntVec> rv;
    for (const auto& s : a.root_variables) {
      auto [name, value] = parse_assignment(s);
      rv[name] = parse_int_list(value);
    }
    if (rv.empty()) rv = default_root_variables(a.computed, d);
    ParamValues generic;
    for (const auto& s : split(a.generic, ',')) {
      auto [name, value] = parse_assignment(s);
      generic[name] = parse_rat(value);
    }
    MultiPoly delta = singular_fiber_polynomial(f);
    rep = face_subfamily_report(full, strata, rv, computed_loci(f, delta, generic), "computed");
  }
  j["faces"] = to_json(rep);
  return {j, rep.one_to_one()};
}

Result run_theta(const std::string& config, const std::string& counts_file) {
  CycleConfig c = load_cycle(config);
  CountTable counts;
  if (!counts_file.empty()) counts = counts_from_json(read_json_file(counts_file));
  Json missing = missing_counts_json(c, counts);
  if (!missing.empty()) {
    Json j{{"report", "theta"}, {"config", c.name}, {"status", "missing-counts"}, {"missing_counts", missing}};
    return {j, false};
  }
  Json j = to_json(presentation(c, counts), c);
  j["status"] = "ok";
  return {j};
}

struct FibrationArgs {
  std::string family, x, y, at_locus;
  std::vector<std::string> params;
  bool symbolic = false, surface = false;
};

Result run_fibration(const FibrationArgs& a) {
  PencilFamily f = load_family(a.family);
  Json j{{"report", "fibration"}, {"family", f.name}, {"degree", f.degree.str()}};
  MultiPoly delta = singular_fiber_polynomial(f);
  if (a.symbolic) {
    j["mode"] = "symbolic";
    j["singular_fiber_polynomial"] = delta.str();
    j["collision"] = to_json(collision_locus(f, delta));
    return {j};
  }
  ParamValues pv;
  if (!a.at_locus.empty()) {
    MultiPoly locus = parse_poly(a.at_locus, f.params);
    if (locus.vars() != f.params) throw AlgebraError("locus " + a.at_locus + " uses a variable that is not a parameter");
    pv = witness_on_locus(f, locus);
    j["mode"] = "at-locus";
    j["locus"] = locus.primitive_part().str();
  } else {
    if (!a.x.empty()) pv["x"] = parse_rat(a.x);
    if (!a.y.empty()) pv["y"] = parse_rat(a.y);
    for (const auto& s : a.params) {
      auto [name, value] = parse_assignment(s);
      pv[name] = parse_rat(value);
    }
    j["mode"] = "point";
  }
  FiberReport rep = classify_fibers(f, delta, pv);
  j["fibers"] = to_json(rep);
  if (a.surface) j["surface_singularities"] = to_json(surface_singular_points(f, pv));
  return {j, rep.consistent && rep.all_classified};
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Lattice-polarized del Pezzo and rational elliptic surface computations"};
  app.require_subcommand(1);
  app.fallthrough();  // global flags may follow the subcommand
  Output out;
  app.add_option("--format", out.format, "Output format")->check(CLI::IsMember({"json", "md"}));
  app.add_option("--out", out.path, "Write the report to this file instead of stdout");

  auto* tables = app.add_subcommand("tables", "Reproduce the F_d^perp and f_d^perp lattice tables");

  std::string lattice, functional;
  auto* roots = app.add_subcommand("roots", "Root system of a lattice");
  roots->add_option("--lattice", lattice, "Built-in lattice name or lattice JSON file")->required();
  roots->add_option("--functional", functional, "Comma-separated weights choosing positive roots");

  std::string degree, polarization = "full";
  auto* cone = app.add_subcommand("cone", "Effective and nef cones of a polarized del Pezzo surface");
  cone->add_option("--degree", degree, "1..9 or 8'")->required();
  cone->add_option("--polarization", polarization, "full, zero, simple:i,j or roots:v;w");

  std::string mirror_pol;
  auto* mirror = app.add_subcommand("mirror", "Mirror lattice of a polarizing lattice");
  mirror->add_option("--degree", degree, "1..9 or 8'")->required();
  mirror->add_option("--polarization", mirror_pol, "full, zero, simple:i,j or roots:v;w")->required();

  StrataArgs sa;
  auto* strata = app.add_subcommand("strata", "Stratification poset of the moduli of L-polarized surfaces");
  strata->add_option("--degree", sa.degree, "1..9 or 8'")->required();
  strata->add_option("--polarization", sa.polarization, "Base lattice L, default zero");
  auto* loci_opt = strata->add_option("--loci", sa.loci, "Subfamily loci JSON (input-data face report)");
  auto* comp_opt = strata->add_option("--computed", sa.computed, "Family whose loci are computed (face report)");
  loci_opt->excludes(comp_opt);
  strata->add_option("--root-variable", sa.root_variables, "name=v1,v2,... attaching a variable to a simple root");
  strata->add_option("--generic", sa.generic, "Generic parameter point for --computed, e.g. x=3,y=5");

  std::string config, counts;
  auto* theta = app.add_subcommand("theta", "Theta-function presentation of a cycle configuration");
  theta->add_option("--config", config, "f2, p1p1, f1, dp6 or a cycle JSON file")->required();
  theta->add_option("--counts", counts, "Curve counts JSON");

  FibrationArgs fa;
  auto* fib = app.add_subcommand("fibration", "Singular fibers of a pencil family");
  fib->add_option("--family", fa.family, "f2, p1p1, f1 or a family JSON file")->required();
  auto* ox = fib->add_option("--x", fa.x, "Value of parameter x");
  auto* oy = fib->add_option("--y", fa.y, "Value of parameter y");
  auto* op = fib->add_option("--param", fa.params, "name=value for other parameters");
  auto* os = fib->add_flag("--symbolic", fa.symbolic, "Discriminant over the parameter space and its collision locus");
  auto* ol = fib->add_option("--at-locus", fa.at_locus, "Classify at a rational witness of this parameter locus");
  fib->add_flag("--surface", fa.surface, "Also list singular points of the projective closure");
  os->excludes(ox)->excludes(oy)->excludes(op)->excludes(ol);
  ol->excludes(ox)->excludes(oy)->excludes(op);

  bool all = false, timings = false;
  auto* verify = app.add_subcommand("verify", "Run the acceptance checks");
  verify->add_flag("--all", all, "Run every check")->required();
  verify->add_flag("--timings", timings, "Include per-check wall time (not byte-stable)");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    int code = app.exit(e);
    return code == 0 ? 0 : 2;
  }

  try {
    Result r;
    if (*tables) r = run_tables();
    else if (*roots) r = run_roots(lattice, functional);
    else if (*cone) r = run_cone(degree, polarization);
    else if (*mirror) r = run_mirror(degree, mirror_pol);
    else if (*strata) r = run_strata(sa);
    else if (*theta) r = run_theta(config, counts);
    else if (*fib) r = run_fibration(fa);
    else if (*verify) {
      VerificationSuite s = run_verification();
      r = {to_json(s, timings), s.ok()};
    }
    emit(out, r.report);
    return r.ok ? 0 : 1;
  } catch (const CLI::ValidationError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 1;
  }
}
