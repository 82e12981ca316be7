#pragma once

#include <fstream>
#include <sstream>
#include <string>
#include <vector>

#include <json.hpp>

#include "lpm/fibration/faces.hpp"
#include "lpm/fibration/family.hpp"
#include "lpm/lattice/standard.hpp"
#include "lpm/theta/theta.hpp"

namespace lpm {

using Json = nlohmann::ordered_json;

inline Json read_json_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw AlgebraError("cannot open " + path);
  try {
    return Json::parse(in);
  } catch (const nlohmann::json::exception& e) {
    throw AlgebraError("malformed JSON in " + path + ": " + e.what());
  }
}

inline bool looks_like_path(const std::string& s) {
  return s.find('/') != std::string::npos || (s.size() > 5 && s.substr(s.size() - 5) == ".json");
}

inline IntVec int_vec_from_json(const Json& j) {
  if (!j.is_array()) throw AlgebraError("expected an integer array");
  IntVec v;
  for (const auto& x : j) {
    if (x.is_number_integer()) v.push_back(Int(x.get<long>()));
    else if (x.is_string()) v.push_back(Int(x.get<std::string>()));
    else throw AlgebraError("expected an integer array");
  }
  return v;
}

/// {"labels": [...], "gram": [[...], ...]} with an optional "name".
inline IntegralLattice lattice_from_json(const Json& j) {
  if (!j.contains("gram")) throw AlgebraError("lattice JSON needs a gram field");
  const auto& rows = j.at("gram");
  IntMatrix g(rows.size(), rows.size());
  for (std::size_t i = 0; i < rows.size(); ++i) {
    IntVec r = int_vec_from_json(rows[i]);
    if (r.size() != rows.size()) throw AlgebraError("gram matrix is not square");
    for (std::size_t k = 0; k < r.size(); ++k) g(i, k) = r[k];
  }
  std::vector<std::string> labels;
  if (j.contains("labels")) labels = j.at("labels").get<std::vector<std::string>>();
  return IntegralLattice(g, labels, j.value("name", std::string("custom")));
}

/// A built-in lattice name or a path to a lattice JSON file.
inline IntegralLattice load_lattice(const std::string& spec) {
  if (looks_like_path(spec)) return lattice_from_json(read_json_file(spec));
  return standard_lattice(spec);
}

/// Cycle JSON: {"name", "lattice": <name or lattice object>, "components": [[...]],
/// "monoid": [{"label": "x", "class": [...]}, ...]}.
inline CycleConfig cycle_from_json(const Json& j) {
  CycleConfig c;
  c.name = j.value("name", std::string("custom"));
  const auto& lat = j.at("lattice");
  c.picard = share(lat.is_string() ? standard_lattice(lat.get<std::string>()) : lattice_from_json(lat));
  for (const auto& v : j.at("components")) c.components.push_back(int_vec_from_json(v));
  for (const auto& g : j.at("monoid")) {
    c.monoid_labels.push_back(g.at("label").get<std::string>());
    c.monoid_generators.push_back(int_vec_from_json(g.at("class")));
  }
  c.validate();
  return c;
}

inline CycleConfig load_cycle(const std::string& spec) {
  if (looks_like_path(spec)) return cycle_from_json(read_json_file(spec));
  return builtin_config(spec);
}

/// {"counts": [{"p": [...], "q": [...], "m": [...], "r": [...], "count": n}, ...]}
inline CountTable counts_from_json(const Json& j) {
  CountTable t;
  for (const auto& e : j.at("counts"))
    t[CountKey{int_vec_from_json(e.at("p")), int_vec_from_json(e.at("q")), int_vec_from_json(e.at("m")),
               int_vec_from_json(e.at("r"))}] = e.at("count").get<long>();
  return t;
}

/// {"name", "degree", "params": [...], "relations": [r1, r2]} in the polynomial grammar.
inline PencilFamily family_from_json(const Json& j) {
  auto rels = j.at("relations").get<std::vector<std::string>>();
  if (rels.size() != 2) throw AlgebraError("a pencil family needs exactly two relations");
  return make_family(j.value("name", std::string("custom")), Degree::parse(j.at("degree").get<std::string>()),
                     j.at("params").get<std::vector<std::string>>(), rels[0], rels[1]);
}

inline PencilFamily load_family(const std::string& spec) {
  if (looks_like_path(spec)) return family_from_json(read_json_file(spec));
  return builtin_family(spec);
}

/// Subfamily loci: {"mode", "variables": [...], "root_variables": {"x": [...]},
/// "loci": [{"name", "equations": [...], "fibers": [...]}]}.
struct LociInput {
  std::string mode;
  std::map<std::string, IntVec> root_variables;
  std::vector<SubfamilyLocus> loci;
};

inline LociInput loci_from_json(const Json& j) {
  LociInput in;
  in.mode = j.value("mode", std::string("input-data"));
  auto vars = j.at("variables").get<std::vector<std::string>>();
  for (const auto& [k, v] : j.at("root_variables").items()) in.root_variables[k] = int_vec_from_json(v);
  for (const auto& l : j.at("loci")) {
    SubfamilyLocus s{l.at("name").get<std::string>(), {}, l.at("fibers").get<std::vector<std::string>>(), in.mode};
    for (const auto& e : l.at("equations")) {
      MultiPoly q = parse_poly(e.get<std::string>(), vars);
      if (q.vars() != vars) throw AlgebraError("locus equation " + e.get<std::string>() + " uses an undeclared variable");
      s.equations.push_back(std::move(q));
    }
    in.loci.push_back(std::move(s));
  }
  return in;
}

}  // namespace lpm
