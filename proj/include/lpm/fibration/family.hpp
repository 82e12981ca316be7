#pragma once

#include <map>
#include <string>
#include <vector>

#include "lpm/exact/poly.hpp"
#include "lpm/lattice/degree.hpp"
#include "lpm/theta/theta.hpp"

namespace lpm {

/// Two relations in a, b, c, d and parameters, fibred by a + b + c + d = t.
struct PencilFamily {
  std::string name;
  Degree degree;                    // type of the fibre at infinity
  std::vector<std::string> params;  // e.g. x, y
  MultiPoly g1, g2;                 // over vars() below
  std::vector<MultiPoly> excluded;  // parameter polynomials that must not vanish

  static const std::vector<std::string>& coords() {
    static const std::vector<std::string> v{"a", "b", "c", "d"};
    return v;
  }

  std::vector<std::string> vars() const {
    std::vector<std::string> v = coords();
    v.insert(v.end(), params.begin(), params.end());
    return v;
  }

  /// Euler number carried by the finite singular fibres: 12 - d, with 8' as 8.
  long euler_budget() const { return 12 - degree.d; }

  /// Variable names are distinct from t and each other; the Jacobian in
  /// (a, b, c, d) has a nonzero 2x2 minor as a polynomial.
  void validate() const {
    for (const auto& p : params) {
      if (p == "t") throw AlgebraError("parameter name t collides with the pencil variable");
      for (const auto& c : coords())
        if (p == c) throw AlgebraError("parameter name " + p + " collides with a coordinate");
    }
    for (const auto* g : {&g1, &g2})
      for (const auto& v : g->used_vars())
        if (v == "t") throw AlgebraError("relations must not involve t");
    for (std::size_t i = 0; i < 4; ++i)
      for (std::size_t j = i + 1; j < 4; ++j) {
        const auto& u = coords()[i];
        const auto& w = coords()[j];
        MultiPoly minor = g1.derivative(u) * g2.derivative(w) - g1.derivative(w) * g2.derivative(u);
        if (!minor.is_zero()) return;
      }
    throw AlgebraError("relations of family " + name + " do not cut out a surface");
  }
};

/// Builds a family from relation strings over a, b, c, d and the given parameters.
inline PencilFamily make_family(const std::string& name, const Degree& degree, const std::vector<std::string>& params,
                                const std::string& r1, const std::string& r2) {
  PencilFamily f{name, degree, params, {}, {}, {}};
  auto vars = f.vars();
  f.g1 = parse_poly(r1, vars);
  f.g2 = parse_poly(r2, vars);
  if (f.g1.vars() != vars || f.g2.vars() != vars)
    throw AlgebraError("relations use symbols outside a, b, c, d and the declared parameters");
  for (const auto& p : params) f.excluded.push_back(MultiPoly::variable(p, vars));
  f.validate();
  return f;
}

inline PencilFamily builtin_family(const std::string& name) {
  if (name == "f2") return make_family("f2", Degree::parse("8'"), {"x", "y"}, "a*c - y", "b*d - x*a^2");
  if (name == "p1p1") return make_family("p1p1", Degree::parse("8'"), {"x", "y"}, "a*c - y", "b*d - x");
  if (name == "f1") return make_family("f1", Degree::parse("8"), {"x", "y"}, "a*c - y", "b*d - x*a");
  throw AlgebraError("unknown family " + name);
}

/// Family from a four-generator theta presentation; monoid variables become parameters.
inline PencilFamily family_from_presentation(const std::string& name, const Degree& degree,
                                             const ThetaPresentation& p) {
  if (p.generators.size() != 4 || p.relations.size() != 2)
    throw AlgebraError("pencil families need four generators and two relations");
  PencilFamily f{name, degree, p.monoid_vars, {}, {}, {}};
  auto vars = f.vars();
  f.g1 = p.relations[0].with_vars(vars);
  f.g2 = p.relations[1].with_vars(vars);
  for (const auto& v : p.monoid_vars) f.excluded.push_back(MultiPoly::variable(v, vars));
  f.validate();
  return f;
}

}  // namespace lpm
