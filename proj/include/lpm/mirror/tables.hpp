#pragma once

#include <string>
#include <vector>

#include "lpm/lattice/isometry.hpp"
#include "lpm/lattice/standard.hpp"
#include "lpm/roots/roots.hpp"

namespace lpm {

/// Gram matrix of an extended Dynkin diagram ~X_n: the finite diagram plus the
/// node of minus the highest root. ~A1 is the two-node diagram with a double bond.
inline IntMatrix affine_dynkin_gram(const std::string& label) {
  auto [kind, n] = detail::parse_component_label(label);
  const std::size_t m = static_cast<std::size_t>(n) + 1;
  IntMatrix g(m, m);
  for (std::size_t i = 0; i < m; ++i) g(i, i) = -2;
  auto link = [&](std::size_t i, std::size_t j, int w = 1) { g(i, j) = g(j, i) = w; };
  if (kind == 'A') {
    if (n == 1) {
      link(0, 1, 2);
      return g;
    }
    for (std::size_t i = 0; i < m; ++i) link(i, (i + 1) % m);
    return g;
  }
  if (kind == 'D') {
    if (n < 4) throw AlgebraError("bad affine label ~" + label);
    // chain 1..n-1 with forks at both ends: nodes 0,1 hang off 2; n-1,n hang off n-2
    for (std::size_t i = 2; i + 2 < m; ++i) link(i, i + 1);
    link(0, 2);
    link(1, 2);
    link(m - 3, m - 2);
    link(m - 3, m - 1);
    return g;
  }
  if (kind == 'E' && n == 6) {
    // star with three arms of length 2
    link(0, 1), link(1, 2), link(2, 3), link(3, 4), link(2, 5), link(5, 6);
    return g;
  }
  if (kind == 'E' && n == 7) {
    // arms 3, 3, 1 around node 3
    for (std::size_t i = 0; i + 1 < 7; ++i) link(i, i + 1);
    link(3, 7);
    return g;
  }
  if (kind == 'E' && n == 8) {
    // arms 5, 2, 1 around node 5 (0-indexed chain of 8 plus a leg)
    for (std::size_t i = 0; i + 1 < 8; ++i) link(i, i + 1);
    link(5, 8);
    return g;
  }
  throw AlgebraError("bad affine label ~" + label);
}

inline IntMatrix block_sum(const IntMatrix& a, const IntMatrix& b) {
  IntMatrix g(a.rows() + b.rows(), a.rows() + b.rows());
  for (std::size_t i = 0; i < a.rows(); ++i)
    for (std::size_t j = 0; j < a.rows(); ++j) g(i, j) = a(i, j);
  for (std::size_t i = 0; i < b.rows(); ++i)
    for (std::size_t j = 0; j < b.rows(); ++j) g(a.rows() + i, a.rows() + j) = b(i, j);
  return g;
}

inline IntMatrix explicit_gram(const std::vector<std::vector<long>>& rows) {
  IntMatrix g(rows.size(), rows.size());
  for (std::size_t i = 0; i < rows.size(); ++i)
    for (std::size_t j = 0; j < rows.size(); ++j) g(i, j) = rows[i][j];
  return g;
}

/// Reference entry of the two lattice tables for one degree.
struct TableEntry {
  Degree degree;
  std::string f_label;  // f_d^perp
  IntMatrix f_gram;
  std::string F_label;  // F_d^perp
  IntMatrix F_gram;
};

inline std::vector<TableEntry> reference_tables() {
  std::vector<TableEntry> out;
  auto fin = [](const std::string& l) { return dynkin_gram(l); };
  auto add = [&](const std::string& d, std::string fl, IntMatrix fg, std::string Fl, IntMatrix Fg) {
    out.push_back({Degree::parse(d), std::move(fl), std::move(fg), std::move(Fl), std::move(Fg)});
  };
  add("1", "E8", fin("E8"), "~E8", affine_dynkin_gram("E8"));
  add("2", "E7", fin("E7"), "~E7", affine_dynkin_gram("E7"));
  add("3", "E6", fin("E6"), "~E6", affine_dynkin_gram("E6"));
  add("4", "D5", fin("D5"), "~D5", affine_dynkin_gram("D5"));
  add("5", "A4", fin("A4"), "~A4", affine_dynkin_gram("A4"));
  add("6", "A2+A1", fin("A2+A1"), "~A2+A1", block_sum(affine_dynkin_gram("A2"), fin("A1")));
  add("7", "[[-2,1],[1,-4]]", explicit_gram({{-2, 1}, {1, -4}}), "[[-2,1,1],[1,-4,3],[1,3,-4]]",
      explicit_gram({{-2, 1, 1}, {1, -4, 3}, {1, 3, -4}}));
  add("8", "(-8)", explicit_gram({{-8}}), "[[-8,8],[8,-8]]", explicit_gram({{-8, 8}, {8, -8}}));
  add("8'", "A1", fin("A1"), "~A1", affine_dynkin_gram("A1"));
  add("9", "{0}", IntMatrix(0, 0), "(0)", explicit_gram({{0}}));
  return out;
}

struct TableRow {
  Degree degree;
  std::string f_label, F_label;
  IntMatrix f_gram;         // computed f_d^perp
  IntMatrix F_gram;         // computed F_d^perp
  std::string F_type;       // affine label of the computed F_d^perp, empty if not a root lattice
  bool f_matches = false;   // f_d^perp isometric to the reference entry
  bool F_rank_ok = false;   // rank 10 - d
  bool radical_is_f0 = false;
  bool F_matches = false;   // F_d^perp isometric to the reference entry
  bool quotient_matches = false;  // F_d^perp / <f_0> isometric to f_d^perp

  bool ok() const { return f_matches && F_rank_ok && radical_is_f0 && F_matches && quotient_matches; }
};

inline IntegralLattice plain_lattice(const IntMatrix& g) { return IntegralLattice(g, {}); }

inline TableRow table_row(const TableEntry& ref) {
  const Degree& d = ref.degree;
  TableRow row{d, ref.f_label, ref.F_label, {}, {}, {}};
  IntegralLattice f = f_perp_lattice(d);
  Sublattice Fs = marking_complement(d);
  IntegralLattice F = Fs.as_lattice();
  row.f_gram = f.gram();
  row.F_gram = F.gram();
  row.f_matches = is_isometric(f, plain_lattice(ref.f_gram)).has_value();
  row.F_rank_ok = F.rank() == static_cast<std::size_t>(10 - d.d);
  auto rq = radical_and_quotient(share(F));
  if (rq.radical.rank() == 1) {
    IntVec r = rq.radical.basis()[0];
    IntVec amb = Fs.ambient()->zero();
    for (std::size_t i = 0; i < r.size(); ++i) amb = amb + r[i] * Fs.basis()[i];
    row.radical_is_f0 = amb == f0_class() || amb == -f0_class();
  }
  if (rq.quotient.rank() == 0) {
    row.F_type = affine_label(rq.radical.rank(), "0");
  } else {
    auto rs = root_system(rq.quotient);
    // only root lattices get a Dynkin label
    row.F_type = rs.simple.size() == rq.quotient.rank() ? affine_label(rq.radical.rank(), rs.type()) : "";
  }
  row.F_matches = is_isometric(F, plain_lattice(ref.F_gram)).has_value();
  row.quotient_matches = is_isometric(rq.quotient, f).has_value();
  return row;
}

inline std::vector<TableRow> reproduce_tables() {
  std::vector<TableRow> out;
  for (const auto& e : reference_tables()) out.push_back(table_row(e));
  return out;
}

}  // namespace lpm
