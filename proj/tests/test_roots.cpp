#include <set>

#include <gtest/gtest.h>

#include "lpm/mirror/tables.hpp"
#include "lpm/roots/roots.hpp"

using namespace lpm;

namespace {

// Closed-form root counts, written out independently of the library.
long expected_roots(char kind, int n) {
  switch (kind) {
    case 'A': return static_cast<long>(n) * (n + 1);
    case 'D': return 2L * n * (n - 1);
    default: return n == 6 ? 72 : n == 7 ? 126 : 240;
  }
}

IntVec reflect(const IntegralLattice& l, const IntVec& v, const IntVec& r) {
  // s_r(v) = v - 2 (v.r)/(r.r) r with r.r = -2
  return v + l.pair(v, r) * r;
}

}  // namespace

class RootCounts : public ::testing::TestWithParam<std::string> {};

TEST_P(RootCounts, EnumerationMatchesClosedForm) {
  const std::string label = GetParam();
  auto rs = root_system(dynkin_lattice(label));
  EXPECT_EQ(static_cast<long>(rs.roots.size()), expected_roots(label[0], std::stoi(label.substr(1))));
  EXPECT_EQ(rs.positive.size() * 2, rs.roots.size());
  EXPECT_EQ(rs.simple.size(), rs.lattice.rank());
  EXPECT_EQ(rs.type(), label);
}

INSTANTIATE_TEST_SUITE_P(Ade, RootCounts,
                         ::testing::Values("A1", "A2", "A3", "A4", "A5", "D4", "D5", "D6", "E6", "E7", "E8"));

TEST(RootSystems, ReflectionsPermuteRoots) {
  for (const char* label : {"A3", "D5", "E6", "A2+A1"}) {
    auto rs = root_system(dynkin_lattice(label));
    std::set<IntVec> all(rs.roots.begin(), rs.roots.end());
    for (const auto& s : rs.simple)
      for (const auto& r : rs.roots) EXPECT_TRUE(all.count(reflect(rs.lattice, r, s))) << label;
  }
}

TEST(RootSystems, PositiveRootsAreNonnegativeCombinationsOfSimple) {
  for (const char* label : {"A4", "D4", "E7"}) {
    auto rs = root_system(dynkin_lattice(label));
    RatMatrix s = to_rational(rows_to_matrix(rs.simple, rs.lattice.rank()));
    for (const auto& p : rs.positive) {
      auto c = solve_row_combination(s, RatVec(p.begin(), p.end()));
      ASSERT_TRUE(c.has_value());
      for (const auto& x : *c) {
        EXPECT_TRUE(is_integer(x));
        EXPECT_GE(x, 0);
      }
    }
  }
}

TEST(RootSystems, SimpleRootsHaveDynkinPairings) {
  auto rs = root_system(f_perp_lattice(Degree::parse("3")));
  EXPECT_EQ(rs.type(), "E6");
  IntMatrix g = simple_gram(rs.lattice, rs.simple);
  for (std::size_t i = 0; i < g.rows(); ++i)
    for (std::size_t j = 0; j < g.rows(); ++j) {
      if (i == j) EXPECT_EQ(g(i, j), -2);
      else EXPECT_TRUE(g(i, j) == 0 || g(i, j) == 1);
    }
}

TEST(RootSystems, FunctionalChangesPositivityOnly) {
  auto l = dynkin_lattice("A2");
  auto a = root_system(l, Functional{{1, 1}, true});
  auto b = root_system(l, Functional{{-1, -1}, true});
  EXPECT_EQ(a.roots.size(), b.roots.size());
  std::set<IntVec> pa(a.positive.begin(), a.positive.end());
  for (const auto& v : b.positive) EXPECT_TRUE(pa.count(-v));
}

TEST(RootSystems, NonRootLatticesHaveFewerSimpleRoots) {
  auto rs = root_system(f_perp_lattice(Degree::parse("7")));
  EXPECT_EQ(rs.roots.size(), 2u);
  EXPECT_EQ(rs.type(), "A1");
  EXPECT_EQ(root_system(f_perp_lattice(Degree::parse("8"))).roots.size(), 0u);
}

TEST(Classification, RejectsNonDynkinDiagrams) {
  IntMatrix cyc = affine_dynkin_gram("A3");
  EXPECT_THROW(classify_ade(cyc), AlgebraError);
  IntMatrix bad(2, 2);
  bad(0, 0) = bad(1, 1) = -2;
  bad(0, 1) = bad(1, 0) = 2;
  EXPECT_THROW(classify_ade(bad), AlgebraError);
}

TEST(Classification, OrdersComponents) {
  EXPECT_EQ(ade_type(classify_ade(dynkin_gram("A1+E6+A2"))), "E6+A2+A1");
  EXPECT_EQ(root_count("E6+A2+A1"), 72 + 6 + 2);
}

TEST(AffineDiagrams, RadicalOfRankOne) {
  for (const char* label : {"A1", "A2", "A4", "D4", "D5", "E6", "E7", "E8"}) {
    IntegralLattice l(affine_dynkin_gram(label), {});
    EXPECT_EQ(determinant(l.gram()), 0) << label;
    auto rq = radical_and_quotient(share(l));
    EXPECT_EQ(rq.radical.rank(), 1u) << label;
    // the quotient by the radical is the finite root lattice
    EXPECT_TRUE(is_isometric(rq.quotient, dynkin_lattice(label)).has_value()) << label;
    EXPECT_EQ(affine_label(1, label), std::string("~") + label);
  }
}
