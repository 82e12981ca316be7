#include <random>

#include <gtest/gtest.h>

#include "lpm/lattice/enumerate.hpp"
#include "lpm/lattice/isometry.hpp"
#include "lpm/lattice/standard.hpp"
#include "lpm/roots/roots.hpp"

using namespace lpm;

namespace {

IntMatrix gram_of(const std::vector<std::vector<long>>& rows) {
  IntMatrix g(rows.size(), rows.size());
  for (std::size_t i = 0; i < rows.size(); ++i)
    for (std::size_t j = 0; j < rows.size(); ++j) g(i, j) = rows[i][j];
  return g;
}

}  // namespace

TEST(Degree, ParsesAllTen) {
  auto ds = all_degrees();
  ASSERT_EQ(ds.size(), 10u);
  for (const auto& d : ds) EXPECT_EQ(Degree::parse(d.str()).str(), d.str());
  EXPECT_TRUE(Degree::parse("8'").prime);
  EXPECT_THROW(Degree::parse("10"), AlgebraError);
  EXPECT_THROW(Degree::parse("0"), AlgebraError);
}

TEST(Lambda, RankAndAnticanonicalSelfIntersection) {
  for (const auto& d : all_degrees()) {
    IntegralLattice l = lambda_lattice(d);
    EXPECT_EQ(l.rank(), static_cast<std::size_t>(10 - d.d)) << d.str();
    EXPECT_EQ(l.norm(anticanonical_class(d)), d.d) << d.str();
    auto [pos, neg, zero] = signature(l.gram());
    EXPECT_EQ(pos, 1u);
    EXPECT_EQ(zero, 0u);
    EXPECT_EQ(abs(determinant(l.gram())), 1) << "unimodular " << d.str();
  }
}

TEST(FPerp, NegativeDefiniteOfRankNineMinusD) {
  for (const auto& d : all_degrees()) {
    IntegralLattice f = f_perp_lattice(d);
    EXPECT_EQ(f.rank(), static_cast<std::size_t>(9 - d.d)) << d.str();
    if (f.rank() > 0) EXPECT_TRUE(is_negative_definite(f.gram())) << d.str();
  }
}

TEST(FPerp, BigComplementHasRadicalOfRankOne) {
  for (const auto& d : all_degrees()) {
    IntegralLattice F = F_perp_lattice(d);
    EXPECT_EQ(F.rank(), static_cast<std::size_t>(10 - d.d));
    EXPECT_TRUE(is_negative_semidefinite(F.gram()));
    auto rq = radical_and_quotient(share(F));
    EXPECT_EQ(rq.radical.rank(), 1u) << d.str();
    EXPECT_EQ(rq.quotient.rank(), static_cast<std::size_t>(9 - d.d));
  }
}

TEST(Sublattices, OrthogonalComplementRankAdds) {
  auto amb = share(odd_unimodular(5));
  std::mt19937 rng(17);
  std::uniform_int_distribution<long> dist(-3, 3);
  for (int trial = 0; trial < 30; ++trial) {
    std::vector<IntVec> gens;
    for (int k = 0; k < 1 + trial % 3; ++k) {
      IntVec v(6);
      for (auto& x : v) x = dist(rng);
      gens.push_back(v);
    }
    Sublattice s = span(amb, gens);
    Sublattice c = orthogonal_complement(amb, s);
    for (const auto& u : s.basis())
      for (const auto& w : c.basis()) EXPECT_EQ(amb->pair(u, w), 0);
    // nondegenerate ambient: rank(S) + rank(S^perp) = 6
    EXPECT_EQ(s.rank() + c.rank(), 6u);
    EXPECT_TRUE(c.saturated() || saturation(c).same_as(c));
  }
}

TEST(Isometry, DefiniteExamples) {
  IntegralLattice a2(gram_of({{-2, 1}, {1, -2}}), {});
  IntegralLattice a2b(gram_of({{-2, -1}, {-1, -2}}), {});
  IntegralLattice a1a1(gram_of({{-2, 0}, {0, -2}}), {});
  auto m = is_isometric(a2, a2b);
  ASSERT_TRUE(m.has_value());
  EXPECT_EQ(*m * a2b.gram() * m->transpose(), a2.gram());
  EXPECT_FALSE(is_isometric(a2, a1a1).has_value());
  // same determinant, different root systems
  IntegralLattice a3 = dynkin_lattice("A3");
  IntegralLattice other(gram_of({{-2, 0, 0}, {0, -2, 1}, {0, 1, -4}}), {});
  EXPECT_NE(determinant(a3.gram()), determinant(other.gram()));
  EXPECT_FALSE(is_isometric(a3, other).has_value());
}

TEST(Isometry, UnimodularRankTwo) {
  EXPECT_TRUE(is_isometric(hyperbolic_plane(), IntegralLattice(gram_of({{0, 1}, {1, -2}}), {})).has_value());
  EXPECT_FALSE(is_isometric(hyperbolic_plane(), odd_unimodular(1)).has_value());
}

TEST(ShortVectors, MatchBruteForce) {
  // norm-(-2) vectors of D4 in simple root coordinates lie in the box [-2, 2]^4
  IntegralLattice d4 = dynkin_lattice("D4");
  auto roots = enumerate_roots(d4);
  std::size_t brute = 0;
  IntVec v(4);
  for (long a = -2; a <= 2; ++a)
    for (long b = -2; b <= 2; ++b)
      for (long c = -2; c <= 2; ++c)
        for (long e = -2; e <= 2; ++e) {
          v = {a, b, c, e};
          if (d4.norm(v) == -2) ++brute;
        }
  EXPECT_EQ(roots.size(), brute);
  EXPECT_EQ(brute, 24u);
}

TEST(StandardNames, ResolveAndReject) {
  EXPECT_EQ(standard_lattice("I(1,9)").rank(), 10u);
  EXPECT_EQ(standard_lattice("II(1,1)").rank(), 2u);
  EXPECT_EQ(standard_lattice("f_perp(6)").rank(), 3u);
  EXPECT_EQ(standard_lattice("F_perp(8')").rank(), 2u);
  EXPECT_EQ(standard_lattice("A2+A1").rank(), 3u);
  EXPECT_THROW(standard_lattice("Z7"), AlgebraError);
}

TEST(Lattices, RejectBadGram) {
  EXPECT_THROW(IntegralLattice(gram_of({{-2, 1}, {0, -2}}), {}), AlgebraError);
  EXPECT_THROW(IntegralLattice(gram_of({{-2}}), {"a", "b"}), AlgebraError);
}
