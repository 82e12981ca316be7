#include <map>
#include <set>

#include <gtest/gtest.h>

#include "lpm/mirror/mirror.hpp"
#include "lpm/mirror/tables.hpp"

using namespace lpm;

namespace {

Sublattice zero_lattice(const DelPezzoPair& p) { return Sublattice(p.picard, {}, true); }

}  // namespace

class TableRows : public ::testing::TestWithParam<std::size_t> {};

TEST_P(TableRows, ComputedLatticesMatchReference) {
  auto refs = reference_tables();
  TableRow row = table_row(refs.at(GetParam()));
  EXPECT_TRUE(row.f_matches) << row.degree.str();
  EXPECT_TRUE(row.F_rank_ok) << row.degree.str();
  EXPECT_TRUE(row.radical_is_f0) << row.degree.str();
  EXPECT_TRUE(row.F_matches) << row.degree.str();
  EXPECT_TRUE(row.quotient_matches) << row.degree.str();
}

INSTANTIATE_TEST_SUITE_P(AllDegrees, TableRows, ::testing::Range<std::size_t>(0, 10));

TEST(Tables, AffineTypesFromQuotient) {
  std::map<std::string, std::string> want{{"1", "~E8"}, {"2", "~E7"}, {"3", "~E6"}, {"4", "~D5"},
                                          {"5", "~A4"}, {"6", "~A2+A1"}, {"8'", "~A1"}};
  for (const auto& row : reproduce_tables()) {
    auto it = want.find(row.degree.str());
    if (it != want.end()) EXPECT_EQ(row.F_type, it->second);
  }
}

TEST(Tables, DegreesEightAndEightPrimeDiffer) {
  auto refs = reference_tables();
  IntegralLattice F8 = F_perp_lattice(Degree::parse("8"));
  IntegralLattice F8p = F_perp_lattice(Degree::parse("8'"));
  EXPECT_FALSE(is_isometric(F8, F8p).has_value());
}

TEST(Embeddings, OneClassPerDegreeAndValid) {
  for (const auto& d : all_degrees()) {
    auto embs = enumerate_embeddings(d);
    ASSERT_EQ(embs.size(), 1u) << d.str();
    EXPECT_NO_THROW(embs[0].validate());
  }
}

TEST(Mirror, DegreeEightPrimeSwapsA1AndZero) {
  Degree d = Degree::parse("8'");
  auto pair = del_pezzo_pair(d);
  auto emb = enumerate_embeddings(d).at(0);
  auto full = parse_polarization(pair, "full");
  EXPECT_EQ(root_rank(mirror_lattice(d, full.sublattice, emb).lcheck), 0u);
  auto m0 = mirror_lattice(d, zero_lattice(pair), emb);
  EXPECT_EQ(sublattice_root_type(m0.lcheck), "A1");
}

TEST(Mirror, DegreeSixStrataTypes) {
  Degree d = Degree::parse("6");
  auto strata = strata_poset(d, zero_lattice(del_pezzo_pair(d)));
  std::multiset<std::string> types;
  for (const auto& n : strata.nodes) types.insert(n.root_type);
  EXPECT_EQ(types, (std::multiset<std::string>{"0", "A1", "A1", "A1+A1", "A2", "A2+A1"}));
}

class StrataProperties : public ::testing::TestWithParam<std::string> {};

TEST_P(StrataProperties, MirrorInvariants) {
  Degree d = Degree::parse(GetParam());
  auto pair = del_pezzo_pair(d);
  auto emb = enumerate_embeddings(d).at(0);
  auto strata = strata_poset(d, zero_lattice(pair));
  const long fperp = 9 - d.d;
  for (const auto& n : strata.nodes) {
    MirrorPair m = mirror_lattice(d, n.lattice, emb);
    const auto& big = *emb.target.ambient();
    // the mirror is orthogonal to the image of L
    for (const auto& u : n.lattice.basis())
      for (const auto& w : m.lcheck_image) EXPECT_EQ(big.pair(emb.image(u), w), 0);
    for (const auto& u : n.lattice.basis())
      for (const auto& w : m.lcheck.basis()) EXPECT_EQ(pair.picard->pair(u, w), 0);
    // both live in f_d^perp, which is nondegenerate of rank 9 - d
    EXPECT_EQ(static_cast<long>(n.lattice.rank() + m.lcheck.rank()), fperp);
    EXPECT_EQ(n.dimension, fperp - static_cast<long>(n.root_rank));
    EXPECT_EQ(period_dimension(d, n.lattice), n.dimension);
    // Kodaira fibers account for the root rank and stay within the Euler budget
    EXPECT_TRUE(n.fibers.within_budget);
    EXPECT_EQ(n.fibers.euler, 12 - d.d);
  }
  // covers go from smaller to larger lattices
  for (const auto& [a, b] : strata.covers) EXPECT_LT(strata.nodes[a].root_rank, strata.nodes[b].root_rank);
}

INSTANTIATE_TEST_SUITE_P(Degrees, StrataProperties, ::testing::Values("3", "4", "5", "6", "7", "8", "8'", "9"));

TEST(Orbits, DegreeSixBlocks) {
  auto pol = parse_polarization(del_pezzo_pair(Degree::parse("6")), "full");
  auto o = admissible_orbits(pol);
  std::multiset<std::size_t> sizes;
  for (const auto& b : o.blocks) sizes.insert(b.size());
  EXPECT_EQ(sizes, (std::multiset<std::size_t>{1, 2}));
}
