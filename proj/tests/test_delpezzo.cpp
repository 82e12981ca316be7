#include <functional>
#include <set>

#include <gtest/gtest.h>

#include "lpm/delpezzo/delpezzo.hpp"

using namespace lpm;

namespace {

// Classes a l + sum c_i e_i with c_i in [-1, 1] and a in [0, 2] meeting
// -K = 3l - sum e_i in 1 and of square -1. For d >= 3 every exceptional
// class lies in this box (lines, l - e_i - e_j, 2l - five e_i).
std::set<IntVec> exceptional_by_box(const Degree& d) {
  auto pair = del_pezzo_pair(d);
  const std::size_t n = pair.picard->rank();
  std::set<IntVec> out;
  IntVec v(n);
  std::function<void(std::size_t)> rec = [&](std::size_t i) {
    if (i == n) {
      if (pair.picard->norm(v) == -1 && pair.picard->pair(v, pair.anticanonical) == 1) out.insert(v);
      return;
    }
    for (long c = i == 0 ? 0 : -1; c <= (i == 0 ? 2 : 1); ++c) {
      v[i] = c;
      rec(i + 1);
    }
  };
  rec(0);
  return out;
}

}  // namespace

TEST(DelPezzo, AnticanonicalDegree) {
  for (const auto& d : all_degrees()) EXPECT_EQ(del_pezzo_pair(d).anticanonical_degree(), d.d) << d.str();
}

TEST(DelPezzo, ExceptionalClassesMatchBoxSearch) {
  for (const char* name : {"3", "4", "5", "6", "7", "8", "8'", "9"}) {
    Degree d = Degree::parse(name);
    auto got = exceptional_classes(del_pezzo_pair(d));
    std::set<IntVec> want = d.prime ? std::set<IntVec>{} : exceptional_by_box(d);
    EXPECT_EQ(std::set<IntVec>(got.begin(), got.end()), want) << name;
  }
}

TEST(DelPezzo, ExceptionalCountsLowDegree) {
  // classical counts of lines
  EXPECT_EQ(exceptional_classes(del_pezzo_pair(Degree::parse("1"))).size(), 240u);
  EXPECT_EQ(exceptional_classes(del_pezzo_pair(Degree::parse("2"))).size(), 56u);
  EXPECT_EQ(exceptional_classes(del_pezzo_pair(Degree::parse("3"))).size(), 27u);
}

TEST(Polarizations, ParseSpecs) {
  auto pair = del_pezzo_pair(Degree::parse("6"));
  EXPECT_EQ(parse_polarization(pair, "full").sublattice.rank(), 3u);
  EXPECT_EQ(parse_polarization(pair, "zero").sublattice.rank(), 0u);
  EXPECT_EQ(parse_polarization(pair, "simple:1").sublattice.rank(), 1u);
  EXPECT_EQ(parse_polarization(pair, "roots:0,1,-1,0").sublattice.rank(), 1u);
  EXPECT_THROW(parse_polarization(pair, "bogus"), AlgebraError);
  // a class of square -1 is not a root
  EXPECT_THROW(parse_polarization(pair, "roots:0,1,0,0"), AlgebraError);
}

TEST(Polarizations, SublatticeIsOrthogonalToAnticanonical) {
  for (const auto& d : all_degrees()) {
    auto pol = parse_polarization(del_pezzo_pair(d), "full");
    for (const auto& b : pol.sublattice.basis()) EXPECT_EQ(pol.pair.picard->pair(b, pol.pair.anticanonical), 0);
    for (const auto& s : pol.simple_roots) EXPECT_EQ(pol.pair.picard->norm(s), -2);
  }
}

TEST(Cones, DegreeSixEffectiveCone) {
  auto pol = parse_polarization(del_pezzo_pair(Degree::parse("6")), "full");
  auto eff = effective_cone(pol);
  ASSERT_EQ(eff.rays.size(), 4u);
  std::multiset<long> norms;
  for (const auto& r : eff.rays) norms.insert(pol.pair.picard->norm(r).get_si());
  EXPECT_EQ(norms, (std::multiset<long>{-2, -2, -2, -1}));
  EXPECT_EQ(nef_faces_through_anticanonical(pol).size(), 3u);
}

class ConeDuality : public ::testing::TestWithParam<std::pair<std::string, std::string>> {};

TEST_P(ConeDuality, NefRaysPairNonnegativelyWithEffectiveRays) {
  auto [deg, spec] = GetParam();
  auto pol = parse_polarization(del_pezzo_pair(Degree::parse(deg)), spec);
  const auto& lat = *pol.pair.picard;
  auto eff = effective_cone(pol);
  auto nef = dual_cone(eff);
  for (const auto& n : nef.rays)
    for (const auto& e : eff.rays) EXPECT_GE(lat.pair(n, e), 0);
  EXPECT_TRUE(in_cone(eff.rays, pol.pair.anticanonical));
  EXPECT_TRUE(in_cone(nef.rays, pol.pair.anticanonical));
  // each face through -K is orthogonal to its simple root
  for (const auto& f : nef_faces_through_anticanonical(pol))
    for (const auto& r : f.rays) EXPECT_EQ(lat.pair(r, f.simple_root), 0);
}

INSTANTIATE_TEST_SUITE_P(Degrees, ConeDuality,
                         ::testing::Values(std::make_pair("5", "full"), std::make_pair("5", "zero"),
                                           std::make_pair("6", "full"), std::make_pair("6", "simple:1"),
                                           std::make_pair("7", "full"), std::make_pair("8", "full"),
                                           std::make_pair("8'", "full"), std::make_pair("9", "zero")));
