#include <algorithm>
#include <cctype>
#include <map>
#include <random>

#include <gtest/gtest.h>

#include "lpm/fibration/fibration.hpp"
#include "lpm/fibration/surface.hpp"

using namespace lpm;

namespace {

struct Fixture {
  PencilFamily family;
  MultiPoly delta;
};

// The symbolic discriminant is the slow step; compute it once per family.
const Fixture& fixture(const std::string& name) {
  static std::map<std::string, Fixture> cache;
  auto it = cache.find(name);
  if (it == cache.end()) {
    PencilFamily f = builtin_family(name);
    it = cache.emplace(name, Fixture{f, singular_fiber_polynomial(f)}).first;
  }
  return it->second;
}

// Hand-derived collision curves, independent of the elimination code.
Rat on_locus_value(const std::string& name, const ParamValues& pv) {
  const Rat& x = pv.at("x");
  const Rat& y = pv.at("y");
  if (name == "f2") return 4 * x - 1;
  if (name == "p1p1") return x - y;
  return 27 * x * x + 256 * y;
}

ParamValues random_point(std::mt19937& rng) {
  std::uniform_int_distribution<long> num(-40, 40), den(1, 9);
  auto draw = [&] {
    long n = 0;
    while (n == 0) n = num(rng);
    return Rat(n, den(rng));
  };
  ParamValues pv{{"x", draw()}, {"y", draw()}};
  for (auto& [k, v] : pv) v.canonicalize();
  return pv;
}

// A point on the collision curve with the free coordinate drawn at random.
ParamValues random_locus_point(const std::string& name, std::mt19937& rng) {
  ParamValues pv = random_point(rng);
  if (name == "f2") pv["x"] = Rat(1, 4);
  else if (name == "p1p1") pv["y"] = pv["x"];
  else pv["y"] = -27 * pv["x"] * pv["x"] / 256;
  return pv;
}

UPoly univariate(const MultiPoly& p) { return UPoly::from_multi(p.with_vars({"t"}), "t"); }

bool squarefree(const UPoly& u) { return UPoly::gcd(u, u.derivative()).degree() == 0; }

std::vector<std::string> fiber_list(const FiberReport& r) {
  std::vector<std::string> out;
  for (const auto& e : r.fibers)
    for (int k = 0; k < e.location.degree(); ++k) out.push_back(e.type);
  std::sort(out.begin(), out.end());
  return out;
}

}  // namespace

TEST(Discriminant, DegreeEightQuartic) {
  EXPECT_EQ(fixture("f1").delta.str(), "t^4 + t^3*x - 8*t^2*y - 36*t*x*y - 27*x^2*y + 16*y^2");
}

TEST(Discriminant, CollisionLoci) {
  EXPECT_EQ(collision_locus(fixture("f1").family, fixture("f1").delta).locus.str(), "27*x^2 + 256*y");
  EXPECT_EQ(collision_locus(fixture("f2").family, fixture("f2").delta).locus.str(), "4*x - 1");
  EXPECT_EQ(collision_locus(fixture("p1p1").family, fixture("p1p1").delta).locus.str(), "x - y");
}

TEST(Discriminant, SymbolicSeedDoesNotMatter) {
  SymbolicOptions opt;
  opt.seed = 99;
  EXPECT_EQ(singular_fiber_polynomial(builtin_family("f2"), opt), fixture("f2").delta);
}

class FamilyProperties : public ::testing::TestWithParam<std::string> {};

TEST_P(FamilyProperties, GenericPointsHaveFourNodalFibers) {
  const auto& fx = fixture(GetParam());
  std::mt19937 rng(20240601);
  int done = 0;
  while (done < 20) {
    ParamValues pv = random_point(rng);
    if (on_locus_value(GetParam(), pv) == 0) continue;
    FiberReport r = classify_fibers(fx.family, fx.delta, pv);
    EXPECT_EQ(fiber_list(r), (std::vector<std::string>{"I1", "I1", "I1", "I1"}));
    EXPECT_TRUE(r.euler_ok());
    EXPECT_TRUE(r.consistent);
    ++done;
  }
}

TEST_P(FamilyProperties, LocusVanishesIffDiscriminantRepeats) {
  const auto& fx = fixture(GetParam());
  MultiPoly locus = collision_locus(fx.family, fx.delta).locus;
  std::mt19937 rng(7);
  for (int i = 0; i < 20; ++i) {
    ParamValues pv = i % 2 ? random_locus_point(GetParam(), rng) : random_point(rng);
    bool on = locus.evaluate(pv).is_zero();
    EXPECT_EQ(on, on_locus_value(GetParam(), pv) == 0);
    EXPECT_EQ(on, !squarefree(univariate(specialize(fx.delta, pv))));
  }
}

TEST_P(FamilyProperties, SymbolicSpecializationAgreesWithDirectElimination) {
  const auto& fx = fixture(GetParam());
  std::mt19937 rng(11);
  for (int i = 0; i < 8; ++i) {
    ParamValues pv = i % 2 ? random_locus_point(GetParam(), rng) : random_point(rng);
    UPoly symbolic = univariate(specialize(fx.delta, pv));
    UPoly direct = certified_singular_polynomial(fx.family, pv);
    EXPECT_EQ(symbolic.squarefree_part().monic(), direct.monic());
  }
}

TEST_P(FamilyProperties, MultiplicitiesMatchFiberTypes) {
  const auto& fx = fixture(GetParam());
  std::mt19937 rng(5);
  for (int i = 0; i < 6; ++i) {
    ParamValues pv = random_locus_point(GetParam(), rng);
    FiberReport r = classify_fibers(fx.family, fx.delta, pv);
    long total = 0;
    for (const auto& e : r.fibers) {
      total += e.location.degree() * e.multiplicity;
      if (e.type.size() > 1 && std::isdigit(static_cast<unsigned char>(e.type[1]))) EXPECT_EQ(std::stol(e.type.substr(1)), e.multiplicity);
      if (e.type == "II") EXPECT_EQ(e.multiplicity, 2);
    }
    // the discriminant has degree 12 - d in t
    EXPECT_EQ(total, fx.family.euler_budget());
    EXPECT_TRUE(r.euler_ok());
  }
}

INSTANTIATE_TEST_SUITE_P(Families, FamilyProperties, ::testing::Values("f2", "p1p1", "f1"));

TEST(Fibers, DegreeEightPrimeEnhancement) {
  const auto& fx = fixture("f2");
  auto r = classify_fibers(fx.family, fx.delta, {{"x", Rat(1, 4)}, {"y", Rat(1)}});
  EXPECT_EQ(fiber_list(r), (std::vector<std::string>{"I1", "I1", "I2"}));
}

TEST(Fibers, ProductSubfamily) {
  const auto& fx = fixture("p1p1");
  auto r = classify_fibers(fx.family, fx.delta, {{"x", Rat(3)}, {"y", Rat(3)}});
  EXPECT_EQ(fiber_list(r), (std::vector<std::string>{"I1", "I1", "I2"}));
}

TEST(Fibers, DegreeEightCuspidal) {
  const auto& fx = fixture("f1");
  auto pv = witness_on_locus(fx.family, collision_locus(fx.family, fx.delta).locus);
  EXPECT_EQ(on_locus_value("f1", pv), 0);
  auto r = classify_fibers(fx.family, fx.delta, pv);
  EXPECT_EQ(fiber_list(r), (std::vector<std::string>{"I1", "I1", "II"}));
}

TEST(Fibers, RejectsMissingOrExcludedParameters) {
  const auto& fx = fixture("f2");
  EXPECT_THROW(classify_fibers(fx.family, fx.delta, {{"x", Rat(1)}}), AlgebraError);
  EXPECT_THROW(classify_fibers(fx.family, fx.delta, {{"x", Rat(0)}, {"y", Rat(1)}}), AlgebraError);
}

TEST(Families, RejectBadRelations) {
  EXPECT_THROW(make_family("bad", Degree::parse("8"), {"x"}, "a*c - t", "b*d - x"), AlgebraError);
  EXPECT_THROW(make_family("bad", Degree::parse("8"), {"x"}, "a*c - z", "b*d - x"), AlgebraError);
  EXPECT_THROW(make_family("bad", Degree::parse("8"), {"a"}, "a*c", "b*d"), AlgebraError);
}

namespace {

std::map<std::string, std::string> singular_points(const std::string& family, const ParamValues& pv) {
  std::map<std::string, std::string> out;
  auto s = surface_singular_points(builtin_family(family), pv);
  EXPECT_EQ(s.unresolved, 0);
  for (const auto& p : s.points) {
    std::string key;
    for (const auto& c : p.point) key += c.get_str() + ",";
    out[key] = p.type;
  }
  return out;
}

}  // namespace

TEST(Surface, HirzebruchTwoClosure) {
  auto pts = singular_points("f2", {{"x", Rat(2)}, {"y", Rat(3)}});
  std::map<std::string, std::string> want{{"0,1,0,0,0,", "A1"}, {"0,0,0,1,0,", "A1"}, {"0,0,1,0,0,", "A>=2"}};
  EXPECT_EQ(pts, want);
}

TEST(Surface, ProductClosureHasFourNodes) {
  auto pts = singular_points("p1p1", {{"x", Rat(2)}, {"y", Rat(5)}});
  std::map<std::string, std::string> want{
      {"1,0,0,0,0,", "A1"}, {"0,1,0,0,0,", "A1"}, {"0,0,1,0,0,", "A1"}, {"0,0,0,1,0,", "A1"}};
  EXPECT_EQ(pts, want);
}

TEST(Surface, HirzebruchOneClosure) {
  auto pts = singular_points("f1", {{"x", Rat(2)}, {"y", Rat(3)}});
  std::map<std::string, std::string> want{{"0,1,0,0,0,", "A1"}, {"0,0,0,1,0,", "A1"}, {"0,0,1,0,0,", "A>=2"}};
  EXPECT_EQ(pts, want);
}
