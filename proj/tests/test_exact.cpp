#include <random>

#include <gtest/gtest.h>

#include "lpm/exact/matrix.hpp"
#include "lpm/exact/mgcd.hpp"
#include "lpm/exact/resultant.hpp"
#include "lpm/exact/upoly.hpp"

using namespace lpm;

namespace {

IntMatrix random_matrix(std::mt19937& rng, std::size_t r, std::size_t c, long range) {
  std::uniform_int_distribution<long> d(-range, range);
  IntMatrix m(r, c);
  for (std::size_t i = 0; i < r; ++i)
    for (std::size_t j = 0; j < c; ++j) m(i, j) = d(rng);
  return m;
}

// Product of (x - r) over the given integer roots, times lc.
MultiPoly from_roots(const std::vector<long>& roots, long lc = 1) {
  MultiPoly p = MultiPoly::constant(lc, {"x"});
  for (long r : roots) p = p * parse_poly("x - (" + std::to_string(r) + ")", {"x"});
  return p;
}

}  // namespace

TEST(Rationals, ParseAndCanonicalize) {
  EXPECT_EQ(parse_rat("6/4"), Rat(3, 2));
  EXPECT_EQ(parse_rat("-27/256").get_str(), "-27/256");
  EXPECT_THROW(parse_rat("1/0"), std::exception);
  EXPECT_THROW(parse_rat("abc"), std::exception);
}

TEST(Polynomials, ParsePrintRoundTrip) {
  for (const char* s : {"t^4 + t^3*x - 8*t^2*y - 36*t*x*y - 27*x^2*y + 16*y^2", "a*c - y", "-a^2*x + b*d", "3/2*x - 1"}) {
    MultiPoly p = parse_poly(s, {"a", "b", "c", "d", "t", "x", "y"});
    EXPECT_EQ(parse_poly(p.str(), p.vars()), p) << s;
  }
}

TEST(Polynomials, PrimitivePartHasPositiveLeadingCoefficient) {
  EXPECT_EQ(parse_poly("-2*x + 4*y", {"x", "y"}).primitive_part().str(), "x - 2*y");
  EXPECT_EQ(parse_poly("27/2*x^2 + 128*y", {"x", "y"}).primitive_part().str(), "27*x^2 + 256*y");
}

TEST(Polynomials, ExactDivision) {
  MultiPoly a = parse_poly("x^2 - y^2", {"x", "y"}), b = parse_poly("x - y", {"x", "y"});
  auto q = divide_exact(a, b);
  ASSERT_TRUE(q.has_value());
  EXPECT_EQ(*q, parse_poly("x + y", {"x", "y"}));
  EXPECT_FALSE(divide_exact(a, parse_poly("x + 2*y", {"x", "y"})).has_value());
}

TEST(Smith, FactorizationAndDivisibility) {
  std::mt19937 rng(7);
  for (int trial = 0; trial < 40; ++trial) {
    std::size_t r = 1 + rng() % 4, c = 1 + rng() % 4;
    IntMatrix a = random_matrix(rng, r, c, 6);
    SmithForm s = smith_normal_form(a);
    EXPECT_EQ(s.U * a * s.V, s.S);
    EXPECT_EQ(abs(determinant(s.U)), 1);
    EXPECT_EQ(abs(determinant(s.V)), 1);
    std::size_t k = std::min(r, c);
    for (std::size_t i = 0; i < r; ++i)
      for (std::size_t j = 0; j < c; ++j)
        if (i != j) EXPECT_EQ(s.S(i, j), 0);
    for (std::size_t i = 0; i + 1 < k; ++i) {
      EXPECT_GE(s.S(i, i), 0);
      if (s.S(i, i) != 0) EXPECT_EQ(s.S(i + 1, i + 1) % s.S(i, i), 0);
    }
    EXPECT_EQ(s.rank, rank(a));
    // first invariant factor is the gcd of the entries
    Int g = 0;
    for (std::size_t i = 0; i < r; ++i)
      for (std::size_t j = 0; j < c; ++j) g = gcd(g, a(i, j));
    EXPECT_EQ(s.S(0, 0), g);
  }
}

TEST(Smith, DeterminantIsProductOfInvariantFactors) {
  std::mt19937 rng(11);
  for (int trial = 0; trial < 30; ++trial) {
    IntMatrix a = random_matrix(rng, 3, 3, 5);
    SmithForm s = smith_normal_form(a);
    Int prod = 1;
    for (std::size_t i = 0; i < 3; ++i) prod *= s.S(i, i);
    EXPECT_EQ(abs(determinant(a)), prod);
  }
}

TEST(Kernel, IntegerKernelIsSaturatedAndAnnihilates) {
  IntMatrix a(1, 3);
  a(0, 0) = 2, a(0, 1) = 4, a(0, 2) = 6;
  IntMatrix k = integer_kernel(a);
  ASSERT_EQ(k.rows(), 2u);
  for (std::size_t i = 0; i < k.rows(); ++i) EXPECT_EQ(dot(k.row(i), a.row(0)), 0);
  EXPECT_EQ(smith_normal_form(k).S(1, 1), 1);
}

TEST(Resultant, ProductOverRoots) {
  // Res(f, g) = lc(f)^deg g * prod g(r) over the roots r of f
  MultiPoly f = from_roots({1, 2}), g = from_roots({5});
  EXPECT_EQ(resultant(f, g, "x").str(), "12");
  MultiPoly f2 = from_roots({-1, 3}, 2), g2 = from_roots({0, 4});
  // 2^2 * g2(-1) * g2(3) = 4 * 5 * (-3)
  EXPECT_EQ(resultant(f2, g2, "x").str(), "-60");
}

TEST(Resultant, Multiplicativity) {
  std::mt19937 rng(3);
  std::uniform_int_distribution<long> d(-5, 5);
  auto random_poly = [&](int deg) {
    std::string s = "1";
    for (int k = 1; k <= deg; ++k) {
      long c = d(rng);
      if (k == deg && c == 0) c = 1;  // keep the stated degree
      s += " + (" + std::to_string(c) + ")*x^" + std::to_string(k);
    }
    return parse_poly(s, {"x"});
  };
  for (int trial = 0; trial < 20; ++trial) {
    MultiPoly f = random_poly(2), g = random_poly(1 + trial % 3), h = random_poly(2);
    EXPECT_EQ(resultant(f * g, h, "x"), resultant(f, h, "x") * resultant(g, h, "x"));
  }
}

TEST(Resultant, QuadraticDiscriminant) {
  EXPECT_EQ(discriminant(parse_poly("x^2 + p*x + q", {"x", "p", "q"}), "x").str(), "p^2 - 4*q");
}

TEST(Squarefree, YunReassembles) {
  std::mt19937 rng(5);
  std::uniform_int_distribution<long> d(-6, 6);
  for (int trial = 0; trial < 20; ++trial) {
    std::vector<long> roots{d(rng), d(rng), d(rng), d(rng), d(rng)};
    MultiPoly p = from_roots(roots) * parse_poly("x^2 + 1", {"x"});
    UPoly u = UPoly::from_multi(p, "x");
    UPoly back = UPoly::constant(1);
    std::vector<UPoly> parts;
    for (const auto& [q, k] : yun(u)) {
      EXPECT_EQ(UPoly::gcd(q, q.derivative()).degree(), 0);
      for (int i = 0; i < k; ++i) back = back * q;
      parts.push_back(q);
    }
    for (std::size_t i = 0; i < parts.size(); ++i)
      for (std::size_t j = i + 1; j < parts.size(); ++j) EXPECT_EQ(UPoly::gcd(parts[i], parts[j]).degree(), 0);
    EXPECT_EQ(back, u.monic());
  }
}

TEST(Squarefree, UnivariateDecompositionReassembles) {
  MultiPoly p = parse_poly("(t - 1)^3*(2*t + 3)^2*(t^2 + t + 1)", {"t"});
  MultiPoly back = MultiPoly::constant(1, {"t"});
  for (const auto& [q, k] : squarefree_decomposition(p)) back = back * q.pow(static_cast<unsigned>(k));
  EXPECT_EQ(back.primitive_part(), p.primitive_part());
}

TEST(Squarefree, MultivariateSquarefreePart) {
  MultiPoly p = parse_poly("(x - y)^3*(x + 2*y)^2*(x^2 + y)", {"x", "y"});
  EXPECT_EQ(squarefree_part(p).primitive_part(), parse_poly("(x - y)*(x + 2*y)*(x^2 + y)", {"x", "y"}).primitive_part());
  EXPECT_EQ(poly_gcd(p, p.derivative("x")).primitive_part(),
            parse_poly("(x - y)^2*(x + 2*y)", {"x", "y"}).primitive_part());
}

TEST(Univariate, RationalRoots) {
  UPoly u = UPoly::from_multi(parse_poly("(4*x - 1)*(3*x + 2)*(x^2 - 2)", {"x"}), "x");
  auto r = u.rational_roots();
  std::sort(r.begin(), r.end());
  ASSERT_EQ(r.size(), 2u);
  EXPECT_EQ(r[0], Rat(-2, 3));
  EXPECT_EQ(r[1], Rat(1, 4));
}
