#include <gtest/gtest.h>

#include <algorithm>
#include <random>
#include <set>

#include "matchroots/factor.hpp"
#include "matchroots/int_poly.hpp"

namespace matchroots {
namespace {

IntPoly P(std::initializer_list<long> c) { return IntPoly(c); }

IntPoly random_poly(std::mt19937& rng, std::size_t max_deg, long bound) {
  std::uniform_int_distribution<std::size_t> deg(0, max_deg);
  std::uniform_int_distribution<long> coef(-bound, bound);
  std::vector<Integer> c(deg(rng) + 1);
  for (auto& v : c) v = coef(rng);
  return IntPoly(std::move(c));
}

TEST(IntPoly, NormalFormOfZero) {
  EXPECT_TRUE(IntPoly().is_zero());
  EXPECT_TRUE(P({0, 0, 0}).is_zero());
  EXPECT_EQ(P({0, 0}), IntPoly());
  EXPECT_EQ(IntPoly().degree(), kZeroDegree);
  EXPECT_EQ(P({1, 2, 0, 0}).degree(), 1U);
  EXPECT_THROW((void)IntPoly().leading(), std::domain_error);
}

TEST(IntPoly, Add) {
  EXPECT_EQ(add(P({-1, 0, 1}), P({1})), P({0, 0, 1}));
  EXPECT_EQ(add(IntPoly(), P({3, 1})), P({3, 1}));
  EXPECT_TRUE(add(P({0, 1}), P({0, -1})).is_zero());
}

TEST(IntPoly, Mul) {
  EXPECT_EQ(mul(P({-1, 1}), P({1, 1})), P({-1, 0, 1}));
  EXPECT_TRUE(mul(P({1, 2, 3}), IntPoly()).is_zero());
  // (x^2 - x - 1)(x^2 + x - 1) = (x^2 - 1)^2 - x^2
  EXPECT_EQ(mul(P({-1, -1, 1}), P({-1, 1, 1})), P({1, 0, -3, 0, 1}));
}

TEST(IntPoly, DivideExact) {
  EXPECT_EQ(divide_exact(P({4, 0, -4, 0, 1}), P({-2, 0, 1})), P({-2, 0, 1}));
  EXPECT_FALSE(divide_exact(P({-1, 0, 1}), P({0, 1})).has_value());
  EXPECT_EQ(divide_exact(IntPoly(), P({1, 1})), IntPoly());
  EXPECT_THROW(divide_exact(P({1}), IntPoly()), std::invalid_argument);
  // Non-monic divisor with an integral quotient.
  EXPECT_EQ(divide_exact(mul(P({3, 2}), P({1, 0, 5})), P({3, 2})), P({1, 0, 5}));
  EXPECT_FALSE(divide_exact(P({1, 0, 1}), P({1, 2})).has_value());
}

TEST(IntPoly, Derivative) {
  EXPECT_EQ(derivative(P({0, -2, 0, 1})), P({-2, 0, 3}));
  EXPECT_TRUE(derivative(P({7})).is_zero());
  EXPECT_EQ(derivative(P({0, 0, -3, 0, 1})), P({0, -6, 0, 4}));
}

TEST(IntPoly, Gcd) {
  EXPECT_EQ(gcd(P({-1, 0, 1}), P({-1, 1})), P({-1, 1}));
  EXPECT_EQ(gcd(P({1, 0, 1}), P({-1, 0, 1})), P({1}));
  EXPECT_EQ(gcd(P({0, 0, -3, 0, 1}), P({0, 0, 0, 1})), P({0, 0, 1}));
  EXPECT_EQ(gcd(P({2, -2}), IntPoly()), P({-1, 1}));
  EXPECT_THROW(gcd(IntPoly(), IntPoly()), std::invalid_argument);
}

TEST(IntPoly, GcdOfProductsRecoversCommonFactor) {
  std::mt19937 rng(7);
  for (int trial = 0; trial < 200; ++trial) {
    IntPoly common = random_poly(rng, 3, 6);
    IntPoly a = random_poly(rng, 4, 6);
    IntPoly b = random_poly(rng, 4, 6);
    if (common.is_zero() || a.is_zero() || b.is_zero()) continue;
    const IntPoly g = gcd(common * a, common * b);
    // g must divide both products and be divisible by pp(common).
    ASSERT_TRUE(divide_exact(common * a, g).has_value());
    ASSERT_TRUE(divide_exact(common * b, g).has_value());
    ASSERT_TRUE(divide_exact(g, common.primitive_part()).has_value()) << g.str() << " vs " << common.str();
    ASSERT_GT(sgn(g.leading()), 0);
    ASSERT_EQ(g.content(), 1);
  }
}

TEST(IntPoly, Rendering) {
  EXPECT_EQ(to_string(P({0, 0, -3, 0, 1})), "x^4 - 3x^2");
  EXPECT_EQ(to_string(P({0, -3, 0, 1})), "x^3 - 3x");
  EXPECT_EQ(to_string(P({-1, 0, 1})), "x^2 - 1");
  EXPECT_EQ(to_string(P({5, -1})), "-x + 5");
  EXPECT_EQ(to_string(IntPoly()), "0");
  EXPECT_EQ(to_coeff_strings(P({-1, 0, 1})), (std::vector<std::string>{"-1", "0", "1"}));
  EXPECT_EQ(from_coeff_strings({"-1", "0", "1"}), P({-1, 0, 1}));
  EXPECT_THROW(from_coeff_strings({"1x"}), std::invalid_argument);
}

TEST(Property, DivideExactInvertsMultiplication) {
  std::mt19937 rng(2026);
  for (int trial = 0; trial < 2000; ++trial) {
    const IntPoly g = random_poly(rng, 8, 9);
    const IntPoly f = random_poly(rng, 8, 9);
    if (f.is_zero()) continue;
    const auto q = divide_exact(mul(g, f), f);
    ASSERT_TRUE(q.has_value()) << g.str() << " * " << f.str();
    ASSERT_EQ(*q, g);
  }
}

TEST(Squarefree, Examples) {
  auto sqf = squarefree_decomposition(P({4, 0, -4, 0, 1}));
  ASSERT_EQ(sqf.size(), 1U);
  EXPECT_EQ(sqf[0].part, P({-2, 0, 1}));
  EXPECT_EQ(sqf[0].multiplicity, 2U);

  sqf = squarefree_decomposition(P({-1, 0, 1}));
  ASSERT_EQ(sqf.size(), 1U);
  EXPECT_EQ(sqf[0].part, P({-1, 0, 1}));
  EXPECT_EQ(sqf[0].multiplicity, 1U);

  // x^3 (x^2 - 3)^2 expanded.
  const IntPoly p = P({0, 0, 0, 9, 0, -6, 0, 1});
  ASSERT_EQ(mul(mul(P({0, 0, 0, 1}), P({-3, 0, 1})), P({-3, 0, 1})), p);
  sqf = squarefree_decomposition(p);
  std::set<std::pair<std::string, std::size_t>> got;
  for (const auto& s : sqf) got.emplace(s.part.str(), s.multiplicity);
  EXPECT_EQ(got, (std::set<std::pair<std::string, std::size_t>>{{"x", 3}, {"x^2 - 3", 2}}));

  EXPECT_THROW(squarefree_decomposition(IntPoly()), std::invalid_argument);
}

TEST(Property, SquarefreePartsAreCoprimeAndReconstruct) {
  std::mt19937 rng(99);
  for (int trial = 0; trial < 300; ++trial) {
    IntPoly p = P({1});
    const int pieces = 1 + trial % 4;
    for (int i = 0; i < pieces; ++i) {
      IntPoly f = random_poly(rng, 3, 4);
      if (f.is_zero()) continue;
      for (int e = 0; e <= trial % 3; ++e) p = p * f;
    }
    if (p.degree() == 0) continue;
    const auto sqf = squarefree_decomposition(p);
    IntPoly rebuilt = P({1});
    for (const auto& s : sqf) {
      for (std::size_t e = 0; e < s.multiplicity; ++e) rebuilt = rebuilt * s.part;
    }
    ASSERT_EQ(rebuilt, p.primitive_part()) << p.str();
    for (std::size_t i = 0; i < sqf.size(); ++i) {
      ASSERT_EQ(gcd(sqf[i].part, derivative(sqf[i].part)).degree(), 0U) << "not square-free: " << sqf[i].part.str();
      for (std::size_t j = i + 1; j < sqf.size(); ++j) ASSERT_EQ(gcd(sqf[i].part, sqf[j].part), P({1}));
    }
  }
}

TEST(Factor, Examples) {
  auto f = factor(P({-1, 0, 1}));
  ASSERT_EQ(f.factors().size(), 2U);
  EXPECT_EQ(f.factors()[0].root.minpoly(), P({-1, 1}));
  EXPECT_EQ(f.factors()[1].root.minpoly(), P({1, 1}));
  EXPECT_EQ(f.str(), "(x - 1) (x + 1)");

  f = factor(P({0, 0, -3, 0, 1}));
  EXPECT_EQ(f.str(), "x^2 (x^2 - 3)");

  f = factor(P({1, 0, -3, 0, 1}));
  EXPECT_EQ(f.str(), "(x^2 - x - 1) (x^2 + x - 1)");
  EXPECT_EQ(f.expand(), P({1, 0, -3, 0, 1}));

  EXPECT_THROW(factor(IntPoly()), std::invalid_argument);
  EXPECT_EQ(factor(P({-6})).unit(), -6);
  EXPECT_TRUE(factor(P({-6})).factors().empty());
}

struct GoldenFactorization {
  std::vector<long> input;
  long unit;
  std::vector<std::pair<std::vector<long>, std::size_t>> factors;
};

const std::vector<GoldenFactorization>& golden_factorizations() {
  static const std::vector<GoldenFactorization> table = {
#include "data/factor_golden.inc"
  };
  return table;
}

IntPoly from_longs(const std::vector<long>& c) {
  std::vector<Integer> v(c.begin(), c.end());
  return IntPoly(std::move(v));
}

TEST(Factor, MatchesFrozenReferenceFactorizations) {
  for (const auto& g : golden_factorizations()) {
    const IntPoly in = from_longs(g.input);
    const auto f = factor(in);
    EXPECT_EQ(f.unit(), g.unit) << in.str();
    ASSERT_EQ(f.factors().size(), g.factors.size()) << in.str() << " -> " << f.str();
    for (std::size_t i = 0; i < g.factors.size(); ++i) {
      EXPECT_EQ(f.factors()[i].root.minpoly(), from_longs(g.factors[i].first)) << in.str();
      EXPECT_EQ(f.factors()[i].exponent, g.factors[i].second) << in.str();
    }
  }
}

// Rational roots r = p/q of a primitive polynomial have p | a0 and q | lead.
bool has_rational_root(const IntPoly& f) {
  if (sgn(f.coeff(0)) == 0) return true;
  auto divisors = [](Integer n) {
    n = abs(n);
    std::vector<Integer> out;
    for (Integer d = 1; d * d <= n; ++d) {
      if (n % d == 0) {
        out.push_back(d);
        if (d * d != n) out.push_back(n / d);
      }
    }
    return out;
  };
  for (const auto& p : divisors(f.coeff(0))) {
    for (const auto& q : divisors(f.leading())) {
      for (int s : {1, -1}) {
        // q^d f(s p / q) = sum a_i (s p)^i q^(d - i)
        Integer acc = 0;
        for (std::size_t i = 0; i <= f.degree(); ++i) {
          Integer term = f.coeff(i);
          for (std::size_t k = 0; k < i; ++k) term *= s * p;
          for (std::size_t k = i; k < f.degree(); ++k) term *= q;
          acc += term;
        }
        if (acc == 0) return true;
      }
    }
  }
  return false;
}

TEST(Property, FactorReconstructsAndLowDegreeFactorsHaveNoRationalRoots) {
  std::mt19937 rng(1234);
  for (int trial = 0; trial < 300; ++trial) {
    IntPoly p = P({1});
    const int pieces = 1 + trial % 4;
    for (int i = 0; i < pieces; ++i) {
      IntPoly f = random_poly(rng, 4, 5);
      if (f.is_zero()) continue;
      p = p * f;
    }
    if (p.is_zero()) continue;
    const auto f = factor(p);
    ASSERT_EQ(f.expand(), p) << p.str() << " -> " << f.str();
    for (std::size_t i = 0; i < f.factors().size(); ++i) {
      const auto& fac = f.factors()[i];
      ASSERT_EQ(fac.root.minpoly().content(), 1);
      ASSERT_GT(sgn(fac.root.minpoly().leading()), 0);
      if (i > 0) ASSERT_TRUE(f.factors()[i - 1].root < fac.root);
      if (fac.root.minpoly().degree() >= 2 && fac.root.minpoly().degree() <= 3) {
        ASSERT_FALSE(has_rational_root(fac.root.minpoly())) << fac.root.minpoly().str();
      }
    }
  }
}

TEST(RootClassTest, Validation) {
  EXPECT_NO_THROW(RootClass(P({-3, 0, 1})));
  EXPECT_THROW(RootClass(P({-1, 0, 1})), std::invalid_argument);
  EXPECT_THROW(RootClass(P({3, 0, -1})), std::invalid_argument);
  EXPECT_THROW(RootClass(P({2, 2})), std::invalid_argument);
  EXPECT_THROW(RootClass(P({5})), std::invalid_argument);
  EXPECT_TRUE(RootClass::zero().is_zero_root());
}

TEST(Multiplicity, Examples) {
  const IntPoly g = P({0, 0, -3, 0, 1});
  EXPECT_EQ(multiplicity(RootClass::zero(), g), 2U);
  EXPECT_EQ(multiplicity(RootClass(P({-3, 0, 1})), g), 1U);
  EXPECT_EQ(multiplicity(RootClass(P({-1, 1})), P({0, 0, 0, 1})), 0U);
  EXPECT_THROW(multiplicity(RootClass::zero(), IntPoly()), std::invalid_argument);
}

TEST(Property, MultiplicityIsMaximalExactPower) {
  std::mt19937 rng(5);
  const std::vector<RootClass> roots = {RootClass::zero(), RootClass(P({-3, 0, 1})), RootClass(P({-1, -1, 1})),
                                        RootClass(P({1, 1}))};
  for (int trial = 0; trial < 200; ++trial) {
    const auto& r = roots[trial % roots.size()];
    IntPoly g = random_poly(rng, 5, 4);
    if (g.is_zero()) continue;
    for (int e = 0; e < trial % 4; ++e) g = g * r.minpoly();
    const std::size_t k = multiplicity(r, g);
    IntPoly cur = g;
    for (std::size_t i = 0; i < k; ++i) {
      auto q = divide_exact(cur, r.minpoly());
      ASSERT_TRUE(q.has_value());
      cur = *q;
    }
    ASSERT_FALSE(divide_exact(cur, r.minpoly()).has_value());
  }
}

}  // namespace
}  // namespace matchroots
