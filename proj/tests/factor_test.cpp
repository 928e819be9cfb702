#include <gtest/gtest.h>

#include <algorithm>
#include <random>
#include <set>

#include "support.hpp"

using namespace lehmer;
using testing_support::fp;
using testing_support::q;
using testing_support::random_nonzero_poly;

namespace {

template <class Field>
std::set<std::pair<std::string, unsigned>> as_set(const Factorization<Field>& f) {
  std::set<std::pair<std::string, unsigned>> s;
  for (const auto& [p, e] : f.factors) s.emplace(to_string(p), e);
  return s;
}

using Set = std::set<std::pair<std::string, unsigned>>;

}  // namespace

TEST(Squarefree, Examples) {
  auto h = q("x+1") * q("x+1") * q("x-1");
  auto f = squarefree_decomp(h);
  EXPECT_EQ(as_set(f), (Set{{"x+1", 2}, {"x-1", 1}}));
  EXPECT_EQ(f.expand(), h);

  EXPECT_EQ(as_set(squarefree_decomp(fp(2, "x^2"))), (Set{{"x", 2}}));
  EXPECT_EQ(as_set(squarefree_decomp(fp(3, "x^3+x"))), (Set{{"x^3+x", 1}}));
}

TEST(Squarefree, PthPowersInCharacteristicP) {
  // (x^3 + 2)^3 (x + 1) = (x+2)^9 (x+1) over F_3
  auto h = pow(fp(3, "x+2"), 9) * fp(3, "x+1");
  auto f = squarefree_decomp(h);
  EXPECT_EQ(f.expand(), h);
  EXPECT_EQ(as_set(f), (Set{{"x+1", 1}, {"x+2", 9}}));
}

TEST(Squarefree, RationalUnitKept) {
  auto h = q("3x^2-3");
  auto f = squarefree_decomp(h);
  EXPECT_EQ(f.unit.value(), 3);
  EXPECT_EQ(f.expand(), h);
}

TEST(FactorFp, Examples) {
  EXPECT_EQ(as_set(factor_fp(fp(5, "x^2+1"))), (Set{{"x+2", 1}, {"x+3", 1}}));
  EXPECT_EQ(as_set(factor_fp(fp(2, "x^2+x+1"))), (Set{{"x^2+x+1", 1}}));
  EXPECT_EQ(as_set(factor_fp(fp(3, "x^3-x"))), (Set{{"x", 1}, {"x+1", 1}, {"x+2", 1}}));
  auto f = factor_fp(fp(3, "x^3+x"));
  EXPECT_EQ(as_set(f), (Set{{"x", 1}, {"x^2+1", 1}}));
}

TEST(FactorFp, RejectsZero) {
  try {
    factor_fp(fp(5, "0"));
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), Errc::ZeroArgument);
  }
}

TEST(FactorFp, OrderIsDegreeThenCoefficients) {
  auto f = factor_fp(fp(7, "x^5+3x^2+x"));
  for (std::size_t i = 1; i < f.factors.size(); ++i)
    EXPECT_LE(f.factors[i - 1].first.degree(), f.factors[i].first.degree());
}

TEST(Irreducible, Examples) {
  EXPECT_TRUE(is_irreducible_fp(fp(2, "x^2+x+1")));
  EXPECT_FALSE(is_irreducible_fp(fp(5, "x^2+1")));
  EXPECT_TRUE(is_irreducible_fp(fp(7, "x")));
  EXPECT_FALSE(is_irreducible_fp(fp(7, "3")));
  EXPECT_TRUE(is_irreducible_fp(fp(2, "x^4+x+1")));
  EXPECT_FALSE(is_irreducible_fp(fp(2, "x^4+x^2+1")));
}

TEST(FactorProperties, RandomPolysRefactor) {
  std::mt19937_64 rng(31);
  for (std::uint64_t p : {2ull, 3ull, 5ull}) {
    PrimeField F(p);
    for (int i = 0; i < 150; ++i) {
      auto h = monic(random_nonzero_poly(F, 8, rng));
      auto f = factor_fp(h, rng);
      ASSERT_EQ(f.expand(), h) << to_string(h);
      for (const auto& [fac, e] : f.factors) {
        ASSERT_TRUE(is_irreducible_fp(fac)) << to_string(fac);
        ASSERT_EQ(fac.lead(), 1u);
        ASSERT_EQ(valuation(fac, h), e);
      }
      auto s = squarefree_decomp(h);
      ASSERT_EQ(s.expand(), h);
    }
  }
}

TEST(FactorProperties, IrreducibleCountMatchesNecklaceFormula) {
  // number of monic irreducibles of degree 4 over F_2 is (16 - 4) / 4 = 3,
  // over F_3 it is (81 - 9) / 4 = 18
  for (auto [p, expected] : {std::pair{2ull, 3}, std::pair{3ull, 18}}) {
    PrimeField F(p);
    int count = 0;
    std::uint64_t total = p * p * p * p;
    for (std::uint64_t code = 0; code < total; ++code) {
      std::vector<std::uint64_t> cs;
      for (std::uint64_t c = code, i = 0; i < 4; ++i, c /= p) cs.push_back(c % p);
      cs.push_back(1);
      if (is_irreducible_fp(Poly<PrimeField>(F, cs))) ++count;
    }
    EXPECT_EQ(count, expected) << p;
  }
}

TEST(FactorProperties, SeededRunsAreDeterministic) {
  PrimeField F(101);
  std::mt19937_64 gen(33);
  for (int i = 0; i < 20; ++i) {
    auto h = monic(random_nonzero_poly(F, 10, gen));
    std::mt19937_64 r1(5), r2(5);
    auto a = factor_fp(h, r1), b = factor_fp(h, r2);
    ASSERT_EQ(a.factors, b.factors);
  }
}

TEST(RationalDivisors, SmallDegree) {
  auto h = q("x^2-1") * q("x^2+1") * q("2x+3") * q("x^3-2");
  auto divs = small_irreducible_divisors_q(h);
  std::set<std::string> names;
  for (const auto& d : divs) names.insert(to_string(d));
  EXPECT_TRUE(names.count("x-1"));
  EXPECT_TRUE(names.count("x+1"));
  EXPECT_TRUE(names.count("x+3/2"));
  for (const auto& d : divs) EXPECT_TRUE(divides(d, h));
}

TEST(RationalDivisors, IrreducibleQuadratic) {
  auto divs = small_irreducible_divisors_q(q("x^2+x+1") * q("x-3"));
  std::set<std::string> names;
  for (const auto& d : divs) names.insert(to_string(d));
  EXPECT_EQ(names, (std::set<std::string>{"x-3", "x^2+x+1"}));
}

TEST(FactorQ, SquarefreeInputStaysWhole) {
  EXPECT_EQ(as_set(squarefree_decomp(q("x^4-1"))), (Set{{"x^4-1", 1}}));
}

TEST(FactorQ, FullFactorizationIsWrongField) {
  try {
    factor_fp(q("x^2-1"));
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), Errc::WrongField);
  }
}
