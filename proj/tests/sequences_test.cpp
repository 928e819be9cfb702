#include <gtest/gtest.h>

#include <random>

#include "support.hpp"

using namespace lehmer;
using testing_support::fp;
using testing_support::q;
using testing_support::random_poly;

namespace {

template <class Field>
Errc rejection(SeqKind k, Poly<Field> a, Poly<Field> b) {
  try {
    validate(k, std::move(a), std::move(b));
  } catch (const Error& e) {
    return e.code();
  }
  ADD_FAILURE() << "accepted";
  return Errc::PreconditionViolated;
}

template <class Field>
std::optional<SeqParams<Field>> random_params(SeqKind kind, const Field& f, int max_deg, std::mt19937_64& rng) {
  for (int attempt = 0; attempt < 1000; ++attempt) {
    try {
      return validate(kind, random_poly(f, max_deg, rng, 3), random_poly(f, max_deg, rng, 3));
    } catch (const Error&) {
    }
  }
  return std::nullopt;
}

}  // namespace

TEST(Validate, Examples) {
  EXPECT_NO_THROW(validate(SeqKind::Lucas, q("x"), q("1")));
  EXPECT_EQ(rejection(SeqKind::PowerDiff, fp(5, "2x"), fp(5, "x")), Errc::RatioRootOfUnity);
  EXPECT_EQ(rejection(SeqKind::Lucas, q("x"), q("x^2+x")), Errc::NotCoprime);
  EXPECT_EQ(rejection(SeqKind::Lehmer, q("0"), q("x")), Errc::ZeroParameter);
  EXPECT_EQ(rejection(SeqKind::Lucas, q("x"), q("0")), Errc::ZeroParameter);
  EXPECT_EQ(rejection(SeqKind::Lucas, q("2"), q("3")), Errc::BothUnits);
  EXPECT_EQ(rejection(SeqKind::PowerDiff, q("x+1"), q("-x-1")), Errc::RatioRootOfUnity);
  EXPECT_EQ(rejection(SeqKind::PowerDiff, q("2"), q("3")), Errc::BothUnits);
}

TEST(Validate, ProportionalOverQIsAllowedUnlessRootOfUnity) {
  // f = 2g: ratio 2 is not a root of unity, but f and g share g's factors
  EXPECT_EQ(rejection(SeqKind::PowerDiff, q("2x+2"), q("x+1")), Errc::NotCoprime);
  EXPECT_NO_THROW(validate(SeqKind::PowerDiff, q("2"), q("x")));
}

TEST(Terms, Examples) {
  auto lucas = validate(SeqKind::Lucas, q("x"), q("1"));
  EXPECT_EQ(term(lucas, 4), q("x^3-2x"));
  auto lehmer = validate(SeqKind::Lehmer, q("x"), q("1"));
  SeqTermCache cache(lehmer);
  EXPECT_EQ(cache.term(3), q("x-1"));
  EXPECT_EQ(cache.term(4), q("x-2"));
  EXPECT_EQ(cache.term(5), q("x^2-3x+1"));
  EXPECT_EQ(cache.term(6), q("x^2-4x+3"));
  auto power = validate(SeqKind::PowerDiff, q("x+1"), q("x"));
  EXPECT_EQ(term(power, 1), q("1"));
  EXPECT_EQ(term(validate(SeqKind::PowerDiff, fp(3, "x+1"), fp(3, "x")), 3), fp(3, "1"));
  EXPECT_THROW(term(lucas, 0), Error);
}

TEST(Terms, LucasDegreeGrowth) {
  SeqTermCache cache(validate(SeqKind::Lucas, q("x"), q("1")));
  for (unsigned n = 1; n <= 40; ++n) ASSERT_EQ(cache.term(n).degree(), static_cast<int>(n) - 1);
  SeqTermCache c3(validate(SeqKind::Lucas, q("x^3+x"), q("-2")));
  for (unsigned n = 1; n <= 30; ++n) ASSERT_EQ(c3.term(n).degree(), 3 * (static_cast<int>(n) - 1));
}

TEST(Tower, RelationsHold) {
  TowerRing<Rationals> T(q("x^2+3"), q("x-1"));
  auto s = T.s(), t = T.t();
  EXPECT_EQ(T.mul(s, s), T.from_base(q("x^2+3")));
  EXPECT_EQ(T.mul(t, t), T.sub(T.mul(s, t), T.from_base(q("x-1"))));
  auto lam = T.lambda(), eta = T.eta();
  EXPECT_EQ(T.mul(lam, eta), T.from_base(q("x-1")));
  auto sum = T.add(lam, eta);
  EXPECT_EQ(T.mul(sum, sum), T.from_base(q("x^2+3")));
}

TEST(Tower, MultiplicationIsAssociativeAndCommutative) {
  std::mt19937_64 rng(51);
  PrimeField F(7);
  TowerRing<PrimeField> T(fp(7, "x^3+2"), fp(7, "3x+1"));
  auto rnd = [&] {
    return TowerElem<PrimeField>{random_poly(F, 3, rng), random_poly(F, 3, rng), random_poly(F, 3, rng),
                                 random_poly(F, 3, rng)};
  };
  for (int i = 0; i < 100; ++i) {
    auto a = rnd(), b = rnd(), c = rnd();
    ASSERT_EQ(T.mul(T.mul(a, b), c), T.mul(a, T.mul(b, c)));
    ASSERT_EQ(T.mul(a, b), T.mul(b, a));
    ASSERT_EQ(T.mul(a, T.add(b, c)), T.add(T.mul(a, b), T.mul(a, c)));
  }
}

TEST(OracleTerm, Examples) {
  auto lehmer = validate(SeqKind::Lehmer, q("x"), q("1"));
  EXPECT_EQ(oracle_term(lehmer, 4), q("x-2"));
  auto lucas = validate(SeqKind::Lucas, q("x"), q("1"));
  EXPECT_EQ(oracle_term(lucas, 3), q("x^2-1"));
  EXPECT_EQ(oracle_term(lucas, 1), q("1"));
  EXPECT_EQ(oracle_term(lehmer, 1), q("1"));
  EXPECT_THROW(oracle_term(validate(SeqKind::PowerDiff, q("x"), q("1")), 2), Error);
}

TEST(OracleTerm, MatchesRecurrenceOnRandomParams) {
  std::mt19937_64 rng(52);
  for (SeqKind kind : {SeqKind::Lucas, SeqKind::Lehmer}) {
    for (int i = 0; i < 20; ++i) {
      auto pq = random_params(kind, Rationals{}, 3, rng);
      ASSERT_TRUE(pq);
      SeqTermCache cq(*pq);
      for (unsigned n = 1; n <= 25; ++n) ASSERT_EQ(cq.term(n), oracle_term(*pq, n)) << n;
      for (std::uint64_t p : {2ull, 3ull, 7ull}) {
        auto pf = random_params(kind, PrimeField(p), 3, rng);
        ASSERT_TRUE(pf);
        SeqTermCache cf(*pf);
        for (unsigned n = 1; n <= 25; ++n) ASSERT_EQ(cf.term(n), oracle_term(*pf, n)) << p << " " << n;
      }
    }
  }
}

TEST(WardQn, Examples) {
  SeqTermCache cache(validate(SeqKind::Lehmer, q("x"), q("1")));
  EXPECT_EQ(ward_qn(cache, 3), q("x-1"));
  EXPECT_EQ(ward_qn(cache, 6), q("x-3"));
  EXPECT_EQ(ward_qn(cache, 2), q("1"));
  EXPECT_EQ(ward_qn(cache, 1), q("1"));
}

TEST(WardQn, ReassemblesTerms) {
  std::mt19937_64 rng(53);
  for (int i = 0; i < 10; ++i) {
    auto params = random_params(SeqKind::Lehmer, Rationals{}, 2, rng);
    SeqTermCache cache(*params);
    for (unsigned n = 1; n <= 30; ++n) {
      auto prod = Poly<Rationals>::one(Rationals{});
      for (unsigned d : divisors(n)) prod *= ward_qn(cache, d);
      ASSERT_EQ(prod, cache.term(n)) << n;
    }
  }
}

TEST(PhiEval, Examples) {
  SeqTermCache power(validate(SeqKind::PowerDiff, q("x+1"), q("x")));
  EXPECT_EQ(phi_eval(power, 3), q("3x^2+3x+1"));
  SeqTermCache lucas(validate(SeqKind::Lucas, q("x"), q("1")));
  EXPECT_EQ(phi_eval(lucas, 4), q("x^2-2"));
  EXPECT_EQ(phi_eval(lucas, 6), q("x^2-3"));
  EXPECT_THROW(phi_eval(lucas, 2), Error);
}

TEST(PowerDiff, CyclotomicFactorization) {
  std::mt19937_64 rng(54);
  for (int i = 0; i < 10; ++i) {
    auto params = random_params(SeqKind::PowerDiff, Rationals{}, 2, rng);
    SeqTermCache cache(*params);
    for (unsigned n = 1; n <= 30; ++n) {
      auto prod = Poly<Rationals>::one(Rationals{});
      for (unsigned d : divisors(n)) prod *= eval_form(cyclotomic_form(d), params->a(), params->b());
      ASSERT_EQ(prod, cache.term(n)) << n;
    }
  }
}

TEST(PowerDiff, FrobeniusCollapse) {
  std::mt19937_64 rng(55);
  for (std::uint64_t p : {2ull, 3ull, 5ull}) {
    for (int i = 0; i < 10; ++i) {
      auto params = random_params(SeqKind::PowerDiff, PrimeField(p), 2, rng);
      SeqTermCache cache(*params);
      for (unsigned n = p; n <= 20; n += p) ASSERT_EQ(cache.term(n), pow(cache.term(n / p), p)) << p << " " << n;
    }
  }
}
