#include <gtest/gtest.h>

#include <random>

#include "support.hpp"

using namespace lehmer;
using testing_support::random_rational;

TEST(Rationals, AddsExactly) {
  Rationals Q;
  EXPECT_EQ(Q.add(mpq_class(1, 2), mpq_class(1, 3)), mpq_class(5, 6));
  EXPECT_EQ(Q.to_string(Q.from_fraction(4, -6)), "-2/3");
}

TEST(Rationals, ZeroDenominatorAndInverse) {
  Rationals Q;
  EXPECT_THROW(Q.from_fraction(1, 0), Error);
  try {
    Q.inv(Q.zero());
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), Errc::DivisionByZero);
  }
}

TEST(PrimeField, SmallArithmetic) {
  PrimeField F5(5), F3(3);
  EXPECT_EQ(F5.inv(2), 3u);
  EXPECT_EQ(F3.add(2, 2), 1u);
  EXPECT_EQ(F5.from_int(-1), 4u);
  EXPECT_EQ(F5.from_fraction(1, 2), 3u);
  EXPECT_EQ(F5.sub(1, 3), 3u);
  EXPECT_EQ(F5.neg(0), 0u);
}

TEST(PrimeField, RejectsBadModuli) {
  for (std::uint64_t p : {0ull, 1ull, 4ull, 9ull, 91ull, (1ull << 32) + 15}) {
    try {
      PrimeField f(p);
      FAIL() << p;
    } catch (const Error& e) {
      EXPECT_EQ(e.code(), Errc::InvalidModulus) << p;
    }
  }
  EXPECT_NO_THROW(PrimeField(4294967291ull));  // largest prime below 2^32
}

TEST(PrimeField, FractionWithVanishingDenominator) {
  PrimeField F3(3);
  EXPECT_THROW(F3.from_fraction(1, 6), Error);
}

TEST(Characteristic, OfEachField) {
  EXPECT_EQ(characteristic(FieldDesc::rationals()), 0u);
  EXPECT_EQ(characteristic(FieldDesc::prime(7)), 7u);
  EXPECT_EQ(characteristic(FieldDesc::prime(2)), 2u);
  EXPECT_EQ(Rationals{}.characteristic(), 0u);
  EXPECT_EQ(PrimeField(7).characteristic(), 7u);
}

TEST(FieldElem, MismatchedPrimeFields) {
  FieldElem<PrimeField> a(PrimeField(3), 1), b(PrimeField(5), 1);
  try {
    field_add(a, b);
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), Errc::FieldMismatch);
  }
}

TEST(FieldElem, CanonicalizesOnConstruction) {
  FieldElem<PrimeField> a(PrimeField(7), 23);
  EXPECT_EQ(a.value(), 2u);
  FieldElem<Rationals> r(Rationals{}, mpq_class(mpz_class(6), mpz_class(4)));
  EXPECT_EQ(r.value().get_num(), 3);
  EXPECT_EQ(r.value().get_den(), 2);
}

template <class Field, class Gen>
void check_axioms(const Field& f, Gen gen, int rounds) {
  for (int i = 0; i < rounds; ++i) {
    auto a = gen(), b = gen(), c = gen();
    ASSERT_EQ(f.add(f.add(a, b), c), f.add(a, f.add(b, c)));
    ASSERT_EQ(f.mul(f.mul(a, b), c), f.mul(a, f.mul(b, c)));
    ASSERT_EQ(f.mul(a, f.add(b, c)), f.add(f.mul(a, b), f.mul(a, c)));
    ASSERT_EQ(f.add(a, b), f.add(b, a));
    ASSERT_EQ(f.mul(a, b), f.mul(b, a));
    ASSERT_TRUE(f.is_zero(f.add(a, f.neg(a))));
    ASSERT_EQ(f.sub(a, b), f.add(a, f.neg(b)));
    if (!f.is_zero(a)) {
      ASSERT_TRUE(f.is_one(f.mul(a, f.inv(a))));
    }
    ASSERT_EQ(f.canonical(f.canonical(a)), f.canonical(a));
  }
}

TEST(FieldAxioms, RandomRationalTriples) {
  std::mt19937_64 rng(11);
  check_axioms(Rationals{}, [&] { return random_rational(rng, 50); }, 500);
}

TEST(FieldAxioms, RandomPrimeFieldTriples) {
  std::mt19937_64 rng(12);
  for (std::uint64_t p : {2ull, 3ull, 5ull, 7919ull, 4294967291ull}) {
    PrimeField f(p);
    std::uniform_int_distribution<std::uint64_t> d(0, p - 1);
    check_axioms(f, [&] { return d(rng); }, 300);
  }
}

TEST(ErrorNames, MatchCodes) {
  Error e(Errc::NotDivisible, "x");
  EXPECT_EQ(e.name(), "NotDivisible");
  EXPECT_EQ(std::string(e.what()).rfind("NotDivisible", 0), 0u);
  EXPECT_EQ(errc_name(Errc::RatioRootOfUnity), "RatioRootOfUnity");
}
