#include <gtest/gtest.h>

#include <random>

#include "wg/cyclo.hpp"

using wg::CycNum;
using wg::Rational;

namespace {

CycNum z(int n, long k = 1) { return CycNum::root_of_unity(n, k); }

CycNum i_sqrt2() { return CycNum::canonicalize(8, {{1, 1}, {3, 1}}); }

// Small random element of Q(zeta_N) with N drawn from a short list.
CycNum random_cyc(std::mt19937& rng) {
  static const int conductors[] = {1, 3, 4, 5, 6, 8, 12};
  const int n = conductors[rng() % std::size(conductors)];
  std::map<long, Rational> raw;
  const int terms = 1 + static_cast<int>(rng() % 3);
  for (int t = 0; t < terms; ++t) {
    raw[rng() % n] += Rational(static_cast<long>(rng() % 7) - 3, 1 + static_cast<long>(rng() % 3));
  }
  return CycNum::canonicalize(n, raw);
}

}  // namespace

TEST(Cyclo, CanonicalizeCancels) {
  EXPECT_TRUE(CycNum::canonicalize(4, {{1, 1}, {3, 1}}).is_zero());
  EXPECT_EQ(CycNum::canonicalize(1, {{0, Rational(5, 3)}}), CycNum(Rational(5, 3)));
  EXPECT_EQ(CycNum::canonicalize(1, {{0, Rational(5, 3)}}).conductor(), 1);
}

TEST(Cyclo, CanonicalizeRejectsBadConductor) {
  EXPECT_THROW(CycNum::canonicalize(0, {}), wg::DomainError);
}

TEST(Cyclo, ISqrt2) {
  const CycNum a = i_sqrt2();
  EXPECT_FALSE(a.is_rational());
  EXPECT_EQ(a * a, CycNum(-2));
  EXPECT_TRUE((a + a.conjugate()).is_zero());
  EXPECT_EQ(a.conjugate(), -a);
  EXPECT_FALSE(a.try_rational().has_value());
}

TEST(Cyclo, TryRational) {
  EXPECT_EQ(*CycNum(-2).try_rational(), Rational(-2));
  EXPECT_EQ(*(z(3) + z(3, 2)).try_rational(), Rational(-1));
  EXPECT_EQ(*(z(5) + z(5, 2) + z(5, 3) + z(5, 4)).try_rational(), Rational(-1));
  // Exponents outside [0, N) are reduced first.
  EXPECT_EQ(z(6, -1) * z(6, 7), CycNum(1));
}

TEST(Cyclo, MixedConductors) {
  EXPECT_EQ(z(4) * z(4), CycNum(-1));
  EXPECT_EQ(z(8) * z(8), z(4));
  EXPECT_EQ(z(12, 4), z(3));
  EXPECT_EQ(z(6), -z(3, 2));
  EXPECT_EQ(z(3) + z(4) - z(4), z(3));
  EXPECT_EQ((z(3) * z(4)).conductor(), 12);
}

TEST(Cyclo, ConjugateOnRootsOfUnity) {
  for (int n : {3, 5, 8, 12}) {
    for (long k = 0; k < n; ++k) EXPECT_EQ(z(n, k).conjugate(), z(n, n - k));
  }
  EXPECT_EQ(CycNum(Rational(7, 2)).conjugate(), CycNum(Rational(7, 2)));
}

TEST(Cyclo, TextRoundTrip) {
  std::mt19937 rng(7);
  for (int trial = 0; trial < 200; ++trial) {
    const CycNum a = random_cyc(rng);
    EXPECT_EQ(CycNum::parse(a.to_string()), a) << a;
    EXPECT_EQ(CycNum::parse(a.to_string()).to_string(), a.to_string());
  }
  EXPECT_EQ(CycNum::parse("z(8) + z(8)^3"), i_sqrt2());
  EXPECT_EQ(CycNum::parse("-1/2 - 1/2*z(4)"), CycNum(Rational(-1, 2)) - CycNum(Rational(1, 2)) * z(4));
  EXPECT_EQ(CycNum::parse("0"), CycNum(0));
}

TEST(Cyclo, ParseErrors) {
  for (const char* bad : {"", "z(0)", "1/0", "z(4", "3*", "abc", "z(4)^"}) {
    EXPECT_THROW(CycNum::parse(bad), wg::ParseError) << bad;
  }
}

TEST(Cyclo, FieldAxioms) {
  std::mt19937 rng(11);
  for (int trial = 0; trial < 300; ++trial) {
    const CycNum a = random_cyc(rng);
    const CycNum b = random_cyc(rng);
    const CycNum c = random_cyc(rng);
    EXPECT_EQ((a + b) + c, a + (b + c));
    EXPECT_EQ((a * b) * c, a * (b * c));
    EXPECT_EQ(a * (b + c), a * b + a * c);
    EXPECT_EQ(a * b, b * a);
    EXPECT_EQ(a * CycNum(1), a);
    EXPECT_TRUE((a - a).is_zero());
    if (!a.is_zero()) {
      EXPECT_EQ(a * a.inverse(), CycNum(1)) << a;
    }
    EXPECT_EQ((a * b).conjugate(), a.conjugate() * b.conjugate());
    EXPECT_EQ((a + b).conjugate(), a.conjugate() + b.conjugate());
    EXPECT_EQ(a.conjugate().conjugate(), a);
  }
}

TEST(Cyclo, EmbeddingRoundTrip) {
  std::mt19937 rng(5);
  for (int trial = 0; trial < 100; ++trial) {
    const CycNum a = random_cyc(rng);
    const int n = a.conductor();
    const auto coeffs = a.coefficients_in(2 * n);
    std::map<long, Rational> raw;
    for (std::size_t k = 0; k < coeffs.size(); ++k) {
      if (sgn(coeffs[k]) != 0) raw[static_cast<long>(k)] = coeffs[k];
    }
    EXPECT_EQ(CycNum::canonicalize(2 * n, raw), a);
    EXPECT_EQ(CycNum::canonicalize(2 * n, raw).to_string(), a.to_string());
  }
}
