#include <gtest/gtest.h>

#include <cmath>
#include <limits>

#include "g2forge/random.hpp"
#include "g2forge/scalars.hpp"

using namespace g2forge;

namespace {

QuadExt random_quad(Sampler& rng) { return {rng.rational(), rng.rational()}; }
GaussRational random_gauss(Sampler& rng) { return {rng.rational(), rng.rational()}; }

template <class T, class Gen>
void field_axioms(Gen gen) {
  for (int k = 0; k < 200; ++k) {
    const T a = gen();
    const T b = gen();
    const T c = gen();
    EXPECT_EQ((a + b) + c, a + (b + c));
    EXPECT_EQ((a * b) * c, a * (b * c));
    EXPECT_EQ(a * (b + c), a * b + a * c);
    EXPECT_EQ(a + b, b + a);
    EXPECT_EQ(a * b, b * a);
    EXPECT_EQ(a - a, T(0));
    if (!is_zero(a)) {
      EXPECT_EQ(a * (T(1) / a), T(1));
      EXPECT_EQ((b / a) * a, b);
    }
  }
}

}  // namespace

TEST(Rational, ReducesAndPrints) {
  EXPECT_EQ(Rational(6, 4).str(), "3/2");
  EXPECT_EQ(Rational(-4, 2).str(), "-2");
  EXPECT_EQ(Rational::parse("-10/4"), Rational(-5, 2));
  EXPECT_EQ(Rational(2, -3), Rational(-2, 3));
}

TEST(Rational, DivisionByZeroThrows) {
  EXPECT_THROW(Rational(1) / Rational(0), DivisionByZero);
  EXPECT_THROW(Rational::from_strings("1", "0"), DivisionByZero);
}

TEST(Rational, ArbitraryPrecision) {
  Rational big(1);
  for (int k = 0; k < 40; ++k) big *= Rational(1000003);
  EXPECT_EQ(big / big, Rational(1));
  EXPECT_GT(big.num_str().size(), 200u);
}

TEST(Rational, FieldAxioms) {
  Sampler rng(11, "rational");
  field_axioms<Rational>([&] { return rng.rational(9); });
}

TEST(QuadExt, Multiplication) {
  EXPECT_EQ(QuadExt(Rational(1, 2)) * QuadExt::sqrt10(), QuadExt(Rational(0), Rational(1, 2)));
  const QuadExt c(Rational(0), Rational(1, 6));
  EXPECT_EQ(c * c, QuadExt(Rational(5, 18)));
  EXPECT_EQ(QuadExt(1, 1) * QuadExt(-1, 1), QuadExt(9));
}

TEST(QuadExt, Inverse) {
  EXPECT_EQ(QuadExt(2).inverse(), QuadExt(Rational(1, 2)));
  EXPECT_EQ(QuadExt(1, 1).inverse(), QuadExt(Rational(-1, 9), Rational(1, 9)));
  EXPECT_EQ(QuadExt(0, 1).inverse(), QuadExt(Rational(0), Rational(1, 10)));
  EXPECT_THROW(QuadExt(0).inverse(), DivisionByZero);
}

TEST(QuadExt, FieldAxioms) {
  Sampler rng(12, "quadext");
  field_axioms<QuadExt>([&] { return random_quad(rng); });
}

TEST(QuadExt, NormIsMultiplicativeAndDefinite) {
  Sampler rng(13, "norm");
  for (int k = 0; k < 200; ++k) {
    const QuadExt a = random_quad(rng);
    const QuadExt b = random_quad(rng);
    EXPECT_EQ((a * b).norm(), a.norm() * b.norm());
    EXPECT_EQ(a.norm().is_zero(), a.is_zero());
  }
}

TEST(GaussRational, Arithmetic) {
  EXPECT_EQ(GaussRational::i() * GaussRational::i(), GaussRational(-1));
  EXPECT_EQ(GaussRational(Rational(3), Rational(4)).norm(), Rational(25));
  EXPECT_EQ(GaussRational(Rational(1), Rational(1)).inverse(), GaussRational(Rational(1, 2), Rational(-1, 2)));
}

TEST(GaussRational, FieldAxioms) {
  Sampler rng(14, "gauss");
  field_axioms<GaussRational>([&] { return random_gauss(rng); });
}

TEST(ApproxScalar, MirrorsExactArithmetic) {
  Sampler rng(15, "approx");
  const long double bound = std::ldexp(1.0L, -40);
  auto within = [&](const ApproxScalar& a, const Rational& e) {
    const long double exact = e.to_long_double();
    return std::fabs(a.value() - exact) <= bound * (1.0L + std::fabs(exact));
  };
  for (int k = 0; k < 500; ++k) {
    const Rational a = rng.rational(20);
    const Rational b = rng.nonzero_rational(20);
    const Rational c = rng.rational(20);
    const ApproxScalar fa(a), fb(b), fc(c);
    EXPECT_TRUE(within(fa + fb, a + b));
    EXPECT_TRUE(within(fa - fb, a - b));
    EXPECT_TRUE(within(fa * fb, a * b));
    EXPECT_TRUE(within(fa / fb, a / b));
    EXPECT_TRUE(within((fa * fb + fc) / fb - fc * fa, (a * b + c) / b - c * a));
  }
}

TEST(ApproxScalar, Sqrt10) {
  const ApproxScalar r = scalar_traits<ApproxScalar>::sqrt10();
  EXPECT_NEAR(static_cast<double>((r * r).value()), 10.0, 1e-15);
}

TEST(ApproxScalar, RejectsNonFinite) {
  EXPECT_THROW(ApproxScalar(std::numeric_limits<long double>::infinity()), NonFiniteValue);
  EXPECT_THROW(ApproxScalar(1) / ApproxScalar(0), DivisionByZero);
}

TEST(ApproxScalar, CloseIsRelative) {
  EXPECT_TRUE(scalar_traits<ApproxScalar>::close(ApproxScalar(1e12L), ApproxScalar(1e12L + 1e2L)));
  EXPECT_FALSE(scalar_traits<ApproxScalar>::close(ApproxScalar(1.0L), ApproxScalar(1.001L)));
}
