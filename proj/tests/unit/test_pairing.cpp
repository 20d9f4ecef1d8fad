#include <gtest/gtest.h>

#include <cmath>

#include "g2forge/pairing.hpp"
#include "g2forge/random.hpp"

using namespace g2forge;
using RMat = Matrix<Rational>;
using Xi = Su3Element<Rational>;

namespace {

MultiPoly letter(Letter l) { return MultiPoly::variable(static_cast<std::size_t>(l)); }

MultiPoly s_letters() { return (letter(Letter::v1) + letter(Letter::v2)) * GaussRational(Rational(1, 2)); }

}  // namespace

TEST(Permanent, Examples) {
  EXPECT_EQ(permanent(RMat(1, 1, {Rational(5)})), Rational(5));
  EXPECT_EQ(permanent(RMat(2, 2, {1, 2, 3, 4})), Rational(10));
  RMat f(3, 3);
  for (std::size_t i = 0; i < 3; ++i)
    for (std::size_t j = 0; j < 3; ++j) f(i, j) = Rational(4, 3);
  EXPECT_EQ(permanent(f), Rational(128, 9));
  EXPECT_EQ(permanent(RMat(0, 0)), Rational(1));
}

TEST(Permanent, RyserMatchesNaive) {
  Sampler rng(71, "perm");
  for (std::size_t n = 1; n <= 5; ++n)
    for (int k = 0; k < 10; ++k) {
      RMat m(n, n);
      for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j) m(i, j) = rng.rational();
      EXPECT_EQ(permanent_ryser(m), permanent_naive(m));
    }
}

TEST(Gram, Data) {
  const auto& g = gram_matrix();
  EXPECT_TRUE(g.is_symmetric());
  for (std::size_t a = 0; a < 3; ++a)
    for (std::size_t b = 0; b < 3; ++b) EXPECT_EQ(g(a, b), a == b ? Rational(4, 3) : Rational(-2, 3));
  for (std::size_t j = 0; j < 3; ++j) {
    EXPECT_EQ(g(3 + j, 6 + j), Rational(2));
    EXPECT_TRUE(g(3 + j, 3 + j).is_zero());
  }
  RMat vb(3, 3);
  for (std::size_t a = 0; a < 3; ++a)
    for (std::size_t b = 0; b < 3; ++b) vb(a, b) = g(a, b);
  EXPECT_EQ(rank(vb), 2u);
}

TEST(SymInnerPoly, Examples) {
  const MultiPoly v1 = letter(Letter::v1);
  EXPECT_EQ(sym_inner_poly(v1 * v1 * v1, v1 * v1 * v1), GaussRational(Rational(128, 9)));
  const MultiPoly s = s_letters();
  EXPECT_EQ(sym_inner_poly(s * s * s, idet_poly()), GaussRational(Rational(-4, 9)));
  EXPECT_EQ(sym_inner_poly(letter(Letter::z1), letter(Letter::zb1)), GaussRational(2));
  EXPECT_TRUE(sym_inner_poly(letter(Letter::z1), letter(Letter::z1)).is_zero());
}

TEST(SymInnerPoly, Symmetric) {
  Sampler rng(72, "symp");
  auto random_cubic = [&] {
    MultiPoly p;
    for (const auto& m : monomials_of_degree<kLetters>(3))
      if (rng.integer(0, 9) == 0) p.add_term(m, GaussRational(rng.rational(), rng.rational()));
    return p;
  };
  for (int k = 0; k < 10; ++k) {
    const MultiPoly p = random_cubic(), q = random_cubic();
    EXPECT_EQ(sym_inner_poly(p, q), sym_inner_poly(q, p));
  }
  EXPECT_TRUE(sym_inner_poly(idet_poly(), idet_poly()).is_real());
}

TEST(Idet, Values) {
  const MultiPoly d = idet_poly();
  std::array<GaussRational, kLetters> diag = {Rational(1), Rational(1), Rational(-2), 0, 0, 0, 0, 0, 0};
  EXPECT_EQ(d.evaluate(diag), GaussRational(-2));
  std::array<GaussRational, kLetters> z3 = {0, 0, 0, 0, 0, GaussRational(1), 0, 0, GaussRational(1)};
  EXPECT_TRUE(d.evaluate(z3).is_zero());
  Exponents<kLetters> v1z1{};
  v1z1[0] = 1, v1z1[3] = 1, v1z1[6] = 1;
  EXPECT_EQ(eliminate_v3(d).coeff(v1z1), GaussRational(-1));
  EXPECT_EQ(d.coeff(v1z1), GaussRational(-1));
  EXPECT_TRUE(is_real_valued(d));
}

TEST(Idet, LiteralReadingDiffers) {
  const auto cmp = compare_idet();
  EXPECT_FALSE(cmp.agree);
  EXPECT_FALSE(cmp.reading.empty());
  EXPECT_FALSE(is_real_valued(cmp.literal));
}

TEST(Components, Values) {
  const auto c = pairing_components();
  EXPECT_EQ(c.s3, Rational(-4, 9));
  EXPECT_EQ(c.sx2, Rational(-8, 3));
  EXPECT_EQ(c.sy2, Rational(4));
  EXPECT_EQ(c.R, Rational(24));
}

TEST(PPoly, ClosedFormAtDiagonal) {
  const MultiPoly p = P_poly(PSource::closed_form);
  std::array<GaussRational, kLetters> diag = {Rational(1), Rational(1), Rational(-2), 0, 0, 0, 0, 0, 0};
  EXPECT_EQ(p.evaluate(diag), GaussRational(210));
  EXPECT_TRUE(is_real_valued(p));
  EXPECT_EQ(p.homogeneous_degree(), 3);
}

TEST(PPoly, FirstPrinciplesAgreesWithPointValues) {
  Sampler rng(73, "ppoly");
  const RealPoly& p = P_real(PSource::first_principles);
  for (int k = 0; k < 5; ++k) {
    std::array<Rational, 8> c;
    for (auto& t : c) t = rng.rational();
    EXPECT_EQ(p.evaluate(c), P_first_principles(Xi::from_coordinates(c)));
  }
}

TEST(PPoly, PureZPartSupport) {
  for (auto src : {PSource::closed_form, PSource::first_principles})
    for (const auto& [m, c] : P_poly(src).terms()) {
      if (m[0] + m[1] + m[2] != 0) continue;
      const bool z = m[3] == 1 && m[4] == 1 && m[5] == 1;
      const bool zb = m[6] == 1 && m[7] == 1 && m[8] == 1;
      EXPECT_TRUE(z || zb);
    }
}

TEST(FinalPairing, ClosedFormIsOneHundredThirds) {
  EXPECT_EQ(final_pairing(PSource::closed_form), Rational(100, 3));
  EXPECT_EQ(assemble(closed_form_coefficients(), pairing_components()), Rational(100, 3));
}

TEST(FinalPairing, FirstPrinciplesIsNonzero) {
  const Rational fp = final_pairing(PSource::first_principles);
  EXPECT_FALSE(fp.is_zero());
  EXPECT_EQ(fp, Rational(760, 3));
}

TEST(FinalPairing, IntermediateSignAssemblesTo220) {
  CubicCoefficients c = closed_form_coefficients();
  c.s3 = -c.s3;
  EXPECT_EQ(assemble(c, pairing_components()), Rational(220));
}

TEST(Haar, ZeroElement) {
  const auto r = haar_average_check(Xi(), 4096, 1);
  EXPECT_EQ(r.mean, 0.0);
  EXPECT_EQ(r.expected, 0.0);
}

TEST(Haar, DeterministicAndWorkerIndependent) {
  const Xi xi({1, 1, -2}, {0, 0, 0, 0, 0, 0});
  const auto a = haar_average_check(xi, 20000, 5, PSource::first_principles, 1);
  const auto b = haar_average_check(xi, 20000, 5, PSource::first_principles, 4);
  const auto c = haar_average_check(xi, 20000, 5, PSource::first_principles, 1);
  EXPECT_EQ(a.mean, b.mean);
  EXPECT_EQ(a.std_error, b.std_error);
  EXPECT_EQ(a.mean, c.mean);
  EXPECT_EQ(a.expected, -14.25);
}

TEST(Haar, ConvergesToInvariantProjection) {
  const Xi xi({1, 1, -2}, {0, 0, 0, 0, 0, 0});
  const auto r = haar_average_check(xi, 200000, 9);
  EXPECT_LT(std::fabs(r.mean - r.expected), 5 * r.std_error);
}
