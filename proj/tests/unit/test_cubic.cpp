#include <gtest/gtest.h>

#include <algorithm>
#include <set>

#include "g2forge/aw.hpp"
#include "g2forge/cubic.hpp"
#include "g2forge/random.hpp"

using namespace g2forge;
using F = Form<Rational>;
using RMat = Matrix<Rational>;

namespace {

const G2Frame<Rational>& frame() { return G2Frame<Rational>::instance(); }

F random27_4(Sampler& rng) { return frame().project4(rng.form(4)).a27; }
F random27_3(Sampler& rng) { return frame().project3(rng.form(3)).a27; }

RMat e44_minus_e55() {
  RMat s(kDim, kDim);
  s(3, 3) = Rational(1);
  s(4, 4) = Rational(-1);
  return s;
}

}  // namespace

TEST(QForm, Examples) {
  const F& psi = frame().psi();
  EXPECT_EQ(q_form(psi, psi).matrix().trace(), Rational(28));
  const F a = F::from_indices({1, 2, 3, 4});
  EXPECT_EQ(q_form(a, a).matrix(), block_identity<Rational>(0x0F));
  EXPECT_TRUE(q_form(a, F::from_indices({1, 2, 5, 6})).matrix().is_zero());
  EXPECT_EQ(q0_form(a, a).matrix(), block_identity<Rational>(0x0F) - RMat::identity(kDim) * Rational(4, 7));
  EXPECT_TRUE(q0_form(psi, psi).matrix().is_zero());
}

TEST(QForm, TraceAndTracelessPart) {
  Sampler rng(51, "q");
  for (int k = 0; k < 50; ++k) {
    const F a = rng.form(4);
    EXPECT_EQ(q_form(a, a).matrix().trace(), Rational(4) * norm2(a));
    EXPECT_TRUE(q0_form(a, a).matrix().trace().is_zero());
  }
}

TEST(PForm, Examples) {
  const auto& aw = AWFrame<Rational>::instance();
  EXPECT_EQ(p_form(aw.phi_tilde, aw.phi_tilde).matrix(), aw.id3 * Rational(38) + aw.id4 * Rational(3));
  const F b = F::from_indices({1, 2, 3});
  EXPECT_EQ(p_form(b, b).matrix(), block_identity<Rational>(0x07));
}

TEST(Q2, Examples) {
  EXPECT_TRUE(Q2_27(F(4)).is_zero());
  const F a = iso_i_psi(e44_minus_e55());
  EXPECT_EQ(Q2_27(a), b2_full(a, a));
  Sampler rng(52, "q2");
  for (int k = 0; k < 20; ++k) {
    const F x = random27_4(rng);
    const F q = Q2_27(x);
    EXPECT_EQ(inner(q, frame().phi()), Rational(2) * norm2(x));
    EXPECT_TRUE(frame().project3(q).a7.is_zero());
  }
  EXPECT_THROW(Q2_27(frame().psi()), TypeError);
}

TEST(B2, Examples) {
  EXPECT_EQ(b2_full(frame().psi(), frame().psi()), frame().phi() * Rational(2));
  EXPECT_THROW(b2_full(frame().phi(), frame().psi()), GradeError);
}

TEST(B2, SolvesDefiningRelationAndIsSymmetric) {
  Sampler rng(53, "b2");
  for (int k = 0; k < 20; ++k) {
    const F a1 = rng.form(4), a2 = rng.form(4);
    const F b = b2_full(a1, a2);
    EXPECT_EQ(b, b2_full(a2, a1));
    for (int j = 1; j <= kDim; ++j) EXPECT_TRUE(b2_residual(b, a1, a2, j).is_zero());
  }
}

TEST(B2, Polarization) {
  Sampler rng(54, "polar");
  for (int k = 0; k < 10; ++k) {
    const F a1 = rng.form(4), a2 = rng.form(4);
    const F s = a1 + a2;
    EXPECT_EQ(b2_full(a1, a2), (b2_full(s, s) - b2_full(a1, a1) - b2_full(a2, a2)) * Rational(1, 2));
  }
}

TEST(B2, MatchesQ2OnTwentySeven) {
  Sampler rng(55, "b2q2");
  for (int k = 0; k < 20; ++k) {
    const F a = random27_4(rng);
    EXPECT_EQ(b2_full(a, a), Q2_27(a));
  }
}

TEST(QCubic, RoutesAgreeAndHomogeneous) {
  EXPECT_TRUE(Q_cubic(F(4)).is_zero());
  Sampler rng(56, "Q");
  for (int k = 0; k < 20; ++k) {
    const F a = random27_4(rng);
    const auto v = Q_cubic_routes(a);
    EXPECT_EQ(v.via_wedge, v.via_tensor);
    const Rational t = rng.nonzero_rational();
    EXPECT_EQ(Q_cubic(a * t), t * t * t * Q_cubic(a));
  }
  const F star_phit = hodge(AWFrame<Rational>::instance().phi_tilde);
  const auto v = Q_cubic_routes(star_phit);
  EXPECT_EQ(v.via_wedge, v.via_tensor);
  EXPECT_FALSE(v.via_wedge.is_zero());
}

TEST(PCubic, EqualsQOfStar) {
  EXPECT_TRUE(P_cubic(F(3)).is_zero());
  Sampler rng(57, "P");
  for (int k = 0; k < 20; ++k) {
    const F b = random27_3(rng);
    EXPECT_EQ(P_cubic(b), Q_cubic(hodge(b)));
    const Rational t = rng.nonzero_rational();
    EXPECT_EQ(P_cubic(b * t), t * t * t * P_cubic(b));
  }
  EXPECT_EQ(P_unnormalized(AWFrame<Rational>::instance().phi_tilde), Rational(-210));
}

TEST(Trilinear, FullySymmetric) {
  Sampler rng(58, "tri");
  for (int k = 0; k < 10; ++k) {
    std::array<RMat, 3> s = {rng.symmetric(true), rng.symmetric(true), rng.symmetric(true)};
    std::array<int, 3> idx = {0, 1, 2};
    const Rational t0 = trilinear(s[0], s[1], s[2]);
    while (std::next_permutation(idx.begin(), idx.end())) EXPECT_EQ(trilinear(s[idx[0]], s[idx[1]], s[idx[2]]), t0);
  }
}

TEST(Trilinear, ConstantRatioToP) {
  Sampler rng(59, "ratio");
  std::set<std::string> ratios;
  for (int k = 0; k < 20; ++k) {
    const RMat s = rng.symmetric(true);
    const Rational p = P_cubic(iso_i(s));
    if (!p.is_zero()) ratios.insert((trilinear(s, s, s) / p).str());
  }
  EXPECT_EQ(ratios.size(), 1u);
}

TEST(Trilinear, DisjointDiagonalBasis) {
  RMat s1(kDim, kDim), s2(kDim, kDim);
  s1(0, 0) = Rational(1), s1(1, 1) = Rational(-1);
  s2(3, 3) = Rational(1), s2(4, 4) = Rational(-1);
  const Rational brute = inner(b2_full(hodge(iso_i(s1)), hodge(iso_i(s1))), iso_i(s2));
  EXPECT_EQ(trilinear(s1, s1, s2), brute);
}

TEST(CubicReport, AssertsWedgeIdentity) {
  const F a = iso_i_psi(e44_minus_e55());
  const auto r = cubic_report(a);
  EXPECT_EQ(wedge(r.q2, a), F::volume() * r.q);
  EXPECT_EQ(r.components.a27, a);
}
