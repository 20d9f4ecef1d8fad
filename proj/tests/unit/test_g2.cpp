#include <gtest/gtest.h>

#include "g2forge/aw.hpp"
#include "g2forge/g2.hpp"
#include "g2forge/random.hpp"

using namespace g2forge;
using F = Form<Rational>;
using RMat = Matrix<Rational>;

namespace {

const G2Frame<Rational>& frame() { return G2Frame<Rational>::instance(); }
F e(std::initializer_list<int> idx) { return F::from_indices(idx); }

RMat diag(std::initializer_list<long> d) {
  RMat m(kDim, kDim);
  std::size_t i = 0;
  for (long x : d) m(i, i) = Rational(x), ++i;
  return m;
}

}  // namespace

TEST(StarAction, Examples) {
  EXPECT_EQ(star_action(RMat::identity(kDim), frame().phi()), frame().phi() * Rational(3));
  const RMat f = endomorphism_of(contract_basis(1, frame().phi()));
  EXPECT_EQ(star_action(f, frame().psi()), wedge(F::basis_vector(1), frame().phi()) * Rational(-3));
  EXPECT_EQ(star_action(diag({1, 0, 0, 0, 0, 0, -1}), frame().phi()),
            e({1, 2, 3}) + e({1, 4, 5}) - e({2, 5, 7}) - e({3, 4, 7}));
}

TEST(Metric, RecoveredFromPhi) {
  EXPECT_EQ(metric_from_structure<Rational>(), RMat::identity(kDim));
  const RMat scaled = metric_from_structure(frame().phi() * Rational(2));
  EXPECT_EQ(scaled, RMat::identity(kDim) * Rational(8));
}

TEST(Lambda2, SpectrumAndSplit) {
  const auto& sp = frame().spectrum();
  EXPECT_EQ(sp.eig7, Rational(-2));
  EXPECT_EQ(sp.eig14, Rational(1));
  const F w = contract_basis(1, frame().phi());
  EXPECT_EQ(frame().project2(w).a7, w);
  EXPECT_TRUE(frame().project2(w).a14.is_zero());
  const F z(2);
  EXPECT_TRUE(frame().project2(z).a7.is_zero());
  Sampler rng(41, "lambda2");
  for (int k = 0; k < 20; ++k) {
    const auto s = frame().project2(rng.form(2));
    EXPECT_EQ(hodge(wedge(frame().phi(), s.a14)), s.a14);
    EXPECT_EQ(hodge(wedge(frame().phi(), s.a7)), s.a7 * Rational(-2));
    EXPECT_EQ(frame().project2(s.a14).a14, s.a14);
  }
}

TEST(Project3, Examples) {
  const auto p = frame().project3(frame().phi());
  EXPECT_EQ(p.a1, frame().phi());
  EXPECT_TRUE(p.a7.is_zero() && p.a27.is_zero());
  const F v = contract_basis(1, frame().psi());
  EXPECT_EQ(frame().project3(v).a7, v);
  const auto q = frame().project3(e({1, 2, 3}));
  const F phit = frame().phi() - e({1, 2, 3}) * Rational(7);
  EXPECT_EQ(q.a1, frame().phi() * Rational(1, 7));
  EXPECT_TRUE(q.a7.is_zero());
  EXPECT_EQ(q.a27, phit * Rational(-1, 7));
}

TEST(Project4, Examples) {
  EXPECT_EQ(frame().project4(frame().psi()).a1, frame().psi());
  const F v = wedge(F::basis_vector(1), frame().phi());
  EXPECT_EQ(frame().project4(v).a7, v);
  Sampler rng(42, "project4");
  for (int k = 0; k < 10; ++k) {
    const F a = iso_i_psi(rng.symmetric(true));
    EXPECT_EQ(frame().project4(a).a27, a);
    EXPECT_EQ(inner(a, frame().psi()), Rational(0));
  }
}

TEST(Projectors, CompleteAndOrthogonal) {
  for (const auto* set : {&frame().proj3(), &frame().proj4()}) {
    EXPECT_EQ(rank((*set)[0]), 1u);
    EXPECT_EQ(rank((*set)[1]), 7u);
    EXPECT_EQ(rank((*set)[2]), 27u);
    EXPECT_EQ((*set)[0] + (*set)[1] + (*set)[2], RMat::identity(35));
    EXPECT_TRUE(((*set)[1] * (*set)[2]).is_zero());
  }
  EXPECT_EQ(frame().proj2_7() + frame().proj2_14(), RMat::identity(21));
}

TEST(IsoI, Examples) {
  const auto& aw = AWFrame<Rational>::instance();
  const RMat s = aw.id3 * Rational(-2) + aw.id4 * Rational(3, 2);
  EXPECT_EQ(iso_i(s), aw.phi_tilde);
  EXPECT_EQ(norm2(iso_i(diag({0, 0, 0, 1, -1, 0, 0}))), Rational(4));
  EXPECT_TRUE(iso_i(RMat(kDim, kDim)).is_zero());
  try {
    (void)iso_i(RMat::identity(kDim));
    FAIL() << "expected TypeError";
  } catch (const TypeError& e) {
    EXPECT_EQ(e.component(), "trace");
  }
}

TEST(IsoI, InverseExamplesAndRoundTrip) {
  const auto& aw = AWFrame<Rational>::instance();
  EXPECT_EQ(iso_i_inv(aw.phi_tilde).matrix(), aw.id3 * Rational(-2) + aw.id4 * Rational(3, 2));
  const F yO = wedge(F::basis_vector(1), aw.Omega);
  EXPECT_EQ(iso_i_inv(yO).matrix(), aw.J * aw.I[0] * Rational(-1, 2));
  Sampler rng(43, "roundtrip");
  for (int k = 0; k < 50; ++k) {
    const RMat s = rng.symmetric(true);
    EXPECT_EQ(iso_i_inv(iso_i(s)).matrix(), s);
  }
}

TEST(IsoI, NormAndDualityOnBasis) {
  for (const RMat& s : sym2_0_basis<Rational>()) {
    EXPECT_EQ(norm2(iso_i(s)), Rational(2) * sym_inner(s, s));
    EXPECT_EQ(hodge(iso_i_psi(s)), -iso_i(s));
  }
  EXPECT_EQ(sym2_0_basis<Rational>().size(), 27u);
}

TEST(IsoI, InverseRejectsWrongType) {
  try {
    (void)iso_i_inv(frame().phi());
    FAIL();
  } catch (const TypeError& e) {
    EXPECT_EQ(e.component(), "Lambda^3_1");
  }
  try {
    (void)iso_i_inv(contract_basis(2, frame().psi()));
    FAIL();
  } catch (const TypeError& e) {
    EXPECT_EQ(e.component(), "Lambda^3_7");
  }
}

TEST(Hat, Examples) {
  EXPECT_EQ(hat(frame().psi()), -frame().phi());
  const F v = wedge(F::basis_vector(1), frame().phi());
  EXPECT_EQ(hat(v), hodge(v));
  Sampler rng(44, "hat");
  for (int k = 0; k < 10; ++k) {
    const RMat s = rng.symmetric(true);
    EXPECT_EQ(hat(iso_i_psi(s)), iso_i(s));
  }
}

TEST(Hat, DefiningRelationOnBasis) {
  for (const Blade& b : blades_of_grade(4)) {
    const F a = F::blade(b.mask);
    for (int j = 1; j <= kDim; ++j)
      EXPECT_TRUE((wedge(hat(a), contract_basis(j, frame().psi())) + wedge(frame().phi(), contract_basis(j, a))).is_zero());
  }
}

TEST(ExtractV7, Examples) {
  for (int j = 1; j <= kDim; ++j) {
    EXPECT_EQ(extract_v7(wedge(F::basis_vector(j), frame().phi())), F::basis_vector(j));
    EXPECT_EQ(wedge(frame().phi(), contract_basis(j, frame().psi())), contract_basis(j, F::volume()) * Rational(-4));
  }
  EXPECT_TRUE(extract_v7(frame().psi()).is_zero());
}

TEST(Injectivity, FullRank) { EXPECT_EQ(rank(frame().injectivity_matrix()), 35u); }

TEST(SStar, RandomTriples) {
  Sampler rng(45, "sstar");
  for (int k = 0; k < 30; ++k) {
    const RMat s = rng.symmetric(true);
    const F v1 = rng.vector(), v2 = rng.vector();
    EXPECT_EQ(wedge(wedge(iso_i(s), contract(v1, frame().psi())), v2),
              F::volume() * (Rational(2) * inner(apply(s, v1), v2)));
  }
}

TEST(ApproxFrame, MatchesExact) {
  const auto& a = G2Frame<ApproxScalar>::instance();
  EXPECT_TRUE(close(a.phi(), lift<ApproxScalar>(frame().phi())));
  const F b = iso_i(diag({1, 1, 1, -1, -1, -1, 0}));
  EXPECT_TRUE(close(iso_i_inv(lift<ApproxScalar>(b)).matrix(), lift<ApproxScalar>(iso_i_inv(b).matrix())));
}
