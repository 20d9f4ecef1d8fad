#include <gtest/gtest.h>

#include <set>

#include "g2forge/aw.hpp"
#include "g2forge/random.hpp"

using namespace g2forge;
using F = Form<Rational>;
using Xi = Su3Element<Rational>;

namespace {

const AWFrame<Rational>& aw() { return AWFrame<Rational>::instance(); }
F e(std::initializer_list<int> idx) { return F::from_indices(idx); }

Xi random_xi(Sampler& rng) {
  std::array<Rational, 8> c;
  for (auto& t : c) t = rng.rational();
  return Xi::from_coordinates(c);
}

}  // namespace

TEST(Su3Element, ValidatesTrace) {
  EXPECT_THROW(Xi({1, 1, 1}, {0, 0, 0, 0, 0, 0}), ValidationError);
  const Xi xi({2, -1, -1}, {1, 2, 3, 4, 5, 6});
  EXPECT_EQ(xi.s(), Rational(1, 2));
  EXPECT_EQ(xi.y(), F::vector({Rational(3, 2), -1, 2, 0, 0, 0, 0}));
  EXPECT_EQ(xi.x_vec(), F::vector({0, 0, 0, -4, 3, -6, 5}));
}

TEST(Frame, Relations) {
  const auto r = verify_frame_relations();
  for (const auto& c : r.checks) EXPECT_TRUE(c.holds) << c.id << ": " << c.detail;
  EXPECT_EQ(apply(aw().I[0], F::basis_vector(4)), F::basis_vector(5));
  EXPECT_EQ(hodge_m4(aw().omega[0]), -aw().omega[0]);
}

TEST(C, Examples) {
  EXPECT_TRUE(C_of_x(F(1)).is_zero());
  EXPECT_EQ(C_of_x(F::basis_vector(4)), e({5, 6, 7}) * Rational(3) + e({1, 2, 7}) + e({2, 3, 5}) + e({3, 1, 6}));
  EXPECT_THROW(C_of_x(F::basis_vector(1)), SupportError);
}

TEST(C, RoutesAgree) {
  Sampler rng(61, "C");
  for (int k = 0; k < 30; ++k) {
    const F x = F::vector({0, 0, 0, rng.rational(), rng.rational(), rng.rational(), rng.rational()});
    const auto r = C_of_x_routes(x);
    EXPECT_EQ(r.display, r.contraction);
  }
}

TEST(A, Examples) {
  const Xi d({1, 1, -2}, {0, 0, 0, 0, 0, 0});
  EXPECT_EQ(A_of_xi(lift<QuadExt>(d)), lift<QuadExt>(aw().phi_tilde));
  const Xi y({1, -1, 0}, {0, 0, 0, 0, 0, 0});
  EXPECT_EQ(A_of_xi(lift<QuadExt>(y)), lift<QuadExt>(wedge(F::basis_vector(1), aw().Omega)) * QuadExt(Rational(-5, 3)));
  EXPECT_TRUE(A_of_xi(lift<QuadExt>(Xi())).is_zero());
  EXPECT_EQ(A_flat(Rational(1), F(1), F(1)), aw().phi_tilde);
  EXPECT_EQ(A_flat(Rational(0), F::basis_vector(1), F(1)), e({1, 4, 5}) + e({1, 6, 7}));
  EXPECT_EQ(A_flat(Rational(0), F(1), F::basis_vector(4)), C_of_x(F::basis_vector(4)));
}

TEST(A, LiesInTwentySeven) {
  Sampler rng(62, "A");
  for (int k = 0; k < 30; ++k) EXPECT_NO_THROW(A_of_xi(lift<QuadExt>(random_xi(rng))));
}

TEST(R, Examples) {
  EXPECT_TRUE(R_of(F(1), F::basis_vector(4)).is_zero());
  EXPECT_TRUE(R_of(F::basis_vector(1), F(1)).is_zero());
  EXPECT_EQ(R_display(Xi::from_coordinates({1, -1, 0, 0, 1, 0, 0, 0})), Rational(1));
  EXPECT_EQ(R_display(Xi::from_coordinates({0, 0, 1, 0, 1, 0, 0, 1})), Rational(2));
}

TEST(R, RoutesAgree) {
  Sampler rng(63, "R");
  for (int k = 0; k < 30; ++k) {
    const Xi xi = random_xi(rng);
    const auto r = R_routes(xi.y(), xi.x_vec());
    EXPECT_EQ(r.metric, r.display);
    EXPECT_EQ(R_of(xi), R_display(xi));
  }
}

TEST(Lemmas, PDisplays) {
  const auto r = verify_lemma_Lp(7);
  EXPECT_TRUE(r.at("Lp.phit-phit").holds);
  EXPECT_TRUE(r.at("Lp.phit-yO").holds);
  EXPECT_TRUE(r.at("Lp.C-C").holds);
  // The printed coefficients of these two displays are not reproduced.
  EXPECT_FALSE(r.at("Lp.phit-C").holds);
  EXPECT_FALSE(r.at("Lp.yO-C").holds);
}

TEST(Lemmas, InverseDisplays) {
  const auto r = verify_lemma_Lj(7);
  EXPECT_TRUE(r.at("Lj.phit").holds);
  EXPECT_TRUE(r.at("Lj.yO").holds);
  EXPECT_FALSE(r.at("Lj.C").holds);
}

TEST(Lemmas, DirectValues) {
  const F x = F::basis_vector(4);
  const F c = C_of_x(x);
  EXPECT_EQ(p_form(c, c).matrix(), aw().id3 * Rational(2) + (aw().id4 - outer(x, x)) * Rational(10));
  const F yO = wedge(F::basis_vector(1), aw().Omega);
  const auto m = p_form(yO, c).matrix();
  const auto e = [](int k) { return F::basis_vector(k); };
  EXPECT_EQ(apply(aw().J, x), e(5));
  EXPECT_EQ(m, odot(e(1), e(5)) * Rational(3) + odot(e(2), e(6)) + odot(e(3), e(7)));
  EXPECT_NE(m, odot(e(1), apply(aw().J, x)) * Rational(6));
  const auto pc = p_form(aw().phi_tilde, c).matrix();
  EXPECT_EQ(pc, (odot(e(5), e(1)) + odot(e(6), e(2)) + odot(e(7), e(3))) * Rational(-11));
}

TEST(Products, Displays) {
  const auto r = verify_intermediate_products(7);
  for (const char* id : {"P.phit-phit", "P.phit-yO", "P.yO-yO", "P.C-C"}) EXPECT_TRUE(r.at(id).holds) << id;
  for (const char* id : {"P.phit-C", "P.yO-C", "P.assembled"}) EXPECT_FALSE(r.at(id).holds) << id;
}

TEST(PFirstPrinciples, Values) {
  EXPECT_TRUE(P_first_principles(Xi()).is_zero());
  EXPECT_EQ(P_first_principles(Xi({1, 1, -2}, {0, 0, 0, 0, 0, 0})), Rational(-210));
}

TEST(PFirstPrinciples, HomogeneousAndRoutesAgree) {
  Sampler rng(64, "Pfp");
  for (int k = 0; k < 5; ++k) {
    const Xi xi = random_xi(rng);
    const Rational t = rng.nonzero_rational();
    const Rational p = P_first_principles(xi);
    EXPECT_EQ(P_first_principles(xi * t), t * t * t * p);
    const auto f = flat_route(xi);
    EXPECT_TRUE(f.f1.is_zero());
    EXPECT_TRUE(f.f3.is_zero());
    EXPECT_EQ(P_of_xi(lift<QuadExt>(xi)), QuadExt(p));
  }
}

TEST(PClosedForm, Values) {
  EXPECT_TRUE(P_closed_form(Xi()).is_zero());
  EXPECT_EQ(P_closed_form(Xi({1, 1, -2}, {0, 0, 0, 0, 0, 0})), Rational(210));
  const Xi xi({2, 0, -2}, {0, 0, 1, 0, 0, 0});
  const Rational want = Rational(210) + Rational(65, 6) + Rational(50, 3) + Rational(100, 27) * R_display(xi);
  EXPECT_EQ(P_closed_form(xi), want);
}

TEST(Fit, FirstPrinciplesCoefficients) {
  const auto fit = fit_first_principles(3);
  EXPECT_TRUE(fit.flat_in_span);
  EXPECT_TRUE(fit.xi_in_span);
  EXPECT_EQ(fit.flat.s3, Rational(-210));
  EXPECT_EQ(fit.flat.sx2, Rational(99));
  EXPECT_EQ(fit.flat.sy2, Rational(6));
  EXPECT_EQ(fit.flat.R, Rational(-15));
  EXPECT_EQ(fit.xi.s3, Rational(-210));
  EXPECT_EQ(fit.xi.sx2, Rational(55, 2));
  EXPECT_EQ(fit.xi.sy2, Rational(50, 3));
  EXPECT_EQ(fit.xi.R, Rational(125, 18));
  EXPECT_TRUE(revert_to_xi(fit.flat) == fit.xi);
}

TEST(Fit, RevertMapsIntermediateToFinalDisplayUpToS3) {
  const auto mapped = revert_to_xi(intermediate_flat_coefficients());
  const auto closed = closed_form_coefficients();
  EXPECT_EQ(mapped.s3, -closed.s3);
  EXPECT_EQ(mapped.sx2, closed.sx2);
  EXPECT_EQ(mapped.sy2, closed.sy2);
  EXPECT_EQ(mapped.R, closed.R);
}

TEST(Approx, TorusInvariance) {
  Sampler rng(65, "torus");
  const Xi xi = random_xi(rng);
  const long double th[3] = {0.3L, -1.1L, 0.8L};
  const auto c = xi.coordinates();
  auto rot = [&](int j, int k, const Rational& re, const Rational& im) {
    const long double a = th[j] - th[k];
    const long double r = re.to_long_double(), i = im.to_long_double();
    return std::pair{ApproxScalar(r * std::cos(a) - i * std::sin(a)), ApproxScalar(r * std::sin(a) + i * std::cos(a))};
  };
  const auto [x1, x2] = rot(0, 1, c[2], c[3]);
  const auto [x3, x4] = rot(0, 2, c[4], c[5]);
  const auto [x5, x6] = rot(1, 2, c[6], c[7]);
  const auto rotated = Su3Element<ApproxScalar>::from_coordinates(
      {ApproxScalar(c[0]), ApproxScalar(c[1]), x1, x2, x3, x4, x5, x6});
  const long double a = P_of_xi(rotated).value();
  const long double b = P_first_principles(xi).to_long_double();
  EXPECT_LE(std::fabs(a - b), 1e-9L * (1.0L + std::fabs(b)));
}
