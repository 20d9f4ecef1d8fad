#include <gtest/gtest.h>

#include "g2forge/g2.hpp"
#include "g2forge/linalg.hpp"
#include "g2forge/random.hpp"

using namespace g2forge;
using RMat = Matrix<Rational>;

namespace {

RMat random_matrix(Sampler& rng, std::size_t r, std::size_t c, double zero_rate = 0.3) {
  RMat m(r, c);
  std::bernoulli_distribution zero(zero_rate);
  for (std::size_t i = 0; i < r; ++i)
    for (std::size_t j = 0; j < c; ++j)
      if (!zero(rng.engine())) m(i, j) = rng.rational();
  return m;
}

}  // namespace

TEST(Solve, Identity) {
  const RMat b = RMat::column({Rational(1), Rational(-2, 3), Rational(5)});
  const auto sol = solve_exact(RMat::identity(3), b);
  EXPECT_EQ(sol.x, b);
  EXPECT_EQ(sol.kernel_dim, 0u);
}

TEST(Solve, InconsistentZeroSystem) {
  const RMat a(3, 3);
  const RMat b = RMat::column({Rational(0), Rational(1), Rational(0)});
  try {
    (void)solve_exact(a, b);
    FAIL() << "expected InconsistentSystem";
  } catch (const InconsistentSystem& e) {
    EXPECT_EQ(e.row(), 1u);
  }
}

TEST(Solve, ReproducesRandomConsistentSystems) {
  Sampler rng(21, "solve");
  for (int k = 0; k < 40; ++k) {
    const std::size_t rows = 3 + k % 6;
    const std::size_t cols = 2 + k % 4;
    const RMat a = random_matrix(rng, rows, cols);
    const RMat x = random_matrix(rng, cols, 1, 0.0);
    const RMat b = a * x;
    const auto sol = solve_exact(a, b);
    EXPECT_EQ(a * sol.x, b);
    EXPECT_EQ(sol.kernel_dim, cols - rank(a));
  }
}

TEST(Solve, OverdeterminedInjectivitySystem) {
  const auto& inj = G2Frame<Rational>::instance().injectivity_matrix();
  ASSERT_EQ(inj.rows(), 49u);
  ASSERT_EQ(inj.cols(), 35u);
  Sampler rng(22, "inj");
  const RMat x = random_matrix(rng, 35, 1, 0.0);
  const auto sol = solve_exact(inj, inj * x);
  EXPECT_EQ(sol.kernel_dim, 0u);
  EXPECT_EQ(sol.x, x);
}

TEST(Rank, Examples) {
  EXPECT_EQ(rank(RMat::identity(7)), 7u);
  EXPECT_EQ(rank(RMat(5, 4)), 0u);
  EXPECT_EQ(rank(G2Frame<Rational>::instance().injectivity_matrix()), 35u);
}

TEST(Rank, EqualsRankOfTranspose) {
  Sampler rng(23, "rank");
  for (int k = 0; k < 40; ++k) {
    RMat a = random_matrix(rng, 2 + k % 7, 3 + k % 5, 0.6);
    EXPECT_EQ(rank(a), rank(a.transpose()));
  }
}

TEST(Kernel, AnnihilatesAndHasFullRank) {
  Sampler rng(24, "kernel");
  for (int k = 0; k < 20; ++k) {
    const RMat a = random_matrix(rng, 3, 6);
    const RMat n = kernel(a);
    EXPECT_TRUE((a * n).is_zero());
    EXPECT_EQ(n.cols(), 6 - rank(a));
    EXPECT_EQ(rank(n), n.cols());
  }
}

TEST(Inverse, RoundTrip) {
  Sampler rng(25, "inverse");
  for (int k = 0; k < 20; ++k) {
    const RMat a = random_matrix(rng, 5, 5, 0.0);
    if (rank(a) < 5) continue;
    EXPECT_EQ(a * inverse(a), RMat::identity(5));
  }
  EXPECT_THROW(inverse(RMat(3, 3)), DivisionByZero);
}

TEST(Projector, IdempotentSymmetricWithRequestedImage) {
  Sampler rng(26, "projector");
  const RMat span = random_matrix(rng, 7, 3, 0.0);
  const RMat p = orthogonal_projector(span);
  EXPECT_EQ(p * p, p);
  EXPECT_TRUE(p.is_symmetric());
  EXPECT_EQ(p * span, span);
  EXPECT_EQ(rank(p), rank(span));
}

TEST(SymInner, Examples) {
  EXPECT_EQ(sym_inner(RMat::identity(7), RMat::identity(7)), Rational(7));
  RMat a(7, 7), b(7, 7), e(7, 7);
  for (std::size_t i = 0; i < 7; ++i) {
    a(i, i) = Rational(i < 3 ? 38 : 3);
    b(i, i) = i < 3 ? Rational(-2) : Rational(3, 2);
  }
  EXPECT_EQ(sym_inner(a, b), Rational(-210));
  e(0, 1) = e(1, 0) = Rational(1);
  EXPECT_EQ(sym_inner(e, e), Rational(2));
}

TEST(SymInner, SymmetricAndPositiveDefinite) {
  Sampler rng(27, "sym");
  for (int k = 0; k < 50; ++k) {
    const RMat s1 = rng.symmetric(false);
    const RMat s2 = rng.symmetric(false);
    EXPECT_EQ(sym_inner(s1, s2), sym_inner(s2, s1));
    if (!s1.is_zero()) EXPECT_GT(sym_inner(s1, s1).sign(), 0);
  }
}

TEST(SymTensor, RejectsAsymmetricAndTrace) {
  RMat m(7, 7);
  m(0, 1) = Rational(1);
  EXPECT_THROW(SymTensor<Rational>{m}, Error);
  EXPECT_THROW((SymTensor<Rational>{RMat::identity(7), true}), Error);
  EXPECT_NO_THROW(SymTensor<Rational>{RMat::identity(7)});
}

TEST(ApproxLinalg, SolveAndRank) {
  using AMat = Matrix<ApproxScalar>;
  const AMat a = lift<ApproxScalar>(RMat(3, 3, {Rational(2), Rational(1), Rational(0), Rational(1), Rational(3),
                                                Rational(1), Rational(0), Rational(1), Rational(4)}));
  EXPECT_EQ(rank(a), 3u);
  const AMat b = AMat::column({ApproxScalar(1), ApproxScalar(2), ApproxScalar(3)});
  const auto sol = solve_exact(a, b);
  EXPECT_TRUE(close(a * sol.x, b));
  AMat dep = a;
  for (std::size_t j = 0; j < 3; ++j) dep(2, j) = a(0, j) + a(1, j);
  EXPECT_EQ(rank(dep), 2u);
}
