#pragma once

// Polynomials on su(3) in the letters {v1, v2, v3, z1, z2, z3, zb1, zb2, zb3},
// the permanent-based inner product on Sym^k, i det, the invariant pairing
// <P, i det>, and a Monte-Carlo estimate of the SU(3)-average of P.

#include <algorithm>
#include <array>
#include <cstdint>
#include <numeric>
#include <string>
#include <vector>

#include "g2forge/aw.hpp"
#include "g2forge/linalg.hpp"
#include "g2forge/poly.hpp"
#include "g2forge/scalars.hpp"

namespace g2forge {

enum class Letter : std::uint8_t { v1, v2, v3, z1, z2, z3, zb1, zb2, zb3 };
inline constexpr std::size_t kLetters = 9;
inline constexpr std::size_t kRealCoords = 8;  // v1, v2, x1..x6

using MultiPoly = Polynomial<GaussRational, kLetters>;
using RealPoly = Polynomial<Rational, kRealCoords>;

const char* letter_name(Letter l);
std::string to_string(const MultiPoly& p);

/// <v_a, v_a> = 4/3, <v_a, v_b> = -2/3, <z_j, zb_k> = 2 delta_jk, all else 0.
const Matrix<Rational>& gram_matrix();

template <Scalar T>
T permanent_naive(const Matrix<T>& m) {
  if (!m.is_square()) throw Error("permanent of a non-square matrix");
  const std::size_t n = m.rows();
  if (n == 0) return T(1);
  std::vector<std::size_t> sigma(n);
  std::iota(sigma.begin(), sigma.end(), 0);
  T total(0);
  do {
    T prod(1);
    for (std::size_t i = 0; i < n; ++i) prod *= m(i, sigma[i]);
    total += prod;
  } while (std::next_permutation(sigma.begin(), sigma.end()));
  return total;
}

/// Ryser: perm A = (-1)^n sum_S (-1)^|S| prod_i sum_{j in S} a_ij.
template <Scalar T>
T permanent_ryser(const Matrix<T>& m) {
  if (!m.is_square()) throw Error("permanent of a non-square matrix");
  const std::size_t n = m.rows();
  if (n == 0) return T(1);
  if (n > 30) throw Error("permanent: matrix too large");
  T total(0);
  std::vector<T> row_sums(n, T(0));
  const std::uint64_t count = std::uint64_t{1} << n;
  std::uint64_t prev_gray = 0;
  for (std::uint64_t k = 1; k < count; ++k) {
    const std::uint64_t gray = k ^ (k >> 1);
    const std::uint64_t changed = gray ^ prev_gray;
    const auto j = static_cast<std::size_t>(__builtin_ctzll(changed));
    const bool added = gray & changed;
    for (std::size_t i = 0; i < n; ++i) {
      if (added) row_sums[i] += m(i, j);
      else row_sums[i] -= m(i, j);
    }
    prev_gray = gray;
    T prod(1);
    for (std::size_t i = 0; i < n; ++i) prod *= row_sums[i];
    const bool odd = (__builtin_popcountll(gray) & 1) != 0;
    if (odd) total -= prod;
    else total += prod;
  }
  return (n & 1) ? -total : total;
}

template <Scalar T>
T permanent(const Matrix<T>& m) {
  return m.rows() <= 4 ? permanent_naive(m) : permanent_ryser(m);
}

/// <a_1...a_k, b_1...b_k> = perm(<a_i, b_j>), extended bilinearly (no conjugation).
GaussRational sym_inner_poly(const MultiPoly& p, const MultiPoly& q);

/// Coefficients are conjugation-symmetric under z <-> zb, so the polynomial is real on su(3).
bool is_real_valued(const MultiPoly& p);
/// Replaces v3 by -v1 - v2.
MultiPoly eliminate_v3(const MultiPoly& p);

/// x3 = (z2 + zb2)/2, x4 = -i (z2 - zb2)/2, and likewise for z1 = -x5 + i x6, z3 = -x1 + i x2.
MultiPoly to_letters(const RealPoly& p);

namespace real_coords {
RealPoly s();         ///< (v1 + v2)/2
RealPoly y_norm2();   ///< (v1 - v2)^2/4 + x1^2 + x2^2
RealPoly x_norm2();   ///< x3^2 + x4^2 + x5^2 + x6^2
RealPoly R();         ///< the coordinate display of R
RealPoly from(const CubicCoefficients& c);
}  // namespace real_coords

/// i det(xi), expanded from the matrix with letters
/// [[i v1, -zb3, z2], [z3, i v2, -zb1], [-zb2, z1, i v3]].
MultiPoly idet_poly();
/// The display v1 v2 v3 + 2i Re(z1 z2 z3) - sum v_a |z_a|^2 read literally.
MultiPoly idet_literal();

struct IdetComparison {
  MultiPoly expansion;
  MultiPoly literal;
  MultiPoly difference;  ///< literal - expansion, after eliminating v3
  bool agree = false;
  std::string reading;  ///< how the "2i Re" term has to be read
};
IdetComparison compare_idet();

enum class PSource { closed_form, first_principles };
const char* to_string(PSource s);

/// P as a homogeneous cubic in (v1, v2, x1..x6). The first-principles
/// polynomial is interpolated on the 120-point lattice |alpha| = 3 and checked
/// on extra random points; throws InternalInconsistency on rank loss.
const RealPoly& P_real(PSource source);
MultiPoly P_poly(PSource source);

/// <P, i det>; throws NonRealResult if the imaginary part survives.
Rational final_pairing(PSource source);

struct PairingComponents {
  Rational s3;   ///< <s^3, i det>
  Rational sx2;  ///< <s|x|^2, i det>
  Rational sy2;  ///< <s|y|^2, i det>
  Rational R;    ///< <R, i det>
};
PairingComponents pairing_components();
Rational assemble(const CubicCoefficients& c, const PairingComponents& comp);

struct HaarReport {
  std::array<Rational, 8> xi{};
  std::size_t samples = 0;
  std::uint64_t seed = 0;
  PSource source = PSource::first_principles;
  double mean = 0;
  double std_error = 0;
  double expected = 0;
  double relative_error = 0;
};

/// Estimates E_g[P(g xi g^-1)] over Haar-random g in SU(3) and compares with
/// (<P, i det> / <i det, i det>) i det(xi). Batches of fixed size draw from
/// seeds derived from (seed, batch index) and are summed in batch order, so
/// the result does not depend on `workers`.
HaarReport haar_average_check(const Su3Element<Rational>& xi, std::size_t samples, std::uint64_t seed,
                              PSource source = PSource::first_principles, unsigned workers = 0);

/// Fixed test elements used by the runner.
std::vector<Su3Element<Rational>> haar_test_elements();

}  // namespace g2forge
