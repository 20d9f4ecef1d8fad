#pragma once

// Aloff-Wallach layer: the m3 + m4 frame data, C(x), the map A(xi) from
// su(3) into Lambda^3_27, R(xi), and the cubic P(xi) both from first
// principles and from its closed form.

#include <array>
#include <cstdint>
#include <string>
#include <utility>
#include <vector>

#include "g2forge/cubic.hpp"
#include "g2forge/errors.hpp"
#include "g2forge/exterior.hpp"
#include "g2forge/g2.hpp"
#include "g2forge/linalg.hpp"
#include "g2forge/scalars.hpp"

namespace g2forge {

inline constexpr std::uint8_t kM3Mask = 0x07;  // indices 1..3

/// Traceless anti-Hermitian 3x3 matrix
///   [ i v1       x1 + i x2   x3 + i x4 ]
///   [ -x1 + i x2  i v2       x5 + i x6 ]
///   [ -x3 + i x4  -x5 + i x6  i v3     ]
template <Scalar T>
struct Su3Element {
  std::array<T, 3> v{};
  std::array<T, 6> x{};

  Su3Element() = default;
  Su3Element(std::array<T, 3> v_, std::array<T, 6> x_) : v(std::move(v_)), x(std::move(x_)) {
    if (!scalar_traits<T>::close(v[0] + v[1] + v[2], T(0))) throw ValidationError("v1 + v2 + v3 must vanish");
  }

  /// Coordinates (v1, v2, x1..x6); v3 = -v1 - v2.
  static Su3Element from_coordinates(const std::array<T, 8>& c) {
    return Su3Element({c[0], c[1], -c[0] - c[1]}, {c[2], c[3], c[4], c[5], c[6], c[7]});
  }
  std::array<T, 8> coordinates() const { return {v[0], v[1], x[0], x[1], x[2], x[3], x[4], x[5]}; }

  T s() const { return (v[0] + v[1]) / T(2); }
  /// ((v1 - v2)/2) e1 - x1 e2 + x2 e3.
  Form<T> y() const { return Form<T>::vector({(v[0] - v[1]) / T(2), -x[0], x[1], T(0), T(0), T(0), T(0)}); }
  /// x3 e5 - x4 e4 + x5 e7 - x6 e6.
  Form<T> x_vec() const { return Form<T>::vector({T(0), T(0), T(0), -x[3], x[2], -x[5], x[4]}); }

  Su3Element operator*(const T& t) const {
    Su3Element r = *this;
    for (auto& c : r.v) c *= t;
    for (auto& c : r.x) c *= t;
    return r;
  }
  friend bool operator==(const Su3Element&, const Su3Element&) = default;
};

template <Scalar U>
Su3Element<U> lift(const Su3Element<Rational>& xi) {
  Su3Element<U> out;
  for (int k = 0; k < 3; ++k) out.v[k] = lift<U>(xi.v[k]);
  for (int k = 0; k < 6; ++k) out.x[k] = lift<U>(xi.x[k]);
  return out;
}

/// z1 = -x5 + i x6, z2 = x3 + i x4, z3 = -x1 + i x2.
std::array<GaussRational, 3> z_coordinates(const Su3Element<Rational>& xi);

template <Scalar T>
struct XiDecomposition {
  T s;
  Form<T> y;
  Form<T> x;
};

template <Scalar T>
XiDecomposition<T> decompose(const Su3Element<T>& xi) {
  return {xi.s(), xi.y(), xi.x_vec()};
}

template <Scalar T>
Matrix<T> odot(const Form<T>& u, const Form<T>& w) {
  const Matrix<T> cu = column_of(u);
  const Matrix<T> cw = column_of(w);
  return (cu * cw.transpose() + cw * cu.transpose()) * (T(1) / T(2));
}

template <Scalar T>
Matrix<T> outer(const Form<T>& u, const Form<T>& w) {
  return column_of(u) * column_of(w).transpose();
}

template <Scalar T>
Form<T> apply(const Matrix<T>& m, const Form<T>& v) {
  return vector_of(m * column_of(v));
}

/// Diagonal projector onto span{e_i : i in mask}.
template <Scalar T>
Matrix<T> block_identity(std::uint8_t mask) {
  Matrix<T> m(kDim, kDim);
  for (int i = 0; i < kDim; ++i)
    if ((mask >> i) & 1U) m(i, i) = T(1);
  return m;
}

template <Scalar T>
void require_support(const Form<T>& v, std::uint8_t mask, const char* what) {
  if (v.support() & ~mask) throw SupportError(what);
}

template <Scalar T>
class AWFrame {
 public:
  static const AWFrame& instance() {
    static const AWFrame frame = build();
    return frame;
  }

  Form<T> vol3;
  Form<T> vol4;
  std::array<Form<T>, 3> omega;  ///< e45 - e67, e46 + e57, e47 - e56
  Form<T> Omega;                 ///< e45 + e67
  std::array<Matrix<T>, 3> I;    ///< g(I_a u, v) = omega_a(u, v)
  Matrix<T> J;                   ///< g(J u, v) = Omega(u, v)
  Form<T> phi_tilde;             ///< phi - 7 vol3
  Matrix<T> id3;
  Matrix<T> id4;

  /// I_y = y_a I_a for y in m3.
  Matrix<T> I_of(const Form<T>& y) const {
    require_support(y, kM3Mask, "I_y needs y in m3");
    Matrix<T> m(kDim, kDim);
    for (int a = 0; a < 3; ++a) m += I[a] * y.component(a + 1);
    return m;
  }

 private:
  static AWFrame build() {
    using F = Form<T>;
    AWFrame f;
    f.vol3 = F::from_indices({1, 2, 3});
    f.vol4 = F::from_indices({4, 5, 6, 7});
    f.omega = {F::from_indices({4, 5}) - F::from_indices({6, 7}), F::from_indices({4, 6}) + F::from_indices({5, 7}),
               F::from_indices({4, 7}) - F::from_indices({5, 6})};
    f.Omega = F::from_indices({4, 5}) + F::from_indices({6, 7});
    for (int a = 0; a < 3; ++a) f.I[a] = endomorphism_of(f.omega[a]);
    f.J = endomorphism_of(f.Omega);
    f.phi_tilde = G2Frame<T>::instance().phi() - f.vol3 * T(7);
    f.id3 = block_identity<T>(kM3Mask);
    f.id4 = block_identity<T>(kM4Mask);
    return f;
  }
};

template <Scalar T>
struct CRoutes {
  Form<T> display;      ///< 3 x _| vol4 + e12 ^ (x _| w3) + e23 ^ (x _| w1) + e31 ^ (x _| w2)
  Form<T> contraction;  ///< x _| (4 vol4 - psi)
};

template <Scalar T>
CRoutes<T> C_of_x_routes(const Form<T>& x) {
  if (x.grade() != 1) throw GradeError("C(x) expects a vector");
  require_support(x, kM4Mask, "C(x) needs x in m4");
  const auto& aw = AWFrame<T>::instance();
  const auto& psi = G2Frame<T>::instance().psi();
  CRoutes<T> r;
  if (x.is_zero()) {
    r.display = Form<T>(3);
    r.contraction = Form<T>(3);
    return r;
  }
  r.display = contract(x, aw.vol4) * T(3) + wedge(Form<T>::from_indices({1, 2}), contract(x, aw.omega[2])) +
              wedge(Form<T>::from_indices({2, 3}), contract(x, aw.omega[0])) +
              wedge(Form<T>::from_indices({3, 1}), contract(x, aw.omega[1]));
  r.contraction = contract(x, aw.vol4 * T(4) - psi);
  return r;
}

template <Scalar T>
Form<T> C_of_x(const Form<T>& x) {
  auto r = C_of_x_routes(x);
  if (!close(r.display, r.contraction)) throw InternalInconsistency("the two expressions for C(x) disagree");
  return r.display;
}

/// s phi~ + y ^ Omega + C(x), with y in m3 and x in m4.
template <Scalar T>
Form<T> A_flat(const T& s, const Form<T>& y, const Form<T>& x) {
  if (y.grade() != 1) throw GradeError("A_flat expects y to be a vector");
  require_support(y, kM3Mask, "A_flat needs y in m3");
  const auto& aw = AWFrame<T>::instance();
  return aw.phi_tilde * s + wedge(y, aw.Omega) + C_of_x(x);
}

/// A(xi) = s phi~ - 5/3 y ^ Omega + (sqrt10 / 6) C(x); checked to lie in Lambda^3_27.
template <HasSqrt10 T>
Form<T> A_of_xi(const Su3Element<T>& xi) {
  const auto d = decompose(xi);
  const auto& aw = AWFrame<T>::instance();
  const T c = scalar_traits<T>::sqrt10() / T(6);
  Form<T> a = aw.phi_tilde * d.s - wedge(d.y, aw.Omega) * (T(5) / T(3)) + C_of_x(d.x) * c;
  require_lambda3_27(a);
  return a;
}

template <Scalar T>
T R_display(const Su3Element<T>& xi) {
  const auto& x = xi.x;
  const T d = (xi.v[0] - xi.v[1]) / T(2);
  return d * (x[2] * x[2] + x[3] * x[3] - x[4] * x[4] - x[5] * x[5]) -
         T(2) * x[0] * (x[3] * x[4] - x[2] * x[5]) + T(2) * x[1] * (x[2] * x[4] + x[3] * x[5]);
}

template <Scalar T>
struct RRoutes {
  T metric;   ///< g(Jx, I_y x)
  T display;  ///< the coordinate polynomial
};

/// (y, x) back to xi coordinates: (v1 - v2)/2 = y1, x1 = -y2, x2 = y3,
/// x3 = x_5, x4 = -x_4, x5 = x_7, x6 = -x_6 (v1 + v2 set to 0).
template <Scalar T>
Su3Element<T> xi_from_yx(const Form<T>& y, const Form<T>& x) {
  const T d = y.component(1);
  return Su3Element<T>::from_coordinates(
      {d, -d, -y.component(2), y.component(3), x.component(5), -x.component(4), x.component(7), -x.component(6)});
}

template <Scalar T>
RRoutes<T> R_routes(const Form<T>& y, const Form<T>& x) {
  require_support(y, kM3Mask, "R needs y in m3");
  require_support(x, kM4Mask, "R needs x in m4");
  const auto& aw = AWFrame<T>::instance();
  RRoutes<T> r;
  r.metric = inner(apply(aw.J, x), apply(aw.I_of(y), x));
  r.display = R_display(xi_from_yx(y, x));
  return r;
}

template <Scalar T>
T R_of(const Form<T>& y, const Form<T>& x) {
  const auto r = R_routes(y, x);
  if (!scalar_traits<T>::close(r.metric, r.display)) throw InternalInconsistency("the two expressions for R disagree");
  return r.metric;
}

template <Scalar T>
T R_of(const Su3Element<T>& xi) {
  return R_of(xi.y(), xi.x_vec());
}

/// <p(A, A), i^-1(A)> for A = A(xi), in the scalar type T.
template <HasSqrt10 T>
T P_of_xi(const Su3Element<T>& xi) {
  return P_unnormalized(A_of_xi(xi));
}

/// <p(A, A), i^-1(A)> for A = A_flat(s, y, x); entirely rational.
template <Scalar T>
T P_flat(const T& s, const Form<T>& y, const Form<T>& x) {
  return P_unnormalized(A_flat(s, y, x));
}

/// Coefficients of a cubic in the basis {s^3, s|x|^2, s|y|^2, R}.
struct CubicCoefficients {
  Rational s3;
  Rational sx2;
  Rational sy2;
  Rational R;

  friend bool operator==(const CubicCoefficients&, const CubicCoefficients&) = default;
};

/// 210 s^3 + 65/6 s|x|^2 + 50/3 s|y|^2 + 100/27 R.
CubicCoefficients closed_form_coefficients();
/// -210 s^3 + s(39|x|^2 + 6|y|^2) - 8R, in the flat variables.
CubicCoefficients intermediate_flat_coefficients();
/// y -> -5/3 y, x -> (sqrt10/6) x applied to flat coefficients.
CubicCoefficients revert_to_xi(const CubicCoefficients& flat);

template <Scalar T>
T evaluate(const CubicCoefficients& c, const Su3Element<T>& xi) {
  const T s = xi.s();
  const T d = (xi.v[0] - xi.v[1]) / T(2);
  const T y2 = d * d + xi.x[0] * xi.x[0] + xi.x[1] * xi.x[1];
  T x2(0);
  for (int k = 2; k < 6; ++k) x2 += xi.x[k] * xi.x[k];
  return lift<T>(c.s3) * s * s * s + lift<T>(c.sx2) * s * x2 + lift<T>(c.sy2) * s * y2 +
         lift<T>(c.R) * R_display(xi);
}

template <Scalar T>
T P_closed_form(const Su3Element<T>& xi) {
  return evaluate(closed_form_coefficients(), xi);
}

/// Exact P(xi) through Q(sqrt10), cross-checked against the rational A_flat
/// route; throws IrrationalResult if a sqrt10 part survives.
Rational P_first_principles(const Su3Element<Rational>& xi);

struct FlatInterpolation {
  Rational f0, f1, f2, f3;  ///< P_flat(s, -5/3 y, t x) = f0 + f1 t + f2 t^2 + f3 t^3
};
FlatInterpolation flat_route(const Su3Element<Rational>& xi);

struct IdentityCheck {
  std::string id;
  std::string display;
  bool holds = false;
  std::size_t points = 0;
  std::string detail;  ///< first counterexample when the display fails
};

struct IdentityReport {
  std::vector<IdentityCheck> checks;
  bool all_hold() const {
    for (const auto& c : checks)
      if (!c.holds) return false;
    return true;
  }
  const IdentityCheck& at(const std::string& id) const;
};

/// Evaluates each display of the p lemma on the degree-2 lattice in
/// (y1..y3, x4..x7) plus `random_points` seeded random inputs.
IdentityReport verify_lemma_Lp(std::uint64_t seed, std::size_t random_points = 50);
IdentityReport verify_lemma_Lj(std::uint64_t seed, std::size_t random_points = 50);
/// The six scalar products <p(block, block), i^-1(A_flat)>, plus the assembled flat P.
IdentityReport verify_intermediate_products(std::uint64_t seed, std::size_t random_points = 50);

/// AWFrame relations: I-algebra, anti-selfduality, omega_a ^ omega_b table, metric compatibility.
IdentityReport verify_frame_relations();

struct PolynomialFit {
  CubicCoefficients flat;     ///< fitted P_flat in (s, y, x)
  CubicCoefficients xi;       ///< fitted P_first_principles in xi
  bool flat_in_span = false;  ///< P_flat lies in span{s^3, s|x|^2, s|y|^2, R}
  bool xi_in_span = false;
  std::size_t points = 0;
};

/// Fits both first-principles polynomials in the four-term basis and verifies
/// the fit on the full lattice plus random points.
PolynomialFit fit_first_principles(std::uint64_t seed, std::size_t random_points = 20);

}  // namespace g2forge
