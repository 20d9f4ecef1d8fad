#pragma once

// Quadratic and cubic invariants: q, q0, Q2, b2, Q, p, P and the trilinear
// form on Sym^2_0.

#include <array>
#include <utility>

#include "g2forge/errors.hpp"
#include "g2forge/exterior.hpp"
#include "g2forge/g2.hpp"
#include "g2forge/linalg.hpp"

namespace g2forge {

/// 1/2 (<e_i _| a1, e_j _| a2> + <e_i _| a2, e_j _| a1>), for forms of any common grade.
template <Scalar T>
SymTensor<T> contraction_gram(const Form<T>& a1, const Form<T>& a2) {
  if (a1.grade() != a2.grade()) throw GradeError("contraction_gram: grade mismatch");
  std::array<Form<T>, kDim> c1;
  std::array<Form<T>, kDim> c2;
  for (int i = 0; i < kDim; ++i) {
    c1[i] = contract_basis(i + 1, a1);
    c2[i] = contract_basis(i + 1, a2);
  }
  const T half = T(1) / T(2);
  Matrix<T> m(kDim, kDim);
  for (int i = 0; i < kDim; ++i)
    for (int j = i; j < kDim; ++j) {
      const T v = (inner(c1[i], c2[j]) + inner(c2[i], c1[j])) * half;
      m(i, j) = v;
      m(j, i) = v;
    }
  return SymTensor<T>(std::move(m));
}

template <Scalar T>
SymTensor<T> q_form(const Form<T>& a1, const Form<T>& a2) {
  if (a1.grade() != 4 || a2.grade() != 4) throw GradeError("q_form expects 4-forms");
  return contraction_gram(a1, a2);
}

template <Scalar T>
SymTensor<T> q0_form(const Form<T>& a1, const Form<T>& a2) {
  const Matrix<T> q = q_form(a1, a2).matrix();
  const T t = q.trace() / T(kDim);
  Matrix<T> q0 = q - Matrix<T>::identity(kDim) * t;
  if constexpr (!scalar_traits<T>::exact) q0(kDim - 1, kDim - 1) -= q0.trace();
  return SymTensor<T>(std::move(q0), true);
}

template <Scalar T>
SymTensor<T> p_form(const Form<T>& b1, const Form<T>& b2) {
  if (b1.grade() != 3 || b2.grade() != 3) throw GradeError("p_form expects 3-forms");
  return contraction_gram(b1, b2);
}

/// -i(q0(a, a)) + 2/7 |a|^2 phi for a in Lambda^4_27.
template <Scalar T>
Form<T> Q2_27(const Form<T>& a) {
  if (a.grade() != 4) throw GradeError("Q2 expects a 4-form");
  require_lambda4_27(a);
  const auto& frame = G2Frame<T>::instance();
  const T c = T(2) * norm2(a) / T(7);
  return frame.phi() * c - star_action(q0_form(a, a).matrix(), frame.phi());
}

/// Unique 3-form b with b ^ (e_j _| psi) + hat(a1) ^ (e_j _| a2) + hat(a2) ^ (e_j _| a1) = 0 for all j.
template <Scalar T>
Form<T> b2_full(const Form<T>& a1, const Form<T>& a2) {
  if (a1.grade() != 4 || a2.grade() != 4) throw GradeError("b2 expects 4-forms");
  const auto& frame = G2Frame<T>::instance();
  const Form<T> h1 = hat(a1);
  const Form<T> h2 = hat(a2);
  const std::size_t n6 = blades_of_grade(6).size();
  Matrix<T> rhs(kDim * n6, 1);
  for (int j = 1; j <= kDim; ++j) {
    const Form<T> w = wedge(h1, contract_basis(j, a2)) + wedge(h2, contract_basis(j, a1));
    for (const auto& [m, c] : w.terms()) rhs((j - 1) * n6 + blade_position(Blade{m}), 0) = -c;
  }
  const auto sol = solve_exact(frame.injectivity_matrix(), rhs);
  if (sol.kernel_dim != 0) throw InternalInconsistency("b2 system is not uniquely solvable");
  return Form<T>::from_column(3, sol.x);
}

/// Residual of the defining b2 equation against e_j; zero for a correct b2.
template <Scalar T>
Form<T> b2_residual(const Form<T>& b, const Form<T>& a1, const Form<T>& a2, int j) {
  const auto& psi = G2Frame<T>::instance().psi();
  return wedge(b, contract_basis(j, psi)) + wedge(hat(a1), contract_basis(j, a2)) +
         wedge(hat(a2), contract_basis(j, a1));
}

template <Scalar T>
struct QValues {
  T via_wedge;    ///< Q vol = Q2(a) ^ a
  T via_tensor;   ///< -2 <q(a, a), i^-1(*a)>
};

template <Scalar T>
QValues<T> Q_cubic_routes(const Form<T>& a) {
  const Form<T> q2 = Q2_27(a);
  QValues<T> v;
  v.via_wedge = top_coefficient(wedge(q2, a));
  v.via_tensor = T(-2) * sym_inner(q_form(a, a).matrix(), iso_i_inv(hodge(a)).matrix());
  return v;
}

template <Scalar T>
T Q_cubic(const Form<T>& a) {
  const auto v = Q_cubic_routes(a);
  if (!scalar_traits<T>::close(v.via_wedge, v.via_tensor))
    throw InternalInconsistency("the two expressions for Q disagree");
  return v.via_wedge;
}

/// <p(b, b), i^-1(b)> for b in Lambda^3_27, without the leading factor.
template <Scalar T>
T P_unnormalized(const Form<T>& b) {
  if (b.grade() != 3) throw GradeError("P expects a 3-form");
  return sym_inner(p_form(b, b).matrix(), iso_i_inv(b).matrix());
}

/// P(b) = 2 <p(b, b), i^-1(b)>, cross-checked against Q(*b).
template <Scalar T>
T P_cubic(const Form<T>& b) {
  const T value = T(2) * P_unnormalized(b);
  const T q = Q_cubic(hodge(b));
  if (!scalar_traits<T>::close(value, q)) throw InternalInconsistency("P(b) differs from Q(*b)");
  return value;
}

/// <(S3)_* b1, b2> + <(S3)_* b2, b1> with b_k = i(S_k).
template <Scalar T>
T trilinear(const Matrix<T>& s1, const Matrix<T>& s2, const Matrix<T>& s3) {
  require_traceless(s3);
  const Form<T> b1 = iso_i(s1);
  const Form<T> b2 = iso_i(s2);
  return inner(star_action(s3, b1), b2) + inner(star_action(s3, b2), b1);
}

/// <b2(*b1, *b2), i(S3)> with b_k = i(S_k).
template <Scalar T>
T trilinear_b2(const Matrix<T>& s1, const Matrix<T>& s2, const Matrix<T>& s3) {
  const Form<T> b = b2_full(hodge(iso_i(s1)), hodge(iso_i(s2)));
  return inner(b, iso_i(s3));
}

template <Scalar T>
struct CubicReport {
  Form<T> input;
  Split34<T> components;
  Form<T> q2;
  T q;
};

/// Q2 and Q of a 4-form in Lambda^4_27; Q vol = Q2 ^ input is asserted.
template <Scalar T>
CubicReport<T> cubic_report(const Form<T>& a) {
  CubicReport<T> r;
  r.input = a;
  r.components = G2Frame<T>::instance().project4(a);
  r.q2 = Q2_27(a);
  r.q = Q_cubic(a);
  if (!close(wedge(r.q2, a), Form<T>::volume() * r.q)) throw InternalInconsistency("Q vol != Q2 ^ a");
  return r;
}

}  // namespace g2forge
