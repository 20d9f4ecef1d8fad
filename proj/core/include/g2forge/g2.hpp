#pragma once

// The G2 structure of the adapted frame: phi, psi = *phi, the A_* action,
// type decompositions of Lambda^2, Lambda^3, Lambda^4, the isomorphism
// i : Sym^2_0 -> Lambda^3_27 with its inverse, and the hat map.

#include <array>
#include <string>
#include <utility>
#include <vector>

#include "g2forge/errors.hpp"
#include "g2forge/exterior.hpp"
#include "g2forge/linalg.hpp"
#include "g2forge/scalars.hpp"

namespace g2forge {

template <Scalar T>
using Endo = Matrix<T>;

template <Scalar T>
bool vanishes(const Form<T>& f) {
  for (const auto& [m, c] : f.terms())
    if (!scalar_traits<T>::close(c, T(0))) return false;
  return true;
}

template <Scalar T>
bool vanishes(const Matrix<T>& m) {
  for (const auto& c : m.entries())
    if (!scalar_traits<T>::close(c, T(0))) return false;
  return true;
}

/// A_* a = sum_i (A e_i) ^ (e_i _| a). A need not be symmetric.
template <Scalar T>
Form<T> star_action(const Endo<T>& a, const Form<T>& form) {
  if (a.rows() != kDim || a.cols() != kDim) throw Error("star_action expects a 7x7 endomorphism");
  if (form.grade() < 1) throw GradeError("star_action needs a form of grade >= 1");
  Form<T> out(form.grade());
  for (int i = 1; i <= kDim; ++i) {
    const Form<T> c = contract_basis(i, form);
    if (c.is_zero()) continue;
    out += wedge(vector_of(a.col(i - 1)), c);
  }
  return out;
}

/// Symmetric traceless basis: E_ii - E_77 (i = 1..6), then E_ij + E_ji (i < j).
template <Scalar T>
std::vector<Matrix<T>> sym2_0_basis() {
  std::vector<Matrix<T>> out;
  for (std::size_t i = 0; i < 6; ++i) {
    Matrix<T> m(kDim, kDim);
    m(i, i) = T(1);
    m(6, 6) = T(-1);
    out.push_back(std::move(m));
  }
  for (std::size_t i = 0; i < kDim; ++i)
    for (std::size_t j = i + 1; j < kDim; ++j) {
      Matrix<T> m(kDim, kDim);
      m(i, j) = T(1);
      m(j, i) = T(1);
      out.push_back(std::move(m));
    }
  return out;
}

template <Scalar T>
struct Split2 {
  Form<T> a7;
  Form<T> a14;
};

template <Scalar T>
struct Split34 {
  Form<T> a1;
  Form<T> a7;
  Form<T> a27;
};

/// Eigen data of a -> *(phi ^ a) on Lambda^2, derived from phi.
struct Lambda2Spectrum {
  Rational eig7;
  Rational eig14;
  Rational min_poly_b;  ///< L^2 = b L + c id
  Rational min_poly_c;
};

template <Scalar T>
class G2Frame {
 public:
  static const G2Frame& instance() {
    static const G2Frame frame = build();
    return frame;
  }

  const Form<T>& phi() const { return phi_; }
  const Form<T>& psi() const { return psi_; }
  const Form<T>& vol() const { return vol_; }
  const Lambda2Spectrum& spectrum() const { return spectrum_; }

  const Matrix<T>& proj2_7() const { return p2_[0]; }
  const Matrix<T>& proj2_14() const { return p2_[1]; }
  const std::array<Matrix<T>, 3>& proj3() const { return p3_; }
  const std::array<Matrix<T>, 3>& proj4() const { return p4_; }
  /// Rows (j, blade of Lambda^6), columns Lambda^3 blades: b -> b ^ (e_j _| psi).
  const Matrix<T>& injectivity_matrix() const { return inj_; }

  Split2<T> project2(const Form<T>& a) const {
    require_grade(a, 2);
    const auto v = a.to_column();
    return {Form<T>::from_column(2, p2_[0] * v), Form<T>::from_column(2, p2_[1] * v)};
  }
  Split34<T> project3(const Form<T>& a) const { return split(a, 3, p3_); }
  Split34<T> project4(const Form<T>& a) const { return split(a, 4, p4_); }

 private:
  static void require_grade(const Form<T>& a, int k) {
    if (a.grade() != k) throw GradeError("expected a " + std::to_string(k) + "-form");
  }

  static Split34<T> split(const Form<T>& a, int k, const std::array<Matrix<T>, 3>& p) {
    require_grade(a, k);
    const auto v = a.to_column();
    return {Form<T>::from_column(k, p[0] * v), Form<T>::from_column(k, p[1] * v),
            Form<T>::from_column(k, p[2] * v)};
  }

  static G2Frame build();

  Form<T> phi_;
  Form<T> psi_;
  Form<T> vol_;
  Lambda2Spectrum spectrum_;
  std::array<Matrix<T>, 2> p2_;
  std::array<Matrix<T>, 3> p3_;
  std::array<Matrix<T>, 3> p4_;
  Matrix<T> inj_;

  template <Scalar U>
  friend class G2Frame;
};

/// phi = e123 + e145 - e167 + e246 + e257 + e347 - e356.
Form<Rational> standard_phi();
/// psi = e4567 - e1247 + e1256 - e2345 + e2367 - e3146 - e3157, as displayed.
Form<Rational> standard_psi();

namespace detail {

struct ExactFrameData {
  Form<Rational> phi;
  Form<Rational> psi;
  Lambda2Spectrum spectrum;
  std::array<Matrix<Rational>, 2> p2;
  std::array<Matrix<Rational>, 3> p3;
  std::array<Matrix<Rational>, 3> p4;
  Matrix<Rational> inj;
};

/// Built once (thread-safe) from explicit spanning sets.
const ExactFrameData& exact_frame_data();

}  // namespace detail

template <Scalar T>
G2Frame<T> G2Frame<T>::build() {
  const auto& d = detail::exact_frame_data();
  G2Frame f;
  f.phi_ = lift<T>(d.phi);
  f.psi_ = lift<T>(d.psi);
  f.vol_ = Form<T>::volume();
  f.spectrum_ = d.spectrum;
  for (std::size_t k = 0; k < 2; ++k) f.p2_[k] = lift<T>(d.p2[k]);
  for (std::size_t k = 0; k < 3; ++k) {
    f.p3_[k] = lift<T>(d.p3[k]);
    f.p4_[k] = lift<T>(d.p4[k]);
  }
  f.inj_ = lift<T>(d.inj);
  return f;
}

/// g(e_i, e_j) read off (e_i _| phi) ^ (e_j _| phi) ^ phi = -6 g vol, for a given 3-form.
template <Scalar T>
Matrix<T> metric_from_structure(const Form<T>& phi) {
  Matrix<T> g(kDim, kDim);
  const T minus_six(-6);
  for (int i = 1; i <= kDim; ++i) {
    const Form<T> ci = contract_basis(i, phi);
    for (int j = 1; j <= kDim; ++j) {
      const Form<T> w = wedge(wedge(ci, contract_basis(j, phi)), phi);
      g(i - 1, j - 1) = top_coefficient(w) / minus_six;
    }
  }
  return g;
}

template <Scalar T>
Matrix<T> metric_from_structure() {
  return metric_from_structure(G2Frame<T>::instance().phi());
}

template <Scalar T>
void require_traceless(const Matrix<T>& s) {
  if (s.rows() != kDim || s.cols() != kDim) throw Error("expected a 7x7 tensor");
  if (!s.is_symmetric()) throw TypeError("tensor is not symmetric", "antisymmetric part");
  if (!scalar_traits<T>::close(s.trace(), T(0))) throw TypeError("tensor has nonzero trace", "trace");
}

/// i(S) = S_* phi.
template <Scalar T>
Form<T> iso_i(const Matrix<T>& s) {
  require_traceless(s);
  return star_action(s, G2Frame<T>::instance().phi());
}

/// S_* psi.
template <Scalar T>
Form<T> iso_i_psi(const Matrix<T>& s) {
  require_traceless(s);
  return star_action(s, G2Frame<T>::instance().psi());
}

/// Throws TypeError naming the first nonzero component outside Lambda^3_27.
template <Scalar T>
void require_lambda3_27(const Form<T>& b) {
  const auto parts = G2Frame<T>::instance().project3(b);
  if (!vanishes(parts.a1)) throw TypeError("3-form is not of type 27", "Lambda^3_1");
  if (!vanishes(parts.a7)) throw TypeError("3-form is not of type 27", "Lambda^3_7");
}

template <Scalar T>
void require_lambda4_27(const Form<T>& a) {
  const auto parts = G2Frame<T>::instance().project4(a);
  if (!vanishes(parts.a1)) throw TypeError("4-form is not of type 27", "Lambda^4_1");
  if (!vanishes(parts.a7)) throw TypeError("4-form is not of type 27", "Lambda^4_7");
}

/// S(a, c) from i(S) ^ (e_a _| psi) ^ e^c = 2 g(S e_a, e_c) vol, without a type check.
template <Scalar T>
Matrix<T> iso_i_inv_unchecked(const Form<T>& b) {
  if (b.grade() != 3) throw GradeError("i^-1 expects a 3-form");
  const auto& psi = G2Frame<T>::instance().psi();
  const T two(2);
  Matrix<T> s(kDim, kDim);
  for (int a = 1; a <= kDim; ++a) {
    const Form<T> w = wedge(b, contract_basis(a, psi));
    for (int c = 1; c <= kDim; ++c)
      s(a - 1, c - 1) = top_coefficient(wedge(w, Form<T>::basis_vector(c))) / two;
  }
  return s;
}

template <Scalar T>
SymTensor<T> iso_i_inv(const Form<T>& b) {
  if (b.grade() != 3) throw GradeError("i^-1 expects a 3-form");
  require_lambda3_27(b);
  Matrix<T> s = iso_i_inv_unchecked(b);
  if constexpr (!scalar_traits<T>::exact) {
    const Matrix<T> st = s.transpose();
    s = (s + st) * (T(1) / T(2));
  }
  return SymTensor<T>(std::move(s), scalar_traits<T>::exact);
}

/// -*a1 + *a7 - *a27.
template <Scalar T>
Form<T> hat(const Form<T>& a) {
  if (a.grade() != 4) throw GradeError("hat expects a 4-form");
  const auto parts = G2Frame<T>::instance().project4(a);
  return hodge(parts.a7) - hodge(parts.a1) - hodge(parts.a27);
}

/// V with a ^ (v _| psi) = -4 g(V, v) vol.
template <Scalar T>
Form<T> extract_v7(const Form<T>& a) {
  if (a.grade() != 4) throw GradeError("extract_v7 expects a 4-form");
  const auto& psi = G2Frame<T>::instance().psi();
  std::vector<T> comps;
  for (int j = 1; j <= kDim; ++j) comps.push_back(-top_coefficient(wedge(a, contract_basis(j, psi))) / T(4));
  return Form<T>::vector(comps);
}

/// The map a -> *(phi ^ a) on Lambda^2 as a 21x21 matrix.
Matrix<Rational> lambda2_operator();

}  // namespace g2forge
