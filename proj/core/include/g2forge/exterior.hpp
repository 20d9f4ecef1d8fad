#pragma once

// The exterior algebra of R^7 with the standard orthonormal coframe e^1..e^7
// and orientation vol = e^{1234567}. A blade is a 7-bit index mask; bit k-1
// stands for e^k. Vectors and 1-forms are identified through the metric.

#include <bit>
#include <cstdint>
#include <initializer_list>
#include <map>
#include <sstream>
#include <string>
#include <utility>
#include <vector>

#include "g2forge/errors.hpp"
#include "g2forge/linalg.hpp"
#include "g2forge/scalars.hpp"

namespace g2forge {

inline constexpr int kDim = 7;
inline constexpr std::uint8_t kFullMask = 0x7F;
inline constexpr std::uint8_t kM4Mask = 0x78;  // indices 4..7

struct Blade {
  std::uint8_t mask = 0;

  constexpr int grade() const { return std::popcount(mask); }
  constexpr bool contains(int index) const { return (mask >> (index - 1)) & 1U; }
  std::vector<int> indices() const {
    std::vector<int> out;
    for (int k = 1; k <= kDim; ++k)
      if (contains(k)) out.push_back(k);
    return out;
  }
  friend constexpr auto operator<=>(Blade, Blade) = default;
};

/// Sign s with e^a ^ e^b = s e^{a|b}; 0 when the blades share an index.
constexpr int wedge_sign(std::uint8_t a, std::uint8_t b) {
  if (a & b) return 0;
  int swaps = 0;
  for (int i = 0; i < kDim; ++i)
    if ((a >> i) & 1U) swaps += std::popcount(static_cast<unsigned>(b & ((1U << i) - 1U)));
  return (swaps & 1) ? -1 : 1;
}

/// Sign of e_i _| e^mask (index i must be in mask): (-1)^{#indices below i}.
constexpr int contraction_sign(int index, std::uint8_t mask) {
  const unsigned below = mask & ((1U << (index - 1)) - 1U);
  return (std::popcount(below) & 1) ? -1 : 1;
}

/// All blades of one grade in increasing mask order; this ordering indexes
/// coordinate vectors throughout.
const std::vector<Blade>& blades_of_grade(int grade);
/// Position of a blade inside blades_of_grade(grade).
std::size_t blade_position(Blade b);

/// Mask and permutation sign for an index list in any order, or nullopt-like
/// sign 0 when an index repeats.
std::pair<std::uint8_t, int> blade_from_indices(std::initializer_list<int> indices);
std::pair<std::uint8_t, int> blade_from_indices(const std::vector<int>& indices);

template <Scalar T>
class Form {
 public:
  using Terms = std::map<std::uint8_t, T>;

  Form() = default;
  explicit Form(int grade) : grade_(grade) {
    if (grade < 0) throw GradeError("negative grade");
  }

  static Form scalar(const T& c) {
    Form f(0);
    f.add_term(0, c);
    return f;
  }
  static Form blade(std::uint8_t mask, const T& c = T(1)) {
    Form f(std::popcount(mask));
    f.add_term(mask, c);
    return f;
  }
  /// Builds c * e^{i1 i2 ...} from a possibly unsorted index list.
  static Form from_indices(std::initializer_list<int> indices, const T& c = T(1)) {
    auto [mask, sign] = blade_from_indices(indices);
    Form f(static_cast<int>(indices.size()));
    if (sign != 0) f.add_term(mask, sign > 0 ? c : -c);
    return f;
  }
  /// Basis vector e_i (equivalently the 1-form e^i).
  static Form basis_vector(int index) { return blade(static_cast<std::uint8_t>(1U << (index - 1))); }
  static Form vector(const std::vector<T>& components) {
    if (components.size() != kDim) throw GradeError("vector needs 7 components");
    Form f(1);
    for (int k = 0; k < kDim; ++k) f.add_term(static_cast<std::uint8_t>(1U << k), components[k]);
    return f;
  }
  static Form volume() { return blade(kFullMask); }

  int grade() const { return grade_; }
  const Terms& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }
  std::size_t size() const { return terms_.size(); }

  T coeff(std::uint8_t mask) const {
    auto it = terms_.find(mask);
    return it == terms_.end() ? T(0) : it->second;
  }
  /// Coefficient of e^k on a grade-1 form.
  T component(int index) const { return coeff(static_cast<std::uint8_t>(1U << (index - 1))); }
  std::vector<T> components() const {
    std::vector<T> out;
    for (int k = 1; k <= kDim; ++k) out.push_back(component(k));
    return out;
  }

  void add_term(std::uint8_t mask, const T& c) {
    if (std::popcount(mask) != grade_) throw GradeError("blade grade does not match form grade");
    if (g2forge::is_zero(c)) return;
    auto [it, inserted] = terms_.try_emplace(mask, c);
    if (!inserted) {
      it->second += c;
      if (g2forge::is_zero(it->second)) terms_.erase(it);
    }
  }

  /// Support as an index mask (union of all blades).
  std::uint8_t support() const {
    std::uint8_t s = 0;
    for (const auto& [m, c] : terms_) s |= m;
    return s;
  }

  /// Coordinate column over blades_of_grade(grade()).
  Matrix<T> to_column() const {
    const auto& basis = blades_of_grade(grade_);
    Matrix<T> v(basis.size(), 1);
    for (const auto& [m, c] : terms_) v(blade_position(Blade{m}), 0) = c;
    return v;
  }
  static Form from_column(int grade, const Matrix<T>& v) {
    const auto& basis = blades_of_grade(grade);
    if (v.rows() != basis.size() || v.cols() != 1) throw GradeError("column length does not match grade");
    Form f(grade);
    for (std::size_t k = 0; k < basis.size(); ++k) f.add_term(basis[k].mask, v(k, 0));
    return f;
  }

  Form operator-() const {
    Form f(grade_);
    for (const auto& [m, c] : terms_) f.terms_.emplace(m, -c);
    return f;
  }
  Form& operator+=(const Form& o) {
    check_grade(o);
    for (const auto& [m, c] : o.terms_) add_term(m, c);
    return *this;
  }
  Form& operator-=(const Form& o) {
    check_grade(o);
    for (const auto& [m, c] : o.terms_) add_term(m, -c);
    return *this;
  }
  Form& operator*=(const T& s) {
    if (g2forge::is_zero(s)) {
      terms_.clear();
      return *this;
    }
    for (auto& [m, c] : terms_) c *= s;
    return *this;
  }

  friend Form operator+(Form a, const Form& b) { return a += b; }
  friend Form operator-(Form a, const Form& b) { return a -= b; }
  friend Form operator*(Form a, const T& s) { return a *= s; }
  friend Form operator*(const T& s, Form a) { return a *= s; }
  friend bool operator==(const Form& a, const Form& b) { return a.grade_ == b.grade_ && a.terms_ == b.terms_; }

 private:
  void check_grade(const Form& o) const {
    if (o.grade_ != grade_) throw GradeError("grade mismatch in form arithmetic");
  }

  int grade_ = 0;
  Terms terms_;
};

template <Scalar T, Scalar U>
Form<U> convert(const Form<T>& f, U (*conv)(const T&)) {
  Form<U> out(f.grade());
  for (const auto& [m, c] : f.terms()) out.add_term(m, conv(c));
  return out;
}

template <Scalar T>
Form<T> lift(const Form<Rational>& f) {
  Form<T> out(f.grade());
  for (const auto& [m, c] : f.terms()) out.add_term(m, lift<T>(c));
  return out;
}

/// Forms agree up to scalar_traits<T>::close on every blade.
template <Scalar T>
bool close(const Form<T>& a, const Form<T>& b) {
  if (a.grade() != b.grade()) return false;
  const Form<T> d = a - b;
  for (const auto& [m, c] : d.terms())
    if (!scalar_traits<T>::close(c, T(0))) return false;
  return true;
}

template <Scalar T>
Form<T> wedge(const Form<T>& a, const Form<T>& b) {
  Form<T> out(a.grade() + b.grade());
  if (a.grade() + b.grade() > kDim) return out;
  for (const auto& [ma, ca] : a.terms())
    for (const auto& [mb, cb] : b.terms()) {
      const int s = wedge_sign(ma, mb);
      if (s == 0) continue;
      const T prod = ca * cb;
      out.add_term(static_cast<std::uint8_t>(ma | mb), s > 0 ? prod : -prod);
    }
  return out;
}

/// e_i _| a for a basis vector.
template <Scalar T>
Form<T> contract_basis(int index, const Form<T>& a) {
  if (a.grade() < 1) throw GradeError("interior product needs a form of grade >= 1");
  if (index < 1 || index > kDim) throw GradeError("basis index out of range");
  Form<T> out(a.grade() - 1);
  const auto bit = static_cast<std::uint8_t>(1U << (index - 1));
  for (const auto& [m, c] : a.terms()) {
    if (!(m & bit)) continue;
    out.add_term(static_cast<std::uint8_t>(m ^ bit), contraction_sign(index, m) > 0 ? c : -c);
  }
  return out;
}

/// v _| a; antiderivation of degree -1.
template <Scalar T>
Form<T> contract(const Form<T>& v, const Form<T>& a) {
  if (v.grade() != 1) throw GradeError("contract expects a vector (grade-1 form)");
  if (a.grade() < 1) throw GradeError("interior product needs a form of grade >= 1");
  Form<T> out(a.grade() - 1);
  for (const auto& [m, c] : v.terms()) out += c * contract_basis(std::countr_zero(m) + 1, a);
  return out;
}

/// Hodge star for the standard metric and vol = e^{1..7}: a ^ *b = <a,b> vol.
template <Scalar T>
Form<T> hodge(const Form<T>& a) {
  Form<T> out(kDim - a.grade());
  for (const auto& [m, c] : a.terms()) {
    const auto comp = static_cast<std::uint8_t>(kFullMask ^ m);
    out.add_term(comp, wedge_sign(m, comp) > 0 ? c : -c);
  }
  return out;
}

/// Hodge star of the 4-dimensional factor spanned by e4..e7 with vol4 = e^{4567}.
template <Scalar T>
Form<T> hodge_m4(const Form<T>& a) {
  if (a.support() & ~kM4Mask) throw SupportError("hodge_m4: form touches indices 1..3");
  if (a.grade() > 4) throw GradeError("hodge_m4: grade exceeds 4");
  Form<T> out(4 - a.grade());
  for (const auto& [m, c] : a.terms()) {
    const auto comp = static_cast<std::uint8_t>(kM4Mask ^ m);
    out.add_term(comp, wedge_sign(m, comp) > 0 ? c : -c);
  }
  return out;
}

/// Inner product in which the blades are orthonormal.
template <Scalar T>
T inner(const Form<T>& a, const Form<T>& b) {
  if (a.grade() != b.grade()) throw GradeError("inner product of forms with different grades");
  T acc(0);
  const auto& small = a.size() <= b.size() ? a : b;
  const auto& large = a.size() <= b.size() ? b : a;
  for (const auto& [m, c] : small.terms()) {
    auto it = large.terms().find(m);
    if (it != large.terms().end()) acc += c * it->second;
  }
  return acc;
}

template <Scalar T>
T norm2(const Form<T>& a) {
  return inner(a, a);
}

/// Top-degree coefficient: the c in a = c vol.
template <Scalar T>
T top_coefficient(const Form<T>& a) {
  if (a.grade() != kDim) throw GradeError("expected a 7-form");
  return a.coeff(kFullMask);
}

/// Endomorphism associated with a 2-form through g(F u, v) = w(u, v).
template <Scalar T>
Matrix<T> endomorphism_of(const Form<T>& two_form) {
  if (two_form.grade() != 2) throw GradeError("endomorphism_of expects a 2-form");
  Matrix<T> f(kDim, kDim);
  for (int i = 1; i <= kDim; ++i) {
    const Form<T> c = contract_basis(i, two_form);
    for (int j = 1; j <= kDim; ++j) f(j - 1, i - 1) = c.component(j);
  }
  return f;
}

template <Scalar T>
Matrix<T> column_of(const Form<T>& v) {
  if (v.grade() != 1) throw GradeError("column_of expects a vector");
  return Matrix<T>::column(v.components());
}

template <Scalar T>
Form<T> vector_of(const Matrix<T>& col) {
  if (col.rows() != kDim || col.cols() != 1) throw GradeError("vector_of expects a 7x1 column");
  std::vector<T> c;
  for (std::size_t i = 0; i < kDim; ++i) c.push_back(col(i, 0));
  return Form<T>::vector(c);
}

std::string blade_name(Blade b);

template <Scalar T>
std::string to_string(const Form<T>& f) {
  if (f.is_zero()) return "0";
  std::string s;
  bool first = true;
  for (const auto& [m, c] : f.terms()) {
    std::ostringstream coeff;
    coeff << c;
    if (!first) s += " + ";
    s += "(" + coeff.str() + ")" + blade_name(Blade{m});
    first = false;
  }
  return s;
}

}  // namespace g2forge
