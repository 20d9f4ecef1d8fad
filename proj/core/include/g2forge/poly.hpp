#pragma once

// Sparse multivariate polynomials with a fixed number of variables. Monomials
// are exponent vectors, which is the canonical form of a sorted multiset of
// letters.

#include <array>
#include <cstdint>
#include <map>
#include <string>
#include <type_traits>
#include <utility>
#include <vector>

#include "g2forge/errors.hpp"
#include "g2forge/scalars.hpp"

namespace g2forge {

template <std::size_t N>
using Exponents = std::array<std::uint8_t, N>;

template <std::size_t N>
int degree_of(const Exponents<N>& e) {
  int d = 0;
  for (auto k : e) d += k;
  return d;
}

template <Scalar C, std::size_t N>
class Polynomial {
 public:
  using Monomial = Exponents<N>;
  using Terms = std::map<Monomial, C>;

  Polynomial() = default;

  static Polynomial constant(const C& c) {
    Polynomial p;
    p.add_term(Monomial{}, c);
    return p;
  }
  static Polynomial variable(std::size_t k, const C& c = C(1)) {
    Monomial m{};
    m[k] = 1;
    Polynomial p;
    p.add_term(m, c);
    return p;
  }

  const Terms& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }
  std::size_t size() const { return terms_.size(); }

  C coeff(const Monomial& m) const {
    auto it = terms_.find(m);
    return it == terms_.end() ? C(0) : it->second;
  }

  /// Common degree of all terms, or -1 if the polynomial is not homogeneous (0 for zero).
  int homogeneous_degree() const {
    int d = -2;
    for (const auto& [m, c] : terms_) {
      const int k = degree_of(m);
      if (d == -2) d = k;
      else if (d != k) return -1;
    }
    return d == -2 ? 0 : d;
  }

  void add_term(const Monomial& m, const C& c) {
    if (is_zero_coeff(c)) return;
    auto [it, inserted] = terms_.try_emplace(m, c);
    if (!inserted) {
      it->second += c;
      if (is_zero_coeff(it->second)) terms_.erase(it);
    }
  }

  Polynomial operator-() const {
    Polynomial p;
    for (const auto& [m, c] : terms_) p.terms_.emplace(m, -c);
    return p;
  }
  Polynomial& operator+=(const Polynomial& o) {
    for (const auto& [m, c] : o.terms_) add_term(m, c);
    return *this;
  }
  Polynomial& operator-=(const Polynomial& o) {
    for (const auto& [m, c] : o.terms_) add_term(m, -c);
    return *this;
  }
  Polynomial& operator*=(const C& s) {
    if (is_zero_coeff(s)) {
      terms_.clear();
      return *this;
    }
    for (auto& [m, c] : terms_) c *= s;
    return *this;
  }

  friend Polynomial operator+(Polynomial a, const Polynomial& b) { return a += b; }
  friend Polynomial operator-(Polynomial a, const Polynomial& b) { return a -= b; }
  friend Polynomial operator*(Polynomial a, const C& s) { return a *= s; }
  friend Polynomial operator*(const C& s, Polynomial a) { return a *= s; }
  friend Polynomial operator*(const Polynomial& a, const Polynomial& b) {
    Polynomial out;
    for (const auto& [ma, ca] : a.terms_)
      for (const auto& [mb, cb] : b.terms_) {
        Monomial m;
        for (std::size_t k = 0; k < N; ++k) m[k] = static_cast<std::uint8_t>(ma[k] + mb[k]);
        out.add_term(m, ca * cb);
      }
    return out;
  }
  friend bool operator==(const Polynomial& a, const Polynomial& b) { return a.terms_ == b.terms_; }

  Polynomial pow(unsigned k) const {
    Polynomial r = constant(C(1));
    for (unsigned i = 0; i < k; ++i) r = r * *this;
    return r;
  }

  template <class V>
  V evaluate(const std::array<V, N>& point) const {
    V acc(0);
    for (const auto& [m, c] : terms_) {
      V t = convert_coeff<V>(c);
      for (std::size_t k = 0; k < N; ++k)
        for (std::uint8_t e = 0; e < m[k]; ++e) t *= point[k];
      acc += t;
    }
    return acc;
  }

  /// Replaces variable k by images[k], a polynomial in M variables.
  template <std::size_t M>
  Polynomial<C, M> substitute(const std::array<Polynomial<C, M>, N>& images) const {
    Polynomial<C, M> out;
    for (const auto& [m, c] : terms_) {
      Polynomial<C, M> t = Polynomial<C, M>::constant(c);
      for (std::size_t k = 0; k < N; ++k)
        if (m[k]) t = t * images[k].pow(m[k]);
      out += t;
    }
    return out;
  }

 private:
  static bool is_zero_coeff(const C& c) { return g2forge::is_zero(c); }

  template <class V>
  static V convert_coeff(const C& c) {
    if constexpr (std::is_same_v<V, C>) return c;
    else if constexpr (std::is_floating_point_v<V>) return static_cast<V>(c.to_long_double());
    else return lift<V>(c);
  }

  Terms terms_;
};

/// All exponent vectors of total degree `d` in N variables, in increasing order.
template <std::size_t N>
std::vector<Exponents<N>> monomials_of_degree(int d) {
  std::vector<Exponents<N>> out;
  Exponents<N> cur{};
  auto rec = [&](auto&& self, std::size_t var, int left) -> void {
    if (var == N - 1) {
      cur[var] = static_cast<std::uint8_t>(left);
      out.push_back(cur);
      cur[var] = 0;
      return;
    }
    for (int k = left; k >= 0; --k) {
      cur[var] = static_cast<std::uint8_t>(k);
      self(self, var + 1, left - k);
    }
    cur[var] = 0;
  };
  rec(rec, 0, d);
  return out;
}

}  // namespace g2forge
