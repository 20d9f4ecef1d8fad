#pragma once

// Coefficient types for the exact algebra: Rational, the quadratic extension
// Q(sqrt 10), Gaussian rationals, and a floating-point stand-in that runs the
// same templates in approximate mode.

#include <gmpxx.h>

#include <cmath>
#include <compare>
#include <concepts>
#include <cstdint>
#include <iosfwd>
#include <string>

#include "g2forge/errors.hpp"

namespace g2forge {

class Rational {
 public:
  Rational() = default;
  template <std::integral I>
  Rational(I v) : value_(static_cast<long>(v)) {}  // NOLINT(google-explicit-constructor)
  Rational(long num, long den);
  explicit Rational(mpq_class v);

  /// Parses decimal integer strings; the denominator must be nonzero.
  static Rational from_strings(const std::string& num, const std::string& den = "1");
  /// Accepts "p", "-p" or "p/q".
  static Rational parse(const std::string& text);

  std::string num_str() const { return value_.get_num().get_str(); }
  std::string den_str() const { return value_.get_den().get_str(); }
  std::string str() const;

  bool is_zero() const { return sgn(value_) == 0; }
  int sign() const { return sgn(value_); }
  bool is_integer() const { return value_.get_den() == 1; }
  long double to_long_double() const;
  const mpq_class& raw() const { return value_; }

  Rational operator-() const { return Rational(mpq_class(-value_)); }
  Rational& operator+=(const Rational& o) { value_ += o.value_; return *this; }
  Rational& operator-=(const Rational& o) { value_ -= o.value_; return *this; }
  Rational& operator*=(const Rational& o) { value_ *= o.value_; return *this; }
  Rational& operator/=(const Rational& o);

  friend Rational operator+(Rational a, const Rational& b) { return a += b; }
  friend Rational operator-(Rational a, const Rational& b) { return a -= b; }
  friend Rational operator*(Rational a, const Rational& b) { return a *= b; }
  friend Rational operator/(Rational a, const Rational& b) { return a /= b; }
  friend bool operator==(const Rational& a, const Rational& b) { return cmp(a.value_, b.value_) == 0; }
  friend std::strong_ordering operator<=>(const Rational& a, const Rational& b) {
    const int c = cmp(a.value_, b.value_);
    return c < 0 ? std::strong_ordering::less
                 : (c > 0 ? std::strong_ordering::greater : std::strong_ordering::equal);
  }

 private:
  mpq_class value_{0};
};

Rational abs(const Rational& r);
std::ostream& operator<<(std::ostream& os, const Rational& r);

/// rat + irr * sqrt(10). The only irrational constant in play is sqrt(10)/6.
class QuadExt {
 public:
  QuadExt() = default;
  template <std::integral I>
  QuadExt(I v) : rat_(v) {}  // NOLINT(google-explicit-constructor)
  QuadExt(Rational rat) : rat_(std::move(rat)) {}  // NOLINT(google-explicit-constructor)
  QuadExt(Rational rat, Rational irr) : rat_(std::move(rat)), irr_(std::move(irr)) {}

  static QuadExt sqrt10() { return {Rational(0), Rational(1)}; }

  const Rational& rat() const { return rat_; }
  const Rational& irr() const { return irr_; }
  bool is_zero() const { return rat_.is_zero() && irr_.is_zero(); }
  bool is_rational() const { return irr_.is_zero(); }
  QuadExt conjugate() const { return {rat_, -irr_}; }
  /// rat^2 - 10 irr^2; multiplicative, zero only at 0.
  Rational norm() const { return rat_ * rat_ - Rational(10) * irr_ * irr_; }
  QuadExt inverse() const;
  long double to_long_double() const;
  std::string str() const;

  QuadExt operator-() const { return {-rat_, -irr_}; }
  QuadExt& operator+=(const QuadExt& o) { rat_ += o.rat_; irr_ += o.irr_; return *this; }
  QuadExt& operator-=(const QuadExt& o) { rat_ -= o.rat_; irr_ -= o.irr_; return *this; }
  QuadExt& operator*=(const QuadExt& o);
  QuadExt& operator/=(const QuadExt& o) { return *this *= o.inverse(); }

  friend QuadExt operator+(QuadExt a, const QuadExt& b) { return a += b; }
  friend QuadExt operator-(QuadExt a, const QuadExt& b) { return a -= b; }
  friend QuadExt operator*(QuadExt a, const QuadExt& b) { return a *= b; }
  friend QuadExt operator/(QuadExt a, const QuadExt& b) { return a /= b; }
  friend bool operator==(const QuadExt& a, const QuadExt& b) = default;

 private:
  Rational rat_;
  Rational irr_;
};

std::ostream& operator<<(std::ostream& os, const QuadExt& q);

/// re + im * i.
class GaussRational {
 public:
  GaussRational() = default;
  template <std::integral I>
  GaussRational(I v) : re_(v) {}  // NOLINT(google-explicit-constructor)
  GaussRational(Rational re) : re_(std::move(re)) {}  // NOLINT(google-explicit-constructor)
  GaussRational(Rational re, Rational im) : re_(std::move(re)), im_(std::move(im)) {}

  static GaussRational i() { return {Rational(0), Rational(1)}; }

  const Rational& re() const { return re_; }
  const Rational& im() const { return im_; }
  bool is_zero() const { return re_.is_zero() && im_.is_zero(); }
  bool is_real() const { return im_.is_zero(); }
  GaussRational conj() const { return {re_, -im_}; }
  Rational norm() const { return re_ * re_ + im_ * im_; }
  GaussRational inverse() const;
  std::string str() const;

  GaussRational operator-() const { return {-re_, -im_}; }
  GaussRational& operator+=(const GaussRational& o) { re_ += o.re_; im_ += o.im_; return *this; }
  GaussRational& operator-=(const GaussRational& o) { re_ -= o.re_; im_ -= o.im_; return *this; }
  GaussRational& operator*=(const GaussRational& o);
  GaussRational& operator/=(const GaussRational& o) { return *this *= o.inverse(); }

  friend GaussRational operator+(GaussRational a, const GaussRational& b) { return a += b; }
  friend GaussRational operator-(GaussRational a, const GaussRational& b) { return a -= b; }
  friend GaussRational operator*(GaussRational a, const GaussRational& b) { return a *= b; }
  friend GaussRational operator/(GaussRational a, const GaussRational& b) { return a /= b; }
  friend bool operator==(const GaussRational& a, const GaussRational& b) = default;

 private:
  Rational re_;
  Rational im_;
};

std::ostream& operator<<(std::ostream& os, const GaussRational& g);

/// Extended-precision float. Every operation that would produce NaN or an
/// infinity throws instead.
class ApproxScalar {
 public:
  ApproxScalar() = default;
  template <std::integral I>
  ApproxScalar(I v) : v_(static_cast<long double>(v)) {}  // NOLINT(google-explicit-constructor)
  explicit ApproxScalar(long double v);
  explicit ApproxScalar(const Rational& r) : ApproxScalar(r.to_long_double()) {}

  long double value() const { return v_; }
  bool is_zero() const { return v_ == 0.0L; }

  ApproxScalar operator-() const { return ApproxScalar(-v_); }
  ApproxScalar& operator+=(const ApproxScalar& o) { return *this = ApproxScalar(v_ + o.v_); }
  ApproxScalar& operator-=(const ApproxScalar& o) { return *this = ApproxScalar(v_ - o.v_); }
  ApproxScalar& operator*=(const ApproxScalar& o) { return *this = ApproxScalar(v_ * o.v_); }
  ApproxScalar& operator/=(const ApproxScalar& o);

  friend ApproxScalar operator+(ApproxScalar a, const ApproxScalar& b) { return a += b; }
  friend ApproxScalar operator-(ApproxScalar a, const ApproxScalar& b) { return a -= b; }
  friend ApproxScalar operator*(ApproxScalar a, const ApproxScalar& b) { return a *= b; }
  friend ApproxScalar operator/(ApproxScalar a, const ApproxScalar& b) { return a /= b; }
  friend bool operator==(const ApproxScalar& a, const ApproxScalar& b) = default;
  friend auto operator<=>(const ApproxScalar& a, const ApproxScalar& b) { return a.v_ <=> b.v_; }

 private:
  long double v_ = 0.0L;
};

std::ostream& operator<<(std::ostream& os, const ApproxScalar& a);

inline bool is_zero(const Rational& x) { return x.is_zero(); }
inline bool is_zero(const QuadExt& x) { return x.is_zero(); }
inline bool is_zero(const GaussRational& x) { return x.is_zero(); }
inline bool is_zero(const ApproxScalar& x) { return x.is_zero(); }

template <class T>
struct scalar_traits;

template <>
struct scalar_traits<Rational> {
  static constexpr bool exact = true;
  static constexpr const char* name = "rational";
  static Rational from_rational(const Rational& r) { return r; }
  static long double magnitude(const Rational& r) { return std::abs(r.to_long_double()); }
  static bool close(const Rational& a, const Rational& b) { return a == b; }
};

template <>
struct scalar_traits<QuadExt> {
  static constexpr bool exact = true;
  static constexpr const char* name = "quadext";
  static QuadExt from_rational(const Rational& r) { return QuadExt(r); }
  static QuadExt sqrt10() { return QuadExt::sqrt10(); }
  static long double magnitude(const QuadExt& q) { return std::abs(q.to_long_double()); }
  static bool close(const QuadExt& a, const QuadExt& b) { return a == b; }
};

template <>
struct scalar_traits<GaussRational> {
  static constexpr bool exact = true;
  static constexpr const char* name = "gaussian";
  static GaussRational from_rational(const Rational& r) { return GaussRational(r); }
  static long double magnitude(const GaussRational& g) {
    return std::abs(g.re().to_long_double()) + std::abs(g.im().to_long_double());
  }
  static bool close(const GaussRational& a, const GaussRational& b) { return a == b; }
};

template <>
struct scalar_traits<ApproxScalar> {
  static constexpr bool exact = false;
  static constexpr const char* name = "approx";
  static ApproxScalar from_rational(const Rational& r) { return ApproxScalar(r); }
  static ApproxScalar sqrt10();
  static long double magnitude(const ApproxScalar& a) { return a.value() < 0 ? -a.value() : a.value(); }
  /// Relative-plus-absolute agreement at 1e-9.
  static bool close(const ApproxScalar& a, const ApproxScalar& b);
};

template <class T>
concept Scalar = requires(const T a, const T b, const Rational r) {
  { a + b } -> std::same_as<T>;
  { a - b } -> std::same_as<T>;
  { a * b } -> std::same_as<T>;
  { a / b } -> std::same_as<T>;
  { -a } -> std::same_as<T>;
  { a == b } -> std::convertible_to<bool>;
  { is_zero(a) } -> std::same_as<bool>;
  { scalar_traits<T>::from_rational(r) } -> std::same_as<T>;
  { scalar_traits<T>::magnitude(a) } -> std::same_as<long double>;
  { scalar_traits<T>::close(a, b) } -> std::same_as<bool>;
  T(0);
  T(1);
};

template <class T>
concept HasSqrt10 = Scalar<T> && requires { { scalar_traits<T>::sqrt10() } -> std::same_as<T>; };

template <Scalar T>
T lift(const Rational& r) {
  return scalar_traits<T>::from_rational(r);
}

}  // namespace g2forge
