#include "g2forge/scalars.hpp"

#include <cmath>
#include <ostream>
#include <sstream>

namespace g2forge {

Rational::Rational(long num, long den) {
  if (den == 0) throw DivisionByZero();
  value_ = mpq_class(num, den);
  value_.canonicalize();
}

Rational::Rational(mpq_class v) : value_(std::move(v)) { value_.canonicalize(); }

namespace {

mpz_class parse_integer(const std::string& s) {
  mpz_class z;
  std::size_t start = (!s.empty() && (s[0] == '-' || s[0] == '+')) ? 1 : 0;
  if (s.size() == start) throw ParseError("empty integer string");
  for (std::size_t i = start; i < s.size(); ++i) {
    if (s[i] < '0' || s[i] > '9') throw ParseError("not a decimal integer: '" + s + "'");
  }
  const std::string body = s[0] == '+' ? s.substr(1) : s;
  if (z.set_str(body, 10) != 0) throw ParseError("not a decimal integer: '" + s + "'");
  return z;
}

}  // namespace

Rational Rational::from_strings(const std::string& num, const std::string& den) {
  mpz_class n = parse_integer(num);
  mpz_class d = parse_integer(den);
  if (d == 0) throw DivisionByZero();
  return Rational(mpq_class(n, d));
}

Rational Rational::parse(const std::string& text) {
  const auto slash = text.find('/');
  if (slash == std::string::npos) return from_strings(text);
  return from_strings(text.substr(0, slash), text.substr(slash + 1));
}

std::string Rational::str() const {
  if (is_integer()) return num_str();
  return num_str() + "/" + den_str();
}

long double Rational::to_long_double() const {
  // get_d alone drops the extra long double mantissa bits; add the remainder.
  const mpf_class q(value_, 128);
  const double hi = q.get_d();
  const mpf_class lo(q - mpf_class(hi, 128), 128);
  return static_cast<long double>(hi) + static_cast<long double>(lo.get_d());
}

Rational& Rational::operator/=(const Rational& o) {
  if (o.is_zero()) throw DivisionByZero();
  value_ /= o.value_;
  return *this;
}

Rational abs(const Rational& r) { return r.sign() < 0 ? -r : r; }

std::ostream& operator<<(std::ostream& os, const Rational& r) { return os << r.str(); }

QuadExt& QuadExt::operator*=(const QuadExt& o) {
  Rational r = rat_ * o.rat_ + Rational(10) * irr_ * o.irr_;
  Rational i = rat_ * o.irr_ + irr_ * o.rat_;
  rat_ = std::move(r);
  irr_ = std::move(i);
  return *this;
}

QuadExt QuadExt::inverse() const {
  const Rational n = norm();
  if (n.is_zero()) throw DivisionByZero();
  return {rat_ / n, -irr_ / n};
}

long double QuadExt::to_long_double() const {
  return rat_.to_long_double() + irr_.to_long_double() * std::sqrt(10.0L);
}

std::string QuadExt::str() const {
  if (irr_.is_zero()) return rat_.str();
  std::string s = rat_.is_zero() ? "" : rat_.str() + (irr_.sign() > 0 ? " + " : " - ");
  const Rational mag = rat_.is_zero() ? irr_ : abs(irr_);
  return s + mag.str() + "*sqrt(10)";
}

std::ostream& operator<<(std::ostream& os, const QuadExt& q) { return os << q.str(); }

GaussRational& GaussRational::operator*=(const GaussRational& o) {
  Rational r = re_ * o.re_ - im_ * o.im_;
  Rational i = re_ * o.im_ + im_ * o.re_;
  re_ = std::move(r);
  im_ = std::move(i);
  return *this;
}

GaussRational GaussRational::inverse() const {
  const Rational n = norm();
  if (n.is_zero()) throw DivisionByZero();
  return {re_ / n, -im_ / n};
}

std::string GaussRational::str() const {
  if (im_.is_zero()) return re_.str();
  std::string s = re_.is_zero() ? "" : re_.str() + (im_.sign() > 0 ? " + " : " - ");
  const Rational mag = re_.is_zero() ? im_ : abs(im_);
  return s + mag.str() + "*i";
}

std::ostream& operator<<(std::ostream& os, const GaussRational& g) { return os << g.str(); }

ApproxScalar::ApproxScalar(long double v) : v_(v) {
  if (!std::isfinite(v_)) throw NonFiniteValue();
}

ApproxScalar& ApproxScalar::operator/=(const ApproxScalar& o) {
  if (o.v_ == 0.0L) throw DivisionByZero();
  return *this = ApproxScalar(v_ / o.v_);
}

std::ostream& operator<<(std::ostream& os, const ApproxScalar& a) {
  std::ostringstream s;
  s.precision(21);
  s << a.value();
  return os << s.str();
}

ApproxScalar scalar_traits<ApproxScalar>::sqrt10() { return ApproxScalar(std::sqrt(10.0L)); }

bool scalar_traits<ApproxScalar>::close(const ApproxScalar& a, const ApproxScalar& b) {
  const long double d = std::fabs(a.value() - b.value());
  return d <= 1e-9L * (1.0L + std::fabs(a.value()) + std::fabs(b.value()));
}

}  // namespace g2forge
