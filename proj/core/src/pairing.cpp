#include "g2forge/pairing.hpp"

#include <atomic>
#include <cmath>
#include <complex>
#include <map>
#include <random>
#include <sstream>
#include <thread>

#include "g2forge/lattice.hpp"
#include "g2forge/random.hpp"

namespace g2forge {

namespace {

constexpr std::size_t L(Letter l) { return static_cast<std::size_t>(l); }

MultiPoly letter(Letter l, const GaussRational& c = GaussRational(1)) { return MultiPoly::variable(L(l), c); }

RealPoly coord(std::size_t k, const Rational& c = Rational(1)) { return RealPoly::variable(k, c); }

const GaussRational kI = GaussRational::i();

}  // namespace

const char* letter_name(Letter l) {
  static const char* names[] = {"v1", "v2", "v3", "z1", "z2", "z3", "zb1", "zb2", "zb3"};
  return names[L(l)];
}

std::string to_string(const MultiPoly& p) {
  if (p.is_zero()) return "0";
  std::ostringstream os;
  bool first = true;
  for (const auto& [m, c] : p.terms()) {
    if (!first) os << " + ";
    first = false;
    os << "(" << c << ")";
    for (std::size_t k = 0; k < kLetters; ++k)
      for (int e = 0; e < m[k]; ++e) os << "*" << letter_name(static_cast<Letter>(k));
  }
  return os.str();
}

const Matrix<Rational>& gram_matrix() {
  static const Matrix<Rational> g = [] {
    Matrix<Rational> m(kLetters, kLetters);
    for (std::size_t a = 0; a < 3; ++a)
      for (std::size_t b = 0; b < 3; ++b) m(a, b) = a == b ? Rational(4, 3) : Rational(-2, 3);
    for (std::size_t j = 0; j < 3; ++j) {
      m(3 + j, 6 + j) = Rational(2);
      m(6 + j, 3 + j) = Rational(2);
    }
    return m;
  }();
  return g;
}

GaussRational sym_inner_poly(const MultiPoly& p, const MultiPoly& q) {
  const int dp = p.homogeneous_degree();
  const int dq = q.homogeneous_degree();
  if (dp < 0 || dq < 0) throw GradeError("sym_inner_poly needs homogeneous polynomials");
  if (!p.is_zero() && !q.is_zero() && dp != dq) throw GradeError("sym_inner_poly: degree mismatch");
  const auto& g = gram_matrix();
  auto letters = [](const MultiPoly::Monomial& m) {
    std::vector<std::size_t> out;
    for (std::size_t k = 0; k < kLetters; ++k)
      for (int e = 0; e < m[k]; ++e) out.push_back(k);
    return out;
  };
  GaussRational total(0);
  for (const auto& [m1, c1] : p.terms()) {
    const auto l1 = letters(m1);
    for (const auto& [m2, c2] : q.terms()) {
      const auto l2 = letters(m2);
      Matrix<Rational> sub(l1.size(), l2.size());
      for (std::size_t i = 0; i < l1.size(); ++i)
        for (std::size_t j = 0; j < l2.size(); ++j) sub(i, j) = g(l1[i], l2[j]);
      const Rational perm = permanent(sub);
      if (!perm.is_zero()) total += c1 * c2 * GaussRational(perm);
    }
  }
  return total;
}

namespace {

MultiPoly::Monomial conjugate_monomial(const MultiPoly::Monomial& m) {
  MultiPoly::Monomial c = m;
  for (std::size_t j = 0; j < 3; ++j) std::swap(c[3 + j], c[6 + j]);
  return c;
}

}  // namespace

bool is_real_valued(const MultiPoly& p) {
  for (const auto& [m, c] : p.terms())
    if (!(p.coeff(conjugate_monomial(m)) == c.conj())) return false;
  return true;
}

MultiPoly eliminate_v3(const MultiPoly& p) {
  std::array<MultiPoly, kLetters> images;
  for (std::size_t k = 0; k < kLetters; ++k) images[k] = MultiPoly::variable(k);
  images[L(Letter::v3)] = -(letter(Letter::v1) + letter(Letter::v2));
  return p.substitute(images);
}

MultiPoly to_letters(const RealPoly& p) {
  const GaussRational half(Rational(1, 2));
  const GaussRational ihalf(Rational(0), Rational(1, 2));
  auto re_part = [&](Letter z, Letter zb, const GaussRational& sign) {
    return (letter(z) + letter(zb)) * (half * sign);
  };
  auto im_part = [&](Letter z, Letter zb) { return letter(z, -ihalf) + letter(zb, ihalf); };
  std::array<MultiPoly, kRealCoords> images = {
      letter(Letter::v1),
      letter(Letter::v2),
      re_part(Letter::z3, Letter::zb3, GaussRational(-1)),
      im_part(Letter::z3, Letter::zb3),
      re_part(Letter::z2, Letter::zb2, GaussRational(1)),
      im_part(Letter::z2, Letter::zb2),
      re_part(Letter::z1, Letter::zb1, GaussRational(-1)),
      im_part(Letter::z1, Letter::zb1),
  };
  Polynomial<GaussRational, kRealCoords> lifted;
  for (const auto& [m, c] : p.terms()) lifted.add_term(m, GaussRational(c));
  return lifted.substitute(images);
}

namespace real_coords {

RealPoly s() { return (coord(0) + coord(1)) * Rational(1, 2); }

RealPoly y_norm2() {
  const RealPoly d = (coord(0) - coord(1)) * Rational(1, 2);
  return d * d + coord(2) * coord(2) + coord(3) * coord(3);
}

RealPoly x_norm2() {
  RealPoly r;
  for (std::size_t k = 4; k < 8; ++k) r += coord(k) * coord(k);
  return r;
}

RealPoly R() {
  const RealPoly d = (coord(0) - coord(1)) * Rational(1, 2);
  const RealPoly x1 = coord(2), x2 = coord(3), x3 = coord(4), x4 = coord(5), x5 = coord(6), x6 = coord(7);
  return d * (x3 * x3 + x4 * x4 - x5 * x5 - x6 * x6) - x1 * (x4 * x5 - x3 * x6) * Rational(2) +
         x2 * (x3 * x5 + x4 * x6) * Rational(2);
}

RealPoly from(const CubicCoefficients& c) {
  const RealPoly sp = s();
  return sp * sp * sp * c.s3 + sp * x_norm2() * c.sx2 + sp * y_norm2() * c.sy2 + R() * c.R;
}

}  // namespace real_coords

MultiPoly idet_poly() {
  // Entries of xi as letters.
  const MultiPoly zero;
  std::array<std::array<MultiPoly, 3>, 3> x = {{
      {letter(Letter::v1, kI), -letter(Letter::zb3), letter(Letter::z2)},
      {letter(Letter::z3), letter(Letter::v2, kI), -letter(Letter::zb1)},
      {-letter(Letter::zb2), letter(Letter::z1), letter(Letter::v3, kI)},
  }};
  const MultiPoly det = x[0][0] * (x[1][1] * x[2][2] - x[1][2] * x[2][1]) -
                        x[0][1] * (x[1][0] * x[2][2] - x[1][2] * x[2][0]) +
                        x[0][2] * (x[1][0] * x[2][1] - x[1][1] * x[2][0]);
  return det * kI;
}

MultiPoly idet_literal() {
  const MultiPoly z123 = letter(Letter::z1) * letter(Letter::z2) * letter(Letter::z3);
  const MultiPoly zb123 = letter(Letter::zb1) * letter(Letter::zb2) * letter(Letter::zb3);
  // 2i Re(w) = i (w + conj w).
  const MultiPoly two_i_re = (z123 + zb123) * kI;
  const MultiPoly v123 = letter(Letter::v1) * letter(Letter::v2) * letter(Letter::v3);
  const MultiPoly vz = letter(Letter::v1) * letter(Letter::z1) * letter(Letter::zb1) +
                       letter(Letter::v2) * letter(Letter::z2) * letter(Letter::zb2) +
                       letter(Letter::v3) * letter(Letter::z3) * letter(Letter::zb3);
  return v123 + two_i_re - vz;
}

IdetComparison compare_idet() {
  IdetComparison c;
  c.expansion = idet_poly();
  c.literal = idet_literal();
  c.difference = eliminate_v3(c.literal) - eliminate_v3(c.expansion);
  c.agree = c.difference.is_zero();
  MultiPoly::Monomial z{};
  MultiPoly::Monomial zb{};
  for (std::size_t j = 0; j < 3; ++j) {
    z[3 + j] = 1;
    zb[6 + j] = 1;
  }
  const GaussRational a = c.expansion.coeff(z);
  const GaussRational b = c.expansion.coeff(zb);
  std::ostringstream os;
  if (a == kI && b == -kI) {
    os << "the term written 2i Re(z1 z2 z3) equals i z1z2z3 - i zb1zb2zb3 = -2 Im(z1 z2 z3)";
  } else if (a == kI && b == kI) {
    os << "the term written 2i Re(z1 z2 z3) is literal";
  } else {
    os << "the cubic z-part of i det is (" << a << ") z1z2z3 + (" << b << ") zb1zb2zb3";
  }
  c.reading = os.str();
  return c;
}

const char* to_string(PSource s) { return s == PSource::closed_form ? "closed-form" : "first-principles"; }

namespace {

RealPoly interpolate_first_principles() {
  const auto pts = lattice_points(static_cast<int>(kRealCoords), 3, true);
  const auto monos = monomials_of_degree<kRealCoords>(3);
  if (pts.size() != monos.size()) throw InternalInconsistency("interpolation lattice size mismatch");
  const std::size_t n = pts.size();
  Matrix<Rational> v(n, n);
  Matrix<Rational> rhs(n, 1);
  for (std::size_t i = 0; i < n; ++i) {
    std::array<Rational, 8> c;
    for (std::size_t k = 0; k < 8; ++k) c[k] = Rational(pts[i][k]);
    for (std::size_t j = 0; j < n; ++j) {
      Rational t(1);
      for (std::size_t k = 0; k < 8; ++k)
        for (int e = 0; e < monos[j][k]; ++e) t *= c[k];
      v(i, j) = t;
    }
    rhs(i, 0) = P_first_principles(Su3Element<Rational>::from_coordinates(c));
  }
  const auto sol = solve_exact(v, rhs);
  if (sol.kernel_dim != 0) throw InternalInconsistency("interpolation matrix is rank deficient");
  RealPoly p;
  for (std::size_t j = 0; j < n; ++j) p.add_term(monos[j], sol.x(j, 0));

  Sampler rng(0x5eed, "interpolation-check");
  for (int k = 0; k < 8; ++k) {
    std::array<Rational, 8> c;
    for (auto& t : c) t = rng.rational(7);
    if (!(p.evaluate(c) == P_first_principles(Su3Element<Rational>::from_coordinates(c))))
      throw InternalInconsistency("interpolated P disagrees with first principles off the lattice");
  }
  return p;
}

}  // namespace

const RealPoly& P_real(PSource source) {
  if (source == PSource::closed_form) {
    static const RealPoly closed = real_coords::from(closed_form_coefficients());
    return closed;
  }
  static const RealPoly fp = interpolate_first_principles();
  return fp;
}

MultiPoly P_poly(PSource source) { return to_letters(P_real(source)); }

Rational final_pairing(PSource source) {
  const GaussRational v = sym_inner_poly(P_poly(source), idet_poly());
  if (!v.is_real()) throw NonRealResult("<P, i det> has imaginary part " + v.im().str());
  return v.re();
}

PairingComponents pairing_components() {
  const MultiPoly idet = idet_poly();
  auto pair = [&](const RealPoly& p) {
    const GaussRational v = sym_inner_poly(to_letters(p), idet);
    if (!v.is_real()) throw NonRealResult("component pairing is not real");
    return v.re();
  };
  const RealPoly s = real_coords::s();
  return {pair(s * s * s), pair(s * real_coords::x_norm2()), pair(s * real_coords::y_norm2()),
          pair(real_coords::R())};
}

Rational assemble(const CubicCoefficients& c, const PairingComponents& comp) {
  return c.s3 * comp.s3 + c.sx2 * comp.sx2 + c.sy2 * comp.sy2 + c.R * comp.R;
}

namespace {

using cd = std::complex<double>;
using Mat3 = std::array<std::array<cd, 3>, 3>;

Mat3 haar_su3(std::mt19937_64& rng) {
  std::normal_distribution<double> normal(0.0, 1.0);
  Mat3 q;
  for (auto& row : q)
    for (auto& e : row) e = cd(normal(rng), normal(rng));
  // Modified Gram-Schmidt on columns yields the Q of a QR factorization with
  // positive diagonal R, which is Haar-distributed on U(3).
  for (int k = 0; k < 3; ++k) {
    for (int j = 0; j < k; ++j) {
      cd dot = 0;
      for (int i = 0; i < 3; ++i) dot += std::conj(q[i][j]) * q[i][k];
      for (int i = 0; i < 3; ++i) q[i][k] -= dot * q[i][j];
    }
    double n = 0;
    for (int i = 0; i < 3; ++i) n += std::norm(q[i][k]);
    n = std::sqrt(n);
    for (int i = 0; i < 3; ++i) q[i][k] /= n;
  }
  const cd det = q[0][0] * (q[1][1] * q[2][2] - q[1][2] * q[2][1]) -
                 q[0][1] * (q[1][0] * q[2][2] - q[1][2] * q[2][0]) +
                 q[0][2] * (q[1][0] * q[2][1] - q[1][1] * q[2][0]);
  const cd phase = std::polar(1.0, -std::arg(det) / 3.0);
  for (auto& row : q)
    for (auto& e : row) e *= phase;
  return q;
}

Mat3 to_matrix(const std::array<double, 8>& c) {
  const double v3 = -c[0] - c[1];
  const cd i(0, 1);
  Mat3 m;
  m[0] = {i * c[0], cd(c[2], c[3]), cd(c[4], c[5])};
  m[1] = {cd(-c[2], c[3]), i * c[1], cd(c[6], c[7])};
  m[2] = {cd(-c[4], c[5]), cd(-c[6], c[7]), i * v3};
  return m;
}

std::array<double, 8> coordinates_of(const Mat3& m) {
  return {m[0][0].imag(), m[1][1].imag(), m[0][1].real(), m[0][1].imag(),
          m[0][2].real(), m[0][2].imag(), m[1][2].real(), m[1][2].imag()};
}

Mat3 conjugate_by(const Mat3& g, const Mat3& x) {
  Mat3 gx{};
  Mat3 out{};
  for (int i = 0; i < 3; ++i)
    for (int j = 0; j < 3; ++j)
      for (int k = 0; k < 3; ++k) gx[i][j] += g[i][k] * x[k][j];
  for (int i = 0; i < 3; ++i)
    for (int j = 0; j < 3; ++j)
      for (int k = 0; k < 3; ++k) out[i][j] += gx[i][k] * std::conj(g[j][k]);
  return out;
}

struct CompiledPoly {
  std::vector<std::pair<double, Exponents<8>>> terms;
  explicit CompiledPoly(const RealPoly& p) {
    for (const auto& [m, c] : p.terms()) terms.emplace_back(static_cast<double>(c.to_long_double()), m);
  }
  double operator()(const std::array<double, 8>& x) const {
    double acc = 0;
    for (const auto& [c, m] : terms) {
      double t = c;
      for (std::size_t k = 0; k < 8; ++k)
        for (int e = 0; e < m[k]; ++e) t *= x[k];
      acc += t;
    }
    return acc;
  }
};

Rational idet_value(const Su3Element<Rational>& xi) {
  const auto z = z_coordinates(xi);
  std::array<GaussRational, kLetters> point = {GaussRational(xi.v[0]), GaussRational(xi.v[1]),
                                               GaussRational(xi.v[2]), z[0], z[1], z[2],
                                               z[0].conj(), z[1].conj(), z[2].conj()};
  const GaussRational v = idet_poly().evaluate(point);
  if (!v.is_real()) throw NonRealResult("i det(xi) is not real");
  return v.re();
}

}  // namespace

HaarReport haar_average_check(const Su3Element<Rational>& xi, std::size_t samples, std::uint64_t seed,
                              PSource source, unsigned workers) {
  constexpr std::size_t kBatch = 4096;
  HaarReport rep;
  rep.xi = xi.coordinates();
  rep.samples = samples;
  rep.seed = seed;
  rep.source = source;

  const MultiPoly idet = idet_poly();
  const Rational ratio = final_pairing(source) / sym_inner_poly(idet, idet).re();
  rep.expected = static_cast<double>((ratio * idet_value(xi)).to_long_double());

  if (samples == 0) return rep;
  const CompiledPoly p(P_real(source));
  std::array<double, 8> c0;
  for (int k = 0; k < 8; ++k) c0[k] = static_cast<double>(rep.xi[k].to_long_double());
  const Mat3 x = to_matrix(c0);

  const std::size_t batches = (samples + kBatch - 1) / kBatch;
  std::vector<long double> sums(batches, 0.0L);
  std::vector<long double> sq(batches, 0.0L);
  std::atomic<std::size_t> next{0};
  auto work = [&] {
    for (std::size_t b = next++; b < batches; b = next++) {
      std::seed_seq seq{static_cast<std::uint32_t>(seed), static_cast<std::uint32_t>(seed >> 32),
                        static_cast<std::uint32_t>(b), static_cast<std::uint32_t>(b >> 32)};
      std::mt19937_64 rng(seq);
      const std::size_t n = std::min(kBatch, samples - b * kBatch);
      long double s = 0, s2 = 0;
      for (std::size_t k = 0; k < n; ++k) {
        const double v = p(coordinates_of(conjugate_by(haar_su3(rng), x)));
        s += v;
        s2 += static_cast<long double>(v) * v;
      }
      sums[b] = s;
      sq[b] = s2;
    }
  };
  if (workers == 0) workers = std::max(1U, std::thread::hardware_concurrency());
  workers = static_cast<unsigned>(std::min<std::size_t>(workers, batches));
  std::vector<std::thread> pool;
  for (unsigned w = 1; w < workers; ++w) pool.emplace_back(work);
  work();
  for (auto& t : pool) t.join();

  long double total = 0, total2 = 0;
  for (std::size_t b = 0; b < batches; ++b) {
    total += sums[b];
    total2 += sq[b];
  }
  const long double n = static_cast<long double>(samples);
  const long double mean = total / n;
  const long double var = std::max(0.0L, total2 / n - mean * mean);
  rep.mean = static_cast<double>(mean);
  rep.std_error = static_cast<double>(std::sqrt(var / n));
  const double denom = std::abs(rep.expected);
  rep.relative_error = denom > 0 ? std::abs(rep.mean - rep.expected) / denom : std::abs(rep.mean);
  return rep;
}

std::vector<Su3Element<Rational>> haar_test_elements() {
  return {
      Su3Element<Rational>({1, 1, -2}, {0, 0, 0, 0, 0, 0}),
      Su3Element<Rational>({3, -1, -2}, {0, 0, 0, 0, 0, 0}),
      Su3Element<Rational>({2, -1, -1}, {Rational(1, 2), 0, 0, 0, 0, 0}),
  };
}

}  // namespace g2forge
