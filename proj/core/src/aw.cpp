#include "g2forge/aw.hpp"

#include <functional>
#include <sstream>

#include "g2forge/lattice.hpp"
#include "g2forge/random.hpp"

namespace g2forge {

std::array<GaussRational, 3> z_coordinates(const Su3Element<Rational>& xi) {
  const auto& x = xi.x;
  return {GaussRational(-x[4], x[5]), GaussRational(x[2], x[3]), GaussRational(-x[0], x[1])};
}

CubicCoefficients closed_form_coefficients() {
  return {Rational(210), Rational(65, 6), Rational(50, 3), Rational(100, 27)};
}

CubicCoefficients intermediate_flat_coefficients() {
  return {Rational(-210), Rational(39), Rational(6), Rational(-8)};
}

CubicCoefficients revert_to_xi(const CubicCoefficients& flat) {
  // |y|^2 scales by 25/9, |x|^2 by 10/36 and R = g(Jx, I_y x) by -5/3 * 10/36.
  const Rational x_scale(5, 18);
  const Rational y_scale(25, 9);
  return {flat.s3, flat.sx2 * x_scale, flat.sy2 * y_scale, flat.R * Rational(-5, 3) * x_scale};
}

FlatInterpolation flat_route(const Su3Element<Rational>& xi) {
  const auto d = decompose(xi);
  const Form<Rational> y = d.y * Rational(-5, 3);
  auto f = [&](long t) { return P_flat(d.s, y, d.x * Rational(t)); };
  const Rational f0 = f(0);
  const Rational fp = f(1);
  const Rational fm = f(-1);
  const Rational f2v = f(2);
  FlatInterpolation r;
  r.f0 = f0;
  r.f2 = (fp + fm) / Rational(2) - f0;
  const Rational odd = (fp - fm) / Rational(2);
  r.f3 = (f2v - f0 - Rational(4) * r.f2 - Rational(2) * odd) / Rational(6);
  r.f1 = odd - r.f3;
  return r;
}

Rational P_first_principles(const Su3Element<Rational>& xi) {
  const QuadExt exact = P_of_xi(lift<QuadExt>(xi));
  if (!exact.is_rational()) throw IrrationalResult("P(xi) has a surviving sqrt10 part: " + exact.str());
  const FlatInterpolation f = flat_route(xi);
  const Rational c2(5, 18);
  if (!(f.f1 + f.f3 * c2).is_zero()) throw IrrationalResult("flat route leaves an odd power of sqrt10");
  const Rational flat = f.f0 + f.f2 * c2;
  if (!(flat == exact.rat())) throw InternalInconsistency("Q(sqrt10) and flat routes to P(xi) disagree");
  return flat;
}

const IdentityCheck& IdentityReport::at(const std::string& id) const {
  for (const auto& c : checks)
    if (c.id == id) return c;
  throw Error("no check named " + id);
}

namespace {

using RForm = Form<Rational>;
using RMat = Matrix<Rational>;

struct YX {
  RForm y;
  RForm x;
};

std::string vec_str(const RForm& v) {
  std::ostringstream os;
  os << "(";
  for (int k = 1; k <= kDim; ++k) os << (k > 1 ? "," : "") << v.component(k);
  os << ")";
  return os.str();
}

std::string mismatch(const RMat& display, const RMat& computed) {
  for (std::size_t i = 0; i < display.rows(); ++i)
    for (std::size_t j = 0; j < display.cols(); ++j)
      if (!(display(i, j) == computed(i, j))) {
        std::ostringstream os;
        os << "entry (" << i + 1 << "," << j + 1 << "): display " << display(i, j) << ", computed "
           << computed(i, j);
        return os.str();
      }
  return {};
}

/// Lattice |alpha| <= 2 in (y1, y2, y3, x4..x7), then random points.
std::vector<YX> yx_points(std::uint64_t seed, const char* stream, std::size_t random_points) {
  std::vector<YX> pts;
  for (const auto& a : lattice_points(7, 2)) {
    pts.push_back({RForm::vector({a[0], a[1], a[2], 0, 0, 0, 0}), RForm::vector({0, 0, 0, a[3], a[4], a[5], a[6]})});
  }
  Sampler rng(seed, stream);
  for (std::size_t k = 0; k < random_points; ++k) {
    std::vector<Rational> y(kDim, Rational(0));
    std::vector<Rational> x(kDim, Rational(0));
    for (int i = 0; i < 3; ++i) y[i] = rng.rational();
    for (int i = 3; i < 7; ++i) x[i] = rng.rational();
    pts.push_back({RForm::vector(y), RForm::vector(x)});
  }
  return pts;
}

using MatrixIdentity = std::function<std::pair<RMat, RMat>(const YX&)>;  // (display, computed)

IdentityCheck run_matrix_identity(const std::string& id, const std::string& display, const std::vector<YX>& pts,
                                  const MatrixIdentity& f) {
  IdentityCheck c{id, display, true, pts.size(), {}};
  for (const auto& p : pts) {
    const auto [want, got] = f(p);
    if (!(want == got)) {
      c.holds = false;
      c.detail = "at y=" + vec_str(p.y) + " x=" + vec_str(p.x) + ": " + mismatch(want, got);
      break;
    }
  }
  return c;
}

RMat sum_ea_odot_Iax(const YX& p) {
  const auto& aw = AWFrame<Rational>::instance();
  RMat m(kDim, kDim);
  for (int a = 0; a < 3; ++a) m += odot(RForm::basis_vector(a + 1), apply(aw.I[a], p.x));
  return m;
}

}  // namespace

IdentityReport verify_lemma_Lp(std::uint64_t seed, std::size_t random_points) {
  const auto& aw = AWFrame<Rational>::instance();
  const auto pts = yx_points(seed, "lemma-p", random_points);
  IdentityReport r;
  r.checks.push_back(run_matrix_identity("Lp.phit-C", "p(phi~, C(x)) = -4 I_a x (.) e_a", pts, [&](const YX& p) {
    return std::pair{sum_ea_odot_Iax(p) * Rational(-4), p_form(aw.phi_tilde, C_of_x(p.x)).matrix()};
  }));
  r.checks.push_back(run_matrix_identity(
      "Lp.C-C", "p(C(x), C(x)) = 2|x|^2 id3 + 10(|x|^2 id4 - x (x) x)", pts, [&](const YX& p) {
        const Rational x2 = norm2(p.x);
        const RForm c = C_of_x(p.x);
        return std::pair{aw.id3 * (Rational(2) * x2) + (aw.id4 * x2 - outer(p.x, p.x)) * Rational(10),
                         p_form(c, c).matrix()};
      }));
  r.checks.push_back(run_matrix_identity("Lp.yO-C", "p(y ^ Omega, C(x)) = 6 y (.) Jx", pts, [&](const YX& p) {
    return std::pair{odot(p.y, apply(aw.J, p.x)) * Rational(6),
                     p_form(wedge(p.y, aw.Omega), C_of_x(p.x)).matrix()};
  }));
  r.checks.push_back(run_matrix_identity("Lp.phit-yO", "p(phi~, y ^ Omega) = -J I_y", pts, [&](const YX& p) {
    return std::pair{-(aw.J * aw.I_of(p.y)), p_form(aw.phi_tilde, wedge(p.y, aw.Omega)).matrix()};
  }));
  r.checks.push_back(run_matrix_identity("Lp.phit-phit", "p(phi~, phi~) = 38 id3 + 3 id4", pts, [&](const YX&) {
    return std::pair{aw.id3 * Rational(38) + aw.id4 * Rational(3), p_form(aw.phi_tilde, aw.phi_tilde).matrix()};
  }));
  return r;
}

IdentityReport verify_lemma_Lj(std::uint64_t seed, std::size_t random_points) {
  const auto& aw = AWFrame<Rational>::instance();
  const auto pts = yx_points(seed, "lemma-j", random_points);
  IdentityReport r;
  r.checks.push_back(run_matrix_identity("Lj.C", "i^-1(C(x)) = -1/2 e_a (.) I_a x", pts, [&](const YX& p) {
    return std::pair{sum_ea_odot_Iax(p) * Rational(-1, 2), iso_i_inv(C_of_x(p.x)).matrix()};
  }));
  r.checks.push_back(run_matrix_identity("Lj.phit", "i^-1(phi~) = -2 id3 + 3/2 id4", pts, [&](const YX&) {
    return std::pair{aw.id3 * Rational(-2) + aw.id4 * Rational(3, 2), iso_i_inv(aw.phi_tilde).matrix()};
  }));
  r.checks.push_back(run_matrix_identity("Lj.yO", "i^-1(y ^ Omega) = -1/2 J I_y", pts, [&](const YX& p) {
    return std::pair{aw.J * aw.I_of(p.y) * Rational(-1, 2), iso_i_inv(wedge(p.y, aw.Omega)).matrix()};
  }));
  return r;
}

IdentityReport verify_intermediate_products(std::uint64_t seed, std::size_t random_points) {
  const auto& aw = AWFrame<Rational>::instance();
  struct Pt {
    Rational s;
    YX yx;
  };
  std::vector<Pt> pts;
  for (const auto& a : lattice_points(8, 3))
    pts.push_back({Rational(a[0]),
                   {RForm::vector({a[1], a[2], a[3], 0, 0, 0, 0}), RForm::vector({0, 0, 0, a[4], a[5], a[6], a[7]})}});
  Sampler rng(seed, "six-products");
  for (std::size_t k = 0; k < random_points; ++k) {
    std::vector<Rational> y(kDim, Rational(0));
    std::vector<Rational> x(kDim, Rational(0));
    for (int i = 0; i < 3; ++i) y[i] = rng.rational();
    for (int i = 3; i < 7; ++i) x[i] = rng.rational();
    pts.push_back({rng.rational(), {RForm::vector(y), RForm::vector(x)}});
  }

  struct Product {
    const char* id;
    const char* display;
    std::function<Rational(const RMat& ia, const Pt& p, const RForm& yo, const RForm& c)> computed;
    std::function<Rational(const Pt& p, const Rational& r)> expected;
  };
  auto pair_with = [](const SymTensor<Rational>& m, const RMat& ia) { return sym_inner(m.matrix(), ia); };
  const std::vector<Product> products = {
      {"P.yO-yO", "<p(y^Omega, y^Omega), i^-1(A)> = 2 s |y|^2",
       [&](const RMat& ia, const Pt&, const RForm& yo, const RForm&) { return pair_with(p_form(yo, yo), ia); },
       [](const Pt& p, const Rational&) { return Rational(2) * p.s * norm2(p.yx.y); }},
      {"P.yO-C", "<p(y^Omega, C(x)), i^-1(A)> = -3/2 R",
       [&](const RMat& ia, const Pt&, const RForm& yo, const RForm& c) { return pair_with(p_form(yo, c), ia); },
       [](const Pt&, const Rational& r) { return Rational(-3, 2) * r; }},
      {"P.C-C", "<p(C(x), C(x)), i^-1(A)> = 33 s |x|^2 - 5 R",
       [&](const RMat& ia, const Pt&, const RForm&, const RForm& c) { return pair_with(p_form(c, c), ia); },
       [](const Pt& p, const Rational& r) { return Rational(33) * p.s * norm2(p.yx.x) - Rational(5) * r; }},
      {"P.phit-phit", "<p(phi~, phi~), i^-1(A)> = -210 s",
       [&](const RMat& ia, const Pt&, const RForm&, const RForm&) {
         return pair_with(p_form(aw.phi_tilde, aw.phi_tilde), ia);
       },
       [](const Pt& p, const Rational&) { return Rational(-210) * p.s; }},
      {"P.phit-yO", "<p(phi~, y^Omega), i^-1(A)> = 2 |y|^2",
       [&](const RMat& ia, const Pt&, const RForm& yo, const RForm&) {
         return pair_with(p_form(aw.phi_tilde, yo), ia);
       },
       [](const Pt& p, const Rational&) { return Rational(2) * norm2(p.yx.y); }},
      {"P.phit-C", "<p(phi~, C(x)), i^-1(A)> = 3 |x|^2",
       [&](const RMat& ia, const Pt&, const RForm&, const RForm& c) {
         return pair_with(p_form(aw.phi_tilde, c), ia);
       },
       [](const Pt& p, const Rational&) { return Rational(3) * norm2(p.yx.x); }},
      {"P.assembled", "<p(A, A), i^-1(A)> = -210 s^3 + s(39|x|^2 + 6|y|^2) - 8 R",
       [&](const RMat& ia, const Pt& p, const RForm&, const RForm&) {
         const RForm a = A_flat(p.s, p.yx.y, p.yx.x);
         return pair_with(p_form(a, a), ia);
       },
       [](const Pt& p, const Rational& r) {
         return Rational(-210) * p.s * p.s * p.s +
                p.s * (Rational(39) * norm2(p.yx.x) + Rational(6) * norm2(p.yx.y)) - Rational(8) * r;
       }},
  };

  IdentityReport report;
  for (const auto& pr : products) report.checks.push_back({pr.id, pr.display, true, pts.size(), {}});
  for (const auto& p : pts) {
    const RForm yo = wedge(p.yx.y, aw.Omega);
    const RForm c = C_of_x(p.yx.x);
    const RMat ia = iso_i_inv(A_flat(p.s, p.yx.y, p.yx.x)).matrix();
    const Rational r = R_of(p.yx.y, p.yx.x);
    for (std::size_t k = 0; k < products.size(); ++k) {
      auto& chk = report.checks[k];
      if (!chk.holds) continue;
      const Rational got = products[k].computed(ia, p, yo, c);
      const Rational want = products[k].expected(p, r);
      if (!(got == want)) {
        chk.holds = false;
        std::ostringstream os;
        os << "at s=" << p.s << " y=" << vec_str(p.yx.y) << " x=" << vec_str(p.yx.x) << ": display " << want
           << ", computed " << got;
        chk.detail = os.str();
      }
    }
  }
  return report;
}

IdentityReport verify_frame_relations() {
  const auto& aw = AWFrame<Rational>::instance();
  IdentityReport r;
  auto add = [&](const std::string& id, const std::string& display, bool ok, std::size_t n = 1) {
    r.checks.push_back({id, display, ok, n, ok ? "" : "relation fails"});
  };
  add("frame.I1e4", "I_1 e_4 = e_5", apply(aw.I[0], RForm::basis_vector(4)) == RForm::basis_vector(5));
  add("frame.I1I2", "I_1 I_2 = -I_2 I_1 = -I_3",
      aw.I[0] * aw.I[1] == -aw.I[2] && aw.I[1] * aw.I[0] == aw.I[2]);
  bool table = true;
  bool asd = true;
  bool compat = true;
  for (int a = 0; a < 3; ++a) {
    for (int b = 0; b < 3; ++b) {
      const RForm w = wedge(aw.omega[a], aw.omega[b]);
      table = table && (w == aw.vol4 * Rational(a == b ? -2 : 0));
    }
    asd = asd && (hodge_m4(aw.omega[a]) == -aw.omega[a]);
    for (int i = 1; i <= kDim; ++i)
      for (int j = 1; j <= kDim; ++j) {
        const Rational g = inner(apply(aw.I[a], RForm::basis_vector(i)), RForm::basis_vector(j));
        const Rational w = contract_basis(i, aw.omega[a]).component(j);
        compat = compat && g == w;
      }
  }
  add("frame.omega-table", "omega_a ^ omega_b = -2 delta_ab vol4", table, 9);
  add("frame.asd", "*4 omega_a = -omega_a", asd, 3);
  add("frame.metric", "g(I_a u, v) = omega_a(u, v)", compat, 147);
  bool jcompat = true;
  for (int i = 1; i <= kDim; ++i)
    for (int j = 1; j <= kDim; ++j)
      jcompat = jcompat && inner(apply(aw.J, RForm::basis_vector(i)), RForm::basis_vector(j)) ==
                               contract_basis(i, aw.Omega).component(j);
  add("frame.J", "g(J u, v) = Omega(u, v)", jcompat, 49);
  add("frame.phit", "phi~ = phi - 7 vol3", aw.phi_tilde == G2Frame<Rational>::instance().phi() - aw.vol3 * Rational(7));
  return r;
}

namespace {

struct FitResult {
  CubicCoefficients c;
  bool in_span = false;
};

FitResult fit(const RMat& basis_values, const RMat& values) {
  FitResult r;
  try {
    const auto sol = solve_exact(basis_values, values);
    if (sol.kernel_dim != 0) throw InternalInconsistency("fit points do not separate the four-term basis");
    r.c = {sol.x(0, 0), sol.x(1, 0), sol.x(2, 0), sol.x(3, 0)};
    r.in_span = true;
  } catch (const InconsistentSystem&) {
    r.in_span = false;
  }
  return r;
}

}  // namespace

PolynomialFit fit_first_principles(std::uint64_t seed, std::size_t random_points) {
  std::vector<std::array<Rational, 8>> pts;
  for (const auto& a : lattice_points(8, 3, true)) {
    std::array<Rational, 8> p;
    for (int k = 0; k < 8; ++k) p[k] = Rational(a[k]);
    pts.push_back(p);
  }
  Sampler rng(seed, "fit");
  for (std::size_t k = 0; k < random_points; ++k) {
    std::array<Rational, 8> p;
    for (auto& c : p) c = rng.rational();
    pts.push_back(p);
  }

  const std::size_t n = pts.size();
  RMat flat_basis(n, 4);
  RMat flat_vals(n, 1);
  RMat xi_basis(n, 4);
  RMat xi_vals(n, 1);
  for (std::size_t k = 0; k < n; ++k) {
    const auto& p = pts[k];
    // Flat chart: s = p0, y = (p1, p2, p3), x = (p4..p7) on e4..e7.
    const Rational s = p[0];
    const RForm y = RForm::vector({p[1], p[2], p[3], 0, 0, 0, 0});
    const RForm x = RForm::vector({0, 0, 0, p[4], p[5], p[6], p[7]});
    const Rational r = R_of(y, x);
    flat_basis(k, 0) = s * s * s;
    flat_basis(k, 1) = s * norm2(x);
    flat_basis(k, 2) = s * norm2(y);
    flat_basis(k, 3) = r;
    flat_vals(k, 0) = P_flat(s, y, x);

    const auto xi = Su3Element<Rational>::from_coordinates(p);
    const auto d = decompose(xi);
    xi_basis(k, 0) = d.s * d.s * d.s;
    xi_basis(k, 1) = d.s * norm2(d.x);
    xi_basis(k, 2) = d.s * norm2(d.y);
    xi_basis(k, 3) = R_display(xi);
    xi_vals(k, 0) = P_first_principles(xi);
  }
  PolynomialFit out;
  out.points = n;
  const auto f = fit(flat_basis, flat_vals);
  const auto g = fit(xi_basis, xi_vals);
  out.flat = f.c;
  out.flat_in_span = f.in_span;
  out.xi = g.c;
  out.xi_in_span = g.in_span;
  return out;
}

}  // namespace g2forge
