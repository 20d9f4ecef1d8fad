#include "suites.hpp"

#include <algorithm>
#include <chrono>
#include <cmath>
#include <complex>
#include <functional>
#include <map>
#include <set>
#include <sstream>
#include <stdexcept>

#include "g2forge/aw.hpp"
#include "g2forge/cubic.hpp"
#include "g2forge/exterior.hpp"
#include "g2forge/g2.hpp"
#include "g2forge/io.hpp"
#include "g2forge/pairing.hpp"
#include "g2forge/random.hpp"

namespace g2forge::cli {

using json = nlohmann::json;
using RForm = Form<Rational>;
using RMat = Matrix<Rational>;

bool SuiteReport::passed() const {
  return std::all_of(checks.begin(), checks.end(), [](const CheckResult& c) { return c.passed; });
}

namespace {

using Checks = std::vector<CheckResult>;

void add(Checks& out, std::string id, std::string anchor, bool ok, std::string expected, std::string actual) {
  out.push_back({std::move(id), ok, std::move(expected), std::move(actual), std::move(anchor)});
}

std::string count_str(std::size_t good, std::size_t total) {
  return std::to_string(good) + "/" + std::to_string(total);
}

/// Runs `body` on n instances and records how many hold.
void add_counted(Checks& out, std::string id, std::string anchor, std::size_t n,
                 const std::function<bool(std::size_t)>& body) {
  std::size_t good = 0;
  for (std::size_t k = 0; k < n; ++k)
    if (body(k)) ++good;
  add(out, std::move(id), std::move(anchor), good == n, count_str(n, n), count_str(good, n));
}

RForm phi() { return G2Frame<Rational>::instance().phi(); }
RForm psi() { return G2Frame<Rational>::instance().psi(); }

RForm random27_3(Sampler& rng) { return G2Frame<Rational>::instance().project3(rng.form(3)).a27; }
RForm random27_4(Sampler& rng) { return G2Frame<Rational>::instance().project4(rng.form(4)).a27; }

// ---------------------------------------------------------------- exterior

Checks exterior_checks(const RunOptions&) {
  Checks out;
  const RForm vol = RForm::volume();
  add(out, "exterior.hodge-phi", "*phi equals the displayed psi", hodge(phi()) == standard_psi(), "true",
      hodge(phi()) == standard_psi() ? "true" : "false");
  {
    const Rational a = inner(phi(), phi());
    const Rational b = inner(psi(), psi());
    add(out, "exterior.norms", "<phi,phi> = <psi,psi> = 7", a == Rational(7) && b == Rational(7), "7, 7",
        a.str() + ", " + b.str());
  }
  add(out, "exterior.phi-wedge-psi", "phi ^ psi = 7 vol", wedge(phi(), psi()) == vol * Rational(7), "7 vol",
      to_string(wedge(phi(), psi())));
  {
    const RForm c = contract_basis(1, phi());
    const RForm want = RForm::from_indices({2, 3}) + RForm::from_indices({4, 5}) - RForm::from_indices({6, 7});
    add(out, "exterior.contract-e1-phi", "e_1 _| phi = e23 + e45 - e67", c == want, to_string(want), to_string(c));
  }
  add_counted(out, "exterior.double-star", "** = id on every blade", 128, [](std::size_t m) {
    const RForm b = RForm::blade(static_cast<std::uint8_t>(m));
    return hodge(hodge(b)) == b;
  });
  {
    std::size_t good = 0, total = 0;
    for (int k = 0; k <= kDim; ++k)
      for (const Blade& a : blades_of_grade(k))
        for (const Blade& b : blades_of_grade(k)) {
          ++total;
          const RForm fa = RForm::blade(a.mask);
          const RForm fb = RForm::blade(b.mask);
          if (wedge(fa, hodge(fb)) == vol * inner(fa, fb)) ++good;
        }
    add(out, "exterior.wedge-hodge", "a ^ *b = <a,b> vol on full bases", good == total, count_str(total, total),
        count_str(good, total));
  }
  {
    std::size_t good = 0, total = 0;
    for (int i = 1; i <= kDim; ++i) {
      const RForm v = RForm::basis_vector(i);
      for (int k = 0; k < kDim; ++k)
        for (const Blade& a : blades_of_grade(k))
          for (const Blade& b : blades_of_grade(k + 1)) {
            ++total;
            const RForm fa = RForm::blade(a.mask);
            const RForm fb = RForm::blade(b.mask);
            if (inner(wedge(v, fa), fb) == inner(fa, contract(v, fb))) ++good;
          }
    }
    add(out, "exterior.contract-adjoint", "<v ^ a, b> = <a, v _| b> on full bases", good == total,
        count_str(total, total), count_str(good, total));
  }
  {
    std::size_t good = 0, total = 0;
    for (int i = 1; i <= kDim; ++i)
      for (unsigned ma = 1; ma < 128; ++ma)
        for (unsigned mb = 1; mb < 128; ++mb) {
          const RForm a = RForm::blade(static_cast<std::uint8_t>(ma));
          const RForm b = RForm::blade(static_cast<std::uint8_t>(mb));
          if (a.grade() + b.grade() > kDim) continue;
          ++total;
          const RForm lhs = contract_basis(i, wedge(a, b));
          RForm rhs = wedge(contract_basis(i, a), b);
          const RForm second = wedge(a, contract_basis(i, b));
          rhs = (a.grade() % 2 == 0) ? rhs + second : rhs - second;
          if (lhs == rhs) ++good;
        }
    add(out, "exterior.antiderivation", "v _| (a ^ b) = (v _| a) ^ b + (-1)^|a| a ^ (v _| b)", good == total,
        count_str(total, total), count_str(good, total));
  }
  {
    const RForm w = RForm::from_indices({4, 5}) - RForm::from_indices({6, 7});
    const bool ok = hodge_m4(RForm::from_indices({4, 5})) == RForm::from_indices({6, 7}) && hodge_m4(w) == -w &&
                    hodge_m4(RForm::from_indices({4, 5, 6, 7})) == RForm::scalar(Rational(1));
    add(out, "exterior.hodge-m4", "*4 e45 = e67, *4 omega_1 = -omega_1, *4 vol4 = 1", ok, "true",
        ok ? "true" : "false");
  }
  return out;
}

// ---------------------------------------------------------------- g2

Checks g2_checks(const RunOptions& opt) {
  Checks out;
  const auto& frame = G2Frame<Rational>::instance();
  const RForm vol = RForm::volume();
  Sampler rng(opt.seed, "g2");

  {
    const RMat g = metric_from_structure<Rational>();
    const bool ok = g == RMat::identity(kDim);
    add(out, "g2.metric-recovery", "(v _| phi) ^ (w _| phi) ^ phi = -6 g(v,w) vol", ok, "identity on 49 pairs",
        ok ? "identity on 49 pairs" : "mismatch");
  }
  {
    std::ostringstream os;
    os << rank(frame.proj2_7()) << "," << rank(frame.proj2_14()) << " | " << rank(frame.proj3()[0]) << ","
       << rank(frame.proj3()[1]) << "," << rank(frame.proj3()[2]) << " | " << rank(frame.proj4()[0]) << ","
       << rank(frame.proj4()[1]) << "," << rank(frame.proj4()[2]);
    bool ok = os.str() == "7,14 | 1,7,27 | 1,7,27";
    for (const auto* set : {&frame.proj3(), &frame.proj4()}) {
      RMat sum(35, 35);
      for (int i = 0; i < 3; ++i) {
        ok = ok && (*set)[i] * (*set)[i] == (*set)[i];
        for (int j = 0; j < 3; ++j)
          if (i != j) ok = ok && ((*set)[i] * (*set)[j]).is_zero();
        sum += (*set)[i];
      }
      ok = ok && sum == RMat::identity(35);
    }
    add(out, "g2.projectors", "idempotent, mutually annihilating, summing to id", ok, "7,14 | 1,7,27 | 1,7,27",
        os.str());
  }
  {
    const auto& sp = frame.spectrum();
    const bool ok = sp.eig14 == Rational(1) && sp.eig7 == Rational(-2);
    add(out, "g2.lambda2-spectrum", "eigenvalues of a -> *(phi ^ a) on Lambda^2_7, Lambda^2_14", ok,
        "7: -2, 14: 1", "7: " + sp.eig7.str() + ", 14: " + sp.eig14.str());
    add_counted(out, "g2.lambda2-14", "a14 ^ phi = *a14 for the 14-part of random 2-forms", opt.randomized,
                [&](std::size_t) {
                  const auto a = rng.form(2);
                  const auto s = frame.project2(a);
                  return wedge(s.a14, phi()) == hodge(s.a14) && s.a7 + s.a14 == a;
                });
    const bool seven = frame.project2(contract_basis(1, phi())).a14.is_zero();
    add(out, "g2.lambda2-7", "e_1 _| phi lies in Lambda^2_7", seven, "true", seven ? "true" : "false");
  }
  {
    RMat diag(kDim, kDim);
    diag(0, 0) = Rational(1);
    diag(6, 6) = Rational(-1);
    const RForm want = RForm::from_indices({1, 2, 3}) + RForm::from_indices({1, 4, 5}) -
                       RForm::from_indices({2, 5, 7}) - RForm::from_indices({3, 4, 7});
    const RForm f = star_action(endomorphism_of(contract_basis(1, phi())), psi());
    const bool ok = star_action(RMat::identity(kDim), phi()) == phi() * Rational(3) &&
                    f == wedge(RForm::basis_vector(1), phi()) * Rational(-3) && star_action(diag, phi()) == want;
    add(out, "g2.star-action", "id_* phi = 3 phi, (e_1 _| phi)_* psi = -3 e1 ^ phi, diag example", ok, "true",
        ok ? "true" : "false");
  }
  {
    std::size_t good = 0;
    for (const Blade& b : blades_of_grade(4)) {
      const RForm a = RForm::blade(b.mask);
      const RForm h = hat(a);
      for (int j = 1; j <= kDim; ++j)
        if ((wedge(h, contract_basis(j, psi())) + wedge(phi(), contract_basis(j, a))).is_zero()) ++good;
    }
    add(out, "g2.hat-defining", "hat(a) ^ (v _| psi) + phi ^ (v _| a) = 0", good == 245, "245/245",
        count_str(good, 245));
  }
  {
    std::size_t good = 0;
    const std::size_t n6 = blades_of_grade(6).size();
    for (const Blade& b : blades_of_grade(4)) {
      const RForm a = RForm::blade(b.mask);
      RMat rhs(kDim * n6, 1);
      for (int j = 1; j <= kDim; ++j) {
        const RForm w = wedge(phi(), contract_basis(j, a));
        for (const auto& [m, c] : w.terms()) rhs((j - 1) * n6 + blade_position(Blade{m}), 0) = -c;
      }
      const auto sol = solve_exact(frame.injectivity_matrix(), rhs);
      if (sol.kernel_dim == 0 && RForm::from_column(3, sol.x) == hat(a)) ++good;
    }
    add(out, "g2.hat-formula", "solution of the defining relation equals -*a1 + *a7 - *a27", good == 35,
        "35/35", count_str(good, 35));
    const bool ex = hat(psi()) == -phi() && hat(wedge(RForm::basis_vector(1), phi())) ==
                                                 hodge(wedge(RForm::basis_vector(1), phi()));
    add(out, "g2.hat-examples", "hat(psi) = -phi, hat(e1 ^ phi) = *(e1 ^ phi)", ex, "true", ex ? "true" : "false");
  }
  {
    auto basis = sym2_0_basis<Rational>();
    for (std::size_t k = 0; k < opt.randomized; ++k) basis.push_back(rng.symmetric(true));
    add_counted(out, "g2.idg21", "|i(S)|^2 = 2|S|^2 and *(S_* psi) = -S_* phi", basis.size(), [&](std::size_t k) {
      const RMat& s = basis[k];
      const RForm is = iso_i(s);
      return norm2(is) == Rational(2) * sym_inner(s, s) && hodge(iso_i_psi(s)) == -is;
    });
    add_counted(out, "g2.s-star", "i(S) ^ (v1 _| psi) ^ v2 = 2 g(S v1, v2) vol", opt.randomized, [&](std::size_t) {
      const RMat s = rng.symmetric(true);
      const RForm v1 = rng.vector();
      const RForm v2 = rng.vector();
      const RForm lhs = wedge(wedge(iso_i(s), contract(v1, psi())), v2);
      return lhs == vol * (Rational(2) * inner(apply(s, v1), v2));
    });
    add_counted(out, "g2.i-round-trip", "i^-1(i(S)) = S", opt.randomized,
                [&](std::size_t) {
                  const RMat s = rng.symmetric(true);
                  return iso_i_inv(iso_i(s)).matrix() == s;
                });
  }
  {
    const std::size_t r = rank(frame.injectivity_matrix());
    add(out, "g2.injective", "rank of b -> (b ^ (e_j _| psi))_j on Lambda^3", r == 35, "35", std::to_string(r));
  }
  {
    std::size_t good = 0;
    for (int i = 1; i <= kDim; ++i)
      for (int j = 1; j <= kDim; ++j) {
        const RForm w = wedge(wedge(phi(), contract_basis(i, psi())), RForm::basis_vector(j));
        if (w == vol * Rational(i == j ? -4 : 0)) ++good;
      }
    add(out, "g2.phi-psi-pairing", "phi ^ (v1 _| psi) ^ v2 = -4 g(v1,v2) vol", good == 49, "49/49",
        count_str(good, 49));
  }
  {
    bool ok = extract_v7(psi()).is_zero();
    for (int j = 1; j <= kDim; ++j) {
      ok = ok && wedge(phi(), contract_basis(j, psi())) == contract_basis(j, vol) * Rational(-4);
      ok = ok && extract_v7(wedge(RForm::basis_vector(j), phi())) == RForm::basis_vector(j);
    }
    add(out, "g2.extract-v7", "a ^ (v _| psi) = -4 g(V, v) vol; phi ^ (v _| psi) = -4 v _| vol", ok, "true",
        ok ? "true" : "false");
    add_counted(out, "g2.extract-v7-agrees", "V ^ phi equals the 7-part of project4", opt.randomized,
                [&](std::size_t) {
                  const RForm a = rng.form(4);
                  return wedge(extract_v7(a), phi()) == frame.project4(a).a7;
                });
  }
  {
    const auto& aw = AWFrame<Rational>::instance();
    const auto p = frame.project3(RForm::from_indices({1, 2, 3}));
    const bool ok = p.a1 == phi() * Rational(1, 7) && p.a7.is_zero() && p.a27 == aw.phi_tilde * Rational(-1, 7);
    add(out, "g2.project3-e123", "e123 = phi/7 + 0 - phi~/7", ok, "true", ok ? "true" : "false");
    const RMat want = aw.id3 * Rational(-2) + aw.id4 * Rational(3, 2);
    const bool inv = iso_i_inv(aw.phi_tilde).matrix() == want && iso_i(want) == aw.phi_tilde;
    add(out, "g2.i-phi-tilde", "i(-2 id3 + 3/2 id4) = phi~", inv, "true", inv ? "true" : "false");
  }
  {
    std::string component;
    try {
      (void)iso_i_inv(phi());
    } catch (const TypeError& e) {
      component = e.component();
    }
    add(out, "g2.type-error", "i^-1 rejects forms outside Lambda^3_27", component == "Lambda^3_1", "Lambda^3_1",
        component.empty() ? "no error" : component);
  }
  return out;
}

// ---------------------------------------------------------------- cubic

Checks cubic_checks(const RunOptions& opt) {
  Checks out;
  Sampler rng(opt.seed, "cubic");
  const std::size_t pairs = std::max<std::size_t>(1, opt.randomized / 2);

  add_counted(out, "cubic.q-trace", "tr q(a,a) = 4 |a|^2", opt.randomized, [&](std::size_t) {
    const RForm a = rng.form(4);
    return q_form(a, a).matrix().trace() == Rational(4) * norm2(a);
  });
  {
    const bool ok = q0_form(psi(), psi()).matrix().is_zero() &&
                    q_form(RForm::from_indices({1, 2, 3, 4}), RForm::from_indices({1, 2, 3, 4})).matrix() ==
                        block_identity<Rational>(0x0F);
    add(out, "cubic.q-examples", "q0(psi,psi) = 0, q(e1234,e1234) = diag(1,1,1,1,0,0,0)", ok, "true",
        ok ? "true" : "false");
  }
  {
    const RForm b = b2_full(psi(), psi());
    add(out, "cubic.b2-psi", "b2(psi, psi) = 2 phi", b == phi() * Rational(2), "2 phi", to_string(b));
  }
  add_counted(out, "cubic.b2-solve", "unique b2 solving the quadratic relation; symmetric", pairs, [&](std::size_t) {
    const RForm a1 = rng.form(4);
    const RForm a2 = rng.form(4);
    const RForm b = b2_full(a1, a2);
    bool ok = b == b2_full(a2, a1);
    for (int j = 1; j <= kDim && ok; ++j) ok = b2_residual(b, a1, a2, j).is_zero();
    return ok;
  });
  add_counted(out, "cubic.b2-polarization", "b2(a1,a2) = 1/2 (b2(a1+a2) - b2(a1) - b2(a2))", pairs,
              [&](std::size_t) {
                const RForm a1 = rng.form(4, 0.4);
                const RForm a2 = rng.form(4, 0.4);
                const RForm s = a1 + a2;
                return b2_full(a1, a2) ==
                       (b2_full(s, s) - b2_full(a1, a1) - b2_full(a2, a2)) * Rational(1, 2);
              });
  add_counted(out, "cubic.b2-vs-Q2", "b2(a,a) = -i(q0(a,a)) + 2/7 |a|^2 phi on Lambda^4_27", pairs,
              [&](std::size_t) {
                const RForm a = random27_4(rng);
                return b2_full(a, a) == Q2_27(a);
              });
  {
    RMat s(kDim, kDim);
    s(3, 3) = Rational(1);
    s(4, 4) = Rational(-1);
    const RForm a = iso_i_psi(s);
    const bool ok = b2_full(a, a) == Q2_27(a);
    add(out, "cubic.b2-vs-Q2-example", "(E44 - E55)_* psi", ok, "equal", ok ? "equal" : "different");
  }
  add_counted(out, "cubic.Q2-type", "Q2 has no Lambda^3_7 part and <Q2(a), phi> = 2|a|^2", opt.randomized,
              [&](std::size_t) {
                const RForm a = random27_4(rng);
                const RForm q = Q2_27(a);
                return G2Frame<Rational>::instance().project3(q).a7.is_zero() &&
                       inner(q, phi()) == Rational(2) * norm2(a);
              });
  add_counted(out, "cubic.Q-routes", "Q vol = Q2(a) ^ a equals -2 <q(a,a), i^-1(*a)>", opt.randomized,
              [&](std::size_t) {
                const auto v = Q_cubic_routes(random27_4(rng));
                return v.via_wedge == v.via_tensor;
              });
  add_counted(out, "cubic.P-vs-Q", "P(b) = 2 <p(b,b), i^-1(b)> = Q(*b)", pairs, [&](std::size_t) {
    const RForm b = random27_3(rng);
    return Rational(2) * P_unnormalized(b) == Q_cubic(hodge(b));
  });
  add_counted(out, "cubic.homogeneity", "Q(t a) = t^3 Q(a), P(t b) = t^3 P(b)", pairs, [&](std::size_t) {
    const Rational t = rng.nonzero_rational();
    const RForm a = random27_4(rng);
    const RForm b = random27_3(rng);
    return Q_cubic(a * t) == t * t * t * Q_cubic(a) && P_cubic(b * t) == t * t * t * P_cubic(b);
  });
  add_counted(out, "cubic.trilinear-symmetry", "trilinear form symmetric under all six permutations", pairs,
              [&](std::size_t) {
                const std::array<RMat, 3> s = {rng.symmetric(true), rng.symmetric(true), rng.symmetric(true)};
                std::array<int, 3> idx = {0, 1, 2};
                const Rational t0 = trilinear(s[0], s[1], s[2]);
                bool ok = true;
                while (std::next_permutation(idx.begin(), idx.end()))
                  ok = ok && trilinear(s[idx[0]], s[idx[1]], s[idx[2]]) == t0;
                return ok;
              });
  {
    std::set<std::string> ratios;
    std::set<std::string> ratios_b2;
    for (int k = 0; k < 20; ++k) {
      const RMat s = rng.symmetric(true);
      const Rational p = P_cubic(iso_i(s));
      if (p.is_zero()) continue;
      ratios.insert((trilinear(s, s, s) / p).str());
      ratios_b2.insert((trilinear_b2(s, s, s) / p).str());
    }
    auto join = [](const std::set<std::string>& v) {
      std::string s;
      for (const auto& x : v) s += (s.empty() ? "" : ",") + x;
      return s;
    };
    add(out, "cubic.trilinear-constant", "trilinear(S,S,S) / P(i(S)) is a single constant", ratios.size() == 1,
        "one value", join(ratios));
    add(out, "cubic.trilinear-b2-constant", "<b2(*b,*b), b> / P(b) is a single constant", ratios_b2.size() == 1,
        "one value", join(ratios_b2));
  }
  return out;
}

// ---------------------------------------------------------------- aw

void append_identities(Checks& out, const std::string& prefix, const IdentityReport& r) {
  for (const auto& c : r.checks)
    add(out, prefix + c.id, c.display, c.holds, "holds on " + std::to_string(c.points) + " points",
        c.holds ? "holds on " + std::to_string(c.points) + " points" : c.detail);
}

std::string coeff_str(const CubicCoefficients& c) {
  return c.s3.str() + " s^3 + " + c.sx2.str() + " s|x|^2 + " + c.sy2.str() + " s|y|^2 + " + c.R.str() + " R";
}

std::vector<std::string> differing_terms(const CubicCoefficients& a, const CubicCoefficients& b) {
  std::vector<std::string> d;
  if (!(a.s3 == b.s3)) d.push_back("s3");
  if (!(a.sx2 == b.sx2)) d.push_back("sx2");
  if (!(a.sy2 == b.sy2)) d.push_back("sy2");
  if (!(a.R == b.R)) d.push_back("R");
  return d;
}

const PolynomialFit& cached_fit() {
  static const PolynomialFit fit = fit_first_principles(0x5eed);
  return fit;
}

Checks aw_checks(const RunOptions& opt) {
  Checks out;
  Sampler rng(opt.seed, "aw");
  const auto& aw = AWFrame<Rational>::instance();
  append_identities(out, "aw.", verify_frame_relations());

  {
    const RForm c = C_of_x(RForm::basis_vector(4));
    const RForm want = RForm::from_indices({5, 6, 7}) * Rational(3) + RForm::from_indices({1, 2, 7}) +
                       RForm::from_indices({2, 3, 5}) + RForm::from_indices({3, 1, 6});
    add(out, "aw.C-e4", "C(e4) = 3 e567 + e127 + e235 + e316", c == want, to_string(want), to_string(c));
  }
  auto random_x = [&] {
    return RForm::vector({0, 0, 0, rng.rational(), rng.rational(), rng.rational(), rng.rational()});
  };
  auto random_y = [&] { return RForm::vector({rng.rational(), rng.rational(), rng.rational(), 0, 0, 0, 0}); };
  auto random_xi = [&] {
    std::array<Rational, 8> c;
    for (auto& t : c) t = rng.rational();
    return Su3Element<Rational>::from_coordinates(c);
  };
  add_counted(out, "aw.C-routes", "3 x _| vol4 + e12 ^ (x _| w3) + ... = x _| (4 vol4 - psi)", opt.randomized,
              [&](std::size_t) {
                const auto r = C_of_x_routes(random_x());
                return r.display == r.contraction;
              });
  add_counted(out, "aw.A-in-27", "A(xi) lies in Lambda^3_27", opt.randomized, [&](std::size_t) {
    try {
      (void)A_of_xi(lift<QuadExt>(random_xi()));
      return true;
    } catch (const TypeError&) {
      return false;
    }
  });
  {
    const auto xi = Su3Element<Rational>({1, 1, -2}, {0, 0, 0, 0, 0, 0});
    const auto y1 = Su3Element<Rational>({1, -1, 0}, {0, 0, 0, 0, 0, 0});
    const bool ok = A_of_xi(lift<QuadExt>(xi)) == lift<QuadExt>(aw.phi_tilde) &&
                    A_of_xi(lift<QuadExt>(y1)) == lift<QuadExt>(wedge(RForm::basis_vector(1), aw.Omega)) *
                                                      QuadExt(Rational(-5, 3)) &&
                    A_of_xi(lift<QuadExt>(Su3Element<Rational>())).is_zero() &&
                    A_flat(Rational(0), RForm::basis_vector(1), RForm(1)) ==
                        RForm::from_indices({1, 4, 5}) + RForm::from_indices({1, 6, 7});
    add(out, "aw.A-examples", "A(diag(i,i,-2i)) = phi~, A at s=0, y=e1 is -5/3 e1 ^ Omega, A(0) = 0", ok, "true",
        ok ? "true" : "false");
  }
  add_counted(out, "aw.R-routes", "g(Jx, I_y x) equals the coordinate display", opt.randomized, [&](std::size_t) {
    const auto r = R_routes(random_y(), random_x());
    return r.metric == r.display;
  });
  {
    auto coords = [](std::array<Rational, 8> c) { return R_display(Su3Element<Rational>::from_coordinates(c)); };
    const Rational a = coords({1, -1, 0, 0, 1, 0, 0, 0});
    const Rational b = coords({0, 0, 1, 0, 1, 0, 0, 1});
    add(out, "aw.R-examples", "R values at v1-v2=2,x3=1 and x1=x3=x6=1", a == Rational(1) && b == Rational(2),
        "1, 2", a.str() + ", " + b.str());
  }
  append_identities(out, "aw.", verify_lemma_Lp(opt.seed));
  append_identities(out, "aw.", verify_lemma_Lj(opt.seed));
  append_identities(out, "aw.", verify_intermediate_products(opt.seed));

  {
    const auto xi = Su3Element<Rational>({1, 1, -2}, {0, 0, 0, 0, 0, 0});
    const Rational p = P_first_principles(xi);
    add(out, "aw.P-diag", "<p(phi~,phi~), i^-1(phi~)> at diag(i,i,-2i)", p == Rational(-210), "-210", p.str());
    const Rational c = P_closed_form(xi);
    add(out, "aw.P-closed-diag", "closed form at diag(i,i,-2i)", c == Rational(210), "210", c.str());
  }
  add_counted(out, "aw.P-homogeneity", "P(t xi) = t^3 P(xi)", std::max<std::size_t>(1, opt.randomized / 10),
              [&](std::size_t) {
                const auto xi = random_xi();
                const Rational t = rng.nonzero_rational();
                return P_first_principles(xi * t) == t * t * t * P_first_principles(xi);
              });
  {
    const auto& fit = cached_fit();
    add(out, "aw.P-flat-basis", "first-principles flat P lies in span{s^3, s|x|^2, s|y|^2, R}", fit.flat_in_span,
        "in span", coeff_str(fit.flat));
    add(out, "aw.P-xi-basis", "first-principles P(xi) lies in span{s^3, s|x|^2, s|y|^2, R}", fit.xi_in_span,
        "in span", coeff_str(fit.xi));
    const CubicCoefficients reverted = revert_to_xi(fit.flat);
    add(out, "aw.P-revert", "reverting the flat fit reproduces the xi fit", reverted == fit.xi, coeff_str(fit.xi),
        coeff_str(reverted));
    const auto closed = closed_form_coefficients();
    const bool sign_known = fit.xi.s3 == closed.s3 || fit.xi.s3 == -closed.s3;
    add(out, "aw.P-s3-sign", "the s^3 coefficient matches one of the two displays", sign_known, "+-210",
        fit.xi.s3.str());
    CubicCoefficients corrected = closed;
    corrected.s3 = fit.xi.s3;
    const auto diff = differing_terms(corrected, fit.xi);
    std::string d;
    for (const auto& t : diff) d += (d.empty() ? "" : ",") + t;
    add(out, "aw.P-one-term-correction", "closed form with corrected s^3 sign equals first principles",
        diff.empty(), coeff_str(corrected), coeff_str(fit.xi) + " (differs in: " + d + ")");
  }
  {
    using cld = std::complex<long double>;
    add_counted(out, "aw.torus-invariance", "P(u xi u^-1) = P(xi) for diagonal u, approximate mode, 1e-9",
                std::max<std::size_t>(1, opt.randomized / 10), [&](std::size_t) {
                  const auto xi = random_xi();
                  std::array<long double, 3> th;
                  for (auto& t : th) t = static_cast<long double>(rng.integer(-1000, 1000)) / 250.0L;
                  auto rot = [&](int j, int k, long double re, long double im) {
                    const cld w = cld(re, im) * std::polar(1.0L, th[j] - th[k]);
                    return std::pair{ApproxScalar(w.real()), ApproxScalar(w.imag())};
                  };
                  const auto c = xi.coordinates();
                  auto ld = [](const Rational& r) { return r.to_long_double(); };
                  const auto [x1, x2] = rot(0, 1, ld(c[2]), ld(c[3]));
                  const auto [x3, x4] = rot(0, 2, ld(c[4]), ld(c[5]));
                  const auto [x5, x6] = rot(1, 2, ld(c[6]), ld(c[7]));
                  const auto rotated = Su3Element<ApproxScalar>::from_coordinates(
                      {ApproxScalar(ld(c[0])), ApproxScalar(ld(c[1])), x1, x2, x3, x4, x5, x6});
                  const ApproxScalar a = P_of_xi(rotated);
                  const ApproxScalar b = P_of_xi(lift<ApproxScalar>(xi));
                  const long double scale = 1.0L + std::fabs(b.value());
                  return std::fabs(a.value() - b.value()) <= 1e-9L * scale;
                });
  }
  return out;
}

// ---------------------------------------------------------------- pairing

json coeff_json(const CubicCoefficients& c) {
  return {{"s3", io::to_json(c.s3)}, {"sx2", io::to_json(c.sx2)}, {"sy2", io::to_json(c.sy2)}, {"R", io::to_json(c.R)}};
}

Checks pairing_checks(const RunOptions& opt, json& report) {
  Checks out;
  Sampler rng(opt.seed, "pairing");
  {
    const auto& g = gram_matrix();
    bool ok = g.is_symmetric() && g(0, 0) == Rational(4, 3) && g(0, 1) == Rational(-2, 3) &&
              g(3, 6) == Rational(2) && g(3, 7).is_zero() && g(3, 3).is_zero();
    RMat vb(3, 3);
    for (std::size_t a = 0; a < 3; ++a)
      for (std::size_t b = 0; b < 3; ++b) vb(a, b) = g(a, b);
    const std::size_t r = rank(vb);
    ok = ok && r == 2;
    add(out, "pairing.gram", "Gram data on the nine letters; v-block of rank 2", ok, "rank 2",
        "rank " + std::to_string(r));
  }
  {
    const RMat m = RMat(2, 2, {1, 2, 3, 4});
    RMat f(3, 3);
    for (std::size_t i = 0; i < 3; ++i)
      for (std::size_t j = 0; j < 3; ++j) f(i, j) = Rational(4, 3);
    const bool ok = permanent(RMat(1, 1, {Rational(5)})) == Rational(5) && permanent(m) == Rational(10) &&
                    permanent(f) == Rational(128, 9);
    add(out, "pairing.permanent-examples", "perm [[1,2],[3,4]] = 10, perm of 3x3 4/3 = 128/9", ok, "true",
        ok ? "true" : "false");
  }
  add_counted(out, "pairing.permanent-ryser", "Ryser agrees with the naive expansion for k <= 5", 5 * 10,
              [&](std::size_t k) {
                const std::size_t n = k / 10 + 1;
                RMat m(n, n);
                for (std::size_t i = 0; i < n; ++i)
                  for (std::size_t j = 0; j < n; ++j) m(i, j) = rng.rational();
                return permanent_ryser(m) == permanent_naive(m);
              });
  {
    const MultiPoly v1 = MultiPoly::variable(0);
    const GaussRational v = sym_inner_poly(v1 * v1 * v1, v1 * v1 * v1);
    add(out, "pairing.v1-cubed", "<v1^3, v1^3>", v == GaussRational(Rational(128, 9)), "128/9", v.str());
  }
  const PairingComponents comp = pairing_components();
  {
    const bool ok = comp.s3 == Rational(-4, 9) && comp.sx2 == Rational(-8, 3) && comp.sy2 == Rational(4) &&
                    comp.R == Rational(24);
    add(out, "pairing.components", "<s^3,idet>, <s|x|^2,idet>, <s|y|^2,idet>, <R,idet>", ok, "-4/9, -8/3, 4, 24",
        comp.s3.str() + ", " + comp.sx2.str() + ", " + comp.sy2.str() + ", " + comp.R.str());
  }
  const Rational closed = final_pairing(PSource::closed_form);
  {
    const Rational four = assemble(closed_form_coefficients(), comp);
    add(out, "pairing.closed-form", "<P, i det> from the closed form, monomial by monomial and four-term",
        closed == Rational(100, 3) && four == closed, "100/3", closed.str() + " (four-term " + four.str() + ")");
  }
  const MultiPoly idet = idet_poly();
  const Rational self = sym_inner_poly(idet, idet).re();
  add(out, "pairing.idet-self", "<i det, i det> is a positive rational", self.sign() > 0, "> 0", self.str());
  const IdetComparison cmp = compare_idet();
  {
    const bool ok = is_real_valued(cmp.expansion);
    add(out, "pairing.idet-real", "the determinant expansion of i det is real on su(3)", ok, "real",
        ok ? "real" : "not real");
    auto xi = Su3Element<Rational>({1, 1, -2}, {0, 0, 0, 0, 0, 0});
    std::array<GaussRational, 9> pt = {Rational(1), Rational(1), Rational(-2), 0, 0, 0, 0, 0, 0};
    const GaussRational d = idet.evaluate(pt);
    std::array<GaussRational, 9> pz = {0, 0, 0, 0, 0, GaussRational(1), 0, 0, GaussRational(1)};
    const GaussRational dz = idet.evaluate(pz);
    (void)xi;
    add(out, "pairing.idet-values", "i det at diag(i,i,-2i) and at z3 = 1", d == GaussRational(-2) && dz.is_zero(),
        "-2, 0", d.str() + ", " + dz.str());
  }
  const MultiPoly pfp = P_poly(PSource::first_principles);
  const MultiPoly pcl = P_poly(PSource::closed_form);
  {
    bool zsupport = true;
    for (const auto* p : {&pfp, &pcl})
      for (const auto& [m, c] : p->terms()) {
        const int vdeg = m[0] + m[1] + m[2];
        if (vdeg != 0) continue;
        const bool z123 = m[3] == 1 && m[4] == 1 && m[5] == 1;
        const bool zb123 = m[6] == 1 && m[7] == 1 && m[8] == 1;
        zsupport = zsupport && (z123 || zb123);
      }
    const bool ok = is_real_valued(pfp) && is_real_valued(pcl) && zsupport;
    add(out, "pairing.P-structure", "P is real and its pure-z part is supported on z1z2z3, zb1zb2zb3", ok, "true",
        ok ? "true" : "false");
  }
  const Rational fp = final_pairing(PSource::first_principles);
  add(out, "pairing.first-principles-nonzero", "<P, i det> from first principles is a nonzero rational",
      !fp.is_zero(), "nonzero", fp.str());
  const auto& fit = cached_fit();
  const auto closed_c = closed_form_coefficients();
  std::string resolution = "neither";
  if (fit.xi.s3 == closed_c.s3) resolution = "final-display";
  else if (fit.xi.s3 == intermediate_flat_coefficients().s3) resolution = "intermediate-display";
  add(out, "pairing.sign-resolution", "which display's s^3 sign first principles reproduces",
      resolution != "neither", "final-display or intermediate-display", resolution);
  {
    const Rational fp_assembled = assemble(fit.xi, comp);
    add(out, "pairing.first-principles-assembled", "monomial pairing equals the four-term assembly of the fit",
        fp_assembled == fp, fp.str(), fp_assembled.str());
    CubicCoefficients corrected = closed_c;
    corrected.s3 = fit.xi.s3;
    const Rational after = assemble(corrected, comp);
    add(out, "pairing.first-principles-after-correction",
        "first-principles pairing equals the closed-form pairing after correcting the s^3 sign", after == fp,
        after.str(), fp.str());
  }

  // Monte-Carlo.
  json mc = json::object();
  mc["samples"] = opt.samples;
  mc["seed"] = opt.seed;
  mc["source"] = to_string(PSource::first_principles);
  json elements = json::array();
  const auto tests = haar_test_elements();
  for (std::size_t k = 0; k < tests.size(); ++k) {
    const HaarReport r = haar_average_check(tests[k], opt.samples, opt.seed + k, PSource::first_principles, opt.workers);
    const double se_rel = r.expected != 0 ? r.std_error / std::abs(r.expected) : r.std_error;
    const double tol = std::max(0.01, 4.0 * se_rel);
    std::ostringstream exp, act;
    exp.precision(8);
    act.precision(8);
    exp << r.expected << " within " << tol * 100 << "%";
    act << r.mean << " (rel. error " << r.relative_error * 100 << "%)";
    add(out, "pairing.montecarlo." + std::to_string(k + 1),
        "Haar average of P(g xi g^-1) equals (<P,idet>/<idet,idet>) idet(xi)", r.relative_error <= tol, exp.str(),
        act.str());
    elements.push_back({{"xi", io::to_json(tests[k])},
                        {"mean", r.mean},
                        {"std_error", r.std_error},
                        {"expected", r.expected},
                        {"relative_error", r.relative_error}});
  }
  mc["elements"] = elements;
  if (opt.samples >= 16 * 4096) {
    const HaarReport big = haar_average_check(tests[0], opt.samples, opt.seed, PSource::first_principles, opt.workers);
    const HaarReport small =
        haar_average_check(tests[0], opt.samples / 16, opt.seed, PSource::first_principles, opt.workers);
    const double ratio = small.std_error / big.std_error;
    std::ostringstream act;
    act.precision(4);
    act << ratio;
    add(out, "pairing.montecarlo-scaling", "standard error scales as samples^(-1/2)", ratio > 3.0 && ratio < 5.0,
        "about 4 for a 16x sample ratio", act.str());
    mc["stderr_ratio_16x"] = ratio;
  }
  {
    const std::size_t n = std::max<std::size_t>(opt.samples / 10, 4096 * 3);
    const HaarReport a = haar_average_check(tests[0], n, opt.seed, PSource::first_principles, 1);
    const HaarReport b = haar_average_check(tests[0], n, opt.seed, PSource::first_principles, 3);
    add(out, "pairing.montecarlo-workers", "Monte-Carlo result independent of worker count",
        a.mean == b.mean && a.std_error == b.std_error, "bit-identical", a.mean == b.mean ? "bit-identical" : "differs");
  }

  report = {{"pairing", io::to_json(closed)},
            {"pairing_first_principles", io::to_json(fp)},
            {"components", {{"s3", io::to_json(comp.s3)}, {"sx2", io::to_json(comp.sx2)},
                            {"sy2", io::to_json(comp.sy2)}, {"R", io::to_json(comp.R)}}},
            {"sign_resolution", resolution},
            {"coefficients",
             {{"closed_form", coeff_json(closed_c)},
              {"first_principles", coeff_json(fit.xi)},
              {"first_principles_flat", coeff_json(fit.flat)},
              {"differing_after_s3_correction", [&] {
                 CubicCoefficients c = closed_c;
                 c.s3 = fit.xi.s3;
                 return differing_terms(c, fit.xi);
               }()}}},
            {"idet",
             {{"self_pairing", io::to_json(self)},
              {"reading", cmp.reading},
              {"literal_agrees", cmp.agree},
              {"literal_minus_expansion", to_string(cmp.difference)}}},
            {"montecarlo", mc}};
  return out;
}

}  // namespace

const std::vector<std::string>& suite_names() {
  static const std::vector<std::string> names = {"all", "exterior", "g2", "cubic", "aw", "pairing"};
  return names;
}

bool is_suite(const std::string& name) {
  const auto& n = suite_names();
  return std::find(n.begin(), n.end(), name) != n.end();
}

SuiteReport run_suite(const std::string& name, const RunOptions& options) {
  if (!is_suite(name)) throw std::invalid_argument("unknown suite '" + name + "'");
  const auto start = std::chrono::steady_clock::now();
  SuiteReport r;
  r.suite = name;
  auto want = [&](const char* s) { return name == "all" || name == s; };
  auto append = [&](Checks c) { r.checks.insert(r.checks.end(), c.begin(), c.end()); };
  if (want("exterior")) append(exterior_checks(options));
  if (want("g2")) append(g2_checks(options));
  if (want("cubic")) append(cubic_checks(options));
  if (want("aw")) append(aw_checks(options));
  if (want("pairing")) append(pairing_checks(options, r.pairing));
  std::stable_sort(r.checks.begin(), r.checks.end(),
                   [](const CheckResult& a, const CheckResult& b) { return a.id < b.id; });
  r.wall_seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
  return r;
}

json to_json(const SuiteReport& r) {
  json checks = json::array();
  std::size_t failed = 0;
  for (const auto& c : r.checks) {
    if (!c.passed) ++failed;
    checks.push_back({{"id", c.id},
                      {"status", c.passed ? "pass" : "fail"},
                      {"expected", c.expected},
                      {"actual", c.actual},
                      {"anchor", c.anchor}});
  }
  json j = {{"suite", r.suite},
            {"passed", r.passed()},
            {"total", r.checks.size()},
            {"failed", failed},
            {"checks", checks}};
  if (!r.pairing.is_null())
    for (const auto& [key, value] : r.pairing.items()) j[key] = value;
  if (r.wall_seconds) j["wall_seconds"] = *r.wall_seconds;
  return j;
}

std::string to_text(const SuiteReport& r) {
  std::ostringstream os;
  std::size_t failed = 0;
  for (const auto& c : r.checks) {
    if (!c.passed) ++failed;
    os << (c.passed ? "PASS " : "FAIL ") << c.id << "  [" << c.anchor << "]\n";
    if (c.passed && c.actual != c.expected) os << "     value: " << c.actual << "\n";
    if (!c.passed) os << "     expected: " << c.expected << "\n     actual:   " << c.actual << "\n";
  }
  if (!r.pairing.is_null()) {
    const auto& p = r.pairing;
    os << "pairing (closed form): " << p["pairing"]["num"].get<std::string>() << "/"
       << p["pairing"]["den"].get<std::string>() << "\n";
    os << "pairing (first principles): " << p["pairing_first_principles"]["num"].get<std::string>() << "/"
       << p["pairing_first_principles"]["den"].get<std::string>() << "\n";
    os << "sign resolution: " << p["sign_resolution"].get<std::string>() << "\n";
  }
  os << r.suite << ": " << (r.checks.size() - failed) << "/" << r.checks.size() << " checks passed";
  if (r.wall_seconds) os << " in " << *r.wall_seconds << " s";
  os << "\n";
  return os.str();
}

}  // namespace g2forge::cli
