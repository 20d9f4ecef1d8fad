#include "g2forge/g2.hpp"

#include <gmpxx.h>

namespace g2forge {

Form<Rational> standard_phi() {
  using F = Form<Rational>;
  return F::from_indices({1, 2, 3}) + F::from_indices({1, 4, 5}) - F::from_indices({1, 6, 7}) +
         F::from_indices({2, 4, 6}) + F::from_indices({2, 5, 7}) + F::from_indices({3, 4, 7}) -
         F::from_indices({3, 5, 6});
}

Form<Rational> standard_psi() {
  using F = Form<Rational>;
  return F::from_indices({4, 5, 6, 7}) - F::from_indices({1, 2, 4, 7}) + F::from_indices({1, 2, 5, 6}) -
         F::from_indices({2, 3, 4, 5}) + F::from_indices({2, 3, 6, 7}) - F::from_indices({3, 1, 4, 6}) -
         F::from_indices({3, 1, 5, 7});
}

Matrix<Rational> lambda2_operator() {
  const Form<Rational> phi = standard_phi();
  const auto& basis = blades_of_grade(2);
  Matrix<Rational> l(basis.size(), basis.size());
  for (std::size_t c = 0; c < basis.size(); ++c) {
    const Form<Rational> image = hodge(wedge(phi, Form<Rational>::blade(basis[c].mask)));
    for (const auto& [m, v] : image.terms()) l(blade_position(Blade{m}), c) = v;
  }
  return l;
}

namespace detail {

namespace {

Matrix<Rational> columns_of(const std::vector<Form<Rational>>& forms, int grade) {
  const std::size_t n = blades_of_grade(grade).size();
  Matrix<Rational> m(n, forms.size());
  for (std::size_t c = 0; c < forms.size(); ++c) {
    const auto col = forms[c].to_column();
    for (std::size_t r = 0; r < n; ++r) m(r, c) = col(r, 0);
  }
  return m;
}

void check_projectors(const std::vector<Matrix<Rational>>& p, const std::vector<std::size_t>& ranks,
                      const char* what) {
  const std::size_t n = p.front().rows();
  Matrix<Rational> sum(n, n);
  for (std::size_t i = 0; i < p.size(); ++i) {
    if (!(p[i] * p[i] == p[i])) throw InternalInconsistency(std::string(what) + ": projector not idempotent");
    if (rank(p[i]) != ranks[i]) throw InternalInconsistency(std::string(what) + ": unexpected projector rank");
    for (std::size_t j = 0; j < p.size(); ++j)
      if (i != j && !(p[i] * p[j]).is_zero())
        throw InternalInconsistency(std::string(what) + ": projectors not mutually annihilating");
    sum += p[i];
  }
  if (!(sum == Matrix<Rational>::identity(n)))
    throw InternalInconsistency(std::string(what) + ": projectors do not sum to the identity");
}

Rational exact_sqrt(const Rational& r) {
  if (r.sign() < 0) throw IrrationalResult("negative discriminant");
  mpz_class n = r.raw().get_num();
  mpz_class d = r.raw().get_den();
  if (!mpz_perfect_square_p(n.get_mpz_t()) || !mpz_perfect_square_p(d.get_mpz_t()))
    throw IrrationalResult("irrational eigenvalue");
  mpz_class sn;
  mpz_class sd;
  mpz_sqrt(sn.get_mpz_t(), n.get_mpz_t());
  mpz_sqrt(sd.get_mpz_t(), d.get_mpz_t());
  return Rational(mpq_class(sn, sd));
}

ExactFrameData build() {
  ExactFrameData d;
  d.phi = standard_phi();
  d.psi = standard_psi();
  if (!(hodge(d.phi) == d.psi)) throw InternalInconsistency("displayed psi is not *phi");

  // Lambda^2: L^2 = b L + c id, solved from the entries, then eigenspaces.
  const Matrix<Rational> l = lambda2_operator();
  const std::size_t n2 = l.rows();
  const Matrix<Rational> l2 = l * l;
  const Matrix<Rational> id2 = Matrix<Rational>::identity(n2);
  Matrix<Rational> lhs(n2 * n2, 2);
  Matrix<Rational> rhs(n2 * n2, 1);
  for (std::size_t k = 0; k < n2 * n2; ++k) {
    lhs(k, 0) = l.entries()[k];
    lhs(k, 1) = id2.entries()[k];
    rhs(k, 0) = l2.entries()[k];
  }
  const auto coeffs = solve_exact(lhs, rhs);
  if (coeffs.kernel_dim != 0) throw InternalInconsistency("Lambda^2 operator is a multiple of the identity");
  const Rational b = coeffs.x(0, 0);
  const Rational c = coeffs.x(1, 0);
  const Rational root = exact_sqrt(b * b + Rational(4) * c);
  const Rational lam1 = (b + root) / Rational(2);
  const Rational lam2 = (b - root) / Rational(2);
  // Projector onto the lam1 eigenspace is (L - lam2) / (lam1 - lam2).
  Matrix<Rational> p1 = (l - id2 * lam2) * (Rational(1) / (lam1 - lam2));
  Matrix<Rational> p2 = id2 - p1;
  const std::size_t r1 = rank(p1);
  d.spectrum.min_poly_b = b;
  d.spectrum.min_poly_c = c;
  if (r1 == 14) {
    d.spectrum.eig14 = lam1;
    d.spectrum.eig7 = lam2;
    d.p2 = {p2, p1};
  } else {
    d.spectrum.eig14 = lam2;
    d.spectrum.eig7 = lam1;
    d.p2 = {p1, p2};
  }
  check_projectors({d.p2[0], d.p2[1]}, {7, 14}, "Lambda^2");

  const auto sym = sym2_0_basis<Rational>();
  std::vector<Form<Rational>> s3_7;
  std::vector<Form<Rational>> s3_27;
  std::vector<Form<Rational>> s4_7;
  std::vector<Form<Rational>> s4_27;
  for (int j = 1; j <= kDim; ++j) {
    s3_7.push_back(contract_basis(j, d.psi));
    s4_7.push_back(wedge(Form<Rational>::basis_vector(j), d.phi));
  }
  for (const auto& s : sym) {
    s3_27.push_back(star_action(s, d.phi));
    s4_27.push_back(star_action(s, d.psi));
  }
  d.p3 = {orthogonal_projector(columns_of({d.phi}, 3)), orthogonal_projector(columns_of(s3_7, 3)),
          orthogonal_projector(columns_of(s3_27, 3))};
  d.p4 = {orthogonal_projector(columns_of({d.psi}, 4)), orthogonal_projector(columns_of(s4_7, 4)),
          orthogonal_projector(columns_of(s4_27, 4))};
  check_projectors({d.p3[0], d.p3[1], d.p3[2]}, {1, 7, 27}, "Lambda^3");
  check_projectors({d.p4[0], d.p4[1], d.p4[2]}, {1, 7, 27}, "Lambda^4");

  const auto& b3 = blades_of_grade(3);
  const std::size_t n6 = blades_of_grade(6).size();
  d.inj = Matrix<Rational>(kDim * n6, b3.size());
  for (int j = 1; j <= kDim; ++j) {
    const Form<Rational> cj = contract_basis(j, d.psi);
    for (std::size_t col = 0; col < b3.size(); ++col) {
      const Form<Rational> w = wedge(Form<Rational>::blade(b3[col].mask), cj);
      for (const auto& [m, v] : w.terms()) d.inj((j - 1) * n6 + blade_position(Blade{m}), col) = v;
    }
  }
  return d;
}

}  // namespace

const ExactFrameData& exact_frame_data() {
  static const ExactFrameData data = build();
  return data;
}

}  // namespace detail

}  // namespace g2forge
