#include "g2spin/g2.hpp"

#include <sstream>

namespace g2spin {

namespace {

constexpr int kDim = 7;

Multivector e(std::initializer_list<int> idx) { return Multivector::blade(idx, kDim); }

std::string describe_phi_vector(const ExactVector<Rational>& v) {
  std::ostringstream out;
  out << "(eta, sigma, c) = " << format_vector(v);
  return out.str();
}

}  // namespace

CoframeData sasakian_coframe() {
  CoframeData c{e({1}), e({2}), e({3}), Multivector(kDim), Multivector(kDim), Multivector(kDim)};
  c.d_eta1 = Rational(-2) * (e({2, 3}) + e({4, 5}) + e({6, 7}));
  c.d_eta2 = Rational(2) * (e({1, 3}) - e({4, 6}) + e({5, 7}));
  c.d_eta3 = Rational(-2) * (e({1, 2}) + e({4, 7}) + e({5, 6}));
  return c;
}

Multivector expand_omega3(const CoframeData& c) {
  Multivector w = wedge(c.eta1, c.d_eta1) - wedge(c.eta2, c.d_eta2) - wedge(c.eta3, c.d_eta3);
  return Rational(1, 2) * w;
}

Multivector expand_star_omega3(const CoframeData& c) {
  Multivector w = wedge(c.d_eta1, c.d_eta1) - wedge(c.d_eta2, c.d_eta2) - wedge(c.d_eta3, c.d_eta3);
  return Rational(-1, 8) * w;
}

G2Structure::G2Structure(Multivector omega3, Multivector star_omega3, Spinor psi, CliffordRepresentation rep,
                         std::vector<std::string> notes)
    : omega3_(std::move(omega3)),
      star_omega3_(std::move(star_omega3)),
      psi_(std::move(psi)),
      rep_(std::move(rep)),
      notes_(std::move(notes)) {}

Multivector G2Structure::L(const Multivector& sigma) const {
  if (!sigma.is_zero() && sigma.homogeneous_grade() != 2) throw GradeError("L needs a 2-form");
  return -hodge(wedge(sigma, star_omega3_));
}

Matrix<Rational> G2Structure::cross_operator(const Multivector& x) const {
  if (!x.is_zero() && x.homogeneous_grade() != 1) throw GradeError("cross_operator needs a 1-form");
  Matrix<Rational> m(kDim, kDim);
  for (int j = 1; j <= kDim; ++j) {
    const Multivector image = L(wedge(x, e({j})));
    for (int i = 1; i <= kDim; ++i) m(i - 1, j - 1) = image.coefficient(BladeMask{1} << (i - 1));
  }
  return m;
}

Spinor G2Structure::phi(const Multivector& eta, const Multivector& sigma, const Rational& c) const {
  return rep_.action(eta + sigma + Multivector::scalar(c, kDim)).apply(psi_);
}

std::vector<Multivector> two_form_basis() {
  std::vector<Multivector> basis;
  for (int j = 1; j <= kDim; ++j)
    for (int k = j + 1; k <= kDim; ++k) basis.push_back(e({j, k}));
  return basis;
}

Matrix<Rational> G2Structure::phi_matrix() const {
  std::vector<ExactVector<Rational>> columns;
  for (int i = 1; i <= kDim; ++i) columns.push_back(rep_.gamma(i).apply(psi_).to_vector());
  for (const auto& s : two_form_basis()) columns.push_back(rep_.action(s).apply(psi_).to_vector());
  columns.push_back(psi_.to_vector());
  return Matrix<Rational>::from_columns(columns, kSpinDim);
}

Lemma1Report G2Structure::lemma1_check() const {
  const Matrix<Rational> phi_m = phi_matrix();
  const auto basis2 = two_form_basis();
  Lemma1Report report;
  const auto kernel = exact_kernel(phi_m);
  report.rank = phi_m.cols() - kernel.size();
  report.kernel_dim = kernel.size();

  report.kernel_in_graph = true;
  for (const auto& v : kernel) {
    Multivector eta(kDim), sigma(kDim);
    for (int i = 0; i < kDim; ++i) eta.add_term(BladeMask{1} << i, v[i]);
    for (std::size_t p = 0; p < basis2.size(); ++p) sigma += v[kDim + p] * basis2[p];
    if (sgn(v.back()) != 0 || !(L(sigma) == eta)) {
      report.kernel_in_graph = false;
      report.witness = "kernel vector outside the graph of L: " + describe_phi_vector(v);
      break;
    }
  }

  report.graph_in_kernel = true;
  for (const auto& s : basis2) {
    if (!phi(L(s), s, 0).is_zero()) {
      report.graph_in_kernel = false;
      if (!report.witness) report.witness = "(L(sigma), sigma, 0) not annihilated for sigma = " + s.to_string();
      break;
    }
  }
  return report;
}

G2Structure build_standard_structure(const CliffordRepresentation& rep) {
  const CoframeData coframe = sasakian_coframe();
  Multivector omega = expand_omega3(coframe);
  Multivector star = hodge(omega);
  std::vector<std::string> notes;
  for (int sign : {rep.sign(), -rep.sign()}) {
    CliffordRepresentation candidate = rep.with_sign(sign);
    const auto space = eigenspace(candidate.action(omega), Rational(-7));
    if (space.size() != 1) {
      notes.push_back("representation sign " + std::to_string(sign) + ": -7 eigenspace of rho(omega) has dimension " +
                      std::to_string(space.size()) + ", negating generators");
      continue;
    }
    Spinor psi = normalize_generator(space.front());
    notes.push_back("representation sign " + std::to_string(sign) + " gives omega . psi = -7 psi");
    return G2Structure(std::move(omega), std::move(star), std::move(psi), std::move(candidate), std::move(notes));
  }
  throw std::logic_error("rho(omega) has no one-dimensional -7 eigenspace in either representation");
}

const G2Structure& standard_structure() {
  static const G2Structure g2 = build_standard_structure();
  return g2;
}

std::optional<Rational> eigen_factor(const G2Structure& g2, const Multivector& eta, const Multivector& d_eta) {
  const Multivector image = g2.L(d_eta);
  const Rational norm = inner(eta, eta);
  if (sgn(norm) == 0) throw std::invalid_argument("eigen_factor needs a nonzero 1-form");
  const Rational c = inner(image, eta) / norm;
  if (!(image == c * eta)) return std::nullopt;
  return c;
}

SasakianRelations verify_sasakian_relations(const G2Structure& g2) {
  const CoframeData c = sasakian_coframe();
  auto factor = [&](const Multivector& eta, const Multivector& d_eta) {
    auto f = eigen_factor(g2, eta, d_eta);
    if (!f) throw std::logic_error("L(d eta) is not proportional to eta for eta = " + eta.to_string());
    return *f;
  };
  SasakianRelations r{factor(c.eta1, c.d_eta1), factor(c.eta2, c.d_eta2), factor(c.eta3, c.d_eta3)};
  r.star_identity = hodge(g2.omega3()) == expand_star_omega3(c);
  r.omega_unit_coefficients = g2.omega3().nonzero_terms() == 7;
  for (const auto& [mask, coeff] : g2.omega3().terms())
    if (abs(coeff) != 1) r.omega_unit_coefficients = false;
  return r;
}

}  // namespace g2spin
