#include "g2spin/torus.hpp"

#include <algorithm>
#include <functional>
#include <sstream>

#include "g2spin/spectral.hpp"

namespace g2spin {

namespace {

using QVector = ExactVector<Quadratic>;

// gamma_i psi and gamma_i gamma_j psi (i < j), zero-based indices.
struct SpinorTables {
  Spinor psi;
  std::array<Spinor, 7> one;
  std::array<std::array<Spinor, 7>, 7> two;
};

SpinorTables make_tables(const G2Structure& g2) {
  SpinorTables t;
  t.psi = g2.psi();
  const auto& rep = g2.representation();
  for (int i = 0; i < 7; ++i) {
    t.one[i] = rep.gamma(i + 1).apply(t.psi);
    for (int j = i + 1; j < 7; ++j) t.two[i][j] = rep.blade((BladeMask{1} << i) | (BladeMask{1} << j)).apply(t.psi);
  }
  return t;
}

QVector zero_vector(std::size_t n) { return QVector(n, Quadratic(0L)); }

void add_scaled(QVector& acc, std::size_t offset, const Quadratic& s, const Spinor& v) {
  if (s.is_zero()) return;
  for (int r = 0; r < kSpinDim; ++r)
    acc[offset + r].add_mul(s, v[r]);
}

// rho(eta) psi for a 1-form with quadratic coefficients.
void add_one_form(QVector& acc, std::size_t offset, const SpinorTables& t, const QVector& eta) {
  for (int i = 0; i < 7; ++i) add_scaled(acc, offset, eta[i], t.one[i]);
}

// W_j = sum_{i != j} k_i gamma_i gamma_j psi, so that rho(k ^ eta) psi = sum_j eta_j W_j.
std::array<Spinor, 7> k_wedge_table(const SpinorTables& t, const FourierMode& mode) {
  std::array<Spinor, 7> w;
  for (int j = 0; j < 7; ++j)
    for (int i = 0; i < 7; ++i) {
      if (i == j || mode.k[i] == 0) continue;
      // gamma_i gamma_j psi = -gamma_j gamma_i psi for i != j
      const Spinor& s = i < j ? t.two[i][j] : t.two[j][i];
      w[j] += Rational(i < j ? mode.k[i] : -mode.k[i]) * s;
    }
  return w;
}

void add_k_wedge(QVector& acc, std::size_t offset, const std::array<Spinor, 7>& w, const QVector& eta,
                 const Quadratic& scale) {
  for (int j = 0; j < 7; ++j) {
    if (eta[j].is_zero()) continue;
    add_scaled(acc, offset, scale * eta[j], w[j]);
  }
}

QVector mat_apply(const Matrix<Rational>& m, const QVector& v) {
  QVector out = zero_vector(m.rows());
  for (std::size_t r = 0; r < m.rows(); ++r)
    for (std::size_t c = 0; c < m.cols(); ++c)
      out[r].add_mul(v[c], m(r, c));
  return out;
}

bool is_eigenvector(const Matrix<Rational>& dirac, const QVector& v, const Quadratic& m) {
  const QVector image = mat_apply(dirac, v);
  for (std::size_t i = 0; i < v.size(); ++i)
    if (!(image[i] == m * v[i])) return false;
  return true;
}

Quadratic to_quadratic(const ExactEigenvalue& x) {
  if (x.s() == 0) return Quadratic(x.p());
  // sqrt(a/b) = sqrt(a b) / b
  const mpz_class num = x.q().get_num();
  const mpz_class den = x.q().get_den();
  const mpz_class product = num * den;
  if (!product.fits_slong_p()) throw std::overflow_error("radicand too large for a quadratic field element");
  return Quadratic(x.p()) + Quadratic::sqrt_of(product.get_si(), Rational(x.s(), 1) / Rational(den));
}

ExactEigenvalue frequency_value(const FourierMode& mode, int sign) {
  return ExactEigenvalue(0, sign, Rational(static_cast<long>(mode.norm_sq)));
}

void add_entry(SpectrumMultiset& s, const ExactEigenvalue& value, int multiplicity) {
  if (multiplicity == 0) return;
  for (auto& e : s)
    if (e.value == value) {
      e.multiplicity += multiplicity;
      return;
    }
  s.push_back({value, multiplicity});
  std::sort(s.begin(), s.end(), [](const SpectrumEntry& a, const SpectrumEntry& b) { return a.value < b.value; });
}

void require_nonzero(const FourierMode& mode) {
  if (mode.is_zero()) throw std::invalid_argument("the zero mode is described by kernel_description");
}

Matrix<Rational> rho_k(const FourierMode& mode, const G2Structure& g2) {
  Matrix<Rational> r(kSpinDim, kSpinDim);
  for (int i = 0; i < 7; ++i) {
    if (mode.k[i] == 0) continue;
    const auto& g = g2.representation().gamma(i + 1);
    for (int row = 0; row < kSpinDim; ++row)
      for (int col = 0; col < kSpinDim; ++col)
        if (sgn(g(row, col)) != 0) r(row, col) += mode.k[i] * g(row, col);
  }
  return r;
}

FunctionPrediction functions_impl(const FourierMode& mode, const Matrix<Rational>& dirac, const SpinorTables& t,
                                  const G2Structure& g2) {
  FunctionPrediction out;
  const Matrix<Rational> rho = rho_k(mode, g2);
  const QVector psi_q = [&] {
    QVector v = zero_vector(kSpinDim);
    for (int r = 0; r < kSpinDim; ++r) v[r] = Quadratic(t.psi[r]);
    return v;
  }();
  const QVector rho_psi = mat_apply(rho, psi_q);
  for (int sign : {1, -1}) {
    const ExactEigenvalue m = frequency_value(mode, sign);
    const Quadratic coeff = to_quadratic(eigenspinor_coefficient(7, Rational(0), m));
    const Quadratic mq = to_quadratic(m);
    // f = cos(k.x): df = -sin(k.x) k;  f = sin(k.x): df = cos(k.x) k.
    for (const char* origin : {"cos", "sin"}) {
      QVector v = zero_vector(kModeDim);
      const bool is_cos = std::string(origin) == "cos";
      for (int r = 0; r < kSpinDim; ++r) {
        if (is_cos) {
          v[r] = psi_q[r];
          v[kSpinDim + r] = -(coeff * rho_psi[r]);
        } else {
          v[r] = coeff * rho_psi[r];
          v[kSpinDim + r] = psi_q[r];
        }
      }
      if (!is_eigenvector(dirac, v, mq)) {
        out.failures.push_back(std::string("function eigenspinor (") + origin + ", m = " + m.to_string() +
                               ") is not an eigenvector");
      }
      out.eigenspinors.push_back({m, origin, std::move(v)});
    }
    const Rational lambda0 = function_eigenvalue_relation(7, Rational(0), m);
    if (lambda0 != Rational(static_cast<long>(mode.norm_sq))) {
      out.failures.push_back("(m - 5a)(7a + m) != |k|^2 for m = " + m.to_string());
    }
    add_entry(out.spectrum, m, 2);
  }
  return out;
}

// Pairs with L(d eta) = c eta satisfy c eta_c = Lambda eta_s and c eta_s = -Lambda eta_c.
// Eliminating eta_s = -Lambda eta_c / c leaves (|k|^2 + Lambda^2) eta_c = 0 with k . eta_c = 0.
Matrix<Rational> reduced_form_system(const FourierMode& mode, const Matrix<Rational>& lambda) {
  Matrix<Rational> s(8, 7);
  const Matrix<Rational> square = lambda * lambda;
  for (int i = 0; i < 7; ++i) {
    for (int j = 0; j < 7; ++j) s(i, j) = square(i, j);
    s(i, i) += Rational(static_cast<long>(mode.norm_sq));
    s(7, i) = mode.k[i];
  }
  return s;
}

QVector apply_scaled(const Matrix<Rational>& m, const QVector& v, const Quadratic& scale) {
  QVector out = mat_apply(m, v);
  for (auto& x : out) x *= scale;
  return out;
}

FormPrediction forms_impl(const FourierMode& mode, const Matrix<Rational>& dirac, const SpinorTables& t,
                          const G2Structure& g2) {
  FormPrediction out;
  const Matrix<Rational> lambda = g2.cross_operator(mode.one_form());
  const auto reduced = exact_kernel(reduced_form_system(mode, lambda));
  const auto w = k_wedge_table(t, mode);
  const Quadratic norm(Rational(static_cast<long>(mode.norm_sq)));
  for (int sign : {1, -1}) {
    const ExactEigenvalue c_value = frequency_value(mode, sign);
    const Quadratic c = to_quadratic(c_value);
    const ExactEigenvalue m = -c_value;  // (5a - m) eta = L(d eta) at a = 0
    const Quadratic mq = to_quadratic(m);
    const Quadratic minus_inv_c = -(c / norm);
    for (const auto& x : reduced) {
      FormEigenvector form{c, QVector(x.begin(), x.end()), {}};
      form.eta_s = apply_scaled(lambda, form.eta_c, minus_inv_c);
      const QVector lhs = mat_apply(lambda, form.eta_s);
      const QVector rhs = apply_scaled(lambda, form.eta_c, Quadratic(-1L));
      for (int i = 0; i < 7; ++i) {
        if (!(lhs[i] == c * form.eta_c[i]) || !(rhs[i] == c * form.eta_s[i])) {
          out.failures.push_back("coupled form equation fails for c = " + c_value.to_string());
          break;
        }
      }
      QVector v = zero_vector(kModeDim);
      add_one_form(v, 0, t, form.eta_c);
      add_one_form(v, kSpinDim, t, form.eta_s);
      if (!is_eigenvector(dirac, v, mq)) {
        out.failures.push_back("form eigenspinor with c = " + c_value.to_string() + " is not an eigenvector for m = " +
                               m.to_string());
      }
      // (c eta + d eta) . psi = 0; d eta = cos(k.x) k ^ eta_s - sin(k.x) k ^ eta_c
      QVector residual = zero_vector(kModeDim);
      for (int r = 0; r < kSpinDim; ++r) {
        residual[r] = c * v[r];
        residual[kSpinDim + r] = c * v[kSpinDim + r];
      }
      add_k_wedge(residual, 0, w, form.eta_s, Quadratic(1L));
      add_k_wedge(residual, kSpinDim, w, form.eta_c, Quadratic(-1L));
      if (!is_zero_vector(residual)) {
        out.failures.push_back("(c eta + d eta) . psi != 0 for c = " + c_value.to_string());
      }
      out.eigenspinors.push_back({m, "form", std::move(v)});
      out.forms.push_back(std::move(form));
    }
    add_entry(out.spectrum, m, static_cast<int>(reduced.size()));
  }
  return out;
}

Lemma2Report lemma2_impl(const FourierMode& mode, const FormPrediction& forms, const SpinorTables& t) {
  Lemma2Report out;
  const Quadratic n(Rational(static_cast<long>(mode.norm_sq)));
  out.laplace_matches = !forms.forms.empty();
  for (const auto& f : forms.forms) {
    const Quadratic lambda = f.c * (f.c - Quadratic(0L));  // c (c - 8a), a = 0
    if (!lambda.is_rational()) {
      out.failures.push_back("c(c - 8a) is irrational for c = " + f.c.to_string());
      out.laplace_matches = false;
      continue;
    }
    out.relations.emplace_back(f.c, lambda.rational_part());
    // Delta_1 of cos(k.x) eta_c + sin(k.x) eta_s is |k|^2 eta - (k . eta) k componentwise.
    for (const QVector* eta : {&f.eta_c, &f.eta_s}) {
      Quadratic dot(0L);
      for (int i = 0; i < 7; ++i) dot += Quadratic(static_cast<long>(mode.k[i])) * (*eta)[i];
      for (int i = 0; i < 7; ++i) {
        const Quadratic laplace = n * (*eta)[i] - dot * Quadratic(static_cast<long>(mode.k[i]));
        if (!(laplace == lambda * (*eta)[i])) out.laplace_matches = false;
      }
    }
  }
  if (!out.laplace_matches) out.failures.push_back("Delta_1 eta != c(c - 8a) eta");

  // Coclosed (eta_c, eta_s) with d eta . psi = 0.
  Matrix<Rational> m(2 * kSpinDim + 2, 14);
  for (int i = 0; i < 7; ++i)
    for (int j = i + 1; j < 7; ++j) {
      const Spinor& s = t.two[i][j];
      for (int r = 0; r < kSpinDim; ++r) {
        if (sgn(s[r]) == 0) continue;
        // cos part: rho(k ^ eta_s) psi; sin part: -rho(k ^ eta_c) psi
        m(r, 7 + j) += mode.k[i] * s[r];
        m(r, 7 + i) -= mode.k[j] * s[r];
        m(kSpinDim + r, j) -= mode.k[i] * s[r];
        m(kSpinDim + r, i) += mode.k[j] * s[r];
      }
    }
  for (int i = 0; i < 7; ++i) {
    m(2 * kSpinDim, i) = mode.k[i];
    m(2 * kSpinDim + 1, 7 + i) = mode.k[i];
  }
  out.harmonic_dim = exact_kernel(m).size();
  if (out.harmonic_dim != 0) out.failures.push_back("nonzero coclosed eta with d eta . psi = 0");
  return out;
}

std::string entries_to_string(const SpectrumMultiset& s) {
  std::ostringstream out;
  out << '{';
  for (std::size_t i = 0; i < s.size(); ++i)
    out << (i ? ", " : "") << '(' << s[i].value.to_string() << ", " << s[i].multiplicity << ')';
  out << '}';
  return out.str();
}

}  // namespace

FourierMode FourierMode::from(const std::array<int, 7>& k) {
  FourierMode m;
  m.k = k;
  for (int v : k) m.norm_sq += static_cast<std::int64_t>(v) * v;
  m.field_disc = m.norm_sq == 0 ? 0 : square_free_part(m.norm_sq);
  return m;
}

bool FourierMode::is_canonical() const {
  for (int v : k)
    if (v != 0) return v > 0;
  return true;
}

std::string FourierMode::label() const {
  std::ostringstream out;
  out << '(';
  for (int i = 0; i < 7; ++i) out << (i ? "," : "") << k[i];
  out << ')';
  return out.str();
}

Multivector FourierMode::one_form() const {
  Multivector x(7);
  for (int i = 0; i < 7; ++i)
    if (k[i] != 0) x.add_term(BladeMask{1} << i, Rational(k[i]));
  return x;
}

std::vector<FourierMode> canonical_modes(int max_norm_sq) {
  std::vector<FourierMode> modes;
  if (max_norm_sq < 1) return modes;
  std::array<int, 7> k{};
  std::function<void(int, int, bool)> walk = [&](int pos, int budget, bool leading_zero) {
    if (pos == 7) {
      if (!leading_zero) modes.push_back(FourierMode::from(k));
      return;
    }
    int bound = 0;
    while ((bound + 1) * (bound + 1) <= budget) ++bound;
    for (int v = leading_zero ? 0 : -bound; v <= bound; ++v) {
      k[pos] = v;
      walk(pos + 1, budget - v * v, leading_zero && v == 0);
    }
    k[pos] = 0;
  };
  walk(0, max_norm_sq, true);
  std::sort(modes.begin(), modes.end(), [](const FourierMode& a, const FourierMode& b) {
    if (a.norm_sq != b.norm_sq) return a.norm_sq < b.norm_sq;
    return a.k > b.k;
  });
  return modes;
}

SpectrumMultiset merge(const SpectrumMultiset& a, const SpectrumMultiset& b) {
  SpectrumMultiset out = a;
  for (const auto& e : b) add_entry(out, e.value, e.multiplicity);
  return out;
}

int total_multiplicity(const SpectrumMultiset& s) {
  int total = 0;
  for (const auto& e : s) total += e.multiplicity;
  return total;
}

Quadratic mode_frequency(const FourierMode& mode, int sign) {
  require_nonzero(mode);
  return Quadratic::sqrt_of(mode.norm_sq, Rational(sign));
}

Matrix<Rational> dirac_mode_matrix(const FourierMode& mode, const G2Structure& g2) {
  require_nonzero(mode);
  const Matrix<Rational> rho = rho_k(mode, g2);
  Matrix<Rational> d(kModeDim, kModeDim);
  for (int r = 0; r < kSpinDim; ++r)
    for (int c = 0; c < kSpinDim; ++c) {
      if (sgn(rho(r, c)) == 0) continue;
      d(r, kSpinDim + c) = rho(r, c);
      d(kSpinDim + r, c) = -rho(r, c);
    }
  return d;
}

SpectrumMultiset direct_spectrum(const FourierMode& mode, const Matrix<Rational>& dirac) {
  require_nonzero(mode);
  SpectrumMultiset out;
  const Matrix<Quadratic> dq = to_quadratic(dirac);
  for (int sign : {-1, 1}) {
    Matrix<Quadratic> shifted = dq;
    const Quadratic m = mode_frequency(mode, sign);
    for (int i = 0; i < kModeDim; ++i) shifted(i, i) -= m;
    const int multiplicity = kModeDim - static_cast<int>(rank(shifted));
    add_entry(out, frequency_value(mode, sign), multiplicity);
  }
  return out;
}

FunctionPrediction predicted_from_functions(const FourierMode& mode, const G2Structure& g2) {
  require_nonzero(mode);
  return functions_impl(mode, dirac_mode_matrix(mode, g2), make_tables(g2), g2);
}

CrossOperatorCheck cross_operator_check(const FourierMode& mode, const G2Structure& g2) {
  require_nonzero(mode);
  CrossOperatorCheck out;
  out.lambda = g2.cross_operator(mode.one_form());
  const Matrix<Rational>& l = out.lambda;
  out.skew = l.transpose() == -l;
  ExactVector<Rational> k(7);
  for (int i = 0; i < 7; ++i) k[i] = mode.k[i];
  out.annihilates_k = is_zero_vector(l * k);
  // Lambda^2 + |k|^2 Id vanishes on k^perp iff it equals |k|^2 P_k = k k^T.
  Matrix<Rational> square = l * l;
  for (int i = 0; i < 7; ++i) square(i, i) += Rational(static_cast<long>(mode.norm_sq));
  out.squares_to_minus_norm = true;
  for (int i = 0; i < 7; ++i)
    for (int j = 0; j < 7; ++j)
      if (square(i, j) != mode.k[i] * mode.k[j]) out.squares_to_minus_norm = false;
  return out;
}

FormPrediction predicted_from_forms(const FourierMode& mode, const G2Structure& g2) {
  require_nonzero(mode);
  return forms_impl(mode, dirac_mode_matrix(mode, g2), make_tables(g2), g2);
}

KernelReport kernel_description(const G2Structure& g2) {
  // On constant spinors D = sum gamma_i d/dx_i = 0.
  KernelReport out;
  out.dimension = kSpinDim;
  const SpinorTables t = make_tables(g2);
  out.function_part = t.psi.is_zero() ? 0 : 1;
  std::vector<ExactVector<Rational>> forms;
  for (const auto& s : t.one) forms.push_back(s.to_vector());
  out.form_part = span_rank(forms, kSpinDim);
  forms.push_back(t.psi.to_vector());
  out.combined_rank = span_rank(forms, kSpinDim);
  return out;
}

Lemma2Report lemma2_flat_check(const FourierMode& mode, const G2Structure& g2) {
  require_nonzero(mode);
  const SpinorTables t = make_tables(g2);
  return lemma2_impl(mode, forms_impl(mode, dirac_mode_matrix(mode, g2), t, g2), t);
}

ModeSpectrum analyze_mode(const FourierMode& mode, const G2Structure& g2) {
  require_nonzero(mode);
  const SpinorTables t = make_tables(g2);
  ModeSpectrum out;
  out.mode = mode;
  const Matrix<Rational> dirac = dirac_mode_matrix(mode, g2);
  auto fail = [&](const std::string& why) { out.failures.push_back("k=" + mode.label() + ": " + why); };

  out.square_ok = dirac * dirac == Rational(static_cast<long>(mode.norm_sq)) * Matrix<Rational>::identity(kModeDim);
  if (!out.square_ok) fail("D^2 != |k|^2 Id");
  out.trace_zero = sgn(dirac.trace()) == 0;
  if (!out.trace_zero) fail("trace D != 0");

  out.direct = direct_spectrum(mode, dirac);
  if (total_multiplicity(out.direct) != kModeDim) fail("direct multiplicities sum to " +
                                                       std::to_string(total_multiplicity(out.direct)));

  const FunctionPrediction functions = functions_impl(mode, dirac, t, g2);
  const FormPrediction forms = forms_impl(mode, dirac, t, g2);
  out.predicted_functions = functions.spectrum;
  out.predicted_forms = forms.spectrum;
  for (const auto& f : functions.failures) fail(f);
  for (const auto& f : forms.failures) fail(f);

  const SpectrumMultiset predicted = merge(functions.spectrum, forms.spectrum);
  if (!(predicted == out.direct)) {
    fail("direct " + entries_to_string(out.direct) + " != predicted " + entries_to_string(predicted));
  }

  out.spans_ok = true;
  for (const auto& entry : out.direct) {
    std::vector<QVector> vectors;
    for (const auto* family : {&functions.eigenspinors, &forms.eigenspinors})
      for (const auto& e : *family)
        if (e.eigenvalue == entry.value) vectors.push_back(e.vector);
    const std::size_t r = span_rank(vectors, kModeDim);
    if (r != static_cast<std::size_t>(entry.multiplicity)) {
      out.spans_ok = false;
      fail("eigenspinors for m = " + entry.value.to_string() + " span " + std::to_string(r) + " of " +
           std::to_string(entry.multiplicity) + " dimensions");
    }
  }

  const Lemma2Report lemma2 = lemma2_impl(mode, forms, t);
  out.lemma2_ok = lemma2.passed();
  for (const auto& f : lemma2.failures) fail(f);
  return out;
}

bool SweepSummary::passed() const {
  return failures.empty() && failed_modes == 0 && kernel.passed() && mu2_corollary == ExactEigenvalue(mu2_direct);
}

SweepResult spectrum_sweep(int max_norm_sq, const G2Structure& g2) {
  if (max_norm_sq < 1) throw std::invalid_argument("max_norm_sq must be at least 1");
  SweepResult result;
  SweepSummary& s = result.summary;
  s.max_norm_sq = max_norm_sq;
  s.kernel = kernel_description(g2);
  if (!s.kernel.passed()) s.failures.push_back("k=0: kernel decomposition is not 1 + 7 = 8");
  s.mu1_D2 = s.kernel.dimension > 0 ? Rational(0) : Rational(-1);

  std::optional<Rational> mu2, l0, lp, lm;
  auto lower = [](std::optional<Rational>& slot, const Rational& v) {
    if (!slot || v < *slot) slot = v;
  };
  for (const auto& mode : canonical_modes(max_norm_sq)) {
    ModeSpectrum ms = analyze_mode(mode, g2);
    const Rational n(static_cast<long>(mode.norm_sq));
    for (const auto& e : ms.direct)
      if (e.multiplicity > 0) lower(mu2, e.value.squared().p());
    if (total_multiplicity(ms.predicted_functions) > 0) lower(l0, n);
    for (const auto& e : ms.predicted_forms) {
      if (e.multiplicity == 0) continue;
      lower(e.value.sign() < 0 ? lp : lm, n);
    }
    if (!ms.matches()) {
      ++s.failed_modes;
      s.failures.insert(s.failures.end(), ms.failures.begin(), ms.failures.end());
    }
    result.modes.push_back(std::move(ms));
  }
  s.mode_count = result.modes.size();
  s.mu2_direct = mu2.value_or(0);
  s.lambda0_1 = l0.value_or(0);
  s.lambda1_plus_1 = lp.value_or(0);
  s.lambda1_minus_1 = lm.value_or(0);
  if (l0 && lp && lm) {
    SpectralInput in;
    in.n = 7;
    in.a = 0;
    in.geometry_class = GeometryClass::Parallel;
    in.lambda0 = {*l0};
    in.lambda1_plus = {*lp};
    in.lambda1_minus = {*lm};
    s.mu2_corollary = mu2_n7(in).value;
  } else {
    s.failures.push_back("a family produced no eigenvalue");
  }
  return result;
}

}  // namespace g2spin
