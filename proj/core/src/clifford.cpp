#include "g2spin/clifford.hpp"

#include <bit>
#include <sstream>

namespace g2spin {

Spinor Spinor::from_vector(const ExactVector<Rational>& v) {
  if (v.size() != kSpinDim) throw DimensionMismatch("spinor needs 8 components");
  Spinor s;
  for (int i = 0; i < kSpinDim; ++i) s.components_[i] = v[i];
  return s;
}

Spinor Spinor::unit(int index) {
  if (index < 0 || index >= kSpinDim) throw std::out_of_range("spinor index");
  Spinor s;
  s.components_[index] = 1;
  return s;
}

Rational Spinor::norm_sq() const { return inner(*this, *this); }

bool Spinor::is_zero() const {
  for (const auto& c : components_)
    if (sgn(c) != 0) return false;
  return true;
}

ExactVector<Rational> Spinor::to_vector() const { return {components_.begin(), components_.end()}; }

Spinor& Spinor::operator+=(const Spinor& o) {
  for (int i = 0; i < kSpinDim; ++i) components_[i] += o.components_[i];
  return *this;
}

Spinor& Spinor::operator-=(const Spinor& o) {
  for (int i = 0; i < kSpinDim; ++i) components_[i] -= o.components_[i];
  return *this;
}

Spinor& Spinor::operator*=(const Rational& s) {
  for (auto& c : components_) c *= s;
  return *this;
}

std::string Spinor::to_string() const { return format_vector(to_vector()); }

Rational inner(const Spinor& a, const Spinor& b) {
  Rational s = 0;
  for (int i = 0; i < kSpinDim; ++i) s += a[i] * b[i];
  return s;
}

SpinEndomorphism::SpinEndomorphism(Matrix<Rational> m) : m_(std::move(m)) {
  if (m_.rows() != kSpinDim || m_.cols() != kSpinDim) throw DimensionMismatch("spin endomorphism must be 8x8");
}

Spinor SpinEndomorphism::apply(const Spinor& psi) const { return Spinor::from_vector(m_ * psi.to_vector()); }

bool SpinEndomorphism::is_skew() const { return (m_ + m_.transpose()).is_zero(); }

const std::array<OctonionTriple, 7>& octonion_triples() {
  // Structure constants of the 3-form
  //   e123 - e145 - e167 + e246 - e257 + e347 + e356.
  static const std::array<OctonionTriple, 7> kTriples{{
      {1, 2, 3, +1},
      {1, 4, 5, -1},
      {1, 6, 7, -1},
      {2, 4, 6, +1},
      {2, 5, 7, -1},
      {3, 4, 7, +1},
      {3, 5, 6, +1},
  }};
  return kTriples;
}

GammaTable octonion_gammas(const std::array<OctonionTriple, 7>& triples) {
  // product[a][b] = (sign, c) with e_a e_b = sign e_c, imaginary units 1..7.
  std::array<std::array<std::pair<int, int>, 8>, 8> product{};
  for (const auto& t : triples) {
    const int cyc[3] = {t.i, t.j, t.k};
    for (int r = 0; r < 3; ++r) {
      const int a = cyc[r], b = cyc[(r + 1) % 3], c = cyc[(r + 2) % 3];
      product[a][b] = {t.sign, c};
      product[b][a] = {-t.sign, c};
    }
  }
  GammaTable gammas;
  for (int i = 1; i <= kCliffordDim; ++i) {
    Matrix<Rational> m(kSpinDim, kSpinDim);
    m(i, 0) = 1;   // e_i * 1 = e_i
    m(0, i) = -1;  // e_i * e_i = -1
    for (int j = 1; j <= kCliffordDim; ++j) {
      if (j == i) continue;
      const auto [s, k] = product[i][j];
      if (s == 0) throw std::logic_error("incomplete octonion table");
      m(k, j) = s;
    }
    gammas[i - 1] = SpinEndomorphism(std::move(m));
  }
  return gammas;
}

std::optional<std::pair<int, int>> check_clifford_relations(const GammaTable& gammas) {
  const SpinEndomorphism id = SpinEndomorphism::identity();
  for (int i = 0; i < kCliffordDim; ++i) {
    for (int j = 0; j < kCliffordDim; ++j) {
      SpinEndomorphism anti = gammas[i] * gammas[j] + gammas[j] * gammas[i];
      SpinEndomorphism expected = i == j ? Rational(-2) * id : SpinEndomorphism();
      if (!(anti == expected)) return std::make_pair(i + 1, j + 1);
    }
  }
  return std::nullopt;
}

CliffordRepresentation::CliffordRepresentation(GammaTable gammas, int sign)
    : base_(std::move(gammas)), sign_(sign) {
  if (sign != 1 && sign != -1) throw std::invalid_argument("representation sign must be +1 or -1");
  for (int i = 0; i < kCliffordDim; ++i) gammas_[i] = Rational(sign) * base_[i];
  blades_.resize(std::size_t{1} << kCliffordDim);
  blades_[0] = SpinEndomorphism::identity();
  for (BladeMask mask = 1; mask < blades_.size(); ++mask) {
    // Strip the highest index: e_I = e_{I'} e_top with I' < top.
    const int top = 31 - std::countl_zero(mask);
    blades_[mask] = blades_[mask & ~(BladeMask{1} << top)] * gammas_[top];
  }
}

const CliffordRepresentation& CliffordRepresentation::standard() {
  static const CliffordRepresentation rep = [] {
    GammaTable g = octonion_gammas(octonion_triples());
    if (auto bad = check_clifford_relations(g)) {
      throw std::logic_error("Clifford relation fails for pair (" + std::to_string(bad->first) + ", " +
                             std::to_string(bad->second) + ")");
    }
    return CliffordRepresentation(std::move(g));
  }();
  return rep;
}

const SpinEndomorphism& CliffordRepresentation::gamma(int i) const {
  if (i < 1 || i > kCliffordDim) throw std::out_of_range("gamma index must lie in 1..7");
  return gammas_[i - 1];
}

SpinEndomorphism CliffordRepresentation::action(const Multivector& u) const {
  if (u.dim() != kCliffordDim) throw DimensionMismatch("Clifford action needs a form on R^7");
  SpinEndomorphism out;
  for (const auto& [mask, c] : u.terms()) out += c * blades_[mask];
  return out;
}

const SpinEndomorphism& gamma(int i) { return CliffordRepresentation::standard().gamma(i); }

SpinEndomorphism clifford_action(const Multivector& u) { return CliffordRepresentation::standard().action(u); }

Rational contraction_identity_check(const Multivector& u, const CliffordRepresentation& rep) {
  const int grade = u.homogeneous_grade();
  if (grade != 1 && grade != 2) throw GradeError("contraction identity needs a nonzero form of grade 1 or 2");
  const SpinEndomorphism rho = rep.action(u);
  SpinEndomorphism sum;
  for (int i = 1; i <= kCliffordDim; ++i) sum += rep.gamma(i) * rho * rep.gamma(i);
  std::optional<Rational> factor;
  for (int r = 0; r < kSpinDim && !factor; ++r)
    for (int c = 0; c < kSpinDim && !factor; ++c)
      if (sgn(rho(r, c)) != 0) factor = sum(r, c) / rho(r, c);
  if (!factor || !(sum == *factor * rho)) {
    throw std::logic_error("sum_i gamma_i rho(u) gamma_i is not a multiple of rho(u)");
  }
  return *factor;
}

std::vector<ExactVector<Rational>> eigenspace(const SpinEndomorphism& op, const Rational& eigenvalue) {
  return exact_kernel(op.matrix() - eigenvalue * Matrix<Rational>::identity(kSpinDim));
}

Spinor normalize_generator(const ExactVector<Rational>& v) {
  Spinor s = Spinor::from_vector(v);
  if (s.is_zero()) throw std::invalid_argument("cannot normalize the zero spinor");
  int lead = 0;
  while (sgn(s[lead]) == 0) ++lead;
  if (sgn(s[lead]) < 0) s *= Rational(-1);
  Rational length;
  if (rational_sqrt(s.norm_sq(), &length)) s *= Rational(1) / length;
  return s;
}

}  // namespace g2spin
