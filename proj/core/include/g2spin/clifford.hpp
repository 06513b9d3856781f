#pragma once

// Real Clifford algebra Cl(7) acting on the 8-dimensional spin representation.
//
// Generators are left multiplications by the imaginary octonion units on
// O = R^8 (basis 1, e_1, ..., e_7), so every entry is -1, 0 or +1 and
// gamma_i gamma_j + gamma_j gamma_i = -2 delta_ij Id. A form acts through
// rho(e_{i1...ik}) = gamma_{i1} ... gamma_{ik} on increasing index tuples.

#include <array>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "g2spin/exact_matrix.hpp"
#include "g2spin/exterior.hpp"
#include "g2spin/scalar.hpp"

namespace g2spin {

inline constexpr int kSpinDim = 8;
inline constexpr int kCliffordDim = 7;

/// Element of the real spin representation, 8 rational components.
class Spinor {
 public:
  Spinor() { components_.fill(Rational(0)); }
  explicit Spinor(const std::array<Rational, kSpinDim>& c) : components_(c) {}
  static Spinor from_vector(const ExactVector<Rational>& v);
  static Spinor unit(int index);

  const Rational& operator[](int i) const { return components_[i]; }
  Rational& operator[](int i) { return components_[i]; }

  Rational norm_sq() const;
  bool is_zero() const;
  ExactVector<Rational> to_vector() const;

  Spinor& operator+=(const Spinor& o);
  Spinor& operator-=(const Spinor& o);
  Spinor& operator*=(const Rational& s);
  friend Spinor operator+(Spinor a, const Spinor& b) { return a += b; }
  friend Spinor operator-(Spinor a, const Spinor& b) { return a -= b; }
  friend Spinor operator*(const Rational& s, Spinor a) { return a *= s; }
  friend bool operator==(const Spinor& a, const Spinor& b) { return a.components_ == b.components_; }

  std::string to_string() const;

 private:
  std::array<Rational, kSpinDim> components_;
};

Rational inner(const Spinor& a, const Spinor& b);

/// 8x8 rational endomorphism of the spin representation.
class SpinEndomorphism {
 public:
  SpinEndomorphism() : m_(kSpinDim, kSpinDim) {}
  explicit SpinEndomorphism(Matrix<Rational> m);
  static SpinEndomorphism identity() { return SpinEndomorphism(Matrix<Rational>::identity(kSpinDim)); }

  const Matrix<Rational>& matrix() const { return m_; }
  const Rational& operator()(int r, int c) const { return m_(r, c); }
  Rational& operator()(int r, int c) { return m_(r, c); }

  Spinor apply(const Spinor& psi) const;
  bool is_skew() const;

  SpinEndomorphism& operator+=(const SpinEndomorphism& o) { m_ += o.m_; return *this; }
  SpinEndomorphism& operator-=(const SpinEndomorphism& o) { m_ -= o.m_; return *this; }
  SpinEndomorphism& operator*=(const Rational& s) { m_ *= s; return *this; }
  friend SpinEndomorphism operator+(SpinEndomorphism a, const SpinEndomorphism& b) { return a += b; }
  friend SpinEndomorphism operator-(SpinEndomorphism a, const SpinEndomorphism& b) { return a -= b; }
  friend SpinEndomorphism operator*(const Rational& s, SpinEndomorphism a) { return a *= s; }
  friend SpinEndomorphism operator*(const SpinEndomorphism& a, const SpinEndomorphism& b) {
    return SpinEndomorphism(a.m_ * b.m_);
  }
  friend Spinor operator*(const SpinEndomorphism& a, const Spinor& psi) { return a.apply(psi); }
  friend bool operator==(const SpinEndomorphism& a, const SpinEndomorphism& b) { return a.m_ == b.m_; }

 private:
  Matrix<Rational> m_;
};

/// One octonion product rule e_i e_j = sign * e_k (and its cyclic shifts).
struct OctonionTriple {
  int i, j, k;
  int sign;
};

/// The multiplication table used to build the generators.
const std::array<OctonionTriple, 7>& octonion_triples();

using GammaTable = std::array<SpinEndomorphism, kCliffordDim>;

/// Left multiplications by e_1..e_7 for the given table.
GammaTable octonion_gammas(const std::array<OctonionTriple, 7>& triples);

/// First pair (i, j), one-based, violating gamma_i gamma_j + gamma_j gamma_i = -2 delta_ij,
/// or nullopt when all 49 relations hold.
std::optional<std::pair<int, int>> check_clifford_relations(const GammaTable& gammas);

/// The verified standard representation, built once.
///
/// `sign` selects between the two inequivalent representations of Cl(7):
/// rho_sign(e_i) = sign * gamma_i, which negates the action of odd forms.
class CliffordRepresentation {
 public:
  explicit CliffordRepresentation(GammaTable gammas, int sign = 1);

  static const CliffordRepresentation& standard();

  int sign() const { return sign_; }
  CliffordRepresentation with_sign(int sign) const { return CliffordRepresentation(base_, sign); }

  /// gamma_i for one-based i in 1..7.
  const SpinEndomorphism& gamma(int i) const;
  /// rho(e_I) for a blade mask over 7 indices.
  const SpinEndomorphism& blade(BladeMask mask) const { return blades_.at(mask); }
  /// Clifford action of an arbitrary form on R^7.
  SpinEndomorphism action(const Multivector& u) const;

  const GammaTable& gammas() const { return gammas_; }

 private:
  GammaTable base_;
  GammaTable gammas_;
  std::vector<SpinEndomorphism> blades_;
  int sign_;
};

/// gamma_i of the standard representation (one-based).
const SpinEndomorphism& gamma(int i);

/// rho(u) in the standard representation.
SpinEndomorphism clifford_action(const Multivector& u);

/// The factor c with sum_i gamma_i rho(u) gamma_i = c rho(u), for homogeneous u of grade 1 or 2.
/// Throws std::logic_error if the sum is not proportional to rho(u).
Rational contraction_identity_check(const Multivector& u,
                                    const CliffordRepresentation& rep = CliffordRepresentation::standard());

/// Generators of the eigenspace of `op` for a rational eigenvalue.
std::vector<ExactVector<Rational>> eigenspace(const SpinEndomorphism& op, const Rational& eigenvalue);

/// Sign-normalized generator: first nonzero component positive, scaled to unit
/// length when the squared norm is a rational square.
Spinor normalize_generator(const ExactVector<Rational>& v);

}  // namespace g2spin
