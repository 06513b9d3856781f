#pragma once

// Exterior algebra of R^n over the rationals, orthonormal frame e_1..e_n,
// orientation e_1 ^ ... ^ e_n positive.

#include <cstdint>
#include <initializer_list>
#include <map>
#include <stdexcept>
#include <string>
#include <vector>

#include "g2spin/scalar.hpp"

namespace g2spin {

class DimensionMismatch : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

class GradeError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

/// Index set I subset {1..n}; bit (i-1) set iff i in I.
using BladeMask = std::uint32_t;

inline constexpr int kMaxDimension = 16;

int blade_grade(BladeMask mask);

/// Sign of e_I ^ e_J relative to e_{I u J}; 0 when I and J overlap.
int wedge_sign(BladeMask left, BladeMask right);

/// Human-readable blade label, e.g. "e123"; indices above 9 are bracketed.
std::string blade_label(BladeMask mask);

/// A multivector: sparse map from blades to rational coefficients.
class Multivector {
 public:
  explicit Multivector(int dim = 7);

  static Multivector scalar(const Rational& value, int dim = 7);
  /// e_{i1} ^ ... ^ e_{ik} for one-based indices in any order; repeated indices give 0.
  static Multivector blade(std::initializer_list<int> indices, int dim = 7);
  static Multivector blade(const std::vector<int>& indices, int dim = 7);
  /// sum_i coeffs[i] e_{i+1}
  static Multivector one_form(const std::vector<Rational>& coeffs);

  int dim() const { return dim_; }
  const std::map<BladeMask, Rational>& terms() const { return terms_; }

  Rational coefficient(BladeMask mask) const;
  /// Coefficient of the blade named by increasing one-based indices.
  Rational coefficient(std::initializer_list<int> indices) const;
  void add_term(BladeMask mask, const Rational& value);

  Multivector grade_part(int k) const;
  /// Grade k if homogeneous and nonzero, -1 otherwise (zero is homogeneous of every grade).
  int homogeneous_grade() const;
  bool is_zero() const { return terms_.empty(); }
  std::size_t nonzero_terms() const { return terms_.size(); }
  /// Coefficients of a 1-form as an n-vector.
  std::vector<Rational> vector_coefficients() const;

  Multivector& operator+=(const Multivector& o);
  Multivector& operator-=(const Multivector& o);
  Multivector& operator*=(const Rational& s);

  friend Multivector operator+(Multivector a, const Multivector& b) { return a += b; }
  friend Multivector operator-(Multivector a, const Multivector& b) { return a -= b; }
  friend Multivector operator*(Multivector a, const Rational& s) { return a *= s; }
  friend Multivector operator*(const Rational& s, Multivector a) { return a *= s; }
  friend Multivector operator-(Multivector a) { return a *= Rational(-1); }
  friend bool operator==(const Multivector& a, const Multivector& b) {
    return a.dim_ == b.dim_ && a.terms_ == b.terms_;
  }

  std::string to_string() const;

 private:
  void check_dim(const Multivector& o) const;

  int dim_;
  std::map<BladeMask, Rational> terms_;
};

Multivector wedge(const Multivector& u, const Multivector& v);

/// Hodge star for the Euclidean metric and the standard orientation.
Multivector hodge(const Multivector& u);

/// Interior product x _| u for a 1-form x.
Multivector contract(const Multivector& x, const Multivector& u);

/// Induced inner product; blades e_I are orthonormal.
Rational inner(const Multivector& u, const Multivector& v);

/// e_1 ^ ... ^ e_n
Multivector volume_form(int dim = 7);

}  // namespace g2spin
