#pragma once

// Exact scalars: GMP rationals and elements of a real quadratic field Q(sqrt d).

#include <gmpxx.h>

#include <cstdint>
#include <stdexcept>
#include <string>
#include <string_view>

namespace g2spin {

using Rational = mpq_class;

/// Raised when two quadratic-field elements from different fields meet.
class FieldMismatch : public std::domain_error {
 public:
  using std::domain_error::domain_error;
};

/// Parses "p/q", "p" or "-p/q" (integers only, no decimal point or exponent).
/// Throws std::invalid_argument on anything else, including a zero denominator.
Rational parse_rational(std::string_view text);

/// Canonical text form: "p" for integers, "p/q" otherwise.
std::string to_string(const Rational& r);

inline bool is_zero(const Rational& r) { return sgn(r) == 0; }

/// True iff r = s^2 for some rational s; on success writes s >= 0 to *root.
bool rational_sqrt(const Rational& r, Rational* root);

/// Largest square-free divisor d of n > 0 such that n = r^2 * d.
std::int64_t square_free_part(std::int64_t n);

/// x + y*sqrt(d) with d a positive square-free integer.
///
/// d == 0 marks a plain rational that is not yet bound to a field; it combines
/// with any field. Two elements bound to different fields throw FieldMismatch.
/// d == 1 is folded into the rational part on construction.
class Quadratic {
 public:
  Quadratic() = default;
  Quadratic(const Rational& x) : x_(x) {}  // NOLINT(google-explicit-constructor)
  Quadratic(long x) : x_(x) {}             // NOLINT(google-explicit-constructor)
  Quadratic(Rational x, Rational y, std::int64_t d);

  /// y * sqrt(d) for an arbitrary positive integer radicand n = r^2 d.
  static Quadratic sqrt_of(std::int64_t n, const Rational& y = 1);

  const Rational& rational_part() const { return x_; }
  const Rational& radical_part() const { return y_; }
  std::int64_t field() const { return d_; }

  bool is_zero() const { return sgn(x_) == 0 && sgn(y_) == 0; }
  bool is_rational() const { return sgn(y_) == 0; }
  /// Exact sign of the real number x + y sqrt(d).
  int sign() const;
  Quadratic conjugate() const;
  /// x^2 - d y^2.
  Rational norm() const;

  Quadratic operator-() const;
  Quadratic& operator+=(const Quadratic& o);
  Quadratic& operator-=(const Quadratic& o);
  Quadratic& operator*=(const Quadratic& o);
  Quadratic& operator/=(const Quadratic& o);

  /// this -= a * b without temporaries on the hot path.
  void sub_mul(const Quadratic& a, const Quadratic& b);
  /// this += a * r.
  void add_mul(const Quadratic& a, const Rational& r);

  friend Quadratic operator+(Quadratic a, const Quadratic& b) { return a += b; }
  friend Quadratic operator-(Quadratic a, const Quadratic& b) { return a -= b; }
  friend Quadratic operator*(Quadratic a, const Quadratic& b) { return a *= b; }
  friend Quadratic operator/(Quadratic a, const Quadratic& b) { return a /= b; }
  friend bool operator==(const Quadratic& a, const Quadratic& b);

  std::string to_string() const;

 private:
  std::int64_t join(const Quadratic& o) const;
  void normalize();

  Rational x_{0};
  Rational y_{0};
  std::int64_t d_ = 0;
};

inline bool is_zero(const Quadratic& q) { return q.is_zero(); }

}  // namespace g2spin
