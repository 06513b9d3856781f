#pragma once

#include <compare>
#include <string>

#include "g2spin/scalar.hpp"

namespace g2spin {

/// A real number p + s sqrt(q) with p, q rational, q >= 0 and s in {-1, 0, +1}.
///
/// Canonical form: s == 0 iff q == 0, and q is never a rational square (a
/// square root that happens to be rational is folded into p). Two values are
/// therefore equal iff their (p, s, q) triples are equal. Ordering is exact.
class ExactEigenvalue {
 public:
  ExactEigenvalue() = default;
  ExactEigenvalue(const Rational& p) : p_(p) {}  // NOLINT(google-explicit-constructor)
  ExactEigenvalue(long p) : p_(p) {}             // NOLINT(google-explicit-constructor)
  ExactEigenvalue(Rational p, int s, Rational q);

  /// sqrt(q) for q >= 0.
  static ExactEigenvalue sqrt(const Rational& q);

  const Rational& p() const { return p_; }
  int s() const { return s_; }
  const Rational& q() const { return q_; }
  bool is_rational() const { return s_ == 0; }

  int sign() const;
  ExactEigenvalue abs() const { return sign() < 0 ? -*this : *this; }
  /// (p^2 + q) + sign(2ps) sqrt(4 p^2 q)
  ExactEigenvalue squared() const;
  /// 1 / (p + s sqrt q); throws std::domain_error at zero.
  ExactEigenvalue reciprocal() const;

  ExactEigenvalue operator-() const { return ExactEigenvalue(-p_, -s_, q_); }
  friend ExactEigenvalue operator+(const ExactEigenvalue& x, const Rational& r) {
    return ExactEigenvalue(x.p_ + r, x.s_, x.q_);
  }
  friend ExactEigenvalue operator+(const Rational& r, const ExactEigenvalue& x) { return x + r; }
  friend ExactEigenvalue operator-(const ExactEigenvalue& x, const Rational& r) { return x + Rational(-r); }
  friend ExactEigenvalue operator-(const Rational& r, const ExactEigenvalue& x) { return -x + r; }
  friend ExactEigenvalue operator*(const Rational& r, const ExactEigenvalue& x);

  friend bool operator==(const ExactEigenvalue& a, const ExactEigenvalue& b) {
    return a.s_ == b.s_ && a.p_ == b.p_ && a.q_ == b.q_;
  }
  friend std::strong_ordering operator<=>(const ExactEigenvalue& a, const ExactEigenvalue& b);

  long double approx() const;
  /// "p", "sqrt(q)", "p+sqrt(q)", "p-sqrt(q)", with rationals as "a/b".
  std::string to_string() const;

 private:
  Rational p_{0};
  int s_ = 0;
  Rational q_{0};
};

/// Exact sign of alpha + beta sqrt(r), r >= 0.
int sign_of(const Rational& alpha, const Rational& beta, const Rational& r);

/// Exact comparison: sign of a - b.
int compare(const ExactEigenvalue& a, const ExactEigenvalue& b);

const ExactEigenvalue& min(const ExactEigenvalue& a, const ExactEigenvalue& b);

}  // namespace g2spin
