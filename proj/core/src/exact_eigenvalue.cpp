#include "g2spin/exact_eigenvalue.hpp"

#include <cmath>
#include <stdexcept>

namespace g2spin {

ExactEigenvalue::ExactEigenvalue(Rational p, int s, Rational q) : p_(std::move(p)), s_(s), q_(std::move(q)) {
  if (s < -1 || s > 1) throw std::invalid_argument("radical sign must be -1, 0 or +1");
  if (sgn(q_) < 0) throw std::invalid_argument("radicand must be non-negative");
  if (s_ == 0 || sgn(q_) == 0) {
    s_ = 0;
    q_ = 0;
    return;
  }
  Rational root;
  if (rational_sqrt(q_, &root)) {
    p_ += s_ * root;
    s_ = 0;
    q_ = 0;
  }
}

ExactEigenvalue ExactEigenvalue::sqrt(const Rational& q) { return ExactEigenvalue(0, 1, q); }

int sign_of(const Rational& alpha, const Rational& beta, const Rational& r) {
  const int sa = sgn(alpha);
  const int sb = sgn(r) == 0 ? 0 : sgn(beta);
  if (sb == 0) return sa;
  if (sa == 0 || sa == sb) return sb;
  const Rational lhs = alpha * alpha;
  const Rational rhs = beta * beta * r;
  if (lhs == rhs) return 0;
  return lhs > rhs ? sa : sb;
}

int ExactEigenvalue::sign() const { return sign_of(p_, s_, q_); }

int compare(const ExactEigenvalue& a, const ExactEigenvalue& b) {
  // sign of P + u sqrt(A) + v sqrt(B)
  const Rational P = a.p() - b.p();
  const int u = a.s();
  const int v = -b.s();
  const Rational& A = a.q();
  const Rational& B = b.q();
  if (v == 0) return sign_of(P, u, A);
  if (u == 0) return sign_of(P, v, B);

  int sign_t;  // sign of T = u sqrt(A) + v sqrt(B)
  if (u == v) {
    sign_t = u;
  } else {
    sign_t = u * sgn(A - B);
  }
  const int sign_p = sgn(P);
  if (sign_t == 0) return sign_p;
  if (sign_p == 0 || sign_p == sign_t) return sign_t;
  // Opposite signs: compare T^2 = A + B + 2uv sqrt(AB) against P^2.
  const int d = sign_of(A + B - P * P, Rational(2 * u * v), A * B);
  if (d == 0) return 0;
  return d > 0 ? sign_t : sign_p;
}

std::strong_ordering operator<=>(const ExactEigenvalue& a, const ExactEigenvalue& b) {
  const int c = compare(a, b);
  if (c < 0) return std::strong_ordering::less;
  if (c > 0) return std::strong_ordering::greater;
  return std::strong_ordering::equal;
}

const ExactEigenvalue& min(const ExactEigenvalue& a, const ExactEigenvalue& b) { return compare(b, a) < 0 ? b : a; }

ExactEigenvalue ExactEigenvalue::squared() const {
  if (s_ == 0) return ExactEigenvalue(p_ * p_);
  const int cross = sgn(p_) * s_;
  return ExactEigenvalue(p_ * p_ + q_, cross, 4 * p_ * p_ * q_);
}

ExactEigenvalue ExactEigenvalue::reciprocal() const {
  if (sign() == 0) throw std::domain_error("reciprocal of zero");
  if (s_ == 0) return ExactEigenvalue(Rational(1) / p_);
  // (p - s sqrt q) / (p^2 - q), nonzero because q is not a rational square
  const Rational n = p_ * p_ - q_;
  const Rational scale = Rational(1) / n;
  return scale * ExactEigenvalue(p_, -s_, q_);
}

ExactEigenvalue operator*(const Rational& r, const ExactEigenvalue& x) {
  const int sr = sgn(r);
  if (sr == 0) return ExactEigenvalue();
  return ExactEigenvalue(r * x.p_, sr * x.s_, r * r * x.q_);
}

long double ExactEigenvalue::approx() const {
  return static_cast<long double>(p_.get_d()) + s_ * std::sqrt(static_cast<long double>(q_.get_d()));
}

std::string ExactEigenvalue::to_string() const {
  if (s_ == 0) return g2spin::to_string(p_);
  std::string radical = "sqrt(" + g2spin::to_string(q_) + ")";
  if (sgn(p_) == 0) return (s_ < 0 ? "-" : "") + radical;
  return g2spin::to_string(p_) + (s_ < 0 ? "-" : "+") + radical;
}

}  // namespace g2spin
