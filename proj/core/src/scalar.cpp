#include "g2spin/scalar.hpp"

#include <regex>
#include <sstream>

namespace g2spin {

Rational parse_rational(std::string_view text) {
  static const std::regex kPattern(R"(^[+-]?[0-9]+(/[0-9]+)?$)");
  const std::string s(text);
  if (!std::regex_match(s, kPattern)) {
    throw std::invalid_argument("expected a rational \"p/q\", got \"" + s + "\"");
  }
  const auto slash = s.find('/');
  if (slash != std::string::npos && mpz_class(s.substr(slash + 1)) == 0) {
    throw std::invalid_argument("zero denominator in \"" + s + "\"");
  }
  Rational r(s.front() == '+' ? s.substr(1) : s, 10);
  r.canonicalize();
  return r;
}

std::string to_string(const Rational& r) { return r.get_str(10); }

bool rational_sqrt(const Rational& r, Rational* root) {
  if (sgn(r) < 0) return false;
  mpz_class num = r.get_num();
  mpz_class den = r.get_den();
  if (!mpz_perfect_square_p(num.get_mpz_t()) || !mpz_perfect_square_p(den.get_mpz_t())) {
    return false;
  }
  if (root != nullptr) {
    mpz_class sn, sd;
    mpz_sqrt(sn.get_mpz_t(), num.get_mpz_t());
    mpz_sqrt(sd.get_mpz_t(), den.get_mpz_t());
    *root = Rational(sn, sd);
    root->canonicalize();
  }
  return true;
}

std::int64_t square_free_part(std::int64_t n) {
  if (n <= 0) throw std::invalid_argument("square_free_part needs n > 0");
  std::int64_t d = 1;
  for (std::int64_t p = 2; p * p <= n; ++p) {
    int count = 0;
    while (n % p == 0) {
      n /= p;
      ++count;
    }
    if (count % 2 == 1) d *= p;
  }
  return d * n;
}

Quadratic::Quadratic(Rational x, Rational y, std::int64_t d)
    : x_(std::move(x)), y_(std::move(y)), d_(d) {
  if (d < 0) throw std::invalid_argument("quadratic field needs d >= 0");
  if (d > 1 && square_free_part(d) != d) {
    throw std::invalid_argument("quadratic field discriminant must be square-free");
  }
  if (d == 0 && sgn(y_) != 0) throw std::invalid_argument("radical part without a field");
  normalize();
}

Quadratic Quadratic::sqrt_of(std::int64_t n, const Rational& y) {
  if (n < 0) throw std::invalid_argument("sqrt_of needs n >= 0");
  if (n == 0) return Quadratic();
  const std::int64_t d = square_free_part(n);
  std::int64_t r2 = n / d;
  std::int64_t r = 1;
  while (r * r < r2) ++r;
  return Quadratic(0, y * r, d);
}

void Quadratic::normalize() {
  if (d_ == 1) {
    x_ += y_;
    y_ = 0;
    d_ = 0;
  }
}

std::int64_t Quadratic::join(const Quadratic& o) const {
  if (d_ == 0) return o.d_;
  if (o.d_ == 0 || o.d_ == d_) return d_;
  throw FieldMismatch("mixing Q(sqrt " + std::to_string(d_) + ") with Q(sqrt " +
                      std::to_string(o.d_) + ")");
}

int Quadratic::sign() const {
  const int sx = sgn(x_);
  const int sy = sgn(y_);
  if (sy == 0) return sx;
  if (sx == 0 || sx == sy) return sy;
  const Rational lhs = x_ * x_;
  const Rational rhs = y_ * y_ * d_;
  return lhs > rhs ? sx : sy;
}

Quadratic Quadratic::conjugate() const {
  Quadratic c = *this;
  c.y_ = -c.y_;
  return c;
}

Rational Quadratic::norm() const { return x_ * x_ - y_ * y_ * d_; }

Quadratic Quadratic::operator-() const {
  Quadratic c = *this;
  c.x_ = -c.x_;
  c.y_ = -c.y_;
  return c;
}

Quadratic& Quadratic::operator+=(const Quadratic& o) {
  d_ = join(o);
  x_ += o.x_;
  if (sgn(o.y_) != 0) y_ += o.y_;
  return *this;
}

Quadratic& Quadratic::operator-=(const Quadratic& o) {
  d_ = join(o);
  x_ -= o.x_;
  if (sgn(o.y_) != 0) y_ -= o.y_;
  return *this;
}

Quadratic& Quadratic::operator*=(const Quadratic& o) {
  d_ = join(o);
  if (sgn(o.y_) == 0) {
    x_ *= o.x_;
    if (sgn(y_) != 0) y_ *= o.x_;
    return *this;
  }
  if (sgn(y_) == 0) {
    y_ = x_ * o.y_;
    x_ *= o.x_;
    return *this;
  }
  Rational nx = x_ * o.x_ + y_ * o.y_ * d_;
  y_ = x_ * o.y_ + y_ * o.x_;
  x_ = std::move(nx);
  return *this;
}

Quadratic& Quadratic::operator/=(const Quadratic& o) {
  if (o.is_zero()) throw std::domain_error("division by zero in quadratic field");
  d_ = join(o);
  if (sgn(o.y_) == 0) {
    x_ /= o.x_;
    if (sgn(y_) != 0) y_ /= o.x_;
    return *this;
  }
  const Rational n = o.norm();
  *this *= o.conjugate();
  x_ /= n;
  y_ /= n;
  return *this;
}

namespace {

// Scratch for products on the elimination hot path; avoids an allocation per operation.
mpq_class& scratch() {
  thread_local mpq_class t;
  return t;
}

void sub_product(mpq_class& acc, const mpq_class& a, const mpq_class& b) {
  mpq_class& t = scratch();
  mpq_mul(t.get_mpq_t(), a.get_mpq_t(), b.get_mpq_t());
  mpq_sub(acc.get_mpq_t(), acc.get_mpq_t(), t.get_mpq_t());
}

void add_product(mpq_class& acc, const mpq_class& a, const mpq_class& b) {
  mpq_class& t = scratch();
  mpq_mul(t.get_mpq_t(), a.get_mpq_t(), b.get_mpq_t());
  mpq_add(acc.get_mpq_t(), acc.get_mpq_t(), t.get_mpq_t());
}

}  // namespace

void Quadratic::sub_mul(const Quadratic& a, const Quadratic& b) {
  if (a.is_zero() || b.is_zero()) return;
  d_ = join(a);
  d_ = join(b);
  const bool ar = sgn(a.y_) == 0;
  const bool br = sgn(b.y_) == 0;
  sub_product(x_, a.x_, b.x_);
  if (ar && br) return;
  if (br) {
    sub_product(y_, a.y_, b.x_);
  } else if (ar) {
    sub_product(y_, a.x_, b.y_);
  } else {
    sub_product(x_, a.y_, b.y_ * d_);
    sub_product(y_, a.x_, b.y_);
    sub_product(y_, a.y_, b.x_);
  }
}

void Quadratic::add_mul(const Quadratic& a, const Rational& r) {
  if (a.is_zero() || sgn(r) == 0) return;
  d_ = join(a);
  add_product(x_, a.x_, r);
  if (sgn(a.y_) != 0) add_product(y_, a.y_, r);
}

bool operator==(const Quadratic& a, const Quadratic& b) {
  if (a.d_ != 0 && b.d_ != 0 && a.d_ != b.d_) {
    return a.is_rational() && b.is_rational() && a.x_ == b.x_;
  }
  return a.x_ == b.x_ && a.y_ == b.y_;
}

std::string Quadratic::to_string() const {
  if (sgn(y_) == 0) return g2spin::to_string(x_);
  std::ostringstream out;
  if (sgn(x_) != 0) out << g2spin::to_string(x_) << (sgn(y_) > 0 ? "+" : "");
  out << g2spin::to_string(y_) << "*sqrt(" << d_ << ")";
  return out.str();
}

}  // namespace g2spin
