#include "g2spin/exterior.hpp"

#include <bit>
#include <sstream>

namespace g2spin {

namespace {

void check_dimension(int dim) {
  if (dim < 1 || dim > kMaxDimension) {
    throw std::invalid_argument("ambient dimension must lie in 1.." + std::to_string(kMaxDimension));
  }
}

BladeMask full_mask(int dim) { return (BladeMask{1} << dim) - 1; }

}  // namespace

int blade_grade(BladeMask mask) { return std::popcount(mask); }

int wedge_sign(BladeMask left, BladeMask right) {
  if ((left & right) != 0) return 0;
  // Count pairs (i in left, j in right) with i > j.
  int inversions = 0;
  for (BladeMask r = right; r != 0; r &= r - 1) {
    const BladeMask low = r & (~r + 1);
    inversions += std::popcount(left & ~(low | (low - 1)));
  }
  return inversions % 2 == 0 ? 1 : -1;
}

std::string blade_label(BladeMask mask) {
  if (mask == 0) return "1";
  std::string s = "e";
  for (int i = 0; i < kMaxDimension; ++i) {
    if ((mask >> i & 1U) == 0) continue;
    s += i + 1 < 10 ? std::to_string(i + 1) : "[" + std::to_string(i + 1) + "]";
  }
  return s;
}

Multivector::Multivector(int dim) : dim_(dim) { check_dimension(dim); }

Multivector Multivector::scalar(const Rational& value, int dim) {
  Multivector m(dim);
  m.add_term(0, value);
  return m;
}

Multivector Multivector::blade(std::initializer_list<int> indices, int dim) {
  return blade(std::vector<int>(indices), dim);
}

Multivector Multivector::blade(const std::vector<int>& indices, int dim) {
  Multivector m(dim);
  BladeMask mask = 0;
  int sign = 1;
  for (int i : indices) {
    if (i < 1 || i > dim) throw std::out_of_range("blade index out of range");
    const BladeMask bit = BladeMask{1} << (i - 1);
    sign *= wedge_sign(mask, bit);
    if (sign == 0) return m;
    mask |= bit;
  }
  m.add_term(mask, sign);
  return m;
}

Multivector Multivector::one_form(const std::vector<Rational>& coeffs) {
  Multivector m(static_cast<int>(coeffs.size()));
  for (std::size_t i = 0; i < coeffs.size(); ++i) m.add_term(BladeMask{1} << i, coeffs[i]);
  return m;
}

Rational Multivector::coefficient(BladeMask mask) const {
  auto it = terms_.find(mask);
  return it == terms_.end() ? Rational(0) : it->second;
}

Rational Multivector::coefficient(std::initializer_list<int> indices) const {
  BladeMask mask = 0;
  int previous = 0;
  for (int i : indices) {
    if (i <= previous || i > dim_) throw std::invalid_argument("indices must be increasing and in range");
    mask |= BladeMask{1} << (i - 1);
    previous = i;
  }
  return coefficient(mask);
}

void Multivector::add_term(BladeMask mask, const Rational& value) {
  if ((mask & ~full_mask(dim_)) != 0) throw std::out_of_range("blade outside ambient dimension");
  if (sgn(value) == 0) return;
  auto [it, inserted] = terms_.try_emplace(mask, value);
  if (!inserted) {
    it->second += value;
    if (sgn(it->second) == 0) terms_.erase(it);
  }
}

Multivector Multivector::grade_part(int k) const {
  Multivector out(dim_);
  for (const auto& [mask, c] : terms_)
    if (blade_grade(mask) == k) out.terms_.emplace(mask, c);
  return out;
}

int Multivector::homogeneous_grade() const {
  int grade = -1;
  for (const auto& [mask, c] : terms_) {
    const int g = blade_grade(mask);
    if (grade == -1) {
      grade = g;
    } else if (g != grade) {
      return -1;
    }
  }
  return grade;
}

std::vector<Rational> Multivector::vector_coefficients() const {
  std::vector<Rational> v(dim_, Rational(0));
  for (const auto& [mask, c] : terms_) {
    if (blade_grade(mask) != 1) throw GradeError("vector_coefficients needs a 1-form");
    v[std::countr_zero(mask)] = c;
  }
  return v;
}

void Multivector::check_dim(const Multivector& o) const {
  if (dim_ != o.dim_) {
    throw DimensionMismatch("multivectors of dimension " + std::to_string(dim_) + " and " +
                            std::to_string(o.dim_));
  }
}

Multivector& Multivector::operator+=(const Multivector& o) {
  check_dim(o);
  for (const auto& [mask, c] : o.terms_) add_term(mask, c);
  return *this;
}

Multivector& Multivector::operator-=(const Multivector& o) {
  check_dim(o);
  for (const auto& [mask, c] : o.terms_) add_term(mask, -c);
  return *this;
}

Multivector& Multivector::operator*=(const Rational& s) {
  if (sgn(s) == 0) {
    terms_.clear();
    return *this;
  }
  for (auto& [mask, c] : terms_) c *= s;
  return *this;
}

std::string Multivector::to_string() const {
  if (terms_.empty()) return "0";
  std::ostringstream out;
  bool first = true;
  for (const auto& [mask, c] : terms_) {
    Rational magnitude = abs(c);
    if (first) {
      if (sgn(c) < 0) out << '-';
    } else {
      out << (sgn(c) < 0 ? " - " : " + ");
    }
    if (mask == 0) {
      out << g2spin::to_string(magnitude);
    } else {
      if (magnitude != 1) out << g2spin::to_string(magnitude) << '*';
      out << blade_label(mask);
    }
    first = false;
  }
  return out.str();
}

Multivector wedge(const Multivector& u, const Multivector& v) {
  if (u.dim() != v.dim()) throw DimensionMismatch("wedge of different ambient dimensions");
  Multivector out(u.dim());
  for (const auto& [a, ca] : u.terms()) {
    for (const auto& [b, cb] : v.terms()) {
      const int s = wedge_sign(a, b);
      if (s == 0) continue;
      out.add_term(a | b, s * ca * cb);
    }
  }
  return out;
}

Multivector hodge(const Multivector& u) {
  const BladeMask full = full_mask(u.dim());
  Multivector out(u.dim());
  // e_I ^ *e_I = vol, so *e_I = sign(I, I^c) e_{I^c}.
  for (const auto& [mask, c] : u.terms()) {
    const BladeMask complement = full & ~mask;
    out.add_term(complement, wedge_sign(mask, complement) * c);
  }
  return out;
}

Multivector contract(const Multivector& x, const Multivector& u) {
  if (x.dim() != u.dim()) throw DimensionMismatch("contract of different ambient dimensions");
  if (x.homogeneous_grade() != 1 && !x.is_zero()) throw GradeError("contract needs a 1-form");
  Multivector out(u.dim());
  for (const auto& [bit, cx] : x.terms()) {
    for (const auto& [mask, cu] : u.terms()) {
      if ((mask & bit) == 0) continue;
      // e_j _| e_I = (-1)^{#{i in I : i < j}} e_{I \ j}
      const int before = std::popcount(mask & (bit - 1));
      out.add_term(mask & ~bit, (before % 2 == 0 ? 1 : -1) * cx * cu);
    }
  }
  return out;
}

Rational inner(const Multivector& u, const Multivector& v) {
  if (u.dim() != v.dim()) throw DimensionMismatch("inner product of different ambient dimensions");
  Rational s = 0;
  for (const auto& [mask, c] : u.terms()) {
    auto it = v.terms().find(mask);
    if (it != v.terms().end()) s += c * it->second;
  }
  return s;
}

Multivector volume_form(int dim) {
  Multivector m(dim);
  m.add_term(full_mask(dim), 1);
  return m;
}

}  // namespace g2spin
