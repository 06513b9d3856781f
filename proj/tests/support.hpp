#pragma once
// Conversions between library values and the oracle representations.

#include <random>

#include "g2spin/clifford.hpp"
#include "g2spin/exterior.hpp"
#include "oracles.hpp"

namespace support {

inline oracle::Form to_form(const g2spin::Multivector& u) {
  oracle::Form f;
  for (const auto& [mask, c] : u.terms()) {
    oracle::Tuple t;
    for (int i = 0; i < u.dim(); ++i)
      if (mask & (1u << i)) t.push_back(i + 1);
    f[t] = c;
  }
  return f;
}

inline g2spin::Multivector from_form(const oracle::Form& f, int dim = 7) {
  g2spin::Multivector u(dim);
  for (const auto& [t, c] : f) u += c * g2spin::Multivector::blade(t, dim);
  return u;
}

/// Random homogeneous form of the given grade with small rational coefficients.
inline g2spin::Multivector random_form(std::mt19937_64& rng, int grade, int dim = 7, int density = 2) {
  g2spin::Multivector u(dim);
  std::uniform_int_distribution<int> keep(0, density);
  for (g2spin::BladeMask mask = 0; mask < (g2spin::BladeMask{1} << dim); ++mask) {
    if (g2spin::blade_grade(mask) != grade || keep(rng) != 0) continue;
    u.add_term(mask, oracle::random_rational(rng, 9, 5));
  }
  return u;
}

inline oracle::IMat to_imat(const g2spin::SpinEndomorphism& m) {
  oracle::IMat out{};
  for (int i = 0; i < 8; ++i)
    for (int j = 0; j < 8; ++j) out[i][j] = m(i, j).get_num().get_si();
  return out;
}

}  // namespace support
