#pragma once

// Fourier-mode spectral theory of the flat torus R^7 / (2 pi Z)^7 with its
// parallel G2-structure. A mode k spans {cos(k.x) A + sin(k.x) B : A, B in Delta},
// on which the Dirac operator acts by D (A, B) = (rho(k) B, -rho(k) A).

#include <array>
#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "g2spin/exact_eigenvalue.hpp"
#include "g2spin/exact_matrix.hpp"
#include "g2spin/g2.hpp"

namespace g2spin {

constexpr int kModeDim = 2 * kSpinDim;

struct FourierMode {
  std::array<int, 7> k{};
  std::int64_t norm_sq = 0;
  std::int64_t field_disc = 0;  // square-free part of norm_sq, 0 for k = 0

  static FourierMode from(const std::array<int, 7>& k);
  bool is_zero() const { return norm_sq == 0; }
  /// First nonzero entry positive.
  bool is_canonical() const;
  /// "(k1,...,k7)"
  std::string label() const;
  Multivector one_form() const;
};

/// Canonical modes with 1 <= |k|^2 <= max_norm_sq, ordered by |k|^2 and then
/// lexicographically descending, so e_1 precedes e_7.
std::vector<FourierMode> canonical_modes(int max_norm_sq);

struct SpectrumEntry {
  ExactEigenvalue value;
  int multiplicity = 0;
  friend bool operator==(const SpectrumEntry&, const SpectrumEntry&) = default;
};

/// Ascending by value, multiplicities positive.
using SpectrumMultiset = std::vector<SpectrumEntry>;

SpectrumMultiset merge(const SpectrumMultiset& a, const SpectrumMultiset& b);
int total_multiplicity(const SpectrumMultiset& s);

/// +-sqrt(|k|^2) as a quadratic-field element.
Quadratic mode_frequency(const FourierMode& mode, int sign);

/// The 16 x 16 matrix of D on the mode space. Throws std::invalid_argument for k = 0.
Matrix<Rational> dirac_mode_matrix(const FourierMode& mode, const G2Structure& g2 = standard_structure());

/// Multiplicities of +-|k| from the ranks of D -+ |k| Id over Q(sqrt d).
SpectrumMultiset direct_spectrum(const FourierMode& mode, const Matrix<Rational>& dirac);

/// An explicit eigenspinor on the mode space, components (A, B).
struct ModeEigenspinor {
  ExactEigenvalue eigenvalue;
  std::string origin;  // "cos", "sin", or "form"
  ExactVector<Quadratic> vector;
};

struct FunctionPrediction {
  SpectrumMultiset spectrum;
  std::vector<ModeEigenspinor> eigenspinors;
  std::vector<std::string> failures;
};

/// f = cos(k.x), sin(k.x) give psi* = f psi + df . psi / (m - 5a) for m = +-|k|.
/// Every eigenspinor is checked against the mode matrix.
FunctionPrediction predicted_from_functions(const FourierMode& mode, const G2Structure& g2 = standard_structure());

/// The cross operator Lambda_k(eta) = L(k ^ eta) with its invariants.
struct CrossOperatorCheck {
  Matrix<Rational> lambda;
  bool skew = false;
  bool annihilates_k = false;
  bool squares_to_minus_norm = false;  // on k^perp
  bool passed() const { return skew && annihilates_k && squares_to_minus_norm; }
};
CrossOperatorCheck cross_operator_check(const FourierMode& mode, const G2Structure& g2 = standard_structure());

/// A coclosed plane-wave 1-form eta = cos(k.x) eta_c + sin(k.x) eta_s with L(d eta) = c eta.
struct FormEigenvector {
  Quadratic c;
  ExactVector<Quadratic> eta_c;
  ExactVector<Quadratic> eta_s;
};

struct FormPrediction {
  SpectrumMultiset spectrum;
  std::vector<FormEigenvector> forms;
  std::vector<ModeEigenspinor> eigenspinors;  // eta . psi with Dirac eigenvalue m = 5a - c
  std::vector<std::string> failures;
};

/// Eigenforms of [[0, Lambda_k], [-Lambda_k, 0]] on coclosed pairs, mapped to spinors
/// eta . psi and checked against the mode matrix and (c eta + d eta) . psi = 0.
FormPrediction predicted_from_forms(const FourierMode& mode, const G2Structure& g2 = standard_structure());

struct KernelReport {
  std::size_t dimension = 0;            // dim ker D on constant spinors
  std::size_t function_part = 0;        // R psi
  std::size_t form_part = 0;            // constant 1-forms eta . psi
  std::size_t combined_rank = 0;        // rank of psi, e_1 . psi, ..., e_7 . psi
  bool passed() const { return dimension == 8 && function_part == 1 && form_part == 7 && combined_rank == 8; }
};
KernelReport kernel_description(const G2Structure& g2 = standard_structure());

struct Lemma2Report {
  std::vector<std::pair<Quadratic, Rational>> relations;  // (c, c(c - 8a)) per eigenform
  bool laplace_matches = false;    // Delta_1 eta = |k|^2 eta = c(c - 8a) eta for each eigenform
  std::size_t harmonic_dim = 0;    // coclosed eta with d eta . psi = 0
  std::vector<std::string> failures;
  bool passed() const { return laplace_matches && harmonic_dim == 0 && failures.empty(); }
};
Lemma2Report lemma2_flat_check(const FourierMode& mode, const G2Structure& g2 = standard_structure());

struct ModeSpectrum {
  FourierMode mode;
  SpectrumMultiset direct;
  SpectrumMultiset predicted_functions;
  SpectrumMultiset predicted_forms;
  bool square_ok = false;     // D^2 = |k|^2 Id
  bool trace_zero = false;
  bool spans_ok = false;      // eigenspinors of both families span each eigenspace
  bool lemma2_ok = false;
  std::vector<std::string> failures;
  bool matches() const { return failures.empty(); }
};

/// All per-mode checks for one nonzero mode.
ModeSpectrum analyze_mode(const FourierMode& mode, const G2Structure& g2 = standard_structure());

struct SweepSummary {
  int max_norm_sq = 0;
  std::size_t mode_count = 0;
  std::size_t failed_modes = 0;
  KernelReport kernel;
  Rational mu1_D2;                      // 0 when the kernel is nontrivial
  Rational mu2_direct;                  // smallest nonzero m^2 in the direct spectra
  Rational lambda0_1;                   // smallest |k|^2 with a function eigenspinor
  Rational lambda1_plus_1;              // smallest |k|^2 giving m = -sqrt(lambda) from forms
  Rational lambda1_minus_1;             // smallest |k|^2 giving m = +sqrt(lambda) from forms
  ExactEigenvalue mu2_corollary;        // min(lambda0_1, lambda1_plus_1, lambda1_minus_1) by the spectral module
  std::vector<std::string> failures;    // "k=(...): reason"
  bool passed() const;
};

struct SweepResult {
  std::vector<ModeSpectrum> modes;
  SweepSummary summary;
};

/// Throws std::invalid_argument for max_norm_sq < 1.
SweepResult spectrum_sweep(int max_norm_sq, const G2Structure& g2 = standard_structure());

}  // namespace g2spin
