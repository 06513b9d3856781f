#pragma once

// Closed-form Dirac eigenvalue relations for manifolds with a Killing spinor
// (Killing number a, dimension n), and the mu_2(D^2) formulas in dimension 7.

#include <optional>
#include <stdexcept>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "g2spin/exact_eigenvalue.hpp"
#include "g2spin/scalar.hpp"

namespace g2spin {

/// A required eigenvalue slot was not supplied.
class MissingSpectrum : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

/// m + 2a - na = 0: the Killing branch, which has no function-type eigenspinor.
class DegenerateBranch : public std::domain_error {
 public:
  using std::domain_error::domain_error;
};

enum class GeometryClass {
  Parallel,
  ProperNearlyParallel,
  ProperWithKillingField,
  SasakiEinstein,
  SasakiEinsteinIsomGe2,
  SasakiEinsteinRegularQuotient,
  ThreeSasakian,
  Generic,
};

std::string to_string(GeometryClass c);
/// Accepts the enumerator spelling, e.g. "ProperNearlyParallel".
GeometryClass parse_geometry_class(std::string_view name);
/// Dimension of the space of Killing spinors (lower bound for Parallel and Generic).
int killing_spinor_count(GeometryClass c);
/// Classes admitting a Killing vector field that preserves the Killing spinor.
bool has_preserving_killing_field(GeometryClass c);

struct SpectralInput {
  int n = 7;
  Rational a;
  GeometryClass geometry_class = GeometryClass::Generic;
  std::vector<Rational> lambda0;        // Laplace spectrum on functions, ascending, positive
  std::vector<Rational> lambda1_plus;   // lambda^1_{i,+}
  std::vector<Rational> lambda1_minus;  // lambda^1_{i,-}
  std::optional<Rational> Lambda1;      // first coclosed eigenvalue of Delta_1
  bool illustrative = false;            // inputs not taken from a known manifold

  /// R = 4 a^2 n (n - 1)
  Rational scalar_curvature() const;
  /// Structural checks: n >= 3, lists strictly ascending and non-negative.
  void validate() const;
};

enum class BoundKind { Upper, Lower, Equality };
std::string to_string(BoundKind k);

struct NamedBound {
  std::string name;
  ExactEigenvalue value;
  BoundKind kind;
};

enum class SourceTag { Killing, Function, FormPlus, FormMinus };

struct DiracValue {
  ExactEigenvalue value;
  SourceTag source;
  int index = 0;  // 1-based position in the generating list; 0 for the Killing value
  bool certified = false;
  /// "killing", "function_i", "form_plus_i" or "form_minus_i"
  std::string tag() const;
};

struct Mu2Result {
  ExactEigenvalue value;
  std::string slot;  // name of the slot achieving the minimum
  BoundKind kind = BoundKind::Equality;
  std::vector<NamedBound> slots;
  std::vector<std::string> violations;
  std::vector<std::string> notes;
};

struct SpectrumReport {
  int n = 7;
  std::vector<DiracValue> dirac_values;  // sorted by |value|, then value
  std::optional<ExactEigenvalue> completeness_horizon;
  ExactEigenvalue mu1_D2;
  std::optional<Mu2Result> mu2;
  std::vector<NamedBound> bounds;
  std::vector<std::string> notes;
};

/// m^2 + 2am + a^2 (2n - n^2); throws std::domain_error when the result is irrational.
Rational function_eigenvalue_relation(int n, const Rational& a, const ExactEigenvalue& m);

/// The two roots -a +- sqrt(lambda0 + a^2 (1 - n)^2), "+" root first.
std::pair<ExactEigenvalue, ExactEigenvalue> dirac_from_function(int n, const Rational& a, const Rational& lambda0);

/// 1 / (m + 2a - na); throws DegenerateBranch when the denominator vanishes.
ExactEigenvalue eigenspinor_coefficient(int n, const Rational& a, const ExactEigenvalue& m);

/// (n + 2) a, the eigenvalue of X . psi for a spinor-preserving Killing field X.
ExactEigenvalue killing_form_eigenvalue(int n, const Rational& a);

/// c (c - (2n - 6) a)
Rational lemma2_lambda(int n, const Rational& a, const Rational& c);

struct Floors {
  Rational gallot_meyer;        // 8 (n - 1) a^2, lower bound for Lambda_1
  Rational lichnerowicz_obata;  // 4 a^2 n, strict lower bound for lambda^0_1 off the sphere
};
Floors floors(int n, const Rational& a);

struct FunctionBound {
  ExactEigenvalue mu1;    // n^2 a^2
  ExactEigenvalue upper;  // (sqrt(lambda0_1 + a^2 (1 - n)^2) - |a|)^2
  /// True when mu1 < mu < upper: any such eigenspinor is orthogonal to psi pointwise.
  bool requires_pure_form(const ExactEigenvalue& mu) const;
};
FunctionBound theorem21_bounds(int n, const Rational& a, const Rational& lambda0_1);

/// Lower bound sqrt(Lambda1 + a^2 (n - 3)^2) - |a| for |m| of a 1-form eigenspinor.
/// Throws std::invalid_argument below the Gallot-Meyer floor.
ExactEigenvalue theorem25_form_bound(int n, const Rational& a, const Rational& Lambda1);

/// Lower bound sqrt(Lambda1 + a^2 (n - 3)^2) - (n - 3)|a| for |c| in (c eta + d eta) . psi = 0.
ExactEigenvalue form_coefficient_bound(int n, const Rational& a, const Rational& Lambda1);

/// Side conditions of the one-Killing-spinor corollary.
struct SideConditions {
  ExactEigenvalue form_minus_value;  // sqrt(16a^2 + lambda1_minus_1) + a, must be >= 9a
  ExactEigenvalue function_value;    // -a - sqrt(36a^2 + lambda0_1), must be <= -9a
  bool form_minus_holds = false;
  bool function_holds = false;
  bool form_minus_equality = false;
  bool function_equality = false;
};
SideConditions proper_nearly_parallel_side_conditions(const Rational& a, const Rational& lambda0_1,
                                                      const Rational& lambda1_minus_1);

/// Values pinned by the geometry class (e.g. lambda1_plus_1 = 48 a^2 with two Killing spinors)
/// inserted where the input lists are empty. Conflicts are left in place and reported by mu2_n7.
SpectralInput with_pinned_values(const SpectralInput& input, std::vector<std::string>* notes = nullptr);

/// Tagged union of the four eigenvalue families of the n = 7 transfer theorem.
SpectrumReport dirac_spectrum_n7(const SpectralInput& input);

/// mu_2(D^2) by the corollary matching the geometry class.
Mu2Result mu2_n7(const SpectralInput& input);

/// Everything the calculator knows for the input: Dirac values, mu_1, mu_2, named bounds.
SpectrumReport predict(const SpectralInput& input);

/// Named inputs: "sasaki5", "torus", "three-sasakian".
SpectralInput preset(std::string_view name);

}  // namespace g2spin
