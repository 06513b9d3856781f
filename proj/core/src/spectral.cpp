#include "g2spin/spectral.hpp"

#include <algorithm>
#include <array>

namespace g2spin {

namespace {

constexpr std::array<std::pair<GeometryClass, std::string_view>, 8> kClassNames{{
    {GeometryClass::Parallel, "Parallel"},
    {GeometryClass::ProperNearlyParallel, "ProperNearlyParallel"},
    {GeometryClass::ProperWithKillingField, "ProperWithKillingField"},
    {GeometryClass::SasakiEinstein, "SasakiEinstein"},
    {GeometryClass::SasakiEinsteinIsomGe2, "SasakiEinsteinIsomGe2"},
    {GeometryClass::SasakiEinsteinRegularQuotient, "SasakiEinsteinRegularQuotient"},
    {GeometryClass::ThreeSasakian, "ThreeSasakian"},
    {GeometryClass::Generic, "Generic"},
}};

Rational abs_rational(const Rational& r) { return sgn(r) < 0 ? Rational(-r) : r; }

bool is_sasakian(GeometryClass c) {
  return c == GeometryClass::SasakiEinstein || c == GeometryClass::SasakiEinsteinIsomGe2 ||
         c == GeometryClass::SasakiEinsteinRegularQuotient || c == GeometryClass::ThreeSasakian;
}

// Eigenvalue families of the n = 7 theorem, as functions of the input eigenvalue.
ExactEigenvalue function_root(const Rational& a, const Rational& lambda, int sign) {
  return ExactEigenvalue(-a, sign, 36 * a * a + lambda);
}
ExactEigenvalue form_plus_value(const Rational& a, const Rational& lambda) {
  return ExactEigenvalue(a, -1, 16 * a * a + lambda);
}
ExactEigenvalue form_minus_value(const Rational& a, const Rational& lambda) {
  return ExactEigenvalue(a, 1, 16 * a * a + lambda);
}

const Rational& require(const std::vector<Rational>& list, std::size_t index, const std::string& name,
                        GeometryClass c) {
  if (list.size() <= index) {
    throw MissingSpectrum(name + " is required for class " + to_string(c));
  }
  return list[index];
}

void check_list(const std::vector<Rational>& list, const std::string& name) {
  for (std::size_t i = 0; i < list.size(); ++i) {
    if (sgn(list[i]) < 0) throw std::invalid_argument(name + " contains a negative eigenvalue");
    if (i > 0 && !(list[i - 1] < list[i])) throw std::invalid_argument(name + " must be strictly ascending");
  }
}

std::string describe(const std::string& name, const Rational& value) { return name + " = " + to_string(value); }

}  // namespace

std::string to_string(GeometryClass c) {
  for (const auto& [cls, name] : kClassNames)
    if (cls == c) return std::string(name);
  throw std::logic_error("unknown geometry class");
}

GeometryClass parse_geometry_class(std::string_view name) {
  for (const auto& [cls, n] : kClassNames)
    if (n == name) return cls;
  throw std::invalid_argument("unknown geometry class \"" + std::string(name) + "\"");
}

int killing_spinor_count(GeometryClass c) {
  switch (c) {
    case GeometryClass::SasakiEinstein:
    case GeometryClass::SasakiEinsteinIsomGe2:
    case GeometryClass::SasakiEinsteinRegularQuotient:
      return 2;
    case GeometryClass::ThreeSasakian:
      return 3;
    default:
      return 1;
  }
}

bool has_preserving_killing_field(GeometryClass c) {
  return c == GeometryClass::ProperWithKillingField || c == GeometryClass::SasakiEinsteinIsomGe2 ||
         c == GeometryClass::SasakiEinsteinRegularQuotient || c == GeometryClass::ThreeSasakian;
}

std::string to_string(BoundKind k) {
  switch (k) {
    case BoundKind::Upper:
      return "upper";
    case BoundKind::Lower:
      return "lower";
    case BoundKind::Equality:
      return "equality";
  }
  return "?";
}

std::string DiracValue::tag() const {
  switch (source) {
    case SourceTag::Killing:
      return "killing";
    case SourceTag::Function:
      return "function_" + std::to_string(index);
    case SourceTag::FormPlus:
      return "form_plus_" + std::to_string(index);
    case SourceTag::FormMinus:
      return "form_minus_" + std::to_string(index);
  }
  return "?";
}

Rational SpectralInput::scalar_curvature() const { return 4 * a * a * n * (n - 1); }

void SpectralInput::validate() const {
  if (n < 3) throw std::invalid_argument("dimension n must be at least 3");
  check_list(lambda0, "lambda0");
  check_list(lambda1_plus, "lambda1_plus");
  check_list(lambda1_minus, "lambda1_minus");
  if (!lambda0.empty() && sgn(lambda0.front()) == 0) {
    throw std::invalid_argument("lambda0 lists positive eigenvalues only");
  }
  if (Lambda1 && sgn(*Lambda1) < 0) throw std::invalid_argument("Lambda1 must be non-negative");
}

Rational function_eigenvalue_relation(int n, const Rational& a, const ExactEigenvalue& m) {
  // m^2 + 2am = (p^2 + q + 2ap) + 2s(p + a) sqrt(q)
  if (m.s() != 0 && m.p() != -a) {
    throw std::domain_error("m = " + m.to_string() + " does not have the form -a +- sqrt(...)");
  }
  const Rational& p = m.p();
  return p * p + m.q() + 2 * a * p + a * a * (2 * n - n * n);
}

std::pair<ExactEigenvalue, ExactEigenvalue> dirac_from_function(int n, const Rational& a, const Rational& lambda0) {
  if (sgn(lambda0) <= 0) throw std::invalid_argument("lambda0 must be positive");
  const Rational radicand = lambda0 + a * a * (1 - n) * (1 - n);
  return {ExactEigenvalue(-a, 1, radicand), ExactEigenvalue(-a, -1, radicand)};
}

ExactEigenvalue eigenspinor_coefficient(int n, const Rational& a, const ExactEigenvalue& m) {
  if (m == ExactEigenvalue(-n * a)) {
    throw DegenerateBranch("m = -na is the Killing branch: f is constant and df = 0");
  }
  const ExactEigenvalue denominator = m + Rational(2 * a - n * a);
  if (denominator.sign() == 0) throw DegenerateBranch("m + 2a - na vanishes");
  return denominator.reciprocal();
}

ExactEigenvalue killing_form_eigenvalue(int n, const Rational& a) { return ExactEigenvalue(Rational((n + 2) * a)); }

Rational lemma2_lambda(int n, const Rational& a, const Rational& c) { return c * (c - (2 * n - 6) * a); }

Floors floors(int n, const Rational& a) { return {8 * (n - 1) * a * a, 4 * a * a * n}; }

bool FunctionBound::requires_pure_form(const ExactEigenvalue& mu) const { return mu1 < mu && mu < upper; }

FunctionBound theorem21_bounds(int n, const Rational& a, const Rational& lambda0_1) {
  if (sgn(lambda0_1) <= 0) throw std::invalid_argument("lambda0_1 must be positive");
  const Rational radicand = lambda0_1 + a * a * (1 - n) * (1 - n);
  const ExactEigenvalue root(-abs_rational(a), 1, radicand);
  return {ExactEigenvalue(Rational(n * n * a * a)), root.squared()};
}

ExactEigenvalue theorem25_form_bound(int n, const Rational& a, const Rational& Lambda1) {
  const Rational floor = floors(n, a).gallot_meyer;
  if (Lambda1 < floor) {
    throw std::invalid_argument("Lambda1 = " + to_string(Lambda1) + " lies below the Gallot-Meyer floor " +
                                to_string(floor));
  }
  return ExactEigenvalue(-abs_rational(a), 1, Lambda1 + a * a * (n - 3) * (n - 3));
}

ExactEigenvalue form_coefficient_bound(int n, const Rational& a, const Rational& Lambda1) {
  const Rational floor = floors(n, a).gallot_meyer;
  if (Lambda1 < floor) {
    throw std::invalid_argument("Lambda1 = " + to_string(Lambda1) + " lies below the Gallot-Meyer floor " +
                                to_string(floor));
  }
  return ExactEigenvalue(-(n - 3) * abs_rational(a), 1, Lambda1 + a * a * (n - 3) * (n - 3));
}

SideConditions proper_nearly_parallel_side_conditions(const Rational& a, const Rational& lambda0_1,
                                                      const Rational& lambda1_minus_1) {
  SideConditions s;
  s.form_minus_value = form_minus_value(a, lambda1_minus_1);
  s.function_value = function_root(a, lambda0_1, -1);
  const ExactEigenvalue nine_a(Rational(9 * a));
  s.form_minus_holds = s.form_minus_value >= nine_a;
  s.form_minus_equality = s.form_minus_value == nine_a;
  s.function_holds = s.function_value <= -nine_a;
  s.function_equality = s.function_value == -nine_a;
  return s;
}

SpectralInput with_pinned_values(const SpectralInput& input, std::vector<std::string>* notes) {
  SpectralInput out = input;
  if (input.n != 7) return out;
  const Rational pinned = 48 * input.a * input.a;
  auto pin = [&](std::vector<Rational>& list, const std::string& name) {
    if (!list.empty()) return;
    list.push_back(pinned);
    if (notes) notes->push_back(name + "_1 pinned to 48a^2 = " + to_string(pinned) + " by class " +
                                to_string(input.geometry_class));
  };
  switch (input.geometry_class) {
    case GeometryClass::ProperWithKillingField:
      pin(out.lambda1_minus, "lambda1_minus");
      break;
    case GeometryClass::SasakiEinstein:
      pin(out.lambda1_plus, "lambda1_plus");
      break;
    case GeometryClass::SasakiEinsteinIsomGe2:
    case GeometryClass::SasakiEinsteinRegularQuotient:
    case GeometryClass::ThreeSasakian:
      pin(out.lambda1_plus, "lambda1_plus");
      pin(out.lambda1_minus, "lambda1_minus");
      break;
    default:
      break;
  }
  return out;
}

SpectrumReport dirac_spectrum_n7(const SpectralInput& raw) {
  if (raw.n != 7) throw std::invalid_argument("dirac_spectrum_n7 needs n = 7");
  raw.validate();
  SpectrumReport report;
  const SpectralInput in = with_pinned_values(raw, &report.notes);
  const Rational& a = in.a;

  report.n = 7;
  report.mu1_D2 = ExactEigenvalue(Rational(49 * a * a));
  auto& values = report.dirac_values;
  values.push_back({ExactEigenvalue(Rational(-7 * a)), SourceTag::Killing, 0});
  for (std::size_t i = 0; i < in.lambda0.size(); ++i) {
    const int idx = static_cast<int>(i + 1);
    values.push_back({function_root(a, in.lambda0[i], 1), SourceTag::Function, idx});
    values.push_back({function_root(a, in.lambda0[i], -1), SourceTag::Function, idx});
  }
  for (std::size_t i = 0; i < in.lambda1_plus.size(); ++i)
    values.push_back({form_plus_value(a, in.lambda1_plus[i]), SourceTag::FormPlus, static_cast<int>(i + 1)});
  for (std::size_t i = 0; i < in.lambda1_minus.size(); ++i)
    values.push_back({form_minus_value(a, in.lambda1_minus[i]), SourceTag::FormMinus, static_cast<int>(i + 1)});

  // Each family's |m| grows with its input eigenvalue, so anything generated by an
  // unlisted (larger) eigenvalue exceeds the family's value at the last listed one.
  auto last = [](const std::vector<Rational>& list) { return list.empty() ? Rational(0) : list.back(); };
  const ExactEigenvalue horizon =
      min(min(ExactEigenvalue(-abs_rational(a), 1, 36 * a * a + last(in.lambda0)),
              form_plus_value(a, last(in.lambda1_plus)).abs()),
          form_minus_value(a, last(in.lambda1_minus)).abs());
  report.completeness_horizon = horizon;
  for (auto& v : values) v.certified = v.value.abs() <= horizon;

  std::stable_sort(values.begin(), values.end(), [](const DiracValue& x, const DiracValue& y) {
    const int c = compare(x.value.abs(), y.value.abs());
    if (c != 0) return c < 0;
    return x.value < y.value;
  });
  return report;
}

Mu2Result mu2_n7(const SpectralInput& raw) {
  if (raw.n != 7) throw std::invalid_argument("mu2_n7 needs n = 7");
  raw.validate();
  const GeometryClass cls = raw.geometry_class;
  const Rational& a = raw.a;
  if (cls == GeometryClass::Parallel && sgn(a) != 0) throw std::invalid_argument("class Parallel needs a = 0");
  if ((cls == GeometryClass::ProperNearlyParallel || cls == GeometryClass::ProperWithKillingField) && sgn(a) <= 0) {
    throw std::invalid_argument("class " + to_string(cls) + " needs a > 0");
  }
  if (is_sasakian(cls) && a != Rational(1, 2)) {
    throw std::invalid_argument("class " + to_string(cls) + " is normalized to a = 1/2");
  }

  Mu2Result result;
  const SpectralInput in = with_pinned_values(raw, &result.notes);
  const Rational a2 = a * a;
  auto violation = [&](bool ok, const std::string& text) {
    if (!ok) result.violations.push_back(text);
  };

  auto function_slot = [&](const Rational& l) { return function_root(a, l, 1).squared(); };
  auto form_plus_slot = [&](const Rational& l) { return form_plus_value(a, l).squared(); };
  auto form_minus_slot = [&](const Rational& l) { return form_minus_value(a, l).squared(); };
  const ExactEigenvalue killing_field_slot(Rational(81 * a2));

  auto& slots = result.slots;
  switch (cls) {
    case GeometryClass::Parallel: {
      const Rational& l0 = require(in.lambda0, 0, "lambda0_1", cls);
      const Rational& lp = require(in.lambda1_plus, 0, "lambda1_plus_1", cls);
      const Rational& lm = require(in.lambda1_minus, 0, "lambda1_minus_1", cls);
      violation(sgn(lp) > 0, describe("lambda1_plus_1", lp) + " must be positive");
      violation(sgn(lm) > 0, describe("lambda1_minus_1", lm) + " must be positive");
      slots = {{"lambda0_1", l0, BoundKind::Equality},
               {"lambda1_plus_1", lp, BoundKind::Equality},
               {"lambda1_minus_1", lm, BoundKind::Equality}};
      break;
    }
    case GeometryClass::ProperNearlyParallel: {
      const Rational& l0 = require(in.lambda0, 0, "lambda0_1", cls);
      const Rational& lp = require(in.lambda1_plus, 0, "lambda1_plus_1", cls);
      const Rational& lm = require(in.lambda1_minus, 0, "lambda1_minus_1", cls);
      violation(l0 > 28 * a2, describe("lambda0_1", l0) + " must exceed 28a^2");
      violation(lp > 48 * a2, describe("lambda1_plus_1", lp) + " must exceed 48a^2");
      violation(lm >= 48 * a2, describe("lambda1_minus_1", lm) + " must be at least 48a^2");
      const SideConditions side = proper_nearly_parallel_side_conditions(a, l0, lm);
      violation(side.form_minus_holds, "sqrt(16a^2 + lambda1_minus_1) + a >= 9a fails");
      violation(side.function_holds, "-a - sqrt(36a^2 + lambda0_1) <= -9a fails");
      slots = {{"function", function_slot(l0), BoundKind::Equality},
               {"form_plus", form_plus_slot(lp), BoundKind::Equality},
               {"form_minus", form_minus_slot(lm), BoundKind::Equality}};
      break;
    }
    case GeometryClass::ProperWithKillingField: {
      const Rational& l0 = require(in.lambda0, 0, "lambda0_1", cls);
      const Rational& lp = require(in.lambda1_plus, 0, "lambda1_plus_1", cls);
      violation(l0 > 28 * a2, describe("lambda0_1", l0) + " must exceed 28a^2");
      violation(lp > 48 * a2, describe("lambda1_plus_1", lp) + " must exceed 48a^2");
      violation(in.lambda1_minus.front() == 48 * a2,
                describe("lambda1_minus_1", in.lambda1_minus.front()) + " must equal 48a^2");
      slots = {{"function", function_slot(l0), BoundKind::Equality},
               {"form_plus", form_plus_slot(lp), BoundKind::Equality},
               {"killing_field", killing_field_slot, BoundKind::Equality}};
      break;
    }
    case GeometryClass::SasakiEinstein: {
      const Rational& l0 = require(in.lambda0, 0, "lambda0_1", cls);
      const Rational& lp2 = require(in.lambda1_plus, 1, "lambda1_plus_2", cls);
      const Rational& lm = require(in.lambda1_minus, 0, "lambda1_minus_1", cls);
      violation(l0 > 28 * a2, describe("lambda0_1", l0) + " must exceed 28a^2");
      violation(in.lambda1_plus.front() == 48 * a2,
                describe("lambda1_plus_1", in.lambda1_plus.front()) + " must equal 48a^2");
      violation(lm >= 48 * a2, describe("lambda1_minus_1", lm) + " must be at least 48a^2");
      slots = {{"function", function_slot(l0), BoundKind::Equality},
               {"form_plus_2", form_plus_slot(lp2), BoundKind::Equality},
               {"form_minus", form_minus_slot(lm), BoundKind::Equality}};
      break;
    }
    case GeometryClass::SasakiEinsteinIsomGe2:
    case GeometryClass::ThreeSasakian: {
      const Rational& l0 = require(in.lambda0, 0, "lambda0_1", cls);
      const Rational& lp2 = require(in.lambda1_plus, 1, "lambda1_plus_2", cls);
      violation(l0 > 28 * a2, describe("lambda0_1", l0) + " must exceed 28a^2");
      violation(in.lambda1_plus.front() == 48 * a2,
                describe("lambda1_plus_1", in.lambda1_plus.front()) + " must equal 48a^2");
      violation(in.lambda1_minus.front() == 48 * a2,
                describe("lambda1_minus_1", in.lambda1_minus.front()) + " must equal 48a^2");
      slots = {{"function", function_slot(l0), BoundKind::Equality},
               {"form_plus_2", form_plus_slot(lp2), BoundKind::Equality},
               {"killing_field", killing_field_slot, BoundKind::Equality}};
      break;
    }
    case GeometryClass::SasakiEinsteinRegularQuotient: {
      const Rational& lp2 = require(in.lambda1_plus, 1, "lambda1_plus_2", cls);
      violation(in.lambda1_plus.front() == 48 * a2,
                describe("lambda1_plus_1", in.lambda1_plus.front()) + " must equal 48a^2");
      violation(in.lambda1_minus.front() == 48 * a2,
                describe("lambda1_minus_1", in.lambda1_minus.front()) + " must equal 48a^2");
      if (!in.lambda0.empty()) {
        violation(in.lambda0.front() >= 16, describe("lambda0_1", in.lambda0.front()) +
                                                " must be at least 16 (quotient Kaehler-Einstein bound)");
      }
      slots = {{"form_plus_2", form_plus_slot(lp2), BoundKind::Equality},
               {"killing_field", killing_field_slot, BoundKind::Equality}};
      break;
    }
    case GeometryClass::Generic: {
      const Rational& l0 = require(in.lambda0, 0, "lambda0_1", cls);
      const FunctionBound b = theorem21_bounds(7, a, l0);
      slots = {{"function_upper_bound", b.upper, BoundKind::Upper}};
      result.kind = BoundKind::Upper;
      break;
    }
  }

  if (in.Lambda1) {
    violation(*in.Lambda1 >= 48 * a2, describe("Lambda1", *in.Lambda1) + " lies below 48a^2");
    if (!in.lambda1_plus.empty()) {
      violation(*in.Lambda1 <= in.lambda1_plus.front(), "Lambda1 must not exceed lambda1_plus_1");
    }
    if (!in.lambda1_minus.empty()) {
      violation(*in.Lambda1 <= in.lambda1_minus.front(), "Lambda1 must not exceed lambda1_minus_1");
    }
  }

  std::size_t best = 0;
  for (std::size_t i = 1; i < slots.size(); ++i)
    if (slots[i].value < slots[best].value) best = i;
  result.value = slots[best].value;
  result.slot = slots[best].name;
  if (in.illustrative) result.notes.push_back("inputs are illustrative");
  return result;
}

SpectrumReport predict(const SpectralInput& input) {
  input.validate();
  const int n = input.n;
  const Rational& a = input.a;
  SpectrumReport report;
  if (n == 7) {
    report = dirac_spectrum_n7(input);
    try {
      report.mu2 = mu2_n7(input);
    } catch (const MissingSpectrum& e) {
      report.notes.push_back(std::string("mu2 not determined: ") + e.what());
    }
  } else {
    report.n = n;
    report.mu1_D2 = ExactEigenvalue(Rational(n * n * a * a));
    report.dirac_values.push_back({ExactEigenvalue(Rational(-n * a)), SourceTag::Killing, 0});
    for (std::size_t i = 0; i < input.lambda0.size(); ++i) {
      const auto [plus, minus] = dirac_from_function(n, a, input.lambda0[i]);
      report.dirac_values.push_back({plus, SourceTag::Function, static_cast<int>(i + 1)});
      report.dirac_values.push_back({minus, SourceTag::Function, static_cast<int>(i + 1)});
    }
    report.notes.push_back("n != 7: 1-form eigenvalues are not determined; listed values are a subset");
  }

  const Floors f = floors(n, a);
  auto& bounds = report.bounds;
  bounds.push_back({"mu1_D2", report.mu1_D2, BoundKind::Equality});
  bounds.push_back({"gallot_meyer_floor", ExactEigenvalue(f.gallot_meyer), BoundKind::Lower});
  bounds.push_back({"lichnerowicz_obata_floor", ExactEigenvalue(f.lichnerowicz_obata), BoundKind::Lower});

  std::optional<ExactEigenvalue> best_upper;
  std::string best_name;
  auto offer_upper = [&](const std::string& name, const ExactEigenvalue& v) {
    bounds.push_back({name, v, BoundKind::Upper});
    if (!best_upper || v < *best_upper) {
      best_upper = v;
      best_name = name;
    }
  };
  if (!input.lambda0.empty()) offer_upper("function_upper_bound", theorem21_bounds(n, a, input.lambda0.front()).upper);
  if (has_preserving_killing_field(input.geometry_class)) {
    const ExactEigenvalue m = killing_form_eigenvalue(n, a);
    bounds.push_back({"killing_field_eigenvalue", m, BoundKind::Equality});
    offer_upper("killing_field_bound", m.squared());
  }
  if (input.Lambda1) {
    bounds.push_back({"form_eigenvalue_lower_bound", theorem25_form_bound(n, a, *input.Lambda1), BoundKind::Lower});
    bounds.push_back(
        {"form_coefficient_lower_bound", form_coefficient_bound(n, a, *input.Lambda1), BoundKind::Lower});
  }

  if (n != 7 && best_upper) {
    Mu2Result m;
    m.value = *best_upper;
    m.slot = best_name;
    m.kind = BoundKind::Upper;
    for (const auto& b : bounds)
      if (b.kind == BoundKind::Upper) m.slots.push_back(b);
    report.mu2 = m;
  }
  if (n == 5 && is_sasakian(input.geometry_class)) {
    report.notes.push_back("lambda0_1 >= 5 on the special families with computed spectra");
  }
  if (input.illustrative) report.notes.push_back("inputs are illustrative");
  return report;
}

SpectralInput preset(std::string_view name) {
  SpectralInput in;
  if (name == "sasaki5") {
    in.n = 5;
    in.a = Rational(1, 2);
    in.geometry_class = GeometryClass::SasakiEinsteinIsomGe2;
    in.lambda0 = {Rational(33, 4)};
  } else if (name == "torus") {
    in.n = 7;
    in.a = 0;
    in.geometry_class = GeometryClass::Parallel;
    in.lambda0 = {1, 2, 3, 4};
    in.lambda1_plus = {1, 2, 3, 4};
    in.lambda1_minus = {1, 2, 3, 4};
  } else if (name == "three-sasakian") {
    in.n = 7;
    in.a = Rational(1, 2);
    in.geometry_class = GeometryClass::ThreeSasakian;
    in.lambda1_plus = {12};
    in.lambda1_minus = {12};
  } else {
    throw std::invalid_argument("unknown preset \"" + std::string(name) + "\"");
  }
  return in;
}

}  // namespace g2spin
