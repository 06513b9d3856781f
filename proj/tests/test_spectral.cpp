#include <gtest/gtest.h>

#include "g2spin/spectral.hpp"
#include "oracles.hpp"

using namespace g2spin;
using oracle::Real;

namespace {

ExactEigenvalue ev(const Rational& p, int s = 0, const Rational& q = 0) { return ExactEigenvalue(p, s, q); }

Real real(const ExactEigenvalue& x) { return oracle::radical(x.p(), x.s(), x.q()); }

bool close(const Real& a, const Real& b) { return boost::multiprecision::abs(a - b) < Real("1e-50"); }

const Rational half(1, 2);

SpectralInput input7(GeometryClass cls, Rational a) {
  SpectralInput in;
  in.n = 7;
  in.a = a;
  in.geometry_class = cls;
  return in;
}

}  // namespace

TEST(FunctionRelation, Examples) {
  EXPECT_EQ(function_eigenvalue_relation(7, 0, ev(3)), 9);
  const auto [plus, minus] = dirac_from_function(7, half, 12);
  EXPECT_EQ(function_eigenvalue_relation(7, half, plus), 12);
  EXPECT_EQ(function_eigenvalue_relation(7, half, minus), 12);
  EXPECT_EQ(function_eigenvalue_relation(5, half, ev(Rational(7, 2))), 12);
  EXPECT_THROW(function_eigenvalue_relation(7, half, ev(0, 1, 2)), std::domain_error);
}

TEST(DiracFromFunction, Examples) {
  const auto [p5, m5] = dirac_from_function(5, half, Rational(33, 4));
  EXPECT_EQ(p5, ev(3));
  EXPECT_EQ(m5, ev(-4));
  const auto [p0, m0] = dirac_from_function(7, 0, 1);
  EXPECT_EQ(p0, ev(1));
  EXPECT_EQ(m0, ev(-1));
  const auto [pf, mf] = dirac_from_function(7, half, 7);
  EXPECT_EQ(pf, ev(Rational(7, 2)));
  EXPECT_EQ(mf, ev(Rational(-9, 2)));
}

TEST(DiracFromFunction, RadicandFormsAgreeInDimensionSeven) {
  std::mt19937_64 rng(51);
  for (int t = 0; t < 100; ++t) {
    const Rational a = oracle::random_rational(rng, 6, 4);
    const Rational l = abs(oracle::random_rational(rng, 40, 7)) + 1;
    const auto [plus, minus] = dirac_from_function(7, a, l);
    EXPECT_EQ(plus, ev(-a, 1, 36 * a * a + l));
    EXPECT_EQ(minus, ev(-a, -1, 36 * a * a + l));
  }
}

TEST(DiracFromFunction, RoundTripRandom) {
  std::mt19937_64 rng(52);
  for (int t = 0; t < 1000; ++t) {
    const int n = 3 + t % 6;
    const Rational a = oracle::random_rational(rng, 6, 4);
    const Rational l = abs(oracle::random_rational(rng, 50, 9)) + Rational(1, 9);
    const auto [plus, minus] = dirac_from_function(n, a, l);
    EXPECT_EQ(function_eigenvalue_relation(n, a, plus), l);
    EXPECT_EQ(function_eigenvalue_relation(n, a, minus), l);
    const Real ra = oracle::to_real(a);
    const Real root = boost::multiprecision::sqrt(oracle::to_real(l) + ra * ra * (1 - n) * (1 - n));
    EXPECT_TRUE(close(real(plus), -ra + root));
    EXPECT_TRUE(close(real(minus), -ra - root));
  }
}

TEST(FormRelation, SubstitutionRandom) {
  // (3a + m)(m - 5a) = lambda for m = a +- sqrt(16 a^2 + lambda)
  std::mt19937_64 rng(53);
  for (int t = 0; t < 1000; ++t) {
    const Rational a = oracle::random_rational(rng, 6, 4);
    const Rational l = abs(oracle::random_rational(rng, 50, 9));
    for (int s : {1, -1}) {
      const ExactEigenvalue m(a, s, 16 * a * a + l);
      const ExactEigenvalue x = m + 3 * a, y = m - 5 * a;
      // (p1 + s sqrt q)(p2 + s sqrt q) with the same radical
      ASSERT_EQ(x.q(), y.q());
      const Rational rational_part = x.p() * y.p() + (x.s() * y.s()) * x.q();
      const Rational radical_part = x.s() * y.p() + y.s() * x.p();
      EXPECT_EQ(rational_part, l);
      EXPECT_TRUE(x.s() == 0 || radical_part == 0);
    }
  }
}

TEST(EigenspinorCoefficient, Examples) {
  EXPECT_EQ(eigenspinor_coefficient(7, 0, ev(1)), ev(1));
  EXPECT_EQ(eigenspinor_coefficient(5, half, ev(3)), ev(Rational(2, 3)));
  EXPECT_THROW(eigenspinor_coefficient(7, half, ev(Rational(-7, 2))), DegenerateBranch);
  EXPECT_THROW(eigenspinor_coefficient(7, half, ev(Rational(5, 2))), DegenerateBranch);
  // 1 / (sqrt 2 - 0) at a = 0
  const ExactEigenvalue c = eigenspinor_coefficient(7, 0, ev(0, 1, 2));
  EXPECT_TRUE(close(real(c), 1 / boost::multiprecision::sqrt(Real(2))));
}

TEST(KillingFormEigenvalue, Examples) {
  EXPECT_EQ(killing_form_eigenvalue(5, half), ev(Rational(7, 2)));
  EXPECT_EQ(killing_form_eigenvalue(5, half).squared(), ev(Rational(49, 4)));
  EXPECT_EQ(killing_form_eigenvalue(7, half), ev(Rational(9, 2)));
  EXPECT_EQ(killing_form_eigenvalue(7, half).squared(), ev(Rational(81, 4)));
  EXPECT_EQ(killing_form_eigenvalue(7, 0), ev(0));
}

TEST(LambdaFromCoefficient, Examples) {
  EXPECT_EQ(lemma2_lambda(7, half, 6), 12);
  EXPECT_EQ(lemma2_lambda(7, half, -2), 12);
  EXPECT_EQ(lemma2_lambda(7, 0, 5), 25);
  EXPECT_EQ(lemma2_lambda(7, 0, -5), 25);
}

TEST(Floors, Examples) {
  EXPECT_EQ(floors(7, half).gallot_meyer, 12);
  EXPECT_EQ(floors(7, half).lichnerowicz_obata, 7);
  EXPECT_EQ(floors(7, 1).gallot_meyer, 48);
  EXPECT_EQ(floors(7, 1).lichnerowicz_obata, 28);
  EXPECT_EQ(floors(7, 0).gallot_meyer, 0);
  EXPECT_EQ(floors(5, half).lichnerowicz_obata, 5);
}

TEST(FunctionBounds, Examples) {
  const FunctionBound b5 = theorem21_bounds(5, half, Rational(33, 4));
  EXPECT_EQ(b5.mu1, ev(Rational(25, 4)));
  EXPECT_EQ(b5.upper, ev(9));
  EXPECT_EQ(theorem21_bounds(7, 0, 1).upper, ev(1));
  const FunctionBound b7 = theorem21_bounds(7, half, 8);
  EXPECT_EQ(b7.upper, ev(Rational(69, 4), -1, 17));
  EXPECT_LT(b7.upper, ev(Rational(81, 4)));
  EXPECT_TRUE(b5.requires_pure_form(ev(8)));
  EXPECT_FALSE(b5.requires_pure_form(ev(9)));
  EXPECT_FALSE(b5.requires_pure_form(ev(Rational(25, 4))));
}

TEST(FormBound, Examples) {
  EXPECT_EQ(theorem25_form_bound(7, half, 12), ev(Rational(7, 2)));
  EXPECT_EQ(theorem25_form_bound(7, 0, 1), ev(1));
  EXPECT_EQ(form_coefficient_bound(7, half, 12), ev(2));
  EXPECT_THROW(theorem25_form_bound(7, half, 11), std::invalid_argument);
}

TEST(SideConditions, EqualityAtFloors) {
  const SideConditions s = proper_nearly_parallel_side_conditions(half, 7, 12);
  EXPECT_EQ(s.form_minus_value, ev(Rational(9, 2)));
  EXPECT_EQ(s.function_value, ev(Rational(-9, 2)));
  EXPECT_TRUE(s.form_minus_holds && s.form_minus_equality);
  EXPECT_TRUE(s.function_holds && s.function_equality);
  const SideConditions above = proper_nearly_parallel_side_conditions(half, 8, 13);
  EXPECT_TRUE(above.form_minus_holds && !above.form_minus_equality);
}

TEST(DiracSpectrum, TorusInputs) {
  const SpectrumReport r = dirac_spectrum_n7(preset("torus"));
  std::vector<std::pair<ExactEigenvalue, std::string>> got;
  for (const auto& v : r.dirac_values) got.emplace_back(v.value, v.tag());
  ASSERT_EQ(got.size(), 1u + 8u + 4u + 4u);
  EXPECT_EQ(got[0].first, ev(0));
  EXPECT_EQ(got[0].second, "killing");
  for (std::size_t i = 1; i < got.size(); ++i) EXPECT_LE(got[i - 1].first.abs(), got[i].first.abs());
  std::multiset<std::string> values;
  for (const auto& [v, tag] : got) values.insert(v.to_string());
  EXPECT_EQ(values.count("sqrt(2)"), 2u);    // function and form_minus
  EXPECT_EQ(values.count("-sqrt(2)"), 2u);   // function and form_plus
  EXPECT_EQ(values.count("2"), 2u);
  EXPECT_EQ(r.mu1_D2, ev(0));
}

TEST(DiracSpectrum, ThreeSasakianKillingFieldValue) {
  SpectralInput in = input7(GeometryClass::ThreeSasakian, half);
  in.lambda1_minus = {12};
  in.lambda1_plus = {12};
  const SpectrumReport r = dirac_spectrum_n7(in);
  bool found = false;
  for (const auto& v : r.dirac_values) found |= v.value == ev(Rational(9, 2)) && v.tag() == "form_minus_1";
  EXPECT_TRUE(found);
  EXPECT_EQ(r.dirac_values.front().value, ev(Rational(-7, 2)));
  EXPECT_EQ(r.mu1_D2, ev(Rational(49, 4)));
}

TEST(DiracSpectrum, KillingOnlyAndErrors) {
  SpectralInput in = input7(GeometryClass::Generic, 1);
  const SpectrumReport r = dirac_spectrum_n7(in);
  ASSERT_EQ(r.dirac_values.size(), 1u);
  EXPECT_EQ(r.dirac_values[0].value, ev(-7));
  in.lambda0 = {-1};
  EXPECT_THROW(dirac_spectrum_n7(in), std::invalid_argument);
  in.lambda0 = {3, 2};
  EXPECT_THROW(dirac_spectrum_n7(in), std::invalid_argument);
  in.lambda0 = {};
  in.n = 5;
  EXPECT_THROW(dirac_spectrum_n7(in), std::invalid_argument);
}

TEST(DiracSpectrum, CompletenessHorizon) {
  SpectralInput in = input7(GeometryClass::Generic, half);
  in.lambda0 = {8, 10};
  in.lambda1_plus = {12, 20};
  in.lambda1_minus = {12, 20};
  const SpectrumReport r = dirac_spectrum_n7(in);
  ASSERT_TRUE(r.completeness_horizon);
  for (const auto& v : r.dirac_values) EXPECT_EQ(v.certified, v.value.abs() <= *r.completeness_horizon);
}

TEST(Mu2, ParallelTorus) {
  const Mu2Result m = mu2_n7(preset("torus"));
  EXPECT_EQ(m.value, ev(1));
  EXPECT_EQ(m.slot, "lambda0_1");
  EXPECT_TRUE(m.violations.empty());
}

TEST(Mu2, IsomGe2Illustrative) {
  SpectralInput in = input7(GeometryClass::SasakiEinsteinIsomGe2, half);
  in.lambda0 = {16};
  in.lambda1_plus = {12, 20};
  in.illustrative = true;
  const Mu2Result m = mu2_n7(in);
  EXPECT_EQ(m.value, ev(Rational(97, 4), -1, 24));
  EXPECT_EQ(m.slot, "form_plus_2");
  EXPECT_TRUE(m.violations.empty());
  EXPECT_NE(std::find(m.notes.begin(), m.notes.end(), "inputs are illustrative"), m.notes.end());
}

TEST(Mu2, RegularQuotientLargeInput) {
  SpectralInput in = input7(GeometryClass::SasakiEinsteinRegularQuotient, half);
  in.lambda1_plus = {12, 100};
  const Mu2Result m = mu2_n7(in);
  EXPECT_EQ(m.value, ev(Rational(81, 4)));
  EXPECT_EQ(m.slot, "killing_field");
}

TEST(Mu2, ClassPreconditions) {
  SpectralInput in = input7(GeometryClass::ThreeSasakian, 1);
  in.lambda0 = {30};
  in.lambda1_plus = {48, 60};
  EXPECT_THROW(mu2_n7(in), std::invalid_argument);
  SpectralInput par = preset("torus");
  par.a = 1;
  EXPECT_THROW(mu2_n7(par), std::invalid_argument);
  SpectralInput missing = input7(GeometryClass::ProperNearlyParallel, 1);
  EXPECT_THROW(mu2_n7(missing), MissingSpectrum);
}

TEST(Mu2, FloorViolationsReported) {
  SpectralInput in = input7(GeometryClass::ProperNearlyParallel, half);
  in.lambda0 = {7};
  in.lambda1_plus = {13};
  in.lambda1_minus = {12};
  const Mu2Result m = mu2_n7(in);
  EXPECT_FALSE(m.violations.empty());
}

TEST(Mu2, MonotoneInEachSlot) {
  std::mt19937_64 rng(54);
  const std::vector<GeometryClass> classes{GeometryClass::ProperNearlyParallel, GeometryClass::SasakiEinstein,
                                           GeometryClass::SasakiEinsteinIsomGe2, GeometryClass::ThreeSasakian};
  for (int t = 0; t < 200; ++t) {
    const GeometryClass cls = classes[t % classes.size()];
    SpectralInput in = input7(cls, half);
    auto draw = [&](int lo) -> Rational { return Rational(lo) + abs(oracle::random_rational(rng, 40, 4)) + Rational(1, 4); };
    in.lambda0 = {draw(7)};
    in.lambda1_plus = cls == GeometryClass::ProperNearlyParallel ? std::vector<Rational>{draw(12)}
                                                                 : std::vector<Rational>{12, draw(12)};
    in.lambda1_minus = cls == GeometryClass::SasakiEinsteinIsomGe2 || cls == GeometryClass::ThreeSasakian
                           ? std::vector<Rational>{12}
                           : std::vector<Rational>{draw(12)};
    const ExactEigenvalue base = mu2_n7(in).value;
    SpectralInput up = in;
    up.lambda0[0] += 1;
    EXPECT_GE(mu2_n7(up).value, base);
    up = in;
    up.lambda1_plus.back() += 1;
    EXPECT_GE(mu2_n7(up).value, base);
    if (in.lambda1_minus[0] != 12) {
      up = in;
      up.lambda1_minus[0] += 1;
      EXPECT_GE(mu2_n7(up).value, base);
    }
    EXPECT_LT(ev(Rational(49, 4)), base) << to_string(cls);
  }
}

TEST(Predict, Sasaki5Preset) {
  const SpectrumReport r = predict(preset("sasaki5"));
  EXPECT_EQ(r.mu1_D2, ev(Rational(25, 4)));
  ASSERT_TRUE(r.mu2);
  EXPECT_EQ(r.mu2->value, ev(9));
  auto bound = [&](const std::string& name) -> std::optional<ExactEigenvalue> {
    for (const auto& b : r.bounds)
      if (b.name == name) return b.value;
    return std::nullopt;
  };
  EXPECT_EQ(bound("function_upper_bound"), ev(9));
  EXPECT_EQ(bound("killing_field_bound"), ev(Rational(49, 4)));
  bool noted = false;
  for (const auto& n : r.notes) noted |= n.find("lambda0_1 >= 5") != std::string::npos;
  EXPECT_TRUE(noted);
}

TEST(Predict, SeventhDimensionNumbers) {
  SpectralInput in = input7(GeometryClass::ProperWithKillingField, half);
  in.lambda0 = {8};
  in.lambda1_plus = {13};
  in.Lambda1 = 12;
  const SpectrumReport r = predict(in);
  EXPECT_EQ(r.mu1_D2, ev(Rational(49, 4)));
  std::map<std::string, ExactEigenvalue> b;
  for (const auto& x : r.bounds) b.emplace(x.name, x.value);
  EXPECT_EQ(b.at("gallot_meyer_floor"), ev(12));
  EXPECT_EQ(b.at("lichnerowicz_obata_floor"), ev(7));
  EXPECT_EQ(b.at("killing_field_eigenvalue"), ev(Rational(9, 2)));
  EXPECT_EQ(b.at("killing_field_bound"), ev(Rational(81, 4)));
  EXPECT_EQ(b.at("form_coefficient_lower_bound"), ev(2));
  ASSERT_TRUE(r.mu2);
  EXPECT_TRUE(r.mu2->violations.empty());
}

TEST(Classes, KillingSpinorCounts) {
  EXPECT_EQ(killing_spinor_count(GeometryClass::ProperNearlyParallel), 1);
  EXPECT_EQ(killing_spinor_count(GeometryClass::ProperWithKillingField), 1);
  EXPECT_EQ(killing_spinor_count(GeometryClass::SasakiEinstein), 2);
  EXPECT_EQ(killing_spinor_count(GeometryClass::ThreeSasakian), 3);
  EXPECT_EQ(parse_geometry_class("ThreeSasakian"), GeometryClass::ThreeSasakian);
  EXPECT_THROW(parse_geometry_class("Sphere"), std::invalid_argument);
  SpectralInput in = input7(GeometryClass::Generic, half);
  EXPECT_EQ(in.scalar_curvature(), 42);
}
