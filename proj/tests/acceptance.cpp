// Acceptance run: one line per criterion, exit status 1 if any criterion fails.

#include <chrono>
#include <cstdio>
#include <functional>
#include <sstream>
#include <string>
#include <vector>

#include "g2spin/clifford.hpp"
#include "g2spin/g2.hpp"
#include "g2spin/spectral.hpp"
#include "g2spin/torus.hpp"
#include "oracles.hpp"

using namespace g2spin;

namespace {

struct Outcome {
  bool ok = true;
  std::vector<std::string> failures;
  void expect(bool cond, const std::string& what) {
    if (!cond) {
      ok = false;
      failures.push_back(what);
    }
  }
};

struct Criterion {
  int id;
  std::string title;
  double limit_ms;
  std::function<void(Outcome&)> body;
};

ExactEigenvalue ev(const Rational& p) { return ExactEigenvalue(p); }

void clifford_table(Outcome& o) {
  const SpinEndomorphism id = SpinEndomorphism::identity();
  for (int i = 1; i <= 7; ++i)
    for (int j = 1; j <= 7; ++j) {
      const SpinEndomorphism anti = gamma(i) * gamma(j) + gamma(j) * gamma(i);
      o.expect(anti == Rational(i == j ? -2 : 0) * id, "relation (" + std::to_string(i) + ", " + std::to_string(j) + ")");
    }
  for (int i = 1; i <= 7; ++i)
    o.expect(contraction_identity_check(Multivector::blade({i})) == 5, "grade 1 factor at e" + std::to_string(i));
  for (const auto& s : two_form_basis())
    o.expect(contraction_identity_check(s) == -3, "grade 2 factor at " + s.to_string());
}

void omega_spectrum(Outcome& o) {
  const G2Structure& g2 = standard_structure();
  const SpinEndomorphism rho = clifford_action(g2.omega3());
  const Matrix<Rational> m = rho.matrix();
  const std::size_t minus7 = 8 - rank(m + Matrix<Rational>::identity(8) * Rational(7));
  const std::size_t plus1 = 8 - rank(m - Matrix<Rational>::identity(8));
  o.expect(minus7 == 1, "dim E_{-7} = " + std::to_string(minus7));
  o.expect(plus1 == 7, "dim E_{+1} = " + std::to_string(plus1));
  o.expect(rho.apply(g2.psi()) == Rational(-7) * g2.psi(), "omega . psi = -7 psi");
}

void lemma1(Outcome& o) {
  const G2Structure& g2 = standard_structure();
  const Lemma1Report r = g2.lemma1_check();
  o.expect(r.rank == 8, "rank " + std::to_string(r.rank));
  o.expect(r.kernel_dim == 21, "kernel dimension " + std::to_string(r.kernel_dim));
  o.expect(r.kernel_in_graph && r.graph_in_kernel, "kernel = {(L(sigma), sigma, 0)}");
  std::mt19937_64 rng(20240601);
  for (int t = 0; t < 100; ++t) {
    Multivector sigma;
    for (const auto& b : two_form_basis()) sigma += oracle::random_rational(rng, 9, 5) * b;
    o.expect(g2.phi(g2.L(sigma), sigma, 0).is_zero(), "random instance " + std::to_string(t));
  }
}

void sasakian(Outcome& o) {
  const G2Structure& g2 = standard_structure();
  const CoframeData c = sasakian_coframe();
  o.expect(g2.L(c.d_eta1) == Rational(-2) * c.eta1, "L(d eta1) = -2 eta1");
  o.expect(g2.L(c.d_eta2) == Rational(6) * c.eta2, "L(d eta2) = 6 eta2");
  o.expect(g2.L(c.d_eta3) == Rational(6) * c.eta3, "L(d eta3) = 6 eta3");
  const Multivector star = Rational(-1, 8) * (wedge(c.d_eta1, c.d_eta1) - wedge(c.d_eta2, c.d_eta2) -
                                              wedge(c.d_eta3, c.d_eta3));
  o.expect(hodge(expand_omega3(c)) == star, "*omega identity");
  const Rational half(1, 2);
  o.expect(lemma2_lambda(7, half, -2) == 12, "lambda1 from c = -2");
  o.expect(lemma2_lambda(7, half, 6) == 12, "lambda1 from c = 6");
}

void torus(Outcome& o) {
  const SweepResult r = spectrum_sweep(10);
  const SweepSummary& s = r.summary;
  o.expect(s.failed_modes == 0, std::to_string(s.failed_modes) + " modes fail" +
                                    (s.failures.empty() ? "" : ", first " + s.failures.front()));
  for (const auto& m : r.modes) {
    const ExactEigenvalue root = ExactEigenvalue::sqrt(m.mode.norm_sq);
    const SpectrumMultiset f{{-root, 2}, {root, 2}}, g{{-root, 6}, {root, 6}}, d{{-root, 8}, {root, 8}};
    if (!(m.predicted_functions == f && m.predicted_forms == g && m.direct == d)) {
      o.expect(false, "multiset mismatch at k = " + m.mode.label());
      break;
    }
  }
  o.expect(s.kernel.dimension == 8 && s.kernel.function_part == 1 && s.kernel.form_part == 7,
           "kernel 8 = 1 + 7");
  o.expect(s.mu2_direct == 1 && s.mu2_corollary == ev(1), "mu2(D^2) = min(1, 1, 1) = 1");
  o.expect(s.lambda0_1 == 1 && s.lambda1_plus_1 == 1 && s.lambda1_minus_1 == 1, "first eigenvalues all 1");
  std::ostringstream modes;
  modes << s.mode_count;
  o.expect(s.mode_count == 8429, "mode count " + modes.str());
}

void worked_numbers(Outcome& o) {
  const Rational half(1, 2);
  const SpectrumReport r5 = predict(preset("sasaki5"));
  o.expect(r5.mu1_D2 == ev(Rational(25, 4)), "n = 5: mu1 = 25/4");
  o.expect(theorem21_bounds(5, half, Rational(33, 4)).upper == ev(9), "n = 5: upper bound 9");
  o.expect(killing_form_eigenvalue(5, half).squared() == ev(Rational(49, 4)), "n = 5: Killing-field bound 49/4");
  bool noted = false;
  for (const auto& n : r5.notes) noted |= n.find("lambda0_1 >= 5") != std::string::npos;
  o.expect(noted, "n = 5: lambda0_1 >= 5 noted");
  o.expect(r5.mu2 && r5.mu2->value == ev(9), "n = 5: reported mu2 bound 9");

  o.expect(ExactEigenvalue(Rational(49) * half * half) == ev(Rational(49, 4)), "n = 7: mu1 = 49/4");
  SpectralInput in;
  in.n = 7;
  in.a = half;
  in.geometry_class = GeometryClass::Generic;
  o.expect(predict(in).mu1_D2 == ev(Rational(49, 4)), "n = 7: calculator mu1 = 49/4");
  const Floors f = floors(7, half);
  o.expect(f.lichnerowicz_obata == 7 && f.gallot_meyer == 12, "n = 7: floors 7 and 12");
  o.expect(killing_form_eigenvalue(7, half) == ev(Rational(9, 2)), "n = 7: Killing-field eigenvalue 9/2");
  o.expect(killing_form_eigenvalue(7, half).squared() == ev(Rational(81, 4)), "n = 7: 81a^2 = 81/4");
  o.expect(form_coefficient_bound(7, half, 12) == ev(2), "n = 7: |c| >= 2 at Lambda1 = 48a^2");
  o.expect(theorem25_form_bound(7, half, 12) == ev(Rational(7, 2)), "n = 7: |m| >= 7/2 at Lambda1 = 48a^2");
  const SideConditions side = proper_nearly_parallel_side_conditions(half, 7, 12);
  o.expect(side.form_minus_holds && side.form_minus_equality, "sqrt(16a^2 + 12) + a = 9a");
  o.expect(side.function_holds && side.function_equality, "-a - sqrt(36a^2 + 7) = -9a");
}

void round_trips(Outcome& o) {
  std::mt19937_64 rng(7);
  int bad_inverse = 0, bad_substitution = 0, bad_order = 0;
  for (int t = 0; t < 1000; ++t) {
    const int n = 3 + t % 6;
    const Rational a = oracle::random_rational(rng, 6, 4);
    const Rational l = abs(oracle::random_rational(rng, 60, 9)) + Rational(1, 9);
    const auto [plus, minus] = dirac_from_function(n, a, l);
    if (function_eigenvalue_relation(n, a, plus) != l || function_eigenvalue_relation(n, a, minus) != l)
      ++bad_inverse;
  }
  for (int t = 0; t < 1000; ++t) {
    const Rational a = oracle::random_rational(rng, 6, 4);
    const Rational l = abs(oracle::random_rational(rng, 60, 9));
    for (int s : {1, -1}) {
      // (3a + m)(m - 5a) with m = a + s sqrt(Q): rational part (4a)(-4a) + Q, radical part s(4a - 4a)
      const ExactEigenvalue m(a, s, 16 * a * a + l);
      const ExactEigenvalue x = m + 3 * a, y = m - 5 * a;
      const Rational rational_part = x.p() * y.p() + Rational(x.s() * y.s()) * x.q();
      const Rational radical_part = Rational(x.s()) * y.p() + Rational(y.s()) * x.p();
      if (rational_part != l || (x.s() != 0 && radical_part != 0)) ++bad_substitution;
    }
  }
  std::uniform_int_distribution<int> sign(-1, 1);
  for (int t = 0; t < 1000; ++t) {
    auto draw = [&] {
      const Rational p = oracle::random_rational(rng, 40, 9);
      const Rational q = abs(oracle::random_rational(rng, 40, 9));
      return ExactEigenvalue(p, sgn(q) == 0 ? 0 : sign(rng), q);
    };
    const ExactEigenvalue x = draw(), y = draw();
    const oracle::Real rx = oracle::radical(x.p(), x.s(), x.q()), ry = oracle::radical(y.p(), y.s(), y.q());
    const int expected = rx < ry ? -1 : (rx > ry ? 1 : 0);
    if (compare(x, y) != expected) ++bad_order;
  }
  o.expect(bad_inverse == 0, std::to_string(bad_inverse) + " inverse-pair failures");
  o.expect(bad_substitution == 0, std::to_string(bad_substitution) + " substitution failures");
  o.expect(bad_order == 0, std::to_string(bad_order) + " order disagreements");
}

}  // namespace

int main() {
  const std::vector<Criterion> criteria{
      {1, "Clifford relation table and contraction factors 5, -3", 1000, clifford_table},
      {2, "rho(omega) spectrum {-7 x1, +1 x7}", 1000, omega_spectrum},
      {3, "phi rank 8, kernel 21, 100 random instances", 5000, lemma1},
      {4, "3-Sasakian relations (-2, 6, 6), *omega identity, lambda1 = 12", 1000, sasakian},
      {5, "torus completeness oracle, |k|^2 <= 10", 60000, torus},
      {6, "worked numbers n = 5 and n = 7", 1000, worked_numbers},
      {7, "round trips, substitution, exact order vs 64 digits", 10000, round_trips},
  };
  int failed = 0;
  for (const auto& c : criteria) {
    Outcome o;
    const auto t0 = std::chrono::steady_clock::now();
    try {
      c.body(o);
    } catch (const std::exception& e) {
      o.expect(false, std::string("exception: ") + e.what());
    }
    const double ms = std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - t0).count();
    o.expect(ms < c.limit_ms, "runtime over limit");
    std::printf("%s criterion %d: %s (%.1f ms, limit %.0f ms)\n", o.ok ? "PASS" : "FAIL", c.id, c.title.c_str(), ms,
                c.limit_ms);
    for (const auto& f : o.failures) std::printf("    %s\n", f.c_str());
    failed += !o.ok;
  }
  std::fflush(stdout);
  return failed == 0 ? 0 : 1;
}
