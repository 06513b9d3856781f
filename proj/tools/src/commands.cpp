#include "commands.hpp"

#include <fstream>
#include <random>
#include <sstream>

#include "g2spin/g2.hpp"
#include "g2spin/spectral.hpp"

namespace g2spin::cli {

namespace {

class Sampler {
 public:
  explicit Sampler(std::uint64_t seed) : rng_(seed) {}

  Rational rational() {
    std::uniform_int_distribution<int> num(-9, 9), den(1, 5);
    const int p = num(rng_);
    const int q = den(rng_);
    Rational r(p, q);
    r.canonicalize();
    return r;
  }

  Multivector form(int grade) {
    Multivector u(7);
    for (BladeMask mask = 0; mask < (BladeMask{1} << 7); ++mask)
      if (blade_grade(mask) == grade) u.add_term(mask, rational());
    return u;
  }

  Multivector mixed() {
    Multivector u(7);
    for (BladeMask mask = 0; mask < (BladeMask{1} << 7); ++mask) u.add_term(mask, rational());
    return u;
  }

 private:
  std::mt19937_64 rng_;
};

std::string pair_text(int i, int j) { return "(i, j) = (" + std::to_string(i) + ", " + std::to_string(j) + ")"; }

int adjoint_sign(int grade) {
  // rho(e_I)^T = (-1)^p (-1)^{p(p-1)/2} rho(e_I)
  const int a = grade % 2 == 0 ? 1 : -1;
  const int b = (grade * (grade - 1) / 2) % 2 == 0 ? 1 : -1;
  return a * b;
}

json spectrum_json(const SpectrumMultiset& s) {
  json a = json::array();
  for (const auto& e : s) a.push_back({{"value", to_json(e.value)}, {"multiplicity", e.multiplicity}});
  return a;
}

std::string bound_kind_text(BoundKind k) { return to_string(k); }

json bound_json(const NamedBound& b) {
  return {{"name", b.name}, {"value", to_json(b.value)}, {"kind", bound_kind_text(b.kind)}};
}

}  // namespace

RunReport cmd_verify_algebra(const AlgebraOptions& options) {
  RunReport r;
  r.command = "verify-algebra";
  r.data["seed"] = options.seed;
  r.data["samples"] = options.samples;
  const GammaTable gammas = options.gammas ? *options.gammas : octonion_gammas(octonion_triples());

  const auto bad = check_clifford_relations(gammas);
  r.add("clifford_relations", !bad, "gamma_i gamma_j + gamma_j gamma_i = -2 delta_ij Id for all 49 pairs",
        bad ? std::optional<std::string>(pair_text(bad->first, bad->second)) : std::nullopt);
  if (bad) {
    for (const char* name : {"contraction_grade1", "contraction_grade2", "hodge_involution", "skew_adjointness",
                             "omega_spectrum", "lemma1_kernel", "lemma1_random"}) {
      r.skip(name, "Clifford relations fail");
    }
    return r;
  }

  const CliffordRepresentation rep(gammas);
  Sampler sampler(options.seed);

  auto contraction = [&](int grade, const Rational& expected, const std::string& name) {
    std::optional<std::string> witness;
    auto probe = [&](const Multivector& u) {
      if (witness || u.is_zero()) return;
      try {
        const Rational c = contraction_identity_check(u, rep);
        if (c != expected) witness = "u = " + u.to_string() + " gives factor " + to_string(c);
      } catch (const std::logic_error& e) {
        witness = "u = " + u.to_string() + ": " + e.what();
      }
    };
    for (BladeMask mask = 0; mask < (BladeMask{1} << 7); ++mask)
      if (blade_grade(mask) == grade) {
        Multivector u(7);
        u.add_term(mask, 1);
        probe(u);
      }
    for (int s = 0; s < options.samples; ++s) probe(sampler.form(grade));
    r.add(name, !witness, "sum_i gamma_i rho(u) gamma_i = " + to_string(expected) + " rho(u)", witness);
  };
  contraction(1, 5, "contraction_grade1");
  contraction(2, -3, "contraction_grade2");

  {
    std::optional<std::string> witness;
    for (BladeMask mask = 0; mask < (BladeMask{1} << 7) && !witness; ++mask) {
      Multivector u(7);
      u.add_term(mask, 1);
      if (!(hodge(hodge(u)) == u)) witness = blade_label(mask);
    }
    for (int s = 0; s < options.samples && !witness; ++s) {
      const Multivector u = sampler.mixed();
      if (!(hodge(hodge(u)) == u)) witness = u.to_string();
    }
    r.add("hodge_involution", !witness, "** = id on all 128 blades and random forms", witness);
  }

  {
    std::optional<std::string> witness;
    for (BladeMask mask = 1; mask < (BladeMask{1} << 7) && !witness; ++mask) {
      const Matrix<Rational>& m = rep.blade(mask).matrix();
      if (!(m.transpose() == Rational(adjoint_sign(blade_grade(mask))) * m)) witness = blade_label(mask);
    }
    r.add("skew_adjointness", !witness, "rho(e_I)^T = (-1)^p (-1)^{p(p-1)/2} rho(e_I) for all blades", witness);
  }

  std::optional<G2Structure> g2;
  try {
    g2 = build_standard_structure(rep);
    r.data["orientation_sign"] = g2->orientation_sign();
    r.data["psi"] = json::array();
    for (int i = 0; i < kSpinDim; ++i) r.data["psi"].push_back(to_json(g2->psi()[i]));
    r.data["notes"] = g2->notes();
  } catch (const std::logic_error& e) {
    r.add("omega_spectrum", false, "rho(omega) has spectrum {-7 x1, +1 x7}", std::string(e.what()));
    r.skip("lemma1_kernel", "no G2 structure");
    r.skip("lemma1_random", "no G2 structure");
    return r;
  }

  {
    const Matrix<Rational> w = rep.action(g2->omega3()).matrix();
    const Matrix<Rational> id = Matrix<Rational>::identity(kSpinDim);
    const std::size_t m_minus7 = kSpinDim - rank(w + Rational(7) * id);
    const std::size_t m_plus1 = kSpinDim - rank(w - id);
    const bool ok = m_minus7 == 1 && m_plus1 == 7 && rep.action(g2->omega3()).apply(g2->psi()) ==
                                                         Rational(-7) * g2->psi();
    r.add("omega_spectrum", ok,
          "multiplicity of -7 is " + std::to_string(m_minus7) + ", of +1 is " + std::to_string(m_plus1),
          "omega . psi = -7 psi fails or multiplicities differ from (1, 7)");
  }

  {
    const Lemma1Report l1 = g2->lemma1_check();
    r.add("lemma1_kernel", l1.passed(),
          "rank " + std::to_string(l1.rank) + ", kernel dimension " + std::to_string(l1.kernel_dim) +
              ", kernel = {(L(sigma), sigma, 0)}",
          l1.witness.value_or("rank or kernel dimension mismatch"));
  }

  {
    std::optional<std::string> witness;
    for (int s = 0; s < options.samples && !witness; ++s) {
      const Multivector sigma = sampler.form(2);
      const Multivector eta = g2->L(sigma);
      if (!g2->phi(eta, sigma, 0).is_zero()) witness = "Phi(L(sigma), sigma, 0) != 0 for sigma = " + sigma.to_string();
      const Multivector shift = sampler.form(1);
      const Rational c = sampler.rational();
      if (!shift.is_zero() || sgn(c) != 0) {
        if (g2->phi(eta + shift, sigma, c).is_zero()) {
          witness = "Phi vanishes off the graph at sigma = " + sigma.to_string();
        }
      }
    }
    r.add("lemma1_random", !witness,
          std::to_string(options.samples) + " random sigma: Phi(L(sigma), sigma, 0) = 0, perturbations nonzero",
          witness);
  }
  return r;
}

RunReport cmd_verify_sasakian() {
  RunReport r;
  r.command = "verify-sasakian";
  const G2Structure& g2 = standard_structure();
  const CoframeData coframe = sasakian_coframe();
  const std::array<const Multivector*, 3> etas{&coframe.eta1, &coframe.eta2, &coframe.eta3};
  const std::array<const Multivector*, 3> d_etas{&coframe.d_eta1, &coframe.d_eta2, &coframe.d_eta3};
  const std::array<Rational, 3> expected{-2, 6, 6};

  Table relations{"L(d eta_i) = c_i eta_i", {"eta", "c", "lambda1 = c(c - 8a), a = 1/2"}, {}};
  bool lambda_ok = true;
  for (int i = 0; i < 3; ++i) {
    const auto c = eigen_factor(g2, *etas[i], *d_etas[i]);
    const std::string name = "relation_eta" + std::to_string(i + 1);
    if (!c) {
      r.add(name, false, "L(d eta) is not a multiple of eta", "L(d eta) = " + g2.L(*d_etas[i]).to_string());
      lambda_ok = false;
      continue;
    }
    r.add(name, *c == expected[i], "L(d eta" + std::to_string(i + 1) + ") = " + to_string(*c) + " eta" +
                                       std::to_string(i + 1),
          "expected factor " + to_string(expected[i]));
    const Rational lambda = lemma2_lambda(7, Rational(1, 2), *c);
    if (lambda != 12) lambda_ok = false;
    relations.rows.push_back({etas[i]->to_string(), to_string(*c), to_string(lambda)});
  }
  r.add("lambda1_values", lambda_ok, "c(c - 8a) = 12 at a = 1/2 for every factor");

  const Multivector omega = expand_omega3(coframe);
  const Multivector star = expand_star_omega3(coframe);
  r.add("omega_matches_structure", omega == g2.omega3(), "expanded omega equals the structure's 3-form");
  bool unit = omega.nonzero_terms() == 7;
  for (const auto& [mask, coeff] : omega.terms())
    if (abs(coeff) != 1) unit = false;
  r.add("omega_expansion", unit, std::to_string(omega.nonzero_terms()) + " nonzero coefficients, all +-1",
        omega.to_string());
  r.add("star_omega_identity", hodge(omega) == star, "*omega = -1/8 (d eta1^d eta1 - d eta2^d eta2 - d eta3^d eta3)",
        "*omega = " + hodge(omega).to_string() + ", expansion = " + star.to_string());

  auto coefficient_table = [](const std::string& label, const Multivector& u) {
    Table t{label, {"blade", "coefficient"}, {}};
    for (const auto& [mask, coeff] : u.terms()) t.rows.push_back({blade_label(mask), to_string(coeff)});
    return t;
  };
  r.tables.push_back(std::move(relations));
  r.tables.push_back(coefficient_table("omega", omega));
  r.tables.push_back(coefficient_table("*omega", star));
  return r;
}

json to_json(const ModeSpectrum& m) {
  json j;
  j["k"] = m.mode.k;
  j["norm_sq"] = m.mode.norm_sq;
  j["field_disc"] = m.mode.field_disc;
  j["direct"] = spectrum_json(m.direct);
  j["functions"] = spectrum_json(m.predicted_functions);
  j["forms"] = spectrum_json(m.predicted_forms);
  j["status"] = m.matches() ? "pass" : "fail";
  if (!m.failures.empty()) j["failures"] = m.failures;
  return j;
}

TorusRun cmd_torus(int max_norm_sq, int cap) {
  if (max_norm_sq < 1 || max_norm_sq > cap) {
    throw UsageError("--max-norm-sq must lie in [1, " + std::to_string(cap) + "], got " + std::to_string(max_norm_sq));
  }
  TorusRun run;
  run.sweep = spectrum_sweep(max_norm_sq);
  RunReport& r = run.report;
  r.command = "torus";
  const SweepSummary& s = run.sweep.summary;

  std::optional<std::string> first_failure;
  if (!s.failures.empty()) first_failure = s.failures.front();
  r.add("multiset_equality", s.failed_modes == 0,
        std::to_string(s.mode_count - s.failed_modes) + " of " + std::to_string(s.mode_count) +
            " modes: direct spectrum = functions (+-|k|, 2) + forms (+-|k|, 6)",
        first_failure);
  r.add("kernel_decomposition", s.kernel.passed(),
        "dim ker D = " + std::to_string(s.kernel.dimension) + " = " + std::to_string(s.kernel.function_part) + " + " +
            std::to_string(s.kernel.form_part));
  const bool corollary = s.mu2_corollary == ExactEigenvalue(s.mu2_direct);
  r.add("mu2_parallel_corollary", corollary,
        "mu2(D^2) = " + to_string(s.mu2_direct) + " = min(lambda0_1, lambda1_plus_1, lambda1_minus_1) = min(" +
            to_string(s.lambda0_1) + ", " + to_string(s.lambda1_plus_1) + ", " + to_string(s.lambda1_minus_1) + ")",
        "corollary gives " + s.mu2_corollary.to_string());

  json modes = json::array();
  for (const auto& m : run.sweep.modes) modes.push_back(to_json(m));
  r.data["max_norm_sq"] = max_norm_sq;
  r.data["modes"] = std::move(modes);
  r.data["summary"] = {{"mode_count", s.mode_count},
                       {"failed_modes", s.failed_modes},
                       {"kernel_dimension", s.kernel.dimension},
                       {"kernel_function_part", s.kernel.function_part},
                       {"kernel_form_part", s.kernel.form_part},
                       {"mu1_D2", to_json(s.mu1_D2)},
                       {"mu2_D2", to_json(s.mu2_direct)},
                       {"lambda0_1", to_json(s.lambda0_1)},
                       {"lambda1_plus_1", to_json(s.lambda1_plus_1)},
                       {"lambda1_minus_1", to_json(s.lambda1_minus_1)},
                       {"mu2_corollary", to_json(s.mu2_corollary)},
                       {"verdict", s.passed() ? "pass" : "fail"}};
  return run;
}

std::string torus_csv(const TorusRun& run) {
  std::ostringstream out;
  out << "k1,k2,k3,k4,k5,k6,k7,norm_sq,eigenvalue,multiplicity,source\n";
  for (const auto& m : run.sweep.modes) {
    std::ostringstream prefix;
    for (int v : m.mode.k) prefix << v << ',';
    prefix << m.mode.norm_sq << ',';
    auto emit = [&](const SpectrumMultiset& s, const char* source) {
      for (const auto& e : s) out << prefix.str() << e.value.to_string() << ',' << e.multiplicity << ',' << source << '\n';
    };
    emit(m.direct, "direct");
    emit(m.predicted_functions, "functions");
    emit(m.predicted_forms, "forms");
  }
  const SweepSummary& s = run.sweep.summary;
  const std::string blank = ",,,,,,,,";
  out << blank << to_string(s.mu1_D2) << ',' << s.kernel.dimension << ",summary_mu1_D2\n";
  out << blank << to_string(s.mu2_direct) << ",,summary_mu2_D2\n";
  out << blank << (s.passed() ? "pass" : "fail") << ',' << s.mode_count << ",summary_verdict\n";
  return out.str();
}

json to_json(const SpectrumReport& report) {
  json j;
  j["n"] = report.n;
  json values = json::array();
  for (const auto& v : report.dirac_values) {
    values.push_back({{"value", to_json(v.value)}, {"source", v.tag()}, {"certified", v.certified}});
  }
  j["dirac_values"] = std::move(values);
  if (report.completeness_horizon) j["completeness_horizon"] = to_json(*report.completeness_horizon);
  j["mu1_D2"] = to_json(report.mu1_D2);
  if (report.mu2) {
    const Mu2Result& m = *report.mu2;
    json slots = json::array();
    for (const auto& s : m.slots) slots.push_back(bound_json(s));
    j["mu2_D2"] = {{"value", to_json(m.value)},   {"slot", m.slot},
                   {"kind", bound_kind_text(m.kind)}, {"slots", std::move(slots)},
                   {"violations", m.violations},  {"notes", m.notes}};
  } else {
    j["mu2_D2"] = nullptr;
  }
  json bounds = json::array();
  for (const auto& b : report.bounds) bounds.push_back(bound_json(b));
  j["bounds"] = std::move(bounds);
  j["notes"] = report.notes;
  return j;
}

RunReport cmd_predict(const SpectralInput& input, const std::string& source) {
  RunReport r;
  r.command = "predict";
  SpectrumReport report;
  try {
    report = predict(input);
  } catch (const std::invalid_argument& e) {
    throw ConfigError(std::string("$: ") + e.what());
  }
  r.data["source"] = source;
  r.data["illustrative"] = input.illustrative;
  r.data["input"] = input_to_json(input);
  r.data["report"] = to_json(report);

  Table values{"dirac_values", {"value", "source", "certified"}, {}};
  for (const auto& v : report.dirac_values)
    values.rows.push_back({v.value.to_string(), v.tag(), v.certified ? "yes" : "no"});
  r.tables.push_back(std::move(values));
  Table bounds{"bounds", {"name", "value", "kind"}, {}};
  for (const auto& b : report.bounds) bounds.rows.push_back({b.name, b.value.to_string(), bound_kind_text(b.kind)});
  if (report.mu2) bounds.rows.push_back({"mu2_D2 (" + report.mu2->slot + ")", report.mu2->value.to_string(),
                                         bound_kind_text(report.mu2->kind)});
  r.tables.push_back(std::move(bounds));

  if (report.mu2) {
    std::string violations;
    for (const auto& v : report.mu2->violations) violations += (violations.empty() ? "" : "; ") + v;
    r.add("class_conditions", report.mu2->violations.empty(),
          "side conditions and floors of class " + to_string(input.geometry_class), violations);
    const bool above = report.mu1_D2 < report.mu2->value || report.mu2->kind == BoundKind::Upper;
    r.add("mu1_below_mu2", above, "mu1(D^2) = " + report.mu1_D2.to_string() + ", mu2(D^2) = " +
                                      report.mu2->value.to_string(),
          "mu2 does not exceed mu1");
  } else {
    r.skip("class_conditions", "mu2 not determined by the supplied spectra");
  }
  return r;
}

RunReport cmd_bounds(const BoundsArgs& args) {
  if (args.n < 3) throw ConfigError("--n: dimension must be at least 3, got " + std::to_string(args.n));
  if (sgn(args.lambda0_1) <= 0) throw ConfigError("--lambda0-1: must be positive, got " + to_string(args.lambda0_1));
  RunReport r;
  r.command = "bounds";
  const int n = args.n;
  const Rational& a = args.a;
  const Floors f = floors(n, a);
  const FunctionBound fb = theorem21_bounds(n, a, args.lambda0_1);
  const auto [m_plus, m_minus] = dirac_from_function(n, a, args.lambda0_1);
  const ExactEigenvalue killing = killing_form_eigenvalue(n, a);

  json d;
  d["n"] = n;
  d["a"] = to_json(a);
  d["lambda0_1"] = to_json(args.lambda0_1);
  d["scalar_curvature"] = to_json(Rational(4 * a * a * n * (n - 1)));
  d["floors"] = {{"gallot_meyer", to_json(f.gallot_meyer)}, {"lichnerowicz_obata", to_json(f.lichnerowicz_obata)}};
  d["mu1_D2"] = to_json(fb.mu1);
  d["function_upper_bound"] = to_json(fb.upper);
  json roots = json::array();
  for (const auto& m : {m_plus, m_minus}) {
    json root{{"m", to_json(m)}};
    try {
      root["eigenspinor_coefficient"] = to_json(eigenspinor_coefficient(n, a, m));
    } catch (const DegenerateBranch& e) {
      root["eigenspinor_coefficient"] = nullptr;
      root["note"] = e.what();
    }
    roots.push_back(std::move(root));
  }
  d["function_roots"] = std::move(roots);
  d["killing_field_eigenvalue"] = to_json(killing);
  d["killing_field_bound"] = to_json(killing.squared());
  if (args.Lambda1) {
    try {
      d["form_eigenvalue_lower_bound"] = to_json(theorem25_form_bound(n, a, *args.Lambda1));
      d["form_coefficient_lower_bound"] = to_json(form_coefficient_bound(n, a, *args.Lambda1));
    } catch (const std::invalid_argument& e) {
      throw ConfigError(std::string("--Lambda1: ") + e.what());
    }
  }
  Table values{"bounds", {"name", "value"}, {}};
  for (const char* key : {"scalar_curvature", "mu1_D2", "function_upper_bound", "killing_field_eigenvalue",
                          "killing_field_bound", "form_eigenvalue_lower_bound", "form_coefficient_lower_bound"}) {
    if (!d.contains(key)) continue;
    const json& v = d[key];
    values.rows.push_back({key, v.is_string() ? v.get<std::string>() : v["text"].get<std::string>()});
  }
  r.tables.push_back(std::move(values));
  r.data = std::move(d);

  r.add("lichnerowicz_obata", args.lambda0_1 >= f.lichnerowicz_obata,
        "lambda0_1 >= 4a^2 n = " + to_string(f.lichnerowicz_obata) + " (equality only on the round sphere)",
        "lambda0_1 = " + to_string(args.lambda0_1));
  r.add("mu1_le_upper", fb.mu1 <= fb.upper,
        "mu1(D^2) = " + fb.mu1.to_string() + " <= " + fb.upper.to_string());
  return r;
}

GammaTable load_gamma_table(const std::string& path) {
  std::ifstream file(path);
  if (!file) throw ConfigError(path + ": cannot open file");
  json doc;
  try {
    doc = json::parse(file);
  } catch (const json::parse_error& e) {
    throw ConfigError(path + ": invalid JSON: " + e.what());
  }
  if (!doc.is_array() || doc.size() != kCliffordDim) throw ConfigError("$: expected an array of 7 matrices");
  GammaTable table;
  for (int g = 0; g < kCliffordDim; ++g) {
    const std::string gp = "$[" + std::to_string(g) + "]";
    const json& m = doc[g];
    if (!m.is_array() || m.size() != kSpinDim) throw ConfigError(gp + ": expected 8 rows");
    for (int row = 0; row < kSpinDim; ++row) {
      const json& rv = m[row];
      if (!rv.is_array() || rv.size() != kSpinDim) {
        throw ConfigError(gp + "[" + std::to_string(row) + "]: expected 8 integers");
      }
      for (int col = 0; col < kSpinDim; ++col) {
        if (!rv[col].is_number_integer()) {
          throw ConfigError(gp + "[" + std::to_string(row) + "][" + std::to_string(col) + "]: expected an integer");
        }
        table[g](row, col) = Rational(rv[col].get<long>());
      }
    }
  }
  return table;
}

}  // namespace g2spin::cli
