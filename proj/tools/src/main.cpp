#include <CLI11.hpp>

#include <chrono>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <iostream>

#include "commands.hpp"

namespace fs = std::filesystem;
using namespace g2spin::cli;

namespace {

struct Output {
  std::string report_dir;
  bool timing = false;
  std::string format = "json";
};

void write_file(const Output& out, const std::string& name, const std::string& content) {
  std::string dir = out.report_dir;
  if (dir.empty()) {
    if (const char* env = std::getenv("G2SPIN_REPORT_DIR")) dir = env;
  }
  if (dir.empty()) return;
  fs::create_directories(dir);
  std::ofstream file(fs::path(dir) / name);
  if (!file) throw UsageError("cannot write report to " + (fs::path(dir) / name).string());
  file << content;
}

int emit(const Output& out, RunReport& report, double elapsed_ms) {
  report.timing_ms = elapsed_ms;
  const std::string json_text = report.to_json(out.timing).dump(2) + "\n";
  if (out.format == "text") {
    std::cout << report.to_text();
  } else {
    std::cout << json_text;
  }
  write_file(out, report.command + ".json", json_text);
  return report.any_failed() ? 1 : 0;
}

template <class F>
double time_ms(F&& f) {
  const auto t0 = std::chrono::steady_clock::now();
  f();
  return std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - t0).count();
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Exact G2 spin-geometry verification and Dirac spectrum calculator"};
  app.require_subcommand(1);
  Output out;
  app.add_option("--report-dir", out.report_dir, "Also write reports here (default: $G2SPIN_REPORT_DIR)");
  app.add_flag("--timing", out.timing, "Include wall-clock timing in JSON reports");

  AlgebraOptions algebra;
  std::string gamma_path;
  auto* verify_algebra = app.add_subcommand("verify-algebra", "Clifford relations, contractions, Hodge, kernel of phi");
  verify_algebra->add_option("--seed", algebra.seed, "Seed for the random instances");
  verify_algebra->add_option("--samples", algebra.samples, "Random instances per suite")->check(CLI::Range(0, 100000));
  verify_algebra->add_option("--gamma-table", gamma_path, "JSON file replacing the generator table")
      ->check(CLI::ExistingFile);
  verify_algebra->add_option("--format", out.format, "json or text")->check(CLI::IsMember({"json", "text"}));

  auto* verify_sasakian = app.add_subcommand("verify-sasakian", "3-Sasakian relations and the *omega identity");
  verify_sasakian->add_option("--format", out.format, "json or text")->check(CLI::IsMember({"json", "text"}));

  int max_norm_sq = 0;
  int cap = kDefaultTorusCap;
  std::string torus_format = "json";
  auto* torus = app.add_subcommand("torus", "Flat-torus Fourier-mode spectra");
  torus->add_option("--max-norm-sq", max_norm_sq, "Largest |k|^2 in the sweep")->required();
  torus->add_option("--cap", cap, "Upper limit for --max-norm-sq");
  torus->add_option("--format", torus_format, "json or csv")->check(CLI::IsMember({"json", "csv"}));

  std::string config_path, preset_name;
  auto* predict_cmd = app.add_subcommand("predict", "Dirac spectrum and mu2(D^2) from Laplace spectra");
  auto* config_opt = predict_cmd->add_option("--config", config_path, "JSON input document");
  auto* preset_opt = predict_cmd->add_option("--preset", preset_name, "sasaki5, torus or three-sasakian")
                         ->check(CLI::IsMember({"sasaki5", "torus", "three-sasakian"}));
  config_opt->excludes(preset_opt);
  predict_cmd->add_option("--format", out.format, "json or text")->check(CLI::IsMember({"json", "text"}));

  int bounds_n = 0;
  std::string bounds_a, bounds_lambda0, bounds_Lambda1;
  auto* bounds = app.add_subcommand("bounds", "Generic bounds from n, a and lambda0_1");
  bounds->add_option("--n", bounds_n, "Dimension")->required();
  bounds->add_option("--a", bounds_a, "Killing number p/q")->required();
  bounds->add_option("--lambda0-1", bounds_lambda0, "First positive Laplace eigenvalue p/q")->required();
  bounds->add_option("--Lambda1", bounds_Lambda1, "First coclosed 1-form eigenvalue p/q");
  bounds->add_option("--format", out.format, "json or text")->check(CLI::IsMember({"json", "text"}));

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? 0 : 2;
  }

  try {
    RunReport report;
    double elapsed = 0;
    if (*verify_algebra) {
      if (!gamma_path.empty()) algebra.gammas = load_gamma_table(gamma_path);
      elapsed = time_ms([&] { report = cmd_verify_algebra(algebra); });
    } else if (*verify_sasakian) {
      elapsed = time_ms([&] { report = cmd_verify_sasakian(); });
    } else if (*torus) {
      TorusRun run;
      elapsed = time_ms([&] { run = cmd_torus(max_norm_sq, cap); });
      run.report.timing_ms = elapsed;
      if (torus_format == "csv") {
        const std::string csv = torus_csv(run);
        std::cout << csv;
        write_file(out, "torus.csv", csv);
        return run.report.any_failed() ? 1 : 0;
      }
      return emit(out, run.report, elapsed);
    } else if (*predict_cmd) {
      if (config_path.empty() && preset_name.empty()) throw UsageError("predict needs --config or --preset");
      const bool from_preset = !preset_name.empty();
      const g2spin::SpectralInput input = from_preset ? g2spin::preset(preset_name) : load_config(config_path);
      const std::string source = from_preset ? "preset " + preset_name : "config " + config_path;
      elapsed = time_ms([&] { report = cmd_predict(input, source); });
    } else if (*bounds) {
      BoundsArgs args;
      args.n = bounds_n;
      args.a = parse_rational_arg(bounds_a, "--a");
      args.lambda0_1 = parse_rational_arg(bounds_lambda0, "--lambda0-1");
      if (!bounds_Lambda1.empty()) args.Lambda1 = parse_rational_arg(bounds_Lambda1, "--Lambda1");
      elapsed = time_ms([&] { report = cmd_bounds(args); });
    }
    return emit(out, report, elapsed);
  } catch (const ConfigError& e) {
    std::cerr << "config error: " << e.what() << '\n';
    return 2;
  } catch (const UsageError& e) {
    std::cerr << "usage error: " << e.what() << '\n';
    return 2;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << '\n';
    return 2;
  }
}
