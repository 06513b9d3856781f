#pragma once

#include <cstdint>
#include <optional>
#include <stdexcept>
#include <string>

#include "config.hpp"
#include "g2spin/clifford.hpp"
#include "g2spin/torus.hpp"
#include "report.hpp"

namespace g2spin::cli {

/// Bad flags or out-of-range arguments (exit status 2).
class UsageError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

struct AlgebraOptions {
  std::uint64_t seed = 1;
  int samples = 100;
  std::optional<GammaTable> gammas;  // replaces the octonion table, e.g. a corrupted fixture
};

RunReport cmd_verify_algebra(const AlgebraOptions& options = {});
RunReport cmd_verify_sasakian();

constexpr int kDefaultTorusCap = 64;

struct TorusRun {
  RunReport report;
  SweepResult sweep;
};
/// Throws UsageError unless 1 <= max_norm_sq <= cap.
TorusRun cmd_torus(int max_norm_sq, int cap = kDefaultTorusCap);
/// Header k1,...,k7,norm_sq,eigenvalue,multiplicity,source, one row per spectrum entry, then summary rows.
std::string torus_csv(const TorusRun& run);

/// `source` names where the input came from ("config <path>", "preset sasaki5").
RunReport cmd_predict(const SpectralInput& input, const std::string& source);

struct BoundsArgs {
  int n = 7;
  Rational a;
  Rational lambda0_1;
  std::optional<Rational> Lambda1;
};
RunReport cmd_bounds(const BoundsArgs& args);

/// JSON array of seven 8 x 8 integer matrices.
GammaTable load_gamma_table(const std::string& path);

json to_json(const SpectrumReport& report);
json to_json(const ModeSpectrum& mode);

}  // namespace g2spin::cli
