#pragma once

#include <stdexcept>
#include <string>

#include "g2spin/spectral.hpp"
#include "report.hpp"

namespace g2spin::cli {

/// Malformed configuration; the message starts with the JSON path of the offending value.
class ConfigError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Keys: n, a, class, lambda0, lambda1_plus, lambda1_minus, Lambda1, illustrative.
/// Rationals are "p/q" strings or JSON integers.
SpectralInput parse_config(const json& doc);
SpectralInput load_config(const std::string& path);

json input_to_json(const SpectralInput& in);

/// Parses a rational command-line value; throws ConfigError naming `what`.
Rational parse_rational_arg(const std::string& text, const std::string& what);

}  // namespace g2spin::cli
