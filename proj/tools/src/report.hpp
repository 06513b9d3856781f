#pragma once

#include <json.hpp>

#include <optional>
#include <string>
#include <vector>

#include "g2spin/exact_eigenvalue.hpp"
#include "g2spin/scalar.hpp"

namespace g2spin::cli {

using json = nlohmann::ordered_json;

enum class CheckStatus { Pass, Fail, Skipped };
std::string to_string(CheckStatus s);
using g2spin::to_string;

struct Check {
  std::string name;
  CheckStatus status = CheckStatus::Pass;
  std::string detail;
  std::optional<std::string> witness;
};

struct Table {
  std::string label;
  std::vector<std::string> columns;
  std::vector<std::vector<std::string>> rows;
};

struct RunReport {
  std::string command;
  std::vector<Check> checks;
  std::vector<Table> tables;
  json data = json::object();  // command-specific payload
  double timing_ms = 0;

  void add(std::string name, bool passed, std::string detail = {}, std::optional<std::string> witness = {});
  void skip(std::string name, std::string reason);
  bool any_failed() const;
  /// Timing is left out unless requested, so identical inputs give identical bytes.
  json to_json(bool include_timing = false) const;
  /// One line per check, then the tables.
  std::string to_text() const;
};

json to_json(const Rational& r);
json to_json(const ExactEigenvalue& x);
json to_json(const Quadratic& x);

}  // namespace g2spin::cli
