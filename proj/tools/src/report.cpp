#include "report.hpp"

#include <sstream>

namespace g2spin::cli {

std::string to_string(CheckStatus s) {
  switch (s) {
    case CheckStatus::Pass:
      return "pass";
    case CheckStatus::Fail:
      return "fail";
    case CheckStatus::Skipped:
      return "skipped";
  }
  return "?";
}

void RunReport::add(std::string name, bool passed, std::string detail, std::optional<std::string> witness) {
  checks.push_back({std::move(name), passed ? CheckStatus::Pass : CheckStatus::Fail, std::move(detail),
                    passed ? std::nullopt : std::move(witness)});
}

void RunReport::skip(std::string name, std::string reason) {
  checks.push_back({std::move(name), CheckStatus::Skipped, std::move(reason), std::nullopt});
}

bool RunReport::any_failed() const {
  for (const auto& c : checks)
    if (c.status == CheckStatus::Fail) return true;
  return false;
}

json RunReport::to_json(bool include_timing) const {
  json out;
  out["command"] = command;
  out["status"] = any_failed() ? "fail" : "pass";
  json cs = json::array();
  for (const auto& c : checks) {
    json j;
    j["name"] = c.name;
    j["status"] = g2spin::cli::to_string(c.status);
    if (!c.detail.empty()) j["detail"] = c.detail;
    if (c.witness) j["witness"] = *c.witness;
    cs.push_back(std::move(j));
  }
  out["checks"] = std::move(cs);
  if (!tables.empty()) {
    json ts = json::array();
    for (const auto& t : tables) ts.push_back({{"label", t.label}, {"columns", t.columns}, {"rows", t.rows}});
    out["tables"] = std::move(ts);
  }
  if (!data.empty()) out["data"] = data;
  if (include_timing) out["timing_ms"] = timing_ms;
  return out;
}

std::string RunReport::to_text() const {
  std::ostringstream out;
  for (const auto& c : checks) {
    out << '[' << g2spin::cli::to_string(c.status) << "] " << c.name;
    if (!c.detail.empty()) out << ": " << c.detail;
    if (c.witness) out << " (witness: " << *c.witness << ')';
    out << '\n';
  }
  for (const auto& t : tables) {
    out << '\n' << t.label << '\n';
    for (std::size_t i = 0; i < t.columns.size(); ++i) out << (i ? "\t" : "") << t.columns[i];
    out << '\n';
    for (const auto& row : t.rows) {
      for (std::size_t i = 0; i < row.size(); ++i) out << (i ? "\t" : "") << row[i];
      out << '\n';
    }
  }
  return out.str();
}

json to_json(const Rational& r) { return g2spin::to_string(r); }

json to_json(const ExactEigenvalue& x) {
  return {{"p", g2spin::to_string(x.p())}, {"s", x.s()}, {"q", g2spin::to_string(x.q())}, {"text", x.to_string()}};
}

json to_json(const Quadratic& x) {
  return {{"x", g2spin::to_string(x.rational_part())},
          {"y", g2spin::to_string(x.radical_part())},
          {"d", x.field()},
          {"text", x.to_string()}};
}

}  // namespace g2spin::cli
