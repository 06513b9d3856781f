#include "config.hpp"

#include <fstream>
#include <set>
#include <sstream>

namespace g2spin::cli {

namespace {

Rational parse_rational_value(const json& v, const std::string& path) {
  if (v.is_number_integer()) return Rational(v.get<long>());
  if (v.is_string()) {
    const std::string text = v.get<std::string>();
    try {
      return parse_rational(text);
    } catch (const std::invalid_argument&) {
      throw ConfigError(path + ": expected a rational \"p/q\", got \"" + text + "\"");
    }
  }
  throw ConfigError(path + ": expected a rational \"p/q\" string or an integer, got " + v.dump());
}

std::vector<Rational> parse_list(const json& v, const std::string& path) {
  if (!v.is_array()) throw ConfigError(path + ": expected an array, got " + v.dump());
  std::vector<Rational> out;
  for (std::size_t i = 0; i < v.size(); ++i) {
    const std::string item = path + "[" + std::to_string(i) + "]";
    Rational r = parse_rational_value(v[i], item);
    if (sgn(r) < 0) throw ConfigError(item + ": eigenvalues must be non-negative, got " + to_string(r));
    if (!out.empty() && !(out.back() < r)) {
      throw ConfigError(item + ": list must be strictly ascending (" + to_string(out.back()) + " then " +
                        to_string(r) + ")");
    }
    out.push_back(std::move(r));
  }
  return out;
}

const std::set<std::string>& known_keys() {
  static const std::set<std::string> keys{"n",           "a",             "class",   "lambda0",
                                          "lambda1_plus", "lambda1_minus", "Lambda1", "illustrative"};
  return keys;
}

}  // namespace

SpectralInput parse_config(const json& doc) {
  if (!doc.is_object()) throw ConfigError("$: expected an object");
  for (const auto& [key, value] : doc.items()) {
    if (!known_keys().count(key)) throw ConfigError("$." + key + ": unknown key");
  }
  for (const char* key : {"n", "a", "class"}) {
    if (!doc.contains(key)) throw ConfigError(std::string("$.") + key + ": required key is missing");
  }
  SpectralInput in;
  const json& n = doc["n"];
  if (!n.is_number_integer()) throw ConfigError("$.n: expected an integer, got " + n.dump());
  in.n = n.get<int>();
  if (in.n < 3) throw ConfigError("$.n: dimension must be at least 3, got " + std::to_string(in.n));
  in.a = parse_rational_value(doc["a"], "$.a");
  const json& cls = doc["class"];
  if (!cls.is_string()) throw ConfigError("$.class: expected a string, got " + cls.dump());
  try {
    in.geometry_class = parse_geometry_class(cls.get<std::string>());
  } catch (const std::invalid_argument& e) {
    throw ConfigError(std::string("$.class: ") + e.what());
  }
  if (doc.contains("lambda0")) in.lambda0 = parse_list(doc["lambda0"], "$.lambda0");
  if (!in.lambda0.empty() && sgn(in.lambda0.front()) == 0) {
    throw ConfigError("$.lambda0[0]: lists positive eigenvalues only, got 0");
  }
  if (doc.contains("lambda1_plus")) in.lambda1_plus = parse_list(doc["lambda1_plus"], "$.lambda1_plus");
  if (doc.contains("lambda1_minus")) in.lambda1_minus = parse_list(doc["lambda1_minus"], "$.lambda1_minus");
  if (doc.contains("Lambda1") && !doc["Lambda1"].is_null()) {
    in.Lambda1 = parse_rational_value(doc["Lambda1"], "$.Lambda1");
    if (sgn(*in.Lambda1) < 0) throw ConfigError("$.Lambda1: must be non-negative");
  }
  if (doc.contains("illustrative")) {
    if (!doc["illustrative"].is_boolean()) throw ConfigError("$.illustrative: expected a boolean");
    in.illustrative = doc["illustrative"].get<bool>();
  }
  return in;
}

SpectralInput load_config(const std::string& path) {
  std::ifstream file(path);
  if (!file) throw ConfigError(path + ": cannot open file");
  json doc;
  try {
    doc = json::parse(file);
  } catch (const json::parse_error& e) {
    throw ConfigError(path + ": invalid JSON: " + e.what());
  }
  return parse_config(doc);
}

json input_to_json(const SpectralInput& in) {
  auto list = [](const std::vector<Rational>& v) {
    json a = json::array();
    for (const auto& r : v) a.push_back(to_json(r));
    return a;
  };
  json out;
  out["n"] = in.n;
  out["a"] = to_json(in.a);
  out["class"] = to_string(in.geometry_class);
  out["lambda0"] = list(in.lambda0);
  out["lambda1_plus"] = list(in.lambda1_plus);
  out["lambda1_minus"] = list(in.lambda1_minus);
  if (in.Lambda1) out["Lambda1"] = to_json(*in.Lambda1);
  out["illustrative"] = in.illustrative;
  return out;
}

Rational parse_rational_arg(const std::string& text, const std::string& what) {
  try {
    return parse_rational(text);
  } catch (const std::invalid_argument&) {
    throw ConfigError(what + ": expected a rational \"p/q\", got \"" + text + "\"");
  }
}

}  // namespace g2spin::cli
