#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "jackcbe/circle_function.hpp"
#include "jackcbe/line_function.hpp"
#include "json.hpp"

namespace jackcbe::cli {

using Json = nlohmann::json;

/// Thrown for malformed configuration; the tool exits with status 2.
struct ConfigError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

/// Reads a JSON config file; an empty path gives an empty object.
Json load_config(const std::string& path);

/// `{"coefficients": [[j, re, im], ...]}`
CircleFunction circle_function_from(const Json& desc);

/// `{"family": "gaussian" | "triangle", "amplitude": a, "width": w}` or
/// `{"family": "tabulated", "x": [...], "y": [...]}`.
LineFunction line_function_from(const Json& desc);

template <class T>
T get_or(const Json& cfg, const char* key, T fallback) {
  if (!cfg.contains(key) || cfg[key].is_null()) return fallback;
  try {
    return cfg[key].get<T>();
  } catch (const nlohmann::json::exception& e) {
    throw ConfigError(std::string("config key '") + key + "': " + e.what());
  }
}

template <class T>
T require(const Json& cfg, const char* key) {
  if (!cfg.contains(key) || cfg[key].is_null()) throw ConfigError(std::string("missing config key '") + key + "'");
  return get_or<T>(cfg, key, T{});
}

/// Writes text to a file, or to stdout for an empty path or "-".
void write_output(const std::string& path, const std::string& text);

}  // namespace jackcbe::cli
