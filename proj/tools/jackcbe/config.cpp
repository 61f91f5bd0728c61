#include "config.hpp"

#include <fstream>
#include <iostream>
#include <sstream>

namespace jackcbe::cli {

Json load_config(const std::string& path) {
  if (path.empty()) return Json::object();
  std::ifstream in(path);
  if (!in) throw ConfigError("cannot open config file '" + path + "'");
  try {
    Json j = Json::parse(in);
    if (!j.is_object()) throw ConfigError("config root must be an object");
    return j;
  } catch (const Json::parse_error& e) {
    throw ConfigError("config file '" + path + "': " + e.what());
  }
}

CircleFunction circle_function_from(const Json& desc) {
  if (!desc.is_object() || !desc.contains("coefficients"))
    throw ConfigError("circle function needs a 'coefficients' list of [j, re, im] triples");
  std::vector<std::tuple<int, double, double>> triples;
  for (const auto& t : desc["coefficients"]) {
    if (!t.is_array() || t.size() != 3) throw ConfigError("each coefficient must be a [j, re, im] triple");
    triples.emplace_back(t[0].get<int>(), t[1].get<double>(), t[2].get<double>());
  }
  return CircleFunction::from_triples(triples);
}

LineFunction line_function_from(const Json& desc) {
  if (!desc.is_object()) throw ConfigError("line function must be an object");
  const auto family = get_or<std::string>(desc, "family", "");
  try {
    if (family == "gaussian")
      return LineFunction::gaussian(get_or(desc, "amplitude", 1.0), get_or(desc, "width", 1.0));
    if (family == "triangle")
      return LineFunction::triangle(get_or(desc, "amplitude", 1.0), get_or(desc, "width", 1.0));
    if (family == "tabulated")
      return LineFunction::tabulated(require<std::vector<double>>(desc, "x"), require<std::vector<double>>(desc, "y"));
  } catch (const std::invalid_argument& e) {
    throw ConfigError(e.what());
  }
  throw ConfigError("unknown line function family '" + family + "'");
}

void write_output(const std::string& path, const std::string& text) {
  if (path.empty() || path == "-") {
    std::cout << text;
    if (!text.empty() && text.back() != '\n') std::cout << '\n';
    return;
  }
  std::ofstream out(path);
  if (!out) throw std::runtime_error("cannot write '" + path + "'");
  out << text;
  if (!text.empty() && text.back() != '\n') out << '\n';
}

}  // namespace jackcbe::cli
