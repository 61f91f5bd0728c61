#include "jackcbe/serialize.hpp"

#include <stdexcept>

#include "json.hpp"

namespace jackcbe {

std::string to_json_text(const SymPolyTable& table, int indent) {
  nlohmann::json rows = nlohmann::json::array();
  for (const auto& [index, poly] : table.rows) {
    nlohmann::json terms = nlohmann::json::array();
    for (const auto& [mu, c] : poly.terms())
      terms.push_back({{"mu", mu.str()}, {"num", c.get_num().get_str()}, {"den", c.get_den().get_str()}});
    rows.push_back({{"index", index.str()}, {"terms", std::move(terms)}});
  }
  nlohmann::json doc{{"label", table.label}, {"rows", std::move(rows)}};
  return doc.dump(indent);
}

SymPolyTable table_from_json_text(const std::string& text) {
  const auto doc = nlohmann::json::parse(text);
  SymPolyTable table;
  table.label = doc.value("label", "");
  for (const auto& row : doc.at("rows")) {
    SymPoly::Terms terms;
    for (const auto& t : row.at("terms")) {
      const mpz_class num(t.at("num").get<std::string>()), den(t.at("den").get<std::string>());
      if (den == 0) throw std::invalid_argument("table_from_json_text: zero denominator");
      Rational c(num, den);
      c.canonicalize();
      terms.emplace(Partition::parse(t.at("mu").get<std::string>()), std::move(c));
    }
    table.rows.emplace_back(Partition::parse(row.at("index").get<std::string>()), SymPoly(std::move(terms)));
  }
  return table;
}

}  // namespace jackcbe
