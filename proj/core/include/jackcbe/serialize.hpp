#pragma once

#include <string>
#include <vector>

#include "jackcbe/partition.hpp"
#include "jackcbe/sympoly.hpp"

namespace jackcbe {

/// A labelled list of symmetric functions, e.g. one Jack block.
struct SymPolyTable {
  std::string label;
  std::vector<std::pair<Partition, SymPoly>> rows;
};

/// JSON text of the form
///   {"label": ..., "rows": [{"index": "(2,1)",
///                            "terms": [{"mu": "(1,1,1)", "num": "1", "den": "3"}, ...]}]}
/// Numerators and denominators are decimal strings so nothing is rounded.
std::string to_json_text(const SymPolyTable& table, int indent = 2);
SymPolyTable table_from_json_text(const std::string& text);

}  // namespace jackcbe
