#pragma once

#include "mapdist/param_solver.hpp"

#include <json.hpp>

#include <optional>
#include <string>
#include <vector>

namespace mapdist {

// Reads expansions written like "3 z(1-z)(4+z) g^2 + ..." (integers, z, g, powers, brackets,
// juxtaposition as product) into a series in g truncated at order.
QzSeries parse_expansion(const std::string& text, int order);

enum class GoldenQuantity { x, alpha, three_point };

struct GoldenSeries {
  std::string name;
  MapFamily family;
  bool bivariate;
  GoldenQuantity quantity;
  std::vector<int> distances;  // three-point only
  int order;
  std::string printed;
  // Set when the printed text is known to disagree at one g-order.
  std::optional<int> documented_order;
};

const std::vector<GoldenSeries>& golden_series();

enum class GoldenStatus { match, documented_discrepancy, mismatch };
std::string to_string(GoldenStatus s);

struct GoldenResult {
  std::string name;
  GoldenStatus status = GoldenStatus::mismatch;
  std::vector<int> differing_orders;
  std::string computed;
  std::string printed;
  std::string note;
  bool pass() const { return status != GoldenStatus::mismatch; }
};

GoldenResult check_golden(const GoldenSeries& g);
std::vector<GoldenResult> check_all_golden();
nlohmann::ordered_json to_json(const GoldenResult& r);

}  // namespace mapdist
