#pragma once

#include "mapdist/truncated_series.hpp"

#include <json.hpp>

namespace mapdist {

// {"order": N, "ring": "Q" | "Q[z]", "coeffs": [...]}
// Coefficients in Q are strings "p/q"; in Q[z] each one is an array of such strings, lowest degree first.
nlohmann::ordered_json to_json(const QSeries& s);
nlohmann::ordered_json to_json(const QzSeries& s);
nlohmann::ordered_json to_json(const ZPolynomial& p);

QSeries q_series_from_json(const nlohmann::json& j);
QzSeries qz_series_from_json(const nlohmann::json& j);
ZPolynomial polynomial_from_json(const nlohmann::json& j);

}  // namespace mapdist
