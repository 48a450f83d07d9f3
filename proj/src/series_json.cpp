#include "mapdist/series_json.hpp"

#include <stdexcept>

namespace mapdist {

using nlohmann::json;
using nlohmann::ordered_json;

ordered_json to_json(const ZPolynomial& p) {
  ordered_json a = ordered_json::array();
  for (const auto& c : p.coeffs()) a.push_back(c.to_string());
  return a;
}

ordered_json to_json(const QSeries& s) {
  ordered_json j;
  j["order"] = s.order();
  j["ring"] = "Q";
  ordered_json a = ordered_json::array();
  for (const auto& c : s.coeffs()) a.push_back(c.to_string());
  j["coeffs"] = a;
  return j;
}

ordered_json to_json(const QzSeries& s) {
  ordered_json j;
  j["order"] = s.order();
  j["ring"] = "Q[z]";
  ordered_json a = ordered_json::array();
  for (const auto& c : s.coeffs()) a.push_back(to_json(c));
  j["coeffs"] = a;
  return j;
}

namespace {

Rational rational_from_json(const json& j) {
  if (j.is_string()) return Rational::parse(j.get<std::string>());
  if (j.is_number_integer()) return Rational(j.get<long>());
  throw std::invalid_argument("rational coefficient must be a string or an integer");
}

int checked_order(const json& j, const char* ring) {
  if (!j.is_object() || !j.contains("order") || !j.contains("ring") || !j.contains("coeffs"))
    throw std::invalid_argument("series JSON needs order, ring and coeffs");
  if (j.at("ring") != ring)
    throw std::invalid_argument(std::string("series JSON ring must be ") + ring);
  int order = j.at("order").get<int>();
  if (order < 0) throw std::invalid_argument("negative series order");
  if (!j.at("coeffs").is_array() || j.at("coeffs").size() != static_cast<size_t>(order) + 1)
    throw std::invalid_argument("series JSON must list order+1 coefficients");
  return order;
}

}  // namespace

ZPolynomial polynomial_from_json(const json& j) {
  if (!j.is_array()) throw std::invalid_argument("polynomial coefficient must be an array");
  std::vector<Rational> v;
  for (const auto& c : j) v.push_back(rational_from_json(c));
  return ZPolynomial(std::move(v));
}

QSeries q_series_from_json(const json& j) {
  int order = checked_order(j, "Q");
  std::vector<Rational> v;
  for (const auto& c : j.at("coeffs")) v.push_back(rational_from_json(c));
  return QSeries(order, std::move(v));
}

QzSeries qz_series_from_json(const json& j) {
  int order = checked_order(j, "Q[z]");
  std::vector<ZPolynomial> v;
  for (const auto& c : j.at("coeffs")) v.push_back(polynomial_from_json(c));
  return QzSeries(order, std::move(v));
}

}  // namespace mapdist
