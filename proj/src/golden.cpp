#include "mapdist/golden.hpp"

#include "mapdist/point_functions.hpp"

#include <cctype>
#include <stdexcept>

namespace mapdist {

namespace {

class ExpansionParser {
 public:
  ExpansionParser(const std::string& text, int order) : s_(text), order_(order) {}

  QzSeries parse() {
    QzSeries v = sum();
    skip();
    if (pos_ != s_.size()) fail("unexpected character");
    return v;
  }

 private:
  const std::string& s_;
  size_t pos_ = 0;
  int order_;

  [[noreturn]] void fail(const std::string& what) const {
    throw std::invalid_argument("expansion: " + what + " at offset " + std::to_string(pos_));
  }
  void skip() {
    while (pos_ < s_.size() && std::isspace(static_cast<unsigned char>(s_[pos_]))) ++pos_;
  }
  char peek() {
    skip();
    return pos_ < s_.size() ? s_[pos_] : '\0';
  }
  long integer() {
    skip();
    size_t start = pos_;
    while (pos_ < s_.size() && std::isdigit(static_cast<unsigned char>(s_[pos_]))) ++pos_;
    if (start == pos_) fail("expected integer");
    return std::stol(s_.substr(start, pos_ - start));
  }
  int exponent() {
    if (peek() != '^') return 1;
    ++pos_;
    return static_cast<int>(integer());
  }
  QzSeries sum() {
    QzSeries acc(order_);
    bool negate = false;
    if (peek() == '-' || peek() == '+') negate = s_[pos_++] == '-';
    for (;;) {
      QzSeries t = product();
      if (negate) acc -= t;
      else acc += t;
      char c = peek();
      if (c != '+' && c != '-') return acc;
      negate = c == '-';
      ++pos_;
    }
  }
  QzSeries product() {
    QzSeries acc = QzSeries::one(order_);
    bool any = false;
    for (;;) {
      char c = peek();
      if (std::isdigit(static_cast<unsigned char>(c))) {
        acc = acc * QzSeries::constant(order_, ZPolynomial(integer()));
      } else if (c == 'z') {
        ++pos_;
        acc = acc * QzSeries::constant(order_, ZPolynomial::monomial(exponent()));
      } else if (c == 'g') {
        ++pos_;
        acc = acc * QzSeries::monomial(order_, exponent(), ZPolynomial(1));
      } else if (c == '(') {
        ++pos_;
        QzSeries inner = sum();
        if (peek() != ')') fail("expected ')'");
        ++pos_;
        acc = acc * inner.pow(exponent());
      } else {
        break;
      }
      any = true;
    }
    if (!any) fail("expected a factor");
    return acc;
  }
};

template <class R>
QzSeries as_qz(const TruncatedSeries<R>& s) {
  if constexpr (std::is_same_v<R, Rational>) return lift(s);
  else return s;
}

template <class R>
QzSeries compute(const GoldenSeries& g) {
  auto p = solve_parameters<R>(g.family, g.order);
  if (g.quantity == GoldenQuantity::x) return as_qz(p.x);
  if (g.quantity == GoldenQuantity::alpha) {
    if (!p.alpha) throw std::logic_error("alpha requested in univariate mode");
    return as_qz(*p.alpha);
  }
  FamilyEvaluator<R> ev(std::move(p));
  return as_qz(three_point(ev, DistanceSpec::from_list(g.distances)));
}

bool back_substitution_holds(MapFamily f, int order) {
  auto p = solve_bivariate(f, order);
  auto b = back_substitute(p);
  return b.g == QzSeries::variable(order) && b.z == QzSeries::constant(order, ZPolynomial::z());
}

}  // namespace

QzSeries parse_expansion(const std::string& text, int order) { return ExpansionParser(text, order).parse(); }

const std::vector<GoldenSeries>& golden_series() {
  using Q = GoldenQuantity;
  constexpr auto G = MapFamily::general, B = MapFamily::bipartite;
  static const std::vector<GoldenSeries> all = {
      {"x general", G, false, Q::x, {}, 8,
       "g+7 g^2+59 g^3+544 g^4+5289 g^5+53256 g^6+549771 g^7+5782105 g^8", std::nullopt},
      {"G_{2,2,2} general", G, false, Q::three_point, {2, 2, 2}, 8,
       "2 g^3+39 g^4+558 g^5+7123 g^6+86139 g^7+1011954 g^8", std::nullopt},
      {"G_{1,1,1} general", G, false, Q::three_point, {1, 1, 1}, 8,
       "g^3+15 g^4+174 g^5+1867 g^6+19482 g^7+201450 g^8", std::nullopt},
      {"x bipartite", B, false, Q::x, {}, 8,
       "g+4 g^2+21 g^3+124 g^4+782 g^5+5144 g^6+34845 g^7+241196 g^8", std::nullopt},
      {"G_{2,2,2} bipartite", B, false, Q::three_point, {2, 2, 2}, 8,
       "2 g^3+21 g^4+174 g^5+1336 g^6+9942 g^7+72966 g^8", std::nullopt},
      {"x general (g,z)", G, true, Q::x, {}, 6,
       "g+(2+5 z) g^2+(5+31z+23z^2) g^3+(14+153z+275 z^2+102z^3) g^4"
       "+(42+696z+2170z^2+1938z^3+443 z^4)g^5+(132+3042z+14212 z^2+21937 z^3+12035 z^4+1898 z^5)g^6",
       std::nullopt},
      {"alpha general (g,z)", G, true, Q::alpha, {}, 6,
       "z+3z(1-z) g+3 z(1-z)(4+z) g^2+z(1-z)(49+51z +4 z^4) g^3+3z(1-z)(67+150z+62z^2+2z^3) g^4"
       "+3z(1-z)(275+1038z+955z^2+219z^3+3z^4)g^5+z(1-z)(3384+18965z+29747z^2+15651z^3+2310z^4+11z^5)g^6",
       3},
      {"G_{2,2,2} general (g,z)", G, true, Q::three_point, {2, 2, 2}, 6,
       "2 z g^3+3 z(4+9z) g^4+18z(3+15z+13z^2)g^5+z(220+1795z+3453 z^2+1655 z^3) g^6", std::nullopt},
      {"G_{1,1,1} general (g,z)", G, true, Q::three_point, {1, 1, 1}, 6,
       "z^2 g^3+3 z^2(2+3z) g^4+3z^2(9+30z+19z^2) g^5+z^2(110+600z+845 z^2+312 z^3)g^6", std::nullopt},
      {"x bipartite (g,z)", B, true, Q::x, {}, 6,
       "g+2(1+z) g^2+(5+13z+3z^2) g^3+(14+66z+40z^2+4z^3) g^4+(42+306z+339z^2+90z^3+5 z^4)g^5"
       "+2(66+678z+1168 z^2+572 z^3+85 z^4+3 z^5)g^6",
       std::nullopt},
      {"alpha bipartite (g,z)", B, true, Q::alpha, {}, 6,
       "z+2z(1-z) g+z(1-z)(8-z) g^2+32 z(1-z) g^3+3z(1-z)(43+14z) g^4+2z(1-z)(261+214z+26z^2)g^5"
       "+z(1-z)(2116+3093z+958z^2+62z^3)g^6",
       std::nullopt},
      {"G_{2,2,2} bipartite (g,z)", B, true, Q::three_point, {2, 2, 2}, 6,
       "2 z g^3+3 z(4+3z) g^4+6z(9+16z+4z^2)g^5+z(220+667z+399 z^2+50 z^3) g^6", std::nullopt},
  };
  return all;
}

std::string to_string(GoldenStatus s) {
  switch (s) {
    case GoldenStatus::match: return "match";
    case GoldenStatus::documented_discrepancy: return "documented-discrepancy";
    case GoldenStatus::mismatch: return "mismatch";
  }
  return "?";
}

GoldenResult check_golden(const GoldenSeries& g) {
  GoldenResult r;
  r.name = g.name;
  QzSeries printed = parse_expansion(g.printed, g.order);
  QzSeries computed = g.bivariate ? compute<ZPolynomial>(g) : compute<Rational>(g);
  r.printed = printed.to_string();
  r.computed = computed.to_string();
  for (int n = 0; n <= g.order; ++n)
    if (!(printed.coeff(n) == computed.coeff(n))) r.differing_orders.push_back(n);
  if (r.differing_orders.empty()) {
    r.status = GoldenStatus::match;
  } else if (g.documented_order && r.differing_orders == std::vector<int>{*g.documented_order} &&
             back_substitution_holds(g.family, g.order)) {
    r.status = GoldenStatus::documented_discrepancy;
    r.note = "printed g^" + std::to_string(*g.documented_order) + " coefficient " +
             printed.coeff(*g.documented_order).to_string() + ", computed " +
             computed.coeff(*g.documented_order).to_string() + "; computed value satisfies back-substitution";
  } else {
    r.status = GoldenStatus::mismatch;
  }
  return r;
}

std::vector<GoldenResult> check_all_golden() {
  std::vector<GoldenResult> out;
  for (const auto& g : golden_series()) out.push_back(check_golden(g));
  return out;
}

nlohmann::ordered_json to_json(const GoldenResult& r) {
  nlohmann::ordered_json j;
  j["name"] = r.name;
  j["status"] = to_string(r.status);
  j["differing_orders"] = r.differing_orders;
  if (!r.note.empty()) j["note"] = r.note;
  j["computed"] = r.computed;
  j["printed"] = r.printed;
  return j;
}

}  // namespace mapdist
