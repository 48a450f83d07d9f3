#include "mapdist/param_solver.hpp"
#include "mapdist/series_json.hpp"

#include <doctest.h>

#include <random>

using namespace mapdist;

namespace {

QSeries random_series(std::mt19937& rng, int order, bool unit_constant) {
  std::uniform_int_distribution<long> num(-9, 9), den(1, 4);
  QSeries s(order);
  for (int n = 0; n <= order; ++n) s.set_coeff(n, Rational(num(rng), den(rng)));
  if (unit_constant) s.set_coeff(0, Rational(1));
  return s;
}

QzSeries random_qz(std::mt19937& rng, int order) {
  std::uniform_int_distribution<long> c(-5, 5);
  QzSeries s(order);
  for (int n = 0; n <= order; ++n) s.set_coeff(n, ZPolynomial({c(rng), c(rng), c(rng)}));
  s.set_coeff(0, ZPolynomial(1));
  return s;
}

}  // namespace

TEST_CASE("rationals") {
  CHECK(Rational(6, -4).to_string() == "-3/2");
  CHECK(Rational(8, 4).to_string() == "2");
  CHECK(Rational::parse("-3/2") == Rational(-3, 2));
  CHECK(Rational::parse("7") == Rational(7));
  CHECK_THROWS(Rational::parse("1/0"));
  CHECK_THROWS(Rational::parse("x"));
  CHECK((Rational(1, 3) + Rational(1, 6)) == Rational(1, 2));
  CHECK_THROWS(Rational(0).inverse());
}

TEST_CASE("z-polynomials") {
  ZPolynomial p({1, 2, 3});
  CHECK(p.degree() == 2);
  CHECK(p.evaluate(Rational(2)) == Rational(17));
  CHECK((p - p).is_zero());
  CHECK(p * ZPolynomial({1, -1}) == ZPolynomial({1, 1, 1, -3}));
  CHECK(ZPolynomial(Rational(2)).inverse() == ZPolynomial(Rational(1, 2)));
  CHECK_THROWS(p.inverse());
}

TEST_CASE("simple series identities") {
  QSeries one = QSeries::one(5), g = QSeries::variable(5);
  CHECK(one.log().is_zero());
  QSeries prod = (QSeries::one(4) + QSeries::variable(4)) * (QSeries::one(4) - QSeries::variable(4));
  QSeries expect = QSeries::one(4) - QSeries::monomial(4, 2, Rational(1));
  CHECK(prod == expect);
  CHECK((one / (one - g)).coeffs() == std::vector<Rational>(6, Rational(1)));
  CHECK_THROWS_AS(g.log(), std::domain_error);
  CHECK_THROWS_AS(one / g, std::domain_error);
  CHECK_THROWS_AS(QSeries(-1), std::invalid_argument);
  CHECK(g.shift(2).coeff(3) == Rational(1));
  CHECK_THROWS(one.shift(-1));
}

TEST_CASE("ring laws on random series") {
  std::mt19937 rng(12345);
  for (int trial = 0; trial < 20; ++trial) {
    QSeries a = random_series(rng, 10, true), b = random_series(rng, 10, true), c = random_series(rng, 10, false);
    CHECK((a * b) * c == a * (b * c));
    CHECK(a * (b + c) == a * b + a * c);
    CHECK(a * b == b * a);
    CHECK((a * b) / b == a);
    CHECK((a * b).log() == a.log() + b.log());
    CHECK(a.pow(3) == a * a * a);
    CHECK(a.pow(-2) * a.pow(2) == QSeries::one(10));
  }
  for (int trial = 0; trial < 5; ++trial) {
    QzSeries a = random_qz(rng, 6), b = random_qz(rng, 6);
    CHECK((a * b) / b == a);
    CHECK((a * b).log() == a.log() + b.log());
    CHECK(at_z(a * b, Rational(3)) == at_z(a, Rational(3)) * at_z(b, Rational(3)));
  }
}

TEST_CASE("univariate parametrisation") {
  CHECK(solve_univariate(MapFamily::general, 0).x.is_zero());
  for (MapFamily f : {MapFamily::general, MapFamily::bipartite}) {
    auto p = solve_univariate(f, 12);
    CHECK_FALSE(p.alpha.has_value());
    auto b = back_substitute(p);
    CHECK(b.g == QSeries::variable(12));
  }
  auto x = solve_univariate(MapFamily::general, 8).x;
  std::vector<long> printed = {0, 1, 7, 59, 544, 5289, 53256, 549771, 5782105};
  for (int n = 0; n <= 8; ++n) CHECK(x.coeff(n) == Rational(printed[n]));
}

TEST_CASE("bivariate parametrisation") {
  for (MapFamily f : {MapFamily::general, MapFamily::bipartite}) {
    auto p = solve_bivariate(f, 7);
    REQUIRE(p.alpha.has_value());
    auto b = back_substitute(p);
    CHECK(b.g == QzSeries::variable(7));
    CHECK(b.z == QzSeries::constant(7, ZPolynomial::z()));
    // Specialising z = 1 gives the univariate solution, with alpha = 1.
    CHECK(at_z(p.x, Rational(1)) == solve_univariate(f, 7).x);
    CHECK(at_z(*p.alpha, Rational(1)) == QSeries::one(7));
  }
  auto a = *solve_bivariate(MapFamily::general, 3).alpha;
  // z(1-z)(49 + 51z + 4z^2)
  CHECK(a.coeff(3) == ZPolynomial({0, 49, 2, -47, -4}));
  auto ab = *solve_bivariate(MapFamily::bipartite, 3).alpha;
  CHECK(ab.coeff(3) == ZPolynomial({0, 32, -32}));
}

TEST_CASE("json round trip") {
  std::mt19937 rng(7);
  QSeries a = random_series(rng, 6, false);
  auto j = to_json(a);
  CHECK(j["ring"] == "Q");
  CHECK(j["order"] == 6);
  CHECK(q_series_from_json(j) == a);
  QzSeries b = random_qz(rng, 5);
  CHECK(qz_series_from_json(to_json(b)) == b);
  CHECK(to_json(b).dump() == to_json(qz_series_from_json(to_json(b))).dump());
  ZPolynomial p({0, -3, 5});
  CHECK(polynomial_from_json(to_json(p)) == p);
  CHECK(to_json(QSeries::constant(1, Rational(5, 2)))["coeffs"][0] == "5/2");
  CHECK_THROWS(q_series_from_json(nlohmann::json::parse(R"({"order": 1, "ring": "Q", "coeffs": ["1/0", "0"]})")));
}
