#include "mapdist/point_functions.hpp"

#include <doctest.h>

using namespace mapdist;

namespace {

constexpr auto G = MapFamily::general, B = MapFamily::bipartite;

FamilyEvaluator<Rational> uni(MapFamily f, int order) { return FamilyEvaluator<Rational>(solve_univariate(f, order)); }
FamilyEvaluator<ZPolynomial> biv(MapFamily f, int order) {
  return FamilyEvaluator<ZPolynomial>(solve_bivariate(f, order));
}

QSeries printed(std::initializer_list<long> c, int order) {
  QSeries s(order);
  int n = 0;
  for (long v : c) s.set_coeff(n++, Rational(v));
  return s;
}

bool nonnegative_integers(const QzSeries& s) {
  for (const auto& p : s.coeffs())
    for (const auto& c : p.coeffs())
      if (c.sign() < 0 || !c.is_integer()) return false;
  return true;
}

}  // namespace

TEST_CASE("brackets") {
  auto ev = uni(G, 3);
  CHECK(ev.bracket(0, Deformation::none).is_zero());
  CHECK(ev.bracket(2, Deformation::none) == printed({1, 0, -1, -14}, 3));
  auto eb = biv(G, 6);
  auto eu = uni(G, 6);
  for (int s = 1; s <= 5; ++s)
    CHECK(at_z(eb.bracket(s, Deformation::alpha), Rational(1)) == eu.bracket(s, Deformation::none));
  CHECK_THROWS_AS(eu.bracket(1, Deformation::alpha), std::domain_error);
  CHECK_THROWS_AS(eu.bracket(-1, Deformation::none), std::invalid_argument);
}

TEST_CASE("generating-function families") {
  auto ev = uni(G, 16);
  CHECK(ev.T(0).is_zero());
  for (int s = 1; s <= 4; ++s) CHECK(ev.T(s).coeff(0) == Rational(1));
  CHECK((ev.X(1, 1) - ev.N(1, 1) - ev.O(1, 1)).is_zero());
  auto e12 = uni(G, 12);
  for (int s = 1; s <= 3; ++s)
    for (int t = 1; t <= 3; ++t) {
      CHECK(e12.N(s, t) == e12.N(t, s));
      for (int u = 1; u <= 3; ++u) {
        auto y = e12.Y(s, t, u);
        CHECK(y == e12.Y(t, s, u));
        CHECK(y == e12.Y(s, u, t));
        CHECK(y == e12.Y(u, t, s));
        CHECK(y == e12.Y(t, u, s));
        CHECK(y == e12.Y(u, s, t));
      }
    }
  CHECK(e12.N(3, 0) == e12.one());
  CHECK(e12.O(3, 0).is_zero());
  auto eb = biv(G, 10);
  auto eu = uni(G, 10);
  for (int s = 1; s <= 4; ++s) CHECK(at_z(eb.U(s), Rational(1)) == eu.T(s));
  CHECK_THROWS(ev.evaluate({FamilyName::X, {1}}));
}

TEST_CASE("two-point function") {
  auto ev = uni(G, 16);
  CHECK(two_point(ev, 1, TwoPointRoute::direct).coeff(1) == Rational(1));
  auto eb = biv(G, 6);
  CHECK(two_point(eb, 1, TwoPointRoute::direct).coeff(1) == ZPolynomial::z());
  for (int d = 1; d <= 5; ++d) {
    auto direct = two_point(ev, d, TwoPointRoute::direct);
    CHECK(direct == two_point_from_R(ev, d));
    CHECK(direct == two_point(ev, d, TwoPointRoute::typeB));
    if (d >= 2) CHECK(direct == two_point(ev, d, TwoPointRoute::typeA));
  }
  CHECK_THROWS_AS(two_point(ev, 0, TwoPointRoute::direct), std::invalid_argument);
  CHECK_THROWS_AS(two_point(ev, 1, TwoPointRoute::typeA), std::invalid_argument);
  auto ebip = uni(B, 8);
  CHECK_THROWS_AS(two_point(ebip, 2, TwoPointRoute::typeB), std::invalid_argument);
  // Delta_s Delta_t log N_{s,t} at s = t = 1 is the typeA form of G_2.
  std::function<QSeries(const std::vector<int>&)> logN = [&](const std::vector<int>& i) {
    return ev.N(i[0], i[1]).log();
  };
  CHECK(finite_difference(logN, {1, 1}, {0, 1}) == two_point(ev, 2, TwoPointRoute::typeA));
  std::function<QSeries(const std::vector<int>&)> constant = [&](const std::vector<int>&) { return ev.T(2); };
  CHECK(finite_difference(constant, {3}, {0}).is_zero());
}

TEST_CASE("three-point function") {
  auto ev = uni(G, 8);
  CHECK(three_point(ev, DistanceSpec::three_point(2, 2, 2)) == printed({0, 0, 0, 2, 39, 558, 7123, 86139, 1011954}, 8));
  CHECK(three_point(ev, DistanceSpec::three_point(1, 1, 1)) == printed({0, 0, 0, 1, 15, 174, 1867, 19482, 201450}, 8));
  auto eb = uni(B, 8);
  CHECK(three_point(eb, DistanceSpec::three_point(2, 2, 2)) == printed({0, 0, 0, 2, 21, 174, 1336, 9942, 72966}, 8));
  std::function<QSeries(const std::vector<int>&)> Fe = [&](const std::vector<int>& i) {
    return ev.F_even(i[0], i[1], i[2]);
  };
  CHECK(finite_difference(Fe, {1, 1, 1}, {0, 1, 2}) == three_point(ev, DistanceSpec::three_point(2, 2, 2)));
  // Aligned: d12 = d13 + d23.
  DistanceSpec aligned = DistanceSpec::three_point(2, 1, 1);
  CHECK(aligned.aligned);
  std::function<QSeries(const std::vector<int>&)> N = [&](const std::vector<int>& i) { return ev.N(i[0], i[1]); };
  CHECK(three_point(ev, aligned) == finite_difference(N, {1, 1}, {0, 1}));
  CHECK_THROWS_WITH(DistanceSpec::three_point(1, 1, 3), "triangular inequality violated");
  CHECK_THROWS(three_point(eb, DistanceSpec::three_point(1, 1, 1)));
  CHECK_THROWS(DistanceSpec::three_point(0, 1, 1));
}

TEST_CASE("coefficients count maps") {
  for (MapFamily f : {G, B}) {
    auto ev = biv(f, 6);
    for (int d = 1; d <= 4; ++d) {
      auto s = two_point(ev, d, TwoPointRoute::direct);
      for (const auto& p : s.coeffs())
        for (const auto& c : p.coeffs()) CHECK(c.sign() >= 0);
    }
    for (int a = 1; a <= 3; ++a)
      for (int b = 1; b <= 3; ++b)
        for (int c = 1; c <= 3; ++c) {
          if (a > b + c || b > a + c || c > a + b) continue;
          if (f == B && (a + b + c) % 2) continue;
          CHECK(nonnegative_integers(three_point(ev, DistanceSpec::three_point(a, b, c))));
        }
  }
}

TEST_CASE("tree limits") {
  const int order = 10;
  // 2 x^3 with x = g Cat(g)^2.
  QSeries even = tree_limit_three_point(TreeLimit::even, 1, 1, 1, order);
  CHECK(even.coeff(3) == Rational(2));
  CHECK(even.coeff(4) == Rational(12));
  for (int s = 1; s <= 3; ++s)
    for (int t = 1; t <= 3; ++t)
      for (int u = 1; u <= 3; ++u)
        CHECK(tree_limit_three_point(TreeLimit::bipartite, s, t, u, order) ==
              tree_limit_three_point(TreeLimit::even, s, t, u, order));
  QSeries odd = tree_limit_three_point(TreeLimit::odd, 1, 1, 1, order);
  QSeries x = tree_limit_three_point(TreeLimit::even, 1, 1, 1, order) * Rational(1, 2);
  CHECK(odd == x);
  CHECK_THROWS(tree_limit_three_point(TreeLimit::even, 0, 1, 1, order));
}
