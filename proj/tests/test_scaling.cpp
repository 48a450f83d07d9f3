#include "mapdist/scaling.hpp"

#include <doctest.h>

#include <cmath>

using namespace mapdist;

namespace {
constexpr MapFamily G = MapFamily::general, B = MapFamily::bipartite;
}

TEST_CASE("critical line at z = 1") {
  CriticalPoint g = critical_point(G, 1);
  CHECK(g.param == doctest::Approx(1).epsilon(1e-12));
  CHECK(g.g_crit == doctest::Approx(1.0 / 12).epsilon(1e-12));
  CHECK(g.gamma == doctest::Approx(std::sqrt(1.5)).epsilon(1e-12));
  CriticalPoint b = critical_point(B, 1);
  CHECK(b.param == doctest::Approx(0.25).epsilon(1e-12));
  CHECK(b.g_crit == doctest::Approx(1.0 / 8).epsilon(1e-12));
  CHECK(b.gamma == doctest::Approx(1).epsilon(1e-12));
  CHECK_THROWS(critical_point(G, 0));
  CHECK_THROWS(critical_point(G, -1));
}

TEST_CASE("parametrisation round trip and duality") {
  for (int i = 1; i <= 100; ++i) {
    double r = 3.0 * i / 101;
    CHECK(critical_point(G, z_of_param(G, r)).param == doctest::Approx(r).epsilon(1e-12));
    double v = 0.5 * i / 101;
    CHECK(critical_point(B, z_of_param(B, v)).param == doctest::Approx(v).epsilon(1e-12));
  }
  for (double z : {0.1, 0.5, 2.0, 7.0}) {
    CHECK(critical_point(G, 1 / z).g_crit == doctest::Approx(z * critical_point(G, z).g_crit).epsilon(1e-10));
    double r = critical_point(G, z).param;
    CHECK(critical_point(G, 1 / z).param == doctest::Approx((3 - r) / (1 + r)).epsilon(1e-10));
  }
  CHECK(critical_point(G, 1e-9).g_crit == doctest::Approx(0.25).epsilon(1e-3));
}

TEST_CASE("observables") {
  Observables o = observables(G, 1);
  CHECK(o.geodesic_vertices == doctest::Approx(1.5));
  REQUIRE(o.geodesic_edges.has_value());
  CHECK(*o.geodesic_edges == doctest::Approx(2));
  CHECK(o.vertex_fraction == doctest::Approx(0.5));
  CHECK(o.face_fraction == doctest::Approx(0.5));
  Observables b = observables(B, 1);
  CHECK(b.geodesic_vertices == doctest::Approx(2));
  CHECK_FALSE(b.geodesic_edges.has_value());
  CHECK(b.vertex_fraction + b.face_fraction == doctest::Approx(1));
}

TEST_CASE("two-point scaling function") {
  for (double z : {0.5, 1.0, 3.0}) {
    double gm = critical_point(G, z).gamma;
    for (double D : {0.3, 1.0, 2.5}) {
      double v = continuous_two_point(G, D, z);
      CHECK(v * std::pow(std::sinh(gm * D), 3) / std::cosh(gm * D) == doctest::Approx(2 * std::pow(gm, 3)).epsilon(1e-12));
    }
    double D = 12;
    CHECK(continuous_two_point(G, D, z) / std::exp(-2 * gm * D) == doctest::Approx(8 * std::pow(gm, 3)).epsilon(1e-8));
    double gb = critical_point(B, z).gamma;
    CHECK(continuous_two_point(B, D, z) / std::exp(-2 * gb * D) == doctest::Approx(16 * std::pow(gb, 3)).epsilon(1e-8));
  }
  // Equal gamma: general z = 1 and bipartite at the upsilon with gamma^2 = 3/2.
  double zb = 0;
  {
    double lo = 1e-9, hi = 0.25;
    for (int i = 0; i < 200; ++i) {
      double m = 0.5 * (lo + hi);
      (gamma_of_param(B, m) > std::sqrt(1.5) ? lo : hi) = m;
    }
    zb = z_of_param(B, 0.5 * (lo + hi));
  }
  CHECK(continuous_two_point(B, 1, zb) == doctest::Approx(2 * continuous_two_point(G, 1, 1)).epsilon(1e-9));
  CHECK_THROWS(continuous_two_point(G, 0, 1));
}

TEST_CASE("three-point scaling function") {
  for (MapFamily f : {G, B})
    for (double z : {0.5, 1.0, 2.0}) {
      double a = continuous_three_point(f, 1, 1.3, 0.8, z);
      CHECK(continuous_three_point(f, 1.3, 1, 0.8, z) == doctest::Approx(a).epsilon(1e-12));
      CHECK(continuous_three_point(f, 0.8, 1.3, 1, z) == doctest::Approx(a).epsilon(1e-12));
      DerivativeEstimate fd = continuous_three_point_fd(f, 1, 1.3, 0.8, z);
      CHECK(fd.value == doctest::Approx(a).epsilon(1e-8));
      DerivativeEstimate fd2 = continuous_three_point_fd(f, 1, 1, 1, z);
      CHECK(fd2.value == doctest::Approx(continuous_three_point(f, 1, 1, 1, z)).epsilon(1e-8));
      // The sinh ratio tends to 1 for large S, T, U.
      CHECK(continuous_F(f, 40, 40, 40, z) == doctest::Approx(three_point_prefactor(f, z)).epsilon(1e-10));
    }
  CHECK_THROWS_AS(continuum_point(1, 1, 2), std::invalid_argument);
  CHECK_THROWS_AS(continuum_point(1, 1, 3), std::invalid_argument);
}

TEST_CASE("near-critical parameter point") {
  for (MapFamily f : {G, B})
    for (double z : {0.5, 1.0, 2.0})
      for (double eps : {0.1, 0.02}) {
        ParamPoint p = solve_near_critical(f, z, eps);
        CHECK(g_of(f, p.delta, p.kappa) == doctest::Approx(p.g).epsilon(1e-13));
        CHECK(z_of(f, p.delta, p.kappa) == doctest::Approx(z).epsilon(1e-13));
        CHECK(p.delta / eps == doctest::Approx(2 * critical_point(f, z).gamma).epsilon(0.2));
      }
  // delta -> 0 along the critical kappa recovers g_crit.
  for (MapFamily f : {G, B})
    for (double z : {0.3, 1.0, 1.7}) {
      double k = critical_kappa(f, z);
      CHECK(z_of(f, 1e-9, k) == doctest::Approx(z).epsilon(1e-7));
      CHECK(g_of(f, 1e-9, k) == doctest::Approx(critical_point(f, z).g_crit).epsilon(1e-7));
    }
  CHECK(critical_kappa(G, 1) == doctest::Approx(0).epsilon(1e-12));
  CHECK_THROWS(solve_near_critical(G, 1, 0));
  CHECK_THROWS(solve_near_critical(G, 1, 0.5));
}

TEST_CASE("discrete three-point closed form") {
  ParamPoint p = solve_near_critical(G, 1, 0.1);
  CHECK(discrete_three_point(p, 3, 4, 5) > 0);
  CHECK(discrete_three_point(p, 3, 3, 3) > 0);
  CHECK(discrete_three_point(p, 2, 3, 5) > 0);
  CHECK(discrete_three_point(p, 2, 3, 5) == doctest::Approx(discrete_three_point(p, 3, 2, 5)));
  CHECK_THROWS_WITH(discrete_three_point(p, 1, 1, 3), "triangular inequality violated");
  ParamPoint b = solve_near_critical(B, 1, 0.1);
  CHECK_THROWS_WITH(discrete_three_point(b, 1, 1, 1), "bipartite requires even total distance");
  CHECK(discrete_three_point(b, 2, 2, 2) > 0);
}

TEST_CASE("convergence to the continuum") {
  for (MapFamily f : {G, B})
    for (double z : {0.5, 1.0, 2.0}) {
      ConvergenceTable t = convergence_table(f, {1.0}, z, {0.05, 0.02, 0.01});
      INFO("two-point " << static_cast<int>(f) << " z=" << z << " last " << t.rows.back().rel_error);
      CHECK(t.strictly_decreasing());
      CHECK(t.rows.back().rel_error < 0.1);
      ConvergenceTable t3 = convergence_table(f, {1.0, 1.0, 1.0}, z, {0.05, 0.02, 0.01});
      INFO("three-point last " << t3.rows.back().rel_error);
      CHECK(t3.strictly_decreasing());
      CHECK(t3.rows.back().rel_error < 0.1);
    }
  CHECK(round_distance(100.0000000001, DistanceRounding::ceil) == 100);
  CHECK(round_distance(3, DistanceRounding::nearest_even) == 4);
  CHECK(parse_rounding("nearest-even") == DistanceRounding::nearest_even);
  CHECK_THROWS(parse_rounding("floor"));
}
