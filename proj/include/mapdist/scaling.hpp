#pragma once

#include "mapdist/param_solver.hpp"

#include <optional>
#include <string>
#include <vector>

namespace mapdist {

// A point (z, g_crit(z)) of the critical line. param is r in (0,3) for general maps and
// upsilon in (0,1/2) for bipartite maps.
struct CriticalPoint {
  MapFamily family = MapFamily::general;
  double z = 1;
  double param = 1;
  double g_crit = 0;
  double gamma = 0;
};

double z_of_param(MapFamily f, double param);
double g_crit_of_param(MapFamily f, double param);
double gamma_of_param(MapFamily f, double param);
CriticalPoint critical_point(MapFamily f, double z);

double continuous_two_point(MapFamily f, double D, double z);

struct ContinuumPoint {
  double D12, D13, D23;
  double S, T, U;
};
// Requires strict triangle inequalities.
ContinuumPoint continuum_point(double D12, double D13, double D23);

// The scaling form of F_{s,t,u} (general) or F~_{s,t,u} (bipartite) and its limit prefactor.
double three_point_prefactor(MapFamily f, double z);
double continuous_F(MapFamily f, double S, double T, double U, double z);
// d_S d_T d_U F, halved for bipartite maps.
double continuous_three_point(MapFamily f, double D12, double D13, double D23, double z);

struct DerivativeEstimate {
  double value;
  double error;
};
// The same mixed derivative by central differences, extrapolated over shrinking steps.
DerivativeEstimate continuous_three_point_fd(MapFamily f, double D12, double D13, double D23, double z);

struct Observables {
  double geodesic_vertices;
  std::optional<double> geodesic_edges;  // general maps only
  double vertex_fraction;
  double face_fraction;
};
Observables observables(MapFamily f, double z);

// Solution (x, alpha) of the bivariate parametrisation at (g, z), stored through
// x = 1 - delta and alpha = 1 - kappa * delta.
struct ParamPoint {
  MapFamily family;
  double g, z;
  double delta, kappa;
  double x() const { return 1 - delta; }
  double alpha() const { return 1 - kappa * delta; }
};

double g_of(MapFamily f, double delta, double kappa);
double z_of(MapFamily f, double delta, double kappa);
// Limit of kappa on the line of fixed z as delta -> 0.
double critical_kappa(MapFamily f, double z);
// Solves at g = g_crit(z) (1 - eps^4) with eps in (0, 0.2].
ParamPoint solve_near_critical(MapFamily f, double z, double eps);

// Closed-form discrete functions evaluated at a numeric parameter point.
double discrete_two_point(const ParamPoint& p, int d);
double discrete_three_point(const ParamPoint& p, int d12, int d13, int d23);

enum class DistanceRounding { ceil, nearest, nearest_even };
std::string to_string(DistanceRounding r);
DistanceRounding parse_rounding(const std::string& s);
int round_distance(double v, DistanceRounding r);

struct ConvergenceRow {
  double eps;
  double g;
  std::vector<int> d;
  // eps^-3 G_d, or eps^-1 G_{d12,d13,d23}. Bipartite triples only exist with even total
  // distance, so their three-point value is halved to give a density comparable to the continuum.
  double discrete;
  double continuum;
  double rel_error;
};

struct ConvergenceTable {
  MapFamily family;
  double z;
  std::vector<double> D;
  std::vector<ConvergenceRow> rows;
  bool strictly_decreasing() const;
};

// One distance gives the two-point table; three give the three-point table.
ConvergenceTable convergence_table(MapFamily f, const std::vector<double>& D, double z,
                                   const std::vector<double>& eps_list,
                                   std::optional<DistanceRounding> rounding = std::nullopt);

struct ClosedFormCheck {
  std::string name;
  double value;
  double expected;
  double tolerance;  // relative
  bool pass() const;
};

// Printed critical values and observables, limits z -> 0, and the z <-> 1/z duality over a grid.
std::vector<ClosedFormCheck> scaling_closed_form_checks();

}  // namespace mapdist
