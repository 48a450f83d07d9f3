#include "mapdist/scaling.hpp"

#include <boost/math/tools/roots.hpp>
#include <boost/math/tools/toms748_solve.hpp>

#include <array>
#include <cmath>
#include <functional>
#include <limits>
#include <sstream>
#include <stdexcept>

namespace mapdist {

namespace {

constexpr std::uintmax_t kMaxIter = 400;

template <class F>
double bracketed_root(F f, double lo, double hi, const char* what) {
  double flo = f(lo), fhi = f(hi);
  if (flo == 0) return lo;
  if (fhi == 0) return hi;
  if ((flo > 0) == (fhi > 0)) {
    std::ostringstream os;
    os.precision(17);
    os << what << ": no sign change on [" << lo << ", " << hi << "] (values " << flo << ", " << fhi << ")";
    throw std::runtime_error(os.str());
  }
  std::uintmax_t iters = kMaxIter;
  auto r = boost::math::tools::toms748_solve(f, lo, hi, flo, fhi,
                                             boost::math::tools::eps_tolerance<double>(std::numeric_limits<double>::digits - 2),
                                             iters);
  if (iters >= kMaxIter) throw std::runtime_error(std::string(what) + ": root finder did not converge");
  return 0.5 * (r.first + r.second);
}

void require_positive_z(double z) {
  if (!(z > 0) || !std::isfinite(z)) throw std::domain_error("z must be positive");
}

// 1 - alpha^a x^k with x = 1 - delta, alpha = 1 - kappa delta.
double bracket(double delta, double kappa, int a, double k) {
  return -std::expm1(a * std::log1p(-kappa * delta) + k * std::log1p(-delta));
}

// Coefficients B[i][j] with P(x, alpha) = sum B[i][j] kappa^i delta^(i+j), where
// P = 1 + x + alpha x - 6 alpha x^2 + alpha x^3 + alpha^2 x^3 + alpha^2 x^4.
struct ShiftedP {
  std::array<std::array<double, 5>, 3> B{};
  ShiftedP() {
    const int terms[7][3] = {{1, 0, 0}, {1, 0, 1}, {1, 1, 1}, {-6, 1, 2}, {1, 1, 3}, {1, 2, 3}, {1, 2, 4}};
    auto binom = [](int n, int k) {
      long r = 1;
      for (int i = 0; i < k; ++i) r = r * (n - i) / (i + 1);
      return r;
    };
    std::array<std::array<long, 5>, 3> acc{};
    for (const auto& t : terms)
      for (int i = 0; i <= t[1]; ++i)
        for (int j = 0; j <= t[2]; ++j) acc[i][j] += t[0] * binom(t[1], i) * binom(t[2], j) * ((i + j) % 2 ? -1 : 1);
    for (int i = 0; i < 3; ++i)
      for (int j = 0; j < 5; ++j) B[i][j] = static_cast<double>(acc[i][j]);
  }
  double operator()(double delta, double kappa) const {
    double s = 0;
    for (int i = 0; i < 3; ++i)
      for (int j = 0; j < 5; ++j)
        if (B[i][j] != 0) s += B[i][j] * std::pow(kappa, i) * std::pow(delta, i + j);
    return s;
  }
};

const ShiftedP& shifted_p() {
  static const ShiftedP p;
  return p;
}

// delta -> 0 limit of z at fixed kappa.
double z_limit(MapFamily f, double kappa) {
  if (f == MapFamily::general) return (3 + 2 * kappa) / (std::pow(1 + kappa, 3) * (3 + kappa));
  return 4 / ((1 + kappa) * (1 + kappa) * (4 + kappa));
}

double kappa_limit_root(MapFamily f, double z) {
  const double lz = std::log(z);
  auto h = [&](double k) { return std::log(z_limit(f, k)) - lz; };
  double lo = -1 + 1e-12, hi = 1;
  while (h(hi) > 0) hi *= 4;
  return bracketed_root(h, lo, hi, "critical kappa");
}

double stu_check(double v) {
  if (!(v > 0)) throw std::invalid_argument("degenerate triangle: strict triangle inequalities required");
  return v;
}

}  // namespace

double critical_kappa(MapFamily f, double z) {
  require_positive_z(z);
  return kappa_limit_root(f, z);
}

double z_of_param(MapFamily f, double p) {
  if (f == MapFamily::general) return std::pow(3 - p, 3) * (p + 1) / (16 * p * p * p);
  return std::pow(1 - 2 * p, 3) / ((3 - 4 * p) * p * p);
}

double g_crit_of_param(MapFamily f, double p) {
  if (f == MapFamily::general) return 4 * p * p * p / (3 * (p * p + 3) * (p * p + 3));
  return (3 - 4 * p) * p * p;
}

double gamma_of_param(MapFamily f, double p) {
  if (f == MapFamily::general) return std::sqrt(3 * (3 - p) * std::sqrt(p * p + 3) / (2 * p * (p + 3)));
  return std::sqrt(std::sqrt(3.0) * (1 - 2 * p) / (2 * std::sqrt(p * (1 - p))));
}

CriticalPoint critical_point(MapFamily f, double z) {
  require_positive_z(z);
  const double top = f == MapFamily::general ? 3.0 : 0.5;
  const double lz = std::log(z);
  auto h = [&](double p) {
    if (f == MapFamily::general) return 3 * std::log(3 - p) + std::log1p(p) - std::log(16.0) - 3 * std::log(p) - lz;
    return 3 * std::log1p(-2 * p) - std::log(3 - 4 * p) - 2 * std::log(p) - lz;
  };
  double lo = top * 1e-12, hi = top * (1 - 1e-15);
  CriticalPoint c;
  c.family = f;
  c.z = z;
  c.param = bracketed_root(h, lo, hi, "critical line");
  c.g_crit = g_crit_of_param(f, c.param);
  c.gamma = gamma_of_param(f, c.param);
  return c;
}

double continuous_two_point(MapFamily f, double D, double z) {
  if (!(D > 0)) throw std::invalid_argument("D must be positive");
  const double gm = critical_point(f, z).gamma;
  const double pref = f == MapFamily::general ? 2 : 4;
  const double sh = std::sinh(gm * D);
  return pref * gm * gm * gm * std::cosh(gm * D) / (sh * sh * sh);
}

ContinuumPoint continuum_point(double D12, double D13, double D23) {
  ContinuumPoint p{D12, D13, D23, 0, 0, 0};
  p.S = stu_check((D12 + D13 - D23) / 2);
  p.T = stu_check((D12 + D23 - D13) / 2);
  p.U = stu_check((D13 + D23 - D12) / 2);
  return p;
}

double three_point_prefactor(MapFamily f, double z) {
  CriticalPoint c = critical_point(f, z);
  const double p = c.param, g2 = c.gamma * c.gamma;
  if (f == MapFamily::general) return 3 * (3 - p) * (3 - p) / (2 * std::pow(3 + p, 3) * g2);
  return (1 - 2 * p) * (1 - 2 * p) * (3 - 4 * p) / (4 * (1 - p) * (1 - p) * g2);
}

double continuous_F(MapFamily f, double S, double T, double U, double z) {
  const double gm = critical_point(f, z).gamma;
  auto sh = [&](double v) { return std::sinh(gm * v); };
  const double ratio = 2 * sh(S + T + U) * sh(S) * sh(T) * sh(U) / (sh(S + T) * sh(T + U) * sh(U + S));
  return three_point_prefactor(f, z) * ratio * ratio;
}

double continuous_three_point(MapFamily f, double D12, double D13, double D23, double z) {
  ContinuumPoint p = continuum_point(D12, D13, D23);
  const double gm = critical_point(f, z).gamma;
  const double S = p.S, T = p.T, U = p.U, sum = S + T + U;
  auto c0 = [&](double v) { return gm / std::tanh(gm * v); };
  auto c1 = [&](double v) {
    double s = std::sinh(gm * v);
    return -gm * gm / (s * s);
  };
  auto c2 = [&](double v) {
    double s = std::sinh(gm * v);
    return 2 * gm * gm * gm * std::cosh(gm * v) / (s * s * s);
  };
  // F = C e^H with H = 2 log of the sinh ratio.
  const double HS = 2 * (c0(sum) + c0(S) - c0(S + T) - c0(U + S));
  const double HT = 2 * (c0(sum) + c0(T) - c0(S + T) - c0(T + U));
  const double HU = 2 * (c0(sum) + c0(U) - c0(T + U) - c0(U + S));
  const double HST = 2 * (c1(sum) - c1(S + T));
  const double HSU = 2 * (c1(sum) - c1(U + S));
  const double HTU = 2 * (c1(sum) - c1(T + U));
  const double HSTU = 2 * c2(sum);
  const double F = continuous_F(f, S, T, U, z);
  const double v = F * (HS * HT * HU + HS * HTU + HT * HSU + HU * HST + HSTU);
  return f == MapFamily::general ? v : v / 2;
}

DerivativeEstimate continuous_three_point_fd(MapFamily f, double D12, double D13, double D23, double z) {
  ContinuumPoint p = continuum_point(D12, D13, D23);
  auto stencil = [&](double h) {
    double s = 0;
    for (int a : {-1, 1})
      for (int b : {-1, 1})
        for (int c : {-1, 1}) s += a * b * c * continuous_F(f, p.S + a * h, p.T + b * h, p.U + c * h, z);
    return s / (8 * h * h * h);
  };
  constexpr int N = 10;
  constexpr double con = 1.4, con2 = con * con;
  double h = 0.2 * std::min({p.S, p.T, p.U});
  double a[N][N];
  a[0][0] = stencil(h);
  DerivativeEstimate best{a[0][0], std::numeric_limits<double>::max()};
  for (int i = 1; i < N; ++i) {
    h /= con;
    a[0][i] = stencil(h);
    double fac = con2;
    for (int j = 1; j <= i; ++j) {
      a[j][i] = (a[j - 1][i] * fac - a[j - 1][i - 1]) / (fac - 1);
      fac *= con2;
      double err = std::max(std::abs(a[j][i] - a[j - 1][i]), std::abs(a[j][i] - a[j - 1][i - 1]));
      if (err <= best.error) best = {a[j][i], err};
    }
    if (std::abs(a[i][i] - a[i - 1][i - 1]) >= 2 * best.error) break;
  }
  if (f != MapFamily::general) {
    best.value /= 2;
    best.error /= 2;
  }
  return best;
}

Observables observables(MapFamily f, double z) {
  const double p = critical_point(f, z).param;
  Observables o;
  if (f == MapFamily::general) {
    o.geodesic_vertices = 6 / (3 + p);
    o.geodesic_edges = (3 + p) / (2 * p);
    o.vertex_fraction = 8 * p * p / ((3 + p) * (3 + p * p));
    o.face_fraction = (1 + p) * (3 - p) * (3 - p) / ((3 + p) * (3 + p * p));
  } else {
    o.geodesic_vertices = 3 - 4 * p;
    o.vertex_fraction = p * (3 - 4 * p) / (1 - p);
    o.face_fraction = (1 - 2 * p) * (1 - 2 * p) / (1 - p);
  }
  return o;
}

double g_of(MapFamily f, double delta, double kappa) {
  const double x = 1 - delta;
  if (f == MapFamily::general) {
    const double P = shifted_p()(delta, kappa);
    return x * std::pow(bracket(delta, kappa, 1, 1), 3) * bracket(delta, kappa, 1, 3) / (P * P);
  }
  return x * std::pow(bracket(delta, kappa, 1, 1), 2) * bracket(delta, kappa, 1, 4) /
         ((2 - delta) * (2 - delta) * std::pow(bracket(delta, kappa, 1, 2), 3));
}

double z_of(MapFamily f, double delta, double kappa) {
  const double alpha = 1 - kappa * delta;
  if (f == MapFamily::general)
    return alpha * delta * delta * delta * bracket(delta, kappa, 2, 3) /
           (std::pow(bracket(delta, kappa, 1, 1), 3) * bracket(delta, kappa, 1, 3));
  const double x = 1 - delta;
  return alpha * delta * delta * (1 - x * x) * (1 + alpha * x * x) /
         (std::pow(bracket(delta, kappa, 1, 1), 2) * bracket(delta, kappa, 1, 4));
}

ParamPoint solve_near_critical(MapFamily f, double z, double eps) {
  require_positive_z(z);
  if (!(eps > 0 && eps <= 0.2)) throw std::invalid_argument("eps must lie in (0, 0.2]");
  const CriticalPoint c = critical_point(f, z);
  const double target = std::log(c.g_crit) + std::log1p(-std::pow(eps, 4));
  const double lz = std::log(z);
  const double kc = kappa_limit_root(f, z);

  auto kappa_at = [&](double delta) {
    auto h = [&](double k) { return std::log(z_of(f, delta, k)) - lz; };
    const double floor = -1 / (1 - delta) + 1e-12, ceiling = 1 / delta - 1e-12;
    double w = 0.05 * (1 + std::abs(kc));
    double lo = std::max(kc - w, floor), hi = std::min(kc + w, ceiling);
    for (int i = 0; i < 60 && (h(lo) > 0) == (h(hi) > 0); ++i) {
      w *= 2;
      lo = std::max(kc - w, floor);
      hi = std::min(kc + w, ceiling);
    }
    return bracketed_root(h, lo, hi, "alpha at fixed x");
  };
  auto h = [&](double delta) { return std::log(g_of(f, delta, kappa_at(delta))) - target; };
  const double d0 = 2 * c.gamma * eps;
  double lo = d0 / 4, hi = std::min(4 * d0, 0.9);
  while (h(lo) < 0 && lo > 1e-12) lo /= 4;
  while (h(hi) > 0 && hi < 0.99) hi = std::min(0.99, hi * 1.5);
  ParamPoint p;
  p.family = f;
  p.z = z;
  p.g = c.g_crit * (1 - std::pow(eps, 4));
  p.delta = bracketed_root(h, lo, hi, "x at fixed (g, z)");
  p.kappa = kappa_at(p.delta);
  return p;
}

double discrete_two_point(const ParamPoint& p, int d) {
  if (d < 1) throw std::invalid_argument("two-point distance must be at least 1");
  auto lb = [&](int k) { return std::log(bracket(p.delta, p.kappa, 1, k)); };
  if (p.family == MapFamily::general) return 3 * lb(d + 1) + lb(d + 3) - lb(d) - 3 * lb(d + 2);
  return 2 * lb(d + 1) + lb(d + 4) - lb(d) - 2 * lb(d + 3);
}

double discrete_three_point(const ParamPoint& p, int d12, int d13, int d23) {
  if (d12 < 1 || d13 < 1 || d23 < 1) throw std::invalid_argument("distances must be positive");
  if (d12 > d13 + d23 || d13 > d12 + d23 || d23 > d12 + d13)
    throw std::invalid_argument("triangular inequality violated");
  const int sum = d12 + d13 + d23;
  const bool odd = sum % 2 != 0;
  const bool general = p.family == MapFamily::general;
  if (!general && odd) throw std::invalid_argument("bipartite requires even total distance");
  const int e = odd ? 1 : 0;
  const int s = (d12 + d13 - d23 + e) / 2, t = (d12 + d23 - d13 + e) / 2, u = (d13 + d23 - d12 + e) / 2;
  const double dl = p.delta, kp = p.kappa, x = 1 - dl, alpha = 1 - kp * dl;
  auto b = [&](int k) { return bracket(dl, kp, 1, k); };
  auto b1 = [&](int k) { return bracket(dl, kp, 0, k); };
  auto b2 = [&](int k) { return bracket(dl, kp, 2, k); };
  auto N = [&](int i, int j) {
    if (i == 0 || j == 0) return 1.0;
    if (general) return b(3) * b(i + 2) * b(j + 2) * b(i + j + 3) / (b(2) * b(i + 3) * b(j + 3) * b(i + j + 2));
    return b(4) * b(i + 2) * b(j + 2) * b(i + j + 4) / (b(2) * b(i + 4) * b(j + 4) * b(i + j + 2));
  };
  std::function<double(int, int, int)> F;
  if (!general) {
    F = [&](int i, int j, int k) {
      double pref = b(i + 4) * b(j + 4) * b(k + 4) /
                    (b(3) * b(4) * b(i + 2) * b(j + 2) * b(k + 2) * b(i + j + 4) * b(j + k + 4) * b(k + i + 4));
      double first = alpha * x * b(3) * b1(i + 1) * b1(j + 1) * b1(k + 1) * b2(i + j + k + 5);
      double second = b(1) * b(i + 3) * b(j + 3) * b(k + 3) * b(i + j + k + 3);
      double y = pref * (first + second);
      return N(i, j) * N(i, k) * N(j, k) * y * y;
    };
  } else if (!odd) {
    F = [&](int i, int j, int k) {
      double q = b(i + 2) * b(j + 2) * b(k + 2) * b(i + j + k + 3);
      return b(3) * q * q /
             (std::pow(b(2), 3) * b(i + j + 2) * b(j + k + 2) * b(k + i + 2) * b(i + j + 3) * b(j + k + 3) * b(k + i + 3));
    };
  } else {
    F = [&](int i, int j, int k) {
      double q = alpha * b1(i) * b1(j) * b1(k) * b2(i + j + k + 3);
      return x * x * x * b(3) * q * q /
             (std::pow(b(2), 3) * b(i + j + 1) * b(j + k + 1) * b(k + i + 1) * b(i + j + 2) * b(j + k + 2) * b(k + i + 2));
    };
  }
  if (s == 0 || t == 0 || u == 0) {
    std::vector<int> nz;
    for (int v : {s, t, u})
      if (v != 0) nz.push_back(v);
    if (nz.size() != 2) throw std::invalid_argument("at most one of s, t, u can be zero");
    const int i = nz[0], j = nz[1];
    return N(i, j) - N(i - 1, j) - N(i, j - 1) + N(i - 1, j - 1);
  }
  double r = 0;
  for (int a = 0; a < 2; ++a)
    for (int bb = 0; bb < 2; ++bb)
      for (int c = 0; c < 2; ++c) r += ((a + bb + c) % 2 ? -1 : 1) * F(s - a, t - bb, u - c);
  return r;
}

std::string to_string(DistanceRounding r) {
  switch (r) {
    case DistanceRounding::ceil: return "ceil";
    case DistanceRounding::nearest: return "nearest";
    case DistanceRounding::nearest_even: return "nearest-even";
  }
  return "?";
}

DistanceRounding parse_rounding(const std::string& s) {
  if (s == "ceil") return DistanceRounding::ceil;
  if (s == "nearest") return DistanceRounding::nearest;
  if (s == "nearest-even") return DistanceRounding::nearest_even;
  throw std::invalid_argument("unknown rounding '" + s + "' (ceil, nearest, nearest-even)");
}

int round_distance(double v, DistanceRounding r) {
  switch (r) {
    case DistanceRounding::ceil: return static_cast<int>(std::ceil(v - 1e-9));
    case DistanceRounding::nearest: return static_cast<int>(std::lround(v));
    case DistanceRounding::nearest_even: return 2 * static_cast<int>(std::lround(v / 2));
  }
  throw std::logic_error("unhandled rounding");
}

bool ConvergenceTable::strictly_decreasing() const {
  for (size_t i = 1; i < rows.size(); ++i)
    if (!(rows[i].rel_error < rows[i - 1].rel_error)) return false;
  return !rows.empty();
}

ConvergenceTable convergence_table(MapFamily f, const std::vector<double>& D, double z,
                                   const std::vector<double>& eps_list, std::optional<DistanceRounding> rounding) {
  if (D.size() != 1 && D.size() != 3) throw std::invalid_argument("give one distance or three");
  for (double e : eps_list)
    if (!(e > 0 && e <= 0.2)) throw std::invalid_argument("eps must lie in (0, 0.2]");
  const DistanceRounding rr =
      rounding.value_or(f == MapFamily::bipartite && D.size() == 1 ? DistanceRounding::nearest_even : DistanceRounding::ceil);
  ConvergenceTable t;
  t.family = f;
  t.z = z;
  t.D = D;
  const double cont = D.size() == 1 ? continuous_two_point(f, D[0], z) : continuous_three_point(f, D[0], D[1], D[2], z);
  for (double e : eps_list) {
    ParamPoint p = solve_near_critical(f, z, e);
    ConvergenceRow row;
    row.eps = e;
    row.g = p.g;
    for (double v : D) row.d.push_back(std::max(1, round_distance(v / e, rr)));
    if (D.size() == 1)
      row.discrete = discrete_two_point(p, row.d[0]) / (e * e * e);
    else
      row.discrete = discrete_three_point(p, row.d[0], row.d[1], row.d[2]) / (f == MapFamily::general ? e : 2 * e);
    row.continuum = cont;
    row.rel_error = std::abs(row.discrete - cont) / std::abs(cont);
    t.rows.push_back(row);
  }
  return t;
}

bool ClosedFormCheck::pass() const {
  return std::isfinite(value) && std::abs(value - expected) <= tolerance * std::max(1.0, std::abs(expected));
}

std::vector<ClosedFormCheck> scaling_closed_form_checks() {
  const MapFamily G = MapFamily::general, B = MapFamily::bipartite;
  std::vector<ClosedFormCheck> c;
  const CriticalPoint g1 = critical_point(G, 1), b1 = critical_point(B, 1);
  const Observables og = observables(G, 1), ob = observables(B, 1);
  c.push_back({"g_crit general z=1", g1.g_crit, 1.0 / 12, 1e-12});
  c.push_back({"gamma general z=1", g1.gamma, std::sqrt(1.5), 1e-12});
  c.push_back({"g_crit bipartite z=1", b1.g_crit, 1.0 / 8, 1e-12});
  c.push_back({"gamma bipartite z=1", b1.gamma, 1.0, 1e-12});
  c.push_back({"geodesic vertices general z=1", og.geodesic_vertices, 1.5, 1e-12});
  c.push_back({"geodesic edges general z=1", og.geodesic_edges.value_or(NAN), 2.0, 1e-12});
  c.push_back({"geodesic vertices bipartite z=1", ob.geodesic_vertices, 2.0, 1e-12});
  c.push_back({"vertex fraction general z=1", og.vertex_fraction, 0.5, 1e-12});
  c.push_back({"face fraction general z=1", og.face_fraction, 0.5, 1e-12});
  c.push_back({"vertex fraction bipartite z=1", ob.vertex_fraction, 2.0 / 3, 1e-12});
  c.push_back({"face fraction bipartite z=1", ob.face_fraction, 1.0 / 3, 1e-12});
  const Observables o0 = observables(G, 1e-15);
  c.push_back({"geodesic vertices general z->0", o0.geodesic_vertices, 1.0, 1e-4});
  c.push_back({"geodesic edges general z->0", o0.geodesic_edges.value_or(NAN), 1.0, 1e-4});
  for (double z : {0.01, 0.1, 0.3, 0.5, 0.9, 1.0, 1.5, 2.0, 5.0, 20.0, 100.0}) {
    std::ostringstream os;
    os << " z=" << z;
    const std::string at = os.str();
    CriticalPoint a = critical_point(G, z), b = critical_point(G, 1 / z);
    c.push_back({"duality g_crit(1/z) = z g_crit(z)" + at, b.g_crit, z * a.g_crit, 1e-10});
    c.push_back({"duality r -> (3-r)/(1+r)" + at, b.param, (3 - a.param) / (1 + a.param), 1e-10});
    Observables oa = observables(G, z), obb = observables(G, 1 / z);
    c.push_back({"duality n_v <-> n_f" + at, obb.vertex_fraction, oa.face_fraction, 1e-10});
  }
  return c;
}

}  // namespace mapdist
