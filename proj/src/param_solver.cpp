#include "mapdist/param_solver.hpp"

#include <stdexcept>
#include <utility>

namespace mapdist {

std::string to_string(MapFamily f) { return f == MapFamily::general ? "general" : "bipartite"; }

MapFamily parse_family(const std::string& name) {
  if (name == "general") return MapFamily::general;
  if (name == "bipartite") return MapFamily::bipartite;
  throw std::invalid_argument("unknown map family: " + name);
}

namespace {

template <class R>
using S = TruncatedSeries<R>;

// 1 - c * x^k
template <class R>
S<R> one_minus(const S<R>& c, const S<R>& x, int k) {
  return S<R>::one(x.order()) - c * x.pow(k);
}

template <class R>
S<R> general_P(const S<R>& x, const S<R>& a) {
  int N = x.order();
  S<R> one = S<R>::one(N);
  return one + x + a * x - a * x.pow(2) * R(6) + a * x.pow(3) + a * a * x.pow(3) +
         a * a * x.pow(4);
}

// Numerator and denominator of g and z as functions of (x, alpha).
template <class R>
struct Fractions {
  S<R> g_num, g_den, z_num, z_den;
};

template <class R>
Fractions<R> fractions(MapFamily family, const S<R>& x, const S<R>& a) {
  int N = x.order();
  S<R> one = S<R>::one(N);
  if (family == MapFamily::general) {
    S<R> ax1 = one_minus(a, x, 1), ax3 = one_minus(a, x, 3);
    S<R> P = general_P(x, a);
    S<R> q = ax1.pow(3) * ax3;
    return {x * q, P * P, a * (one - x).pow(3) * one_minus(S<R>(a * a), x, 3), q};
  }
  S<R> ax1 = one_minus(a, x, 1), ax2 = one_minus(a, x, 2), ax4 = one_minus(a, x, 4);
  S<R> q = ax1 * ax1 * ax4;
  return {x * q, (one + x).pow(2) * ax2.pow(3),
          a * (one - x).pow(2) * (one - x * x) * (one + a * x * x), q};
}

template <class R>
std::pair<S<R>, S<R>> residuals(MapFamily family, const S<R>& x, const S<R>& a, const R& z) {
  int N = x.order();
  Fractions<R> f = fractions(family, x, a);
  S<R> g = S<R>::variable(N);
  return {f.g_num - g * f.g_den, f.z_num - f.z_den * z};
}

template <class R>
BackSubstitution<R> back_substitute_impl(const ParamSolution<R>& p) {
  S<R> a = p.deformation();
  Fractions<R> f = fractions(p.family, p.x, a);
  return {f.g_num / f.g_den, f.z_num / f.z_den};
}

}  // namespace

ParamSolution<Rational> solve_univariate(MapFamily family, int order) {
  if (order < 0) throw std::invalid_argument("negative truncation order");
  QSeries g = QSeries::variable(order);
  QSeries one = QSeries::one(order);
  QSeries x(order);
  // Each pass of the fixed point fixes one more coefficient.
  for (int it = 0; it < order; ++it) {
    if (family == MapFamily::general) {
      QSeries s = one + x * Rational(4) + x * x;
      x = g * s * s / (one + x + x * x);
    } else {
      x = g * (one + x).pow(4) / (one + x * x);
    }
  }
  return {family, x, std::nullopt};
}

ParamSolution<ZPolynomial> solve_bivariate(MapFamily family, int order) {
  if (order < 0) throw std::invalid_argument("negative truncation order");
  const ZPolynomial z = ZPolynomial::z();
  QzSeries x(order);
  QzSeries a = QzSeries::constant(order, z);
  for (int n = 1; n <= order; ++n) {
    QzSeries xn = x.truncated(n), an = a.truncated(n);
    QzSeries e = QzSeries::monomial(n, n, ZPolynomial(1));
    auto r0 = residuals(family, xn, an, z);
    auto rx = residuals(family, QzSeries(xn + e), an, z);
    auto ra = residuals(family, xn, QzSeries(an + e), z);
    ZPolynomial r1 = r0.first.coeff(n), r2 = r0.second.coeff(n);
    ZPolynomial j11 = rx.first.coeff(n) - r1, j12 = ra.first.coeff(n) - r1;
    ZPolynomial j21 = rx.second.coeff(n) - r2, j22 = ra.second.coeff(n) - r2;
    ZPolynomial det = j11 * j22 - j12 * j21;
    if (!det.is_unit())
      throw std::logic_error("non-invertible linear system at order " + std::to_string(n));
    ZPolynomial inv = det.inverse();
    x.set_coeff(n, (j12 * r2 - j22 * r1) * inv);
    a.set_coeff(n, (j21 * r1 - j11 * r2) * inv);
  }
  return {family, x, a};
}

BackSubstitution<Rational> back_substitute(const ParamSolution<Rational>& p) {
  return back_substitute_impl(p);
}

BackSubstitution<ZPolynomial> back_substitute(const ParamSolution<ZPolynomial>& p) {
  return back_substitute_impl(p);
}

}  // namespace mapdist
