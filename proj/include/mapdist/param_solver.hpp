#pragma once

#include "mapdist/truncated_series.hpp"

#include <optional>
#include <string>

namespace mapdist {

enum class MapFamily { general, bipartite };

std::string to_string(MapFamily f);
MapFamily parse_family(const std::string& name);

// Face weight z as an element of the coefficient ring: 1 over Q, the variable over Q[z].
template <class R>
R face_weight();
template <>
inline Rational face_weight<Rational>() { return Rational(1); }
template <>
inline ZPolynomial face_weight<ZPolynomial>() { return ZPolynomial::z(); }

template <class R>
constexpr bool is_bivariate_ring() { return std::is_same_v<R, ZPolynomial>; }

// Parametrisation (x, alpha) of the edge weight g (and face weight z).
// Over Q there is no alpha; formulas then use alpha = 1.
template <class R>
struct ParamSolution {
  MapFamily family = MapFamily::general;
  TruncatedSeries<R> x;
  std::optional<TruncatedSeries<R>> alpha;

  int order() const { return x.order(); }
  TruncatedSeries<R> deformation() const {
    return alpha ? *alpha : TruncatedSeries<R>::one(x.order());
  }
};

ParamSolution<Rational> solve_univariate(MapFamily family, int order);
ParamSolution<ZPolynomial> solve_bivariate(MapFamily family, int order);

template <class R>
ParamSolution<R> solve_parameters(MapFamily family, int order) {
  if constexpr (is_bivariate_ring<R>())
    return solve_bivariate(family, order);
  else
    return solve_univariate(family, order);
}

// The (g, z) recovered by substituting (x, alpha) into the parametrisation.
template <class R>
struct BackSubstitution {
  TruncatedSeries<R> g;
  TruncatedSeries<R> z;
};

BackSubstitution<Rational> back_substitute(const ParamSolution<Rational>& p);
BackSubstitution<ZPolynomial> back_substitute(const ParamSolution<ZPolynomial>& p);

}  // namespace mapdist
