#pragma once

#include "mapdist/families.hpp"

#include <functional>
#include <optional>
#include <string>
#include <vector>

namespace mapdist {

enum class Parity { even, odd };

// Pairwise distances between marked vertices, with the derived (s,t) or (s,t,u).
struct DistanceSpec {
  std::vector<int> distances;
  Parity parity = Parity::even;
  std::vector<int> stu;
  bool aligned = false;

  static DistanceSpec two_point(int d12);
  static DistanceSpec three_point(int d12, int d13, int d23);
  static DistanceSpec from_list(const std::vector<int>& d);
};

enum class TwoPointRoute { direct, typeA, typeB };

std::string to_string(TwoPointRoute r);
TwoPointRoute parse_route(const std::string& name);

// Alternating-sign sum of f over the 2^k corners obtained by lowering each listed index by 0 or 1.
template <class S>
S finite_difference(const std::function<S(const std::vector<int>&)>& f, std::vector<int> at,
                    const std::vector<int>& which) {
  S acc = f(at);
  acc = acc - acc;
  int k = static_cast<int>(which.size());
  for (int mask = 0; mask < (1 << k); ++mask) {
    std::vector<int> idx = at;
    int sign = 1;
    for (int b = 0; b < k; ++b)
      if (mask & (1 << b)) {
        idx[which[b]] -= 1;
        sign = -sign;
      }
    if (sign > 0)
      acc += f(idx);
    else
      acc -= f(idx);
  }
  return acc;
}

// G_d via the chosen route. split is s for typeA (t = d - s) and for typeB (t = d + 1 - s).
template <class R>
TruncatedSeries<R> two_point(const FamilyEvaluator<R>& ev, int d, TwoPointRoute route,
                             std::optional<int> split = std::nullopt);

// G_d as log(R_d / R_{d-1}).
template <class R>
TruncatedSeries<R> two_point_from_R(const FamilyEvaluator<R>& ev, int d);

template <class R>
TruncatedSeries<R> three_point(const FamilyEvaluator<R>& ev, const DistanceSpec& spec);

enum class TreeLimit { even, odd, bipartite };

// Leading coefficient in z of the bivariate three-point function (z^1 for even and bipartite,
// z^2 for odd), as a series in g.
QSeries tree_limit_three_point(TreeLimit kind, int s, int t, int u, int order);

extern template QSeries two_point(const FamilyEvaluator<Rational>&, int, TwoPointRoute, std::optional<int>);
extern template QzSeries two_point(const FamilyEvaluator<ZPolynomial>&, int, TwoPointRoute, std::optional<int>);
extern template QSeries two_point_from_R(const FamilyEvaluator<Rational>&, int);
extern template QzSeries two_point_from_R(const FamilyEvaluator<ZPolynomial>&, int);
extern template QSeries three_point(const FamilyEvaluator<Rational>&, const DistanceSpec&);
extern template QzSeries three_point(const FamilyEvaluator<ZPolynomial>&, const DistanceSpec&);

}  // namespace mapdist
