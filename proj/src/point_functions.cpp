#include "mapdist/point_functions.hpp"

#include <stdexcept>

namespace mapdist {

DistanceSpec DistanceSpec::two_point(int d12) {
  if (d12 < 1) throw std::invalid_argument("distance must be a positive integer");
  DistanceSpec d;
  d.distances = {d12};
  return d;
}

DistanceSpec DistanceSpec::three_point(int d12, int d13, int d23) {
  if (d12 < 1 || d13 < 1 || d23 < 1)
    throw std::invalid_argument("distances must be positive integers");
  if (d12 > d13 + d23 || d13 > d12 + d23 || d23 > d12 + d13)
    throw std::invalid_argument("triangular inequality violated");
  DistanceSpec d;
  d.distances = {d12, d13, d23};
  int sum = d12 + d13 + d23;
  d.parity = sum % 2 == 0 ? Parity::even : Parity::odd;
  int shift = d.parity == Parity::even ? 0 : 1;
  int s = (d12 + d13 - d23 + shift) / 2;
  int t = (d12 + d23 - d13 + shift) / 2;
  int u = (d13 + d23 - d12 + shift) / 2;
  d.stu = {s, t, u};
  d.aligned = d.parity == Parity::even && (s == 0 || t == 0 || u == 0);
  return d;
}

DistanceSpec DistanceSpec::from_list(const std::vector<int>& d) {
  if (d.size() == 1) return two_point(d[0]);
  if (d.size() == 3) return three_point(d[0], d[1], d[2]);
  throw std::invalid_argument("expected one or three distances");
}

std::string to_string(TwoPointRoute r) {
  switch (r) {
    case TwoPointRoute::direct:
      return "direct";
    case TwoPointRoute::typeA:
      return "typeA";
    default:
      return "typeB";
  }
}

TwoPointRoute parse_route(const std::string& name) {
  if (name == "direct") return TwoPointRoute::direct;
  if (name == "typeA") return TwoPointRoute::typeA;
  if (name == "typeB") return TwoPointRoute::typeB;
  throw std::invalid_argument("unknown route: " + name);
}

template <class R>
TruncatedSeries<R> two_point(const FamilyEvaluator<R>& ev, int d, TwoPointRoute route,
                             std::optional<int> split) {
  using S = TruncatedSeries<R>;
  if (d < 1) throw std::invalid_argument("two-point distance must be at least 1");
  const Deformation a = ev.bivariate() ? Deformation::alpha : Deformation::none;
  const bool general = ev.family() == MapFamily::general;
  if (route == TwoPointRoute::direct) {
    S num = ev.one(), den = ev.one();
    if (general) {
      num = ev.bracket(d + 1, a).pow(3) * ev.bracket(d + 3, a);
      den = ev.bracket(d, a) * ev.bracket(d + 2, a).pow(3);
    } else {
      num = ev.bracket(d + 1, a).pow(2) * ev.bracket(d + 4, a);
      den = ev.bracket(d, a) * ev.bracket(d + 3, a).pow(2);
    }
    return (num / den).log();
  }
  if (route == TwoPointRoute::typeA) {
    if (d < 2) throw std::invalid_argument("typeA route needs d >= 2 (s + t = d with s, t >= 1)");
    int s = split.value_or((d + 1) / 2);
    int t = d - s;
    if (s < 1 || t < 1) throw std::invalid_argument("typeA split needs s, t >= 1");
    std::function<S(const std::vector<int>&)> f = [&](const std::vector<int>& i) {
      return ev.N(i[0], i[1]).log();
    };
    return finite_difference(f, {s, t}, {0, 1});
  }
  if (!general)
    throw std::invalid_argument("typeB route does not exist for bipartite maps");
  int s = split.value_or((d + 2) / 2);
  int t = d + 1 - s;
  if (s < 1 || t < 1) throw std::invalid_argument("typeB split needs s, t >= 1");
  std::function<S(const std::vector<int>&)> f = [&](const std::vector<int>& i) {
    if constexpr (FamilyEvaluator<R>::bivariate()) {
      return (ev.one() - ev.g() * ev.D(i[0], i[1])).inverse().log();
    } else {
      return (ev.X(i[0], i[1]) / ev.N(i[0], i[1])).log();
    }
  };
  return finite_difference(f, {s, t}, {0, 1});
}

template <class R>
TruncatedSeries<R> two_point_from_R(const FamilyEvaluator<R>& ev, int d) {
  if (d < 1) throw std::invalid_argument("two-point distance must be at least 1");
  return (ev.Rf(d) / ev.Rf(d - 1)).log();
}

template <class R>
TruncatedSeries<R> three_point(const FamilyEvaluator<R>& ev, const DistanceSpec& spec) {
  using S = TruncatedSeries<R>;
  if (spec.distances.size() != 3) throw std::invalid_argument("three-point function needs three distances");
  const bool general = ev.family() == MapFamily::general;
  if (!general && spec.parity == Parity::odd)
    throw std::invalid_argument("bipartite maps have an even total distance");
  std::vector<int> stu = spec.stu;
  int zeros = 0;
  for (int v : stu) zeros += v == 0;
  if (zeros > 1) throw std::invalid_argument("at most one of s, t, u can be zero");
  if (zeros == 1) {
    std::vector<int> nz;
    for (int v : stu)
      if (v != 0) nz.push_back(v);
    std::function<S(const std::vector<int>&)> f = [&](const std::vector<int>& i) {
      return ev.N(i[0], i[1]);
    };
    return finite_difference(f, nz, {0, 1});
  }
  std::function<S(const std::vector<int>&)> f = [&](const std::vector<int>& i) {
    if (!general) return ev.F_bipartite(i[0], i[1], i[2]);
    if (spec.parity == Parity::even) return ev.F_even(i[0], i[1], i[2]);
    return ev.F_odd(i[0], i[1], i[2]);
  };
  return finite_difference(f, stu, {0, 1, 2});
}

QSeries tree_limit_three_point(TreeLimit kind, int s, int t, int u, int order) {
  if (s < 1 || t < 1 || u < 1) throw std::invalid_argument("tree limit needs s, t, u >= 1");
  QSeries g = QSeries::variable(order), one = QSeries::one(order);
  // x = g Cat(g)^2 solves x = g (1 + x)^2.
  QSeries x(order);
  for (int i = 0; i < order; ++i) x = g * (one + x) * (one + x);
  QSeries lead = x.pow(s + t + u);
  if (kind != TreeLimit::odd) return lead * Rational(2);
  QSeries prod = one;
  for (int k : {s, t, u}) prod *= one * Rational(2) - x.pow(k) - x.pow(k - 1);
  return lead * prod / (one - x).pow(3);
}

template QSeries two_point(const FamilyEvaluator<Rational>&, int, TwoPointRoute, std::optional<int>);
template QzSeries two_point(const FamilyEvaluator<ZPolynomial>&, int, TwoPointRoute, std::optional<int>);
template QSeries two_point_from_R(const FamilyEvaluator<Rational>&, int);
template QzSeries two_point_from_R(const FamilyEvaluator<ZPolynomial>&, int);
template QSeries three_point(const FamilyEvaluator<Rational>&, const DistanceSpec&);
template QzSeries three_point(const FamilyEvaluator<ZPolynomial>&, const DistanceSpec&);

}  // namespace mapdist
