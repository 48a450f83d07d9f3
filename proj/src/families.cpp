#include "mapdist/families.hpp"

#include <stdexcept>

namespace mapdist {

namespace {

const char* const kNames[] = {"T", "U", "W", "X", "N", "O", "D", "Y", "R"};

}  // namespace

std::string to_string(FamilyName f) { return kNames[static_cast<int>(f)]; }

FamilyName parse_family_name(const std::string& name) {
  for (int i = 0; i < 9; ++i)
    if (name == kNames[i]) return static_cast<FamilyName>(i);
  throw std::invalid_argument("unknown family: " + name);
}

int family_arity(FamilyName f) {
  switch (f) {
    case FamilyName::T:
    case FamilyName::U:
    case FamilyName::W:
    case FamilyName::R:
      return 1;
    case FamilyName::Y:
      return 3;
    default:
      return 2;
  }
}

std::string to_string(const FamilyId& id) {
  std::string s = to_string(id.name) + "_{";
  for (size_t i = 0; i < id.indices.size(); ++i) {
    if (i) s += ",";
    s += std::to_string(id.indices[i]);
  }
  return s + "}";
}

template <class R>
FamilyEvaluator<R>::FamilyEvaluator(ParamSolution<R> params)
    : p_(std::move(params)),
      g_(Series::variable(p_.order())),
      alpha_(p_.deformation()),
      alpha2_(alpha_ * alpha_) {}

template <class R>
const typename FamilyEvaluator<R>::Series& FamilyEvaluator<R>::bracket(const Bracket& b) const {
  if (b.s < 0) throw std::invalid_argument("negative bracket exponent");
  bool uses_alpha = b.deformation == Deformation::alpha || b.deformation == Deformation::alpha2;
  if (uses_alpha && !bivariate())
    throw std::domain_error("alpha deformation requested in univariate mode");
  auto key = std::make_pair(b.s, static_cast<int>(b.deformation));
  auto it = brackets_.find(key);
  if (it != brackets_.end()) return it->second;
  Series v = one();
  Series xs = p_.x.pow(b.s);
  if (b.deformation == Deformation::alpha)
    v -= alpha_ * xs;
  else if (b.deformation == Deformation::alpha2)
    v -= alpha2_ * xs;
  else
    v -= xs;
  return brackets_.emplace(key, std::move(v)).first->second;
}

template <class R>
typename FamilyEvaluator<R>::Series FamilyEvaluator<R>::ratio(
    std::initializer_list<Bracket> num, std::initializer_list<Bracket> den) const {
  Series n = one(), d = one();
  for (const auto& b : num) n *= bracket(b);
  for (const auto& b : den) d *= bracket(b);
  return n / d;
}

template <class R>
bool FamilyEvaluator<R>::supports(FamilyName f) const {
  bool general = family() == MapFamily::general;
  switch (f) {
    case FamilyName::U:
    case FamilyName::W:
      return bivariate();
    case FamilyName::D:
      return bivariate() && general;
    case FamilyName::X:
    case FamilyName::O:
      return !(bivariate() && general);
    default:
      return true;
  }
}

template <class R>
void FamilyEvaluator<R>::require(FamilyName f) const {
  if (!supports(f))
    throw std::invalid_argument("family " + to_string(f) + " is not defined for the " +
                                to_string(family()) + (bivariate() ? " bivariate" : " univariate") +
                                " regime");
}

template <class R>
typename FamilyEvaluator<R>::Series FamilyEvaluator<R>::evaluate(const FamilyId& id) const {
  if (static_cast<int>(id.indices.size()) != family_arity(id.name))
    throw std::invalid_argument("family " + to_string(id.name) + " takes " +
                                std::to_string(family_arity(id.name)) + " indices");
  for (int i : id.indices)
    if (i < 0) throw std::invalid_argument("negative family index in " + to_string(id));
  require(id.name);
  return memo(id);
}

template <class R>
const typename FamilyEvaluator<R>::Series& FamilyEvaluator<R>::memo(const FamilyId& id) const {
  auto it = cache_.find(id);
  if (it != cache_.end()) return it->second;
  Series v = compute(id);
  if (auto o = overrides_.find(id.name); o != overrides_.end()) v = o->second(id, std::move(v));
  return cache_.emplace(id, std::move(v)).first->second;
}

template <class R>
void FamilyEvaluator<R>::override_family(FamilyName f,
                                         std::function<Series(const FamilyId&, Series)> hook) {
  overrides_[f] = std::move(hook);
  cache_.clear();
}

template <class R>
typename FamilyEvaluator<R>::Series FamilyEvaluator<R>::T(int s) const {
  return evaluate({FamilyName::T, {s}});
}
template <class R>
typename FamilyEvaluator<R>::Series FamilyEvaluator<R>::U(int s) const {
  return evaluate({FamilyName::U, {s}});
}
template <class R>
typename FamilyEvaluator<R>::Series FamilyEvaluator<R>::W(int s) const {
  return evaluate({FamilyName::W, {s}});
}
template <class R>
typename FamilyEvaluator<R>::Series FamilyEvaluator<R>::X(int s, int t) const {
  return evaluate({FamilyName::X, {s, t}});
}
template <class R>
typename FamilyEvaluator<R>::Series FamilyEvaluator<R>::N(int s, int t) const {
  return evaluate({FamilyName::N, {s, t}});
}
template <class R>
typename FamilyEvaluator<R>::Series FamilyEvaluator<R>::O(int s, int t) const {
  return evaluate({FamilyName::O, {s, t}});
}
template <class R>
typename FamilyEvaluator<R>::Series FamilyEvaluator<R>::D(int s, int t) const {
  return evaluate({FamilyName::D, {s, t}});
}
template <class R>
typename FamilyEvaluator<R>::Series FamilyEvaluator<R>::Y(int s, int t, int u) const {
  return evaluate({FamilyName::Y, {s, t, u}});
}
template <class R>
typename FamilyEvaluator<R>::Series FamilyEvaluator<R>::Rf(int u) const {
  return evaluate({FamilyName::R, {u}});
}

template <class R>
typename FamilyEvaluator<R>::Series FamilyEvaluator<R>::compute(const FamilyId& id) const {
  const Deformation a = da(), a2 = da2(), u1 = Deformation::unit;
  const auto& ix = id.indices;
  const bool general = family() == MapFamily::general;
  const Series& x = p_.x;
  switch (id.name) {
    case FamilyName::T: {
      int s = ix[0];
      if (s == 0) return Series(order());
      if (general) {
        Series P = one() + x + alpha_ * x - alpha_ * x.pow(2) * R(6) + alpha_ * x.pow(3) +
                   alpha2_ * x.pow(3) + alpha2_ * x.pow(4);
        return alpha_ * P *
               ratio({{1, u1}, {1, u1}, {s, u1}, {s + 3, a2}},
                     {{1, a}, {1, a}, {1, a}, {3, a}, {s + 1, a}, {s + 2, a}});
      }
      return alpha_ * ratio({{2, u1}, {2, u1}, {2, a}, {s, u1}, {s + 4, a2}},
                            {{1, a}, {1, a}, {4, a}, {s + 1, a}, {s + 3, a}});
    }
    case FamilyName::U: {
      int s = ix[0];
      if (s == 0) return Series(order());
      if (general) {
        Series P = one() + x + alpha_ * x - alpha_ * x.pow(2) * R(6) + alpha_ * x.pow(3) +
                   alpha2_ * x.pow(3) + alpha2_ * x.pow(4);
        return P * ratio({{s, u1}, {s + 3, a}}, {{1, a}, {3, a}, {s + 1, u1}, {s + 2, a}});
      }
      return (one() + x) *
             ratio({{2, a}, {2, a}, {s, u1}, {s + 4, a}}, {{1, a}, {4, a}, {s + 1, u1}, {s + 3, a}});
    }
    case FamilyName::W: {
      int s = ix[0];
      Series us = U(s);
      return us / (one() + g_ * us * T(s + 1));
    }
    case FamilyName::X: {
      int s = ix[0], t = ix[1];
      if (general)
        return ratio({{3, a}, {s + 1, a}, {t + 1, a}, {s + t + 3, a}},
                     {{1, a}, {s + 3, a}, {t + 3, a}, {s + t + 1, a}});
      return ratio({{4, a}, {s + 2, a}, {t + 2, a}, {s + t + 4, a}},
                   {{2, a}, {s + 4, a}, {t + 4, a}, {s + t + 2, a}});
    }
    case FamilyName::N: {
      int s = ix[0], t = ix[1];
      if (s == 0 || t == 0) return one();
      if (!general) return X(s, t);
      return ratio({{3, a}, {s + 2, a}, {t + 2, a}, {s + t + 3, a}},
                   {{2, a}, {s + 3, a}, {t + 3, a}, {s + t + 2, a}});
    }
    case FamilyName::O: {
      int s = ix[0], t = ix[1];
      if (s == 0 || t == 0 || !general) return Series(order());
      return x * ratio({{3, a}, {s, a}, {t, a}, {s + t + 3, a}, {s + t + 3, a}},
                       {{2, a}, {s + 3, a}, {t + 3, a}, {s + t + 1, a}, {s + t + 2, a}});
    }
    case FamilyName::D: {
      int s = ix[0], t = ix[1];
      Series zm1 = Series::constant(order(), z() - R(1));
      return U(s) * U(t) * N(s, t) + zm1 * W(s) * W(t);
    }
    case FamilyName::Y: {
      int s = ix[0], t = ix[1], u = ix[2];
      if (general)
        return ratio({{s + 3, a}, {t + 3, a}, {u + 3, a}, {s + t + u + 3, a}},
                     {{3, a}, {s + t + 3, a}, {t + u + 3, a}, {u + s + 3, a}});
      Series pref = ratio({{s + 4, a}, {t + 4, a}, {u + 4, a}},
                          {{3, a}, {4, a}, {s + 2, a}, {t + 2, a}, {u + 2, a}, {s + t + 4, a},
                           {t + u + 4, a}, {u + s + 4, a}});
      Series first = alpha_ * x *
                     ratio({{3, a}, {s + 1, u1}, {t + 1, u1}, {u + 1, u1}, {s + t + u + 5, a2}}, {});
      Series second = ratio({{1, a}, {s + 3, a}, {t + 3, a}, {u + 3, a}, {s + t + u + 3, a}}, {});
      return pref * (first + second);
    }
    case FamilyName::R: {
      int u = ix[0];
      Series lead = bivariate() ? U(u) : T(u);
      return one() + g_ * lead * T(u + 1);
    }
  }
  throw std::logic_error("unhandled family");
}

template <class R>
typename FamilyEvaluator<R>::Series FamilyEvaluator<R>::F_even(int s, int t, int u) const {
  if (family() != MapFamily::general) throw std::invalid_argument("F_even needs general maps");
  if (s < 0 || t < 0 || u < 0) throw std::invalid_argument("negative index in F_even");
  const Deformation a = da();
  Series num = ratio({{3, a}, {s + 2, a}, {t + 2, a}, {u + 2, a}, {s + t + u + 3, a}, {s + 2, a},
                      {t + 2, a}, {u + 2, a}, {s + t + u + 3, a}},
                     {});
  Series den = ratio({{2, a}, {2, a}, {2, a}, {s + t + 2, a}, {t + u + 2, a}, {u + s + 2, a},
                      {s + t + 3, a}, {t + u + 3, a}, {u + s + 3, a}},
                     {});
  return num / den;
}

template <class R>
typename FamilyEvaluator<R>::Series FamilyEvaluator<R>::F_odd(int s, int t, int u) const {
  if (family() != MapFamily::general) throw std::invalid_argument("F_odd needs general maps");
  if (s < 0 || t < 0 || u < 0) throw std::invalid_argument("negative index in F_odd");
  const Deformation a = da(), a2 = da2(), u1 = Deformation::unit;
  Series inner = alpha_ * ratio({{s, u1}, {t, u1}, {u, u1}, {s + t + u + 3, a2}}, {});
  Series den = ratio({{2, a}, {2, a}, {2, a}, {s + t + 1, a}, {t + u + 1, a}, {u + s + 1, a},
                      {s + t + 2, a}, {t + u + 2, a}, {u + s + 2, a}},
                     {});
  return p_.x.pow(3) * bracket(3, a) * inner * inner / den;
}

template <class R>
typename FamilyEvaluator<R>::Series FamilyEvaluator<R>::F_bipartite(int s, int t, int u) const {
  if (family() != MapFamily::bipartite)
    throw std::invalid_argument("F_bipartite needs bipartite maps");
  Series y = Y(s, t, u);
  return X(s, t) * X(s, u) * X(t, u) * y * y;
}

template class FamilyEvaluator<Rational>;
template class FamilyEvaluator<ZPolynomial>;

}  // namespace mapdist
