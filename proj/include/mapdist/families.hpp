#pragma once

#include "mapdist/param_solver.hpp"

#include <functional>
#include <map>
#include <string>
#include <tuple>
#include <vector>

namespace mapdist {

// [s]_x, [s]_{x,alpha}, [s]_{x,alpha^2}, [s]_{x,1}
enum class Deformation { none, alpha, alpha2, unit };

struct Bracket {
  int s = 0;
  Deformation deformation = Deformation::none;
};

enum class FamilyName { T, U, W, X, N, O, D, Y, R };

std::string to_string(FamilyName f);
FamilyName parse_family_name(const std::string& name);
int family_arity(FamilyName f);

struct FamilyId {
  FamilyName name;
  std::vector<int> indices;
  auto operator<=>(const FamilyId&) const = default;
};

std::string to_string(const FamilyId& id);

// Closed-form generating functions over a fixed parametrisation. Results are memoised, so
// an evaluator must not be shared between threads.
template <class R>
class FamilyEvaluator {
 public:
  using Series = TruncatedSeries<R>;

  explicit FamilyEvaluator(ParamSolution<R> params);

  const ParamSolution<R>& params() const { return p_; }
  MapFamily family() const { return p_.family; }
  static constexpr bool bivariate() { return is_bivariate_ring<R>(); }
  int order() const { return p_.order(); }

  const Series& g() const { return g_; }
  const Series& x() const { return p_.x; }
  // alpha in the bivariate regime, the constant 1 otherwise.
  const Series& alpha() const { return alpha_; }
  Series one() const { return Series::one(order()); }
  R z() const { return face_weight<R>(); }

  const Series& bracket(const Bracket& b) const;
  const Series& bracket(int s, Deformation d) const { return bracket(Bracket{s, d}); }

  bool supports(FamilyName f) const;
  // Validates arity, indices and regime, then dispatches.
  Series evaluate(const FamilyId& id) const;

  Series T(int s) const;
  Series U(int s) const;
  Series W(int s) const;
  Series X(int s, int t) const;
  Series N(int s, int t) const;
  Series O(int s, int t) const;
  Series D(int s, int t) const;
  Series Y(int s, int t, int u) const;
  Series Rf(int u) const;

  // Three-point building blocks F_{s,t,u}; negative third-index conventions are handled by callers.
  Series F_even(int s, int t, int u) const;
  Series F_odd(int s, int t, int u) const;
  Series F_bipartite(int s, int t, int u) const;

  // Replaces every value of one family by hook(id, closed_form). Clears memoised values.
  void override_family(FamilyName f, std::function<Series(const FamilyId&, Series)> hook);

 private:
  // Deformation carrying alpha in the bivariate regime and nothing otherwise.
  Deformation da() const { return bivariate() ? Deformation::alpha : Deformation::none; }
  Deformation da2() const { return bivariate() ? Deformation::alpha2 : Deformation::none; }
  Series ratio(std::initializer_list<Bracket> num, std::initializer_list<Bracket> den) const;
  const Series& memo(const FamilyId& id) const;
  Series compute(const FamilyId& id) const;
  void require(FamilyName f) const;

  ParamSolution<R> p_;
  Series g_;
  Series alpha_;
  Series alpha2_;
  mutable std::map<std::pair<int, int>, Series> brackets_;
  mutable std::map<FamilyId, Series> cache_;
  std::map<FamilyName, std::function<Series(const FamilyId&, Series)>> overrides_;
};

extern template class FamilyEvaluator<Rational>;
extern template class FamilyEvaluator<ZPolynomial>;

}  // namespace mapdist
