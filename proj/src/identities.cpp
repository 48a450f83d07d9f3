#include "mapdist/identities.hpp"

#include "mapdist/point_functions.hpp"

#include <stdexcept>

namespace mapdist {

namespace {

const char* const kIdentityNames[] = {
    "recurX",         "XtoN",           "recurN",        "recurY",           "recurNbiv",
    "DstClosed",      "recurYbiv",      "recurXtilde",   "recurXtildeBiv",   "recurYtilde",
    "recurYtildeBiv", "routeEquivalence", "telescoping", "productFormulaR",  "treeLimitEven",
    "treeLimitOdd",   "treeLimitBip"};

template <class R>
std::string regime_name(const FamilyEvaluator<R>& ev) {
  return to_string(ev.family()) + (ev.bivariate() ? " bivariate" : " univariate");
}

class Checker {
 public:
  explicit Checker(VerificationReport& r) : r_(r) {}

  bool failed() const { return !r_.pass; }

  template <class R>
  void equal(const FamilyEvaluator<R>& ev, const std::string& check, std::vector<int> idx,
             const TruncatedSeries<R>& lhs, const TruncatedSeries<R>& rhs) {
    ++r_.cases;
    if (!r_.pass) return;
    int N = std::min(lhs.order(), rhs.order());
    for (int n = 0; n <= N; ++n) {
      if (lhs.coeff(n) == rhs.coeff(n)) continue;
      r_.pass = false;
      r_.first_failure = IdentityFailure{regime_name(ev), check, std::move(idx), n,
                                         lhs.coeff(n).to_string(), rhs.coeff(n).to_string()};
      return;
    }
  }

 private:
  VerificationReport& r_;
};

std::vector<std::vector<int>> tuples(int arity, int lo, int hi) {
  std::vector<std::vector<int>> out;
  std::vector<int> cur(arity, lo);
  if (hi < lo) return out;
  while (true) {
    out.push_back(cur);
    int k = arity - 1;
    while (k >= 0 && cur[k] == hi) cur[k--] = lo;
    if (k < 0) break;
    ++cur[k];
  }
  return out;
}

template <class R>
TruncatedSeries<R> zm1(const FamilyEvaluator<R>& ev) {
  return TruncatedSeries<R>::constant(ev.order(), ev.z() - R(1));
}

template <class R>
void check_routes(Checker& c, const FamilyEvaluator<R>& ev, int max_d) {
  const bool general = ev.family() == MapFamily::general;
  for (int d = 1; d <= max_d; ++d) {
    auto direct = two_point(ev, d, TwoPointRoute::direct);
    c.equal(ev, "direct = log(R_d/R_{d-1})", {d}, direct, two_point_from_R(ev, d));
    for (int s = 1; s < d; ++s)
      c.equal(ev, "direct = typeA", {d, s}, direct, two_point(ev, d, TwoPointRoute::typeA, s));
    if (!general) continue;
    for (int s = 1; s <= d; ++s)
      c.equal(ev, "direct = typeB", {d, s}, direct, two_point(ev, d, TwoPointRoute::typeB, s));
  }
}

template <class R>
void check_telescoping(Checker& c, const FamilyEvaluator<R>& ev, int max_d) {
  TruncatedSeries<R> sum(ev.order());
  for (int d = 1; d <= max_d; ++d) {
    sum += two_point(ev, d, TwoPointRoute::direct);
    c.equal(ev, "sum of G_d = log R_D", {d}, sum, ev.Rf(d).log());
  }
}

template <class R>
void check_product(Checker& c, const FamilyEvaluator<R>& ev, int max_i) {
  auto prodR = [&](int k) {
    auto p = ev.one();
    for (int u = 1; u <= k; ++u) p *= ev.Rf(u);
    return p;
  };
  for (const auto& i : tuples(2, 1, max_i)) {
    int s = i[0], t = i[1];
    c.equal(ev, "N_{s,t} prod R(s) prod R(t) = prod R(s+t)", i, ev.N(s, t) * prodR(s) * prodR(t),
            prodR(s + t));
  }
}

// gD_{s,t} closed form.
TruncatedSeries<ZPolynomial> gD_closed(const FamilyEvaluator<ZPolynomial>& ev, int s, int t) {
  using D = Deformation;
  auto num = ev.alpha() * ev.x() * ev.bracket(1, D::unit) * ev.bracket(s, D::unit) *
             ev.bracket(t, D::unit) * ev.bracket(s + t + 3, D::alpha2);
  auto den = ev.bracket(2, D::alpha) * ev.bracket(s + 1, D::alpha) * ev.bracket(t + 1, D::alpha) *
             ev.bracket(s + t + 2, D::alpha);
  return num / den;
}

QSeries z_coefficient(const QzSeries& s, int k) {
  return s.map([k](const ZPolynomial& p) { return p.coeff(k); });
}

void check_tree_limit(Checker& c, const FamilyEvaluator<ZPolynomial>& ev, TreeLimit kind, int max_i) {
  int k = kind == TreeLimit::odd ? 2 : 1;
  for (const auto& i : tuples(3, 1, max_i)) {
    int s = i[0], t = i[1], u = i[2];
    int shift = kind == TreeLimit::odd ? 1 : 0;
    auto spec = DistanceSpec::three_point(s + t - shift, s + u - shift, t + u - shift);
    QzSeries G = three_point(ev, spec);
    for (int j = 0; j < k; ++j) {
      QSeries low = z_coefficient(G, j);
      if (!low.is_zero()) {
        c.equal(ev, "vanishing lower z-orders", i, lift(low), QzSeries(G.order()));
        return;
      }
    }
    c.equal(ev, "leading z-coefficient = tree limit", i, lift(z_coefficient(G, k)),
            lift(tree_limit_three_point(kind, s, t, u, G.order())));
  }
}

}  // namespace

const std::vector<IdentityName>& all_identities() {
  static const std::vector<IdentityName> v = [] {
    std::vector<IdentityName> out;
    for (int i = 0; i <= static_cast<int>(IdentityName::treeLimitBip); ++i)
      out.push_back(static_cast<IdentityName>(i));
    return out;
  }();
  return v;
}

std::string to_string(IdentityName id) { return kIdentityNames[static_cast<int>(id)]; }

IdentityName parse_identity(const std::string& name) {
  for (auto id : all_identities())
    if (to_string(id) == name) return id;
  throw std::invalid_argument("unknown identity: " + name);
}

nlohmann::ordered_json to_json(const VerificationReport& r) {
  nlohmann::ordered_json j;
  j["identity"] = to_string(r.identity);
  j["status"] = r.pass ? "pass" : "fail";
  j["cases"] = r.cases;
  if (r.first_failure) {
    const auto& f = *r.first_failure;
    j["first_failure"] = {{"regime", f.regime}, {"check", f.check}, {"indices", f.indices},
                          {"g_order", f.g_order}, {"lhs", f.lhs},   {"rhs", f.rhs}};
  }
  return j;
}

IdentityVerifier::IdentityVerifier(VerifierConfig cfg) : cfg_(cfg) {
  if (cfg_.univariate_order < 0 || cfg_.bivariate_order < 0)
    throw std::invalid_argument("negative verification order");
}

FamilyEvaluator<Rational>& IdentityVerifier::univariate(MapFamily f) {
  auto& slot = uni_[static_cast<int>(f)];
  if (!slot)
    slot = std::make_unique<FamilyEvaluator<Rational>>(solve_univariate(f, cfg_.univariate_order));
  return *slot;
}

FamilyEvaluator<ZPolynomial>& IdentityVerifier::bivariate(MapFamily f) {
  auto& slot = biv_[static_cast<int>(f)];
  if (!slot)
    slot = std::make_unique<FamilyEvaluator<ZPolynomial>>(solve_bivariate(f, cfg_.bivariate_order));
  return *slot;
}

VerificationReport IdentityVerifier::verify(IdentityName id) {
  VerificationReport rep;
  rep.identity = id;
  Checker c(rep);
  const int M = cfg_.univariate_max_index, Mb = cfg_.bivariate_max_index;
  const auto G = MapFamily::general, B = MapFamily::bipartite;
  switch (id) {
    case IdentityName::recurX: {
      auto& e = univariate(G);
      auto g = e.g();
      for (const auto& i : tuples(2, 1, M)) {
        int s = i[0], t = i[1];
        auto tt = e.T(s) * e.T(t) * e.X(s, t);
        c.equal(e, "X recursion", i, e.X(s, t),
                e.one() + g * tt + g * g * tt * e.T(s + 1) * e.T(t + 1) * e.X(s + 1, t + 1));
      }
      break;
    }
    case IdentityName::XtoN: {
      auto& e = univariate(G);
      for (const auto& i : tuples(2, 0, M)) {
        int s = i[0], t = i[1];
        auto n = e.N(s, t);
        c.equal(e, "X = N/(1 - g T T N)", i, e.X(s, t), n / (e.one() - e.g() * e.T(s) * e.T(t) * n));
      }
      break;
    }
    case IdentityName::recurN: {
      auto& e = univariate(G);
      auto g = e.g();
      for (const auto& i : tuples(2, 1, M)) {
        int s = i[0], t = i[1];
        auto inner = e.T(s + 1) * e.T(t + 1) * e.N(s + 1, t + 1);
        c.equal(e, "N recursion", i, e.N(s, t),
                e.one() + g * g * e.T(s) * e.T(t) * e.N(s, t) * inner / (e.one() - g * inner));
      }
      break;
    }
    case IdentityName::recurY: {
      auto& e = univariate(G);
      auto g3 = e.g().pow(3);
      for (const auto& i : tuples(3, 1, M)) {
        int s = i[0], t = i[1], u = i[2];
        auto rhs = g3 * e.T(s) * e.T(t) * e.T(u) * e.X(s + 1, t + 1) * e.X(s + 1, u + 1) *
                   e.X(t + 1, u + 1) * e.T(s + 1) * e.T(t + 1) * e.T(u + 1) * e.Y(s + 1, t + 1, u + 1);
        c.equal(e, "Y recursion", i, e.Y(s, t, u), e.one() + rhs);
      }
      break;
    }
    case IdentityName::recurNbiv: {
      auto& e = bivariate(G);
      auto g = e.g();
      for (const auto& i : tuples(2, 1, Mb)) {
        int s = i[0], t = i[1];
        auto d = e.D(s + 1, t + 1);
        c.equal(e, "bivariate N recursion", i, e.N(s, t),
                e.one() + g * g * e.U(s) * e.U(t) * e.N(s, t) * d / (e.one() - g * d));
      }
      break;
    }
    case IdentityName::DstClosed: {
      auto& e = bivariate(G);
      for (const auto& i : tuples(2, 0, Mb + 1))
        c.equal(e, "g D_{s,t} closed form", i, e.g() * e.D(i[0], i[1]), gD_closed(e, i[0], i[1]));
      break;
    }
    case IdentityName::recurYbiv: {
      auto& e = bivariate(G);
      auto g = e.g();
      auto z1 = zm1(e);
      for (const auto& i : tuples(3, 1, Mb)) {
        int s = i[0], t = i[1], u = i[2];
        auto geo = (e.one() - g * e.D(s + 1, t + 1)) * (e.one() - g * e.D(s + 1, u + 1)) *
                   (e.one() - g * e.D(t + 1, u + 1));
        auto par = e.N(s + 1, t + 1) * e.N(s + 1, u + 1) * e.N(t + 1, u + 1) * e.U(s + 1) *
                       e.U(t + 1) * e.U(u + 1) * e.Y(s + 1, t + 1, u + 1) +
                   z1 * e.W(s + 1) * e.W(t + 1) * e.W(u + 1);
        c.equal(e, "bivariate Y recursion", i, e.Y(s, t, u),
                e.one() + g.pow(3) * e.U(s) * e.U(t) * e.U(u) * par / geo);
      }
      break;
    }
    case IdentityName::recurXtilde: {
      auto& e = univariate(B);
      auto g = e.g();
      for (const auto& i : tuples(2, 1, M)) {
        int s = i[0], t = i[1];
        c.equal(e, "bipartite X recursion", i, e.X(s, t),
                e.one() + g * g * e.T(s) * e.T(t) * e.X(s, t) * e.T(t + 1) * e.T(s + 1) *
                              e.X(s + 1, t + 1));
      }
      break;
    }
    case IdentityName::recurXtildeBiv: {
      auto& e = bivariate(B);
      auto g = e.g();
      auto z1 = zm1(e);
      for (const auto& i : tuples(2, 1, Mb)) {
        int s = i[0], t = i[1];
        auto par = e.U(t + 1) * e.U(s + 1) * e.X(s + 1, t + 1) + z1 * e.W(s + 1) * e.W(t + 1);
        c.equal(e, "bivariate bipartite X recursion", i, e.X(s, t),
                e.one() + g * g * e.U(s) * e.U(t) * e.X(s, t) * par);
      }
      break;
    }
    case IdentityName::recurYtilde: {
      auto& e = univariate(B);
      auto g3 = e.g().pow(3);
      for (const auto& i : tuples(3, 1, M)) {
        int s = i[0], t = i[1], u = i[2];
        auto rhs = g3 * e.T(s) * e.T(t) * e.T(u) * e.X(s + 1, t + 1) * e.X(s + 1, u + 1) *
                   e.X(t + 1, u + 1) * e.T(s + 1) * e.T(t + 1) * e.T(u + 1) * e.Y(s + 1, t + 1, u + 1);
        c.equal(e, "bipartite Y recursion", i, e.Y(s, t, u), e.one() + rhs);
      }
      break;
    }
    case IdentityName::recurYtildeBiv: {
      auto& e = bivariate(B);
      auto g3 = e.g().pow(3);
      auto z1 = zm1(e);
      for (const auto& i : tuples(3, 1, Mb)) {
        int s = i[0], t = i[1], u = i[2];
        auto par = e.X(s + 1, t + 1) * e.X(s + 1, u + 1) * e.X(t + 1, u + 1) * e.U(s + 1) *
                       e.U(t + 1) * e.U(u + 1) * e.Y(s + 1, t + 1, u + 1) +
                   z1 * e.W(s + 1) * e.W(t + 1) * e.W(u + 1);
        c.equal(e, "bivariate bipartite Y recursion", i, e.Y(s, t, u),
                e.one() + g3 * e.U(s) * e.U(t) * e.U(u) * par);
      }
      break;
    }
    case IdentityName::routeEquivalence:
      for (auto f : {G, B}) check_routes(c, univariate(f), 6);
      for (auto f : {G, B}) check_routes(c, bivariate(f), 6);
      break;
    case IdentityName::telescoping:
      for (auto f : {G, B}) check_telescoping(c, univariate(f), M);
      for (auto f : {G, B}) check_telescoping(c, bivariate(f), Mb);
      break;
    case IdentityName::productFormulaR: {
      for (auto f : {G, B}) check_product(c, univariate(f), std::min(M, 4));
      for (auto f : {G, B}) check_product(c, bivariate(f), std::min(Mb, 4));
      using D = Deformation;
      for (auto f : {G, B}) {
        auto& e = univariate(f);
        for (int u = 0; u <= M; ++u) {
          auto b = [&](int k) { return e.bracket(k, D::none); };
          auto closed = f == G ? b(2) * b(2) * b(u + 1) * b(u + 3) / (b(1) * b(3) * b(u + 2) * b(u + 2))
                               : b(2) * b(3) * b(u + 1) * b(u + 4) / (b(1) * b(4) * b(u + 2) * b(u + 3));
          c.equal(e, "R_u closed form", {u}, e.Rf(u), closed);
        }
      }
      break;
    }
    case IdentityName::treeLimitEven:
      check_tree_limit(c, bivariate(G), TreeLimit::even, Mb);
      break;
    case IdentityName::treeLimitOdd:
      check_tree_limit(c, bivariate(G), TreeLimit::odd, Mb);
      break;
    case IdentityName::treeLimitBip:
      check_tree_limit(c, bivariate(B), TreeLimit::bipartite, Mb);
      break;
  }
  return rep;
}

std::vector<VerificationReport> IdentityVerifier::verify_all() {
  std::vector<VerificationReport> out;
  for (auto id : all_identities()) out.push_back(verify(id));
  return out;
}

}  // namespace mapdist
