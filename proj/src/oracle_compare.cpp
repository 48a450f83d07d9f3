#include "mapdist/oracle_compare.hpp"

#include "mapdist/point_functions.hpp"

#include <set>

namespace mapdist {

namespace {

void record(OracleComparison& out, const std::string& what, const std::string& got, const std::string& want) {
  out.pass = false;
  if (out.mismatches.size() < 20) out.mismatches.push_back(what + ": oracle " + got + ", series " + want);
}

std::string key_string(const std::vector<int>& k) {
  std::string s = "(";
  for (size_t i = 0; i < k.size(); ++i) s += (i ? "," : "") + std::to_string(k[i]);
  return s + ")";
}

}  // namespace

OracleComparison compare_oracle_with_series(int max_edges) {
  OracleComparison out;
  for (MapFamily fam : {MapFamily::general, MapFamily::bipartite}) {
    FamilyEvaluator<ZPolynomial> biv(solve_bivariate(fam, max_edges));
    FamilyEvaluator<Rational> uni(solve_univariate(fam, max_edges));
    MapFilter filter = fam == MapFamily::general ? MapFilter::none : MapFilter::bipartite;
    for (PointedKind kind : {PointedKind::bipointed, PointedKind::tripointed}) {
      std::vector<PointedCount> counts;
      for (int n = 1; n <= max_edges; ++n) counts.push_back(count_pointed(n, kind, filter));
      std::set<std::vector<int>> keys;
      for (int a = 1; a <= max_edges; ++a) {
        if (kind == PointedKind::bipointed) {
          keys.insert({a});
          continue;
        }
        for (int b = 1; b <= max_edges; ++b)
          for (int c = 1; c <= max_edges; ++c)
            if (a <= b + c && b <= a + c && c <= a + b) keys.insert({a, b, c});
      }
      for (const auto& key : keys) {
        bool odd = kind == PointedKind::tripointed && (key[0] + key[1] + key[2]) % 2 == 1;
        QzSeries gz(max_edges);
        QSeries g1(max_edges);
        if (!(odd && fam == MapFamily::bipartite)) {
          if (kind == PointedKind::bipointed) {
            gz = two_point(biv, key[0], TwoPointRoute::direct);
            g1 = two_point(uni, key[0], TwoPointRoute::direct);
          } else {
            auto spec = DistanceSpec::from_list(key);
            gz = three_point(biv, spec);
            g1 = three_point(uni, spec);
          }
        }
        for (int n = 1; n <= max_edges; ++n) {
          ++out.entries;
          ZPolynomial o = counts[n - 1].at(key);
          std::string what = to_string(fam) + " " + to_string(kind) + " " + key_string(key) +
                             " n=" + std::to_string(n);
          if (!(o == gz.coeff(n))) record(out, what, o.to_string(), gz.coeff(n).to_string());
          Rational o1 = o.evaluate(Rational(1));
          if (!(o1 == g1.coeff(n))) record(out, what + " z=1", o1.to_string(), g1.coeff(n).to_string());
        }
      }
      for (int n = 1; n <= max_edges; ++n)
        for (const auto& [key, poly] : counts[n - 1].table)
          if (!keys.count(key)) record(out, "unexpected oracle key " + key_string(key), poly.to_string(), "0");
    }
  }
  return out;
}

}  // namespace mapdist
