// Prints one verdict line per acceptance criterion. `acceptance N` runs criterion N alone.
#include "mapdist/bijection.hpp"
#include "mapdist/golden.hpp"
#include "mapdist/identities.hpp"
#include "mapdist/oracle.hpp"
#include "mapdist/oracle_compare.hpp"
#include "mapdist/point_functions.hpp"
#include "mapdist/scaling.hpp"

#include <algorithm>
#include <chrono>
#include <cmath>
#include <cstdio>
#include <functional>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

using namespace mapdist;

namespace {

struct Verdict {
  bool pass = true;
  std::ostringstream detail;
  void require(bool ok, const std::string& what) {
    if (!ok) {
      pass = false;
      detail << " [" << what << "]";
    }
  }
};

double seconds_since(std::chrono::steady_clock::time_point t0) {
  return std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
}

void goldens(Verdict& v) {
  auto t0 = std::chrono::steady_clock::now();
  int documented = 0;
  auto results = check_all_golden();
  for (const auto& r : results) {
    if (r.status == GoldenStatus::documented_discrepancy) ++documented;
    v.require(r.status != GoldenStatus::mismatch, r.name + " differs");
  }
  double s = seconds_since(t0);
  v.require(s < 10, "took " + std::to_string(s) + " s");
  v.detail << " " << results.size() << " series, " << documented << " documented discrepancy";
}

void identities(Verdict& v) {
  auto t0 = std::chrono::steady_clock::now();
  IdentityVerifier iv(VerifierConfig{16, 10, 5, 3});
  auto reports = iv.verify_all();
  v.require(reports.size() == 17, "expected 17 identities");
  for (const auto& r : reports) v.require(r.pass, to_string(r.identity));
  double s = seconds_since(t0);
  v.require(s < 60, "took " + std::to_string(s) + " s");
  v.detail << " " << reports.size() << " identities in " << s << " s";
}

template <class R>
long routes(Verdict& v, const FamilyEvaluator<R>& ev, const std::string& regime) {
  long cases = 0;
  for (int d = 1; d <= 6; ++d) {
    auto direct = two_point(ev, d, TwoPointRoute::direct);
    auto check = [&](const TruncatedSeries<R>& other, const std::string& what) {
      ++cases;
      v.require(direct == other, regime + " d=" + std::to_string(d) + " " + what);
    };
    check(two_point_from_R(ev, d), "log ratio");
    for (int s = 1; s < d; ++s) check(two_point(ev, d, TwoPointRoute::typeA, s), "typeA s=" + std::to_string(s));
    if (ev.family() == MapFamily::bipartite) continue;
    for (int s = 1; s <= d; ++s) check(two_point(ev, d, TwoPointRoute::typeB, s), "typeB s=" + std::to_string(s));
  }
  return cases;
}

void route_equivalence(Verdict& v) {
  long cases = 0;
  for (MapFamily f : {MapFamily::general, MapFamily::bipartite}) {
    cases += routes(v, FamilyEvaluator<Rational>(solve_univariate(f, 16)), to_string(f) + "/Q");
    cases += routes(v, FamilyEvaluator<ZPolynomial>(solve_bivariate(f, 16)), to_string(f) + "/Q[z]");
  }
  v.detail << " " << cases << " comparisons";
}

void oracle(Verdict& v) {
  auto t0 = std::chrono::steady_clock::now();
  OracleComparison c = compare_oracle_with_series(5);
  v.require(c.pass, c.mismatches.empty() ? "mismatch" : c.mismatches.front());
  v.require(c.entries > 0, "no entries");
  double s = seconds_since(t0);
  v.require(s < 300, "took " + std::to_string(s) + " s");
  v.detail << " " << c.entries << " entries";
}

void generator(Verdict& v) {
  // 2 3^n (2n)! / (n! (n+2)!)
  auto expected = [](int n) {
    double r = 2;
    for (int k = 1; k <= n; ++k) r *= 3.0 * (n + k) / k;
    return std::llround(r / ((n + 1) * (n + 2)));
  };
  for (int n = 1; n <= kMaxOracleEdges; ++n) {
    long long count = 0;
    bool euler = true;
    for_each_rooted_map(n, [&](const CombMap& m) {
      ++count;
      euler &= m.num_vertices() - m.num_edges() + m.num_faces() == 2;
    });
    v.require(count == expected(n), "count n=" + std::to_string(n));
    v.require(euler, "Euler n=" + std::to_string(n));
  }
  for (int n = 1; n <= 3; ++n) {
    auto a = enumerate_rooted_maps(n), b = enumerate_rooted_maps_naive(n);
    std::sort(a.begin(), a.end());
    std::sort(b.begin(), b.end());
    v.require(a == b, "brute force n=" + std::to_string(n));
  }
}

void bijections(Verdict& v) {
  auto t0 = std::chrono::steady_clock::now();
  long cases = 0;
  BijectionReport r = verify_bijections(3);
  for (const auto& c : r.checks) {
    cases += c.cases;
    v.require(c.pass(), c.name + ": " + c.first_failure);
  }
  double s = seconds_since(t0);
  v.require(s < 300, "took " + std::to_string(s) + " s");
  v.detail << " " << cases << " cases";
}

void closed_forms(Verdict& v) {
  auto checks = scaling_closed_form_checks();
  for (const auto& c : checks) v.require(c.pass(), c.name);
  v.detail << " " << checks.size() << " values";
}

void convergence(Verdict& v) {
  auto t0 = std::chrono::steady_clock::now();
  for (double z : {0.5, 1.0, 2.0}) {
    ConvergenceTable t = convergence_table(MapFamily::general, {1.0}, z, {0.05, 0.02, 0.01});
    char buf[160];
    std::snprintf(buf, sizeof buf, " z=%g:", z);
    v.detail << buf;
    for (const auto& r : t.rows) {
      std::snprintf(buf, sizeof buf, " %.2f%%", 100 * r.rel_error);
      v.detail << buf;
    }
    v.require(t.strictly_decreasing(), "not decreasing at z=" + std::to_string(z));
    v.require(t.rows.back().rel_error < 0.05, "finest error above 5% at z=" + std::to_string(z));
  }
  const double D[][3] = {{1, 1, 1}, {1, 1.3, 0.8}, {0.7, 0.9, 1.4}};
  for (MapFamily f : {MapFamily::general, MapFamily::bipartite})
    for (double z : {0.5, 1.0, 2.0})
      for (const auto& d : D) {
        double a = continuous_three_point(f, d[0], d[1], d[2], z);
        double fd = continuous_three_point_fd(f, d[0], d[1], d[2], z).value;
        v.require(std::abs(fd - a) <= 1e-8 * std::abs(a), "derivative mismatch at z=" + std::to_string(z));
      }
  double s = seconds_since(t0);
  v.require(s < 30, "took " + std::to_string(s) + " s");
}

void tree_limits(Verdict& v) {
  IdentityVerifier iv(VerifierConfig{16, 12, 5, 3});
  for (auto id : {IdentityName::treeLimitEven, IdentityName::treeLimitOdd, IdentityName::treeLimitBip}) {
    VerificationReport r = iv.verify(id);
    v.require(r.pass && r.cases > 0, to_string(id));
    v.detail << " " << to_string(id) << ":" << r.cases;
  }
}

}  // namespace

int main(int argc, char** argv) {
  const std::vector<std::function<void(Verdict&)>> criteria = {
      goldens, identities, route_equivalence, oracle, generator, bijections, closed_forms, convergence, tree_limits};
  int only = argc > 1 ? std::atoi(argv[1]) : 0;
  if (only < 0 || only > static_cast<int>(criteria.size())) {
    std::cerr << "usage: acceptance [1-" << criteria.size() << "]\n";
    return 2;
  }
  bool all = true;
  for (size_t i = 0; i < criteria.size(); ++i) {
    if (only && static_cast<int>(i) + 1 != only) continue;
    Verdict v;
    try {
      criteria[i](v);
    } catch (const std::exception& e) {
      v.require(false, e.what());
    }
    all &= v.pass;
    std::cout << "criterion " << i + 1 << ": " << (v.pass ? "PASS" : "FAIL") << v.detail.str() << std::endl;
  }
  return all ? 0 : 1;
}
