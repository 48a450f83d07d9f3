#include "mapdist/oracle.hpp"

#include <algorithm>
#include <mutex>
#include <numeric>
#include <queue>
#include <set>
#include <stdexcept>

namespace mapdist {

namespace {

void check_bound(int n) {
  if (n < 1 || n > kMaxOracleEdges)
    throw std::out_of_range("edge count must be between 1 and " + std::to_string(kMaxOracleEdges));
}

// Inserts dart a into the rotation just before dart r (sigma^{-1}(r) -> a -> r).
void insert_before(std::vector<int>& s, int a, int r) {
  int p = static_cast<int>(std::find(s.begin(), s.end(), r) - s.begin());
  s[p] = a;
  s[a] = r;
}

// Non-isthmus root edges: a chord from the root corner to every corner of the root face.
void chords(const CombMap& m, const std::function<void(const CombMap&)>& emit) {
  const int n = m.num_darts();
  const int a = n, b = n + 1;
  if (n == 0) {
    emit(CombMap(std::vector<int>{1, 0}));
    return;
  }
  std::vector<int> face;
  for (int d = 0;;) {
    face.push_back(d);
    d = m.phi(d);
    if (d == 0) break;
  }
  std::vector<int> base = m.sigma_vector();
  base.resize(n + 2, -1);
  {
    std::vector<int> s = base;
    insert_before(s, a, 0);
    insert_before(s, b, 0);
    emit(CombMap(s).rerooted(a));
  }
  {
    std::vector<int> s = base;
    insert_before(s, a, 0);
    insert_before(s, b, a);
    emit(CombMap(s).rerooted(a));
  }
  for (size_t j = 1; j < face.size(); ++j) {
    std::vector<int> s = base;
    insert_before(s, a, 0);
    insert_before(s, b, face[j]);
    emit(CombMap(s).rerooted(a));
  }
}

// Root isthmus joining m1 (at the root side) and m2.
CombMap join(const CombMap& m1, const CombMap& m2) {
  const int n1 = m1.num_darts(), n2 = m2.num_darts();
  const int a = n1 + n2, b = a + 1;
  std::vector<int> s(a + 2, -1);
  for (int d = 0; d < n1; ++d) s[d] = m1.sigma(d);
  for (int d = 0; d < n2; ++d) s[n1 + d] = n1 + m2.sigma(d);
  if (n1 == 0)
    s[a] = a;
  else
    insert_before(s, a, 0);
  if (n2 == 0)
    s[b] = b;
  else
    insert_before(s, b, n1);
  return CombMap(s).rerooted(a);
}

class Catalog {
 public:
  const std::vector<CombMap>& level(int n) {
    std::lock_guard<std::mutex> lock(mu_);
    while (static_cast<int>(levels_.size()) <= n) {
      int k = static_cast<int>(levels_.size());
      std::vector<CombMap> out;
      if (k == 0)
        out.emplace_back();
      else
        build(k, [&](const CombMap& m) { out.push_back(m); });
      levels_.push_back(std::move(out));
    }
    return levels_[n];
  }

  void stream(int n, const std::function<void(const CombMap&)>& visit) {
    if (n > 0) level(n - 1);
    build(n, visit);
  }

 private:
  void build(int n, const std::function<void(const CombMap&)>& emit) {
    for (const auto& m : levels_[n - 1]) chords(m, emit);
    for (int n1 = 0; n1 < n; ++n1)
      for (const auto& m1 : levels_[n1])
        for (const auto& m2 : levels_[n - 1 - n1]) emit(join(m1, m2));
  }

  std::mutex mu_;
  std::vector<std::vector<CombMap>> levels_;
};

Catalog& catalog() {
  static Catalog c;
  return c;
}

}  // namespace

std::vector<CombMap> enumerate_rooted_maps(int n) {
  check_bound(n);
  return catalog().level(n);
}

void for_each_rooted_map(int n, const std::function<void(const CombMap&)>& visit) {
  check_bound(n);
  if (n < kMaxOracleEdges) {
    for (const auto& m : catalog().level(n)) visit(m);
    return;
  }
  catalog().stream(n, visit);
}

std::vector<CombMap> enumerate_rooted_maps_naive(int n) {
  if (n < 1 || n > 4) throw std::out_of_range("naive enumeration supports 1 <= n <= 4");
  std::vector<int> s(2 * n);
  std::iota(s.begin(), s.end(), 0);
  std::set<CombMap> found;
  do {
    CombMap m;
    try {
      m = CombMap(s);
    } catch (const std::invalid_argument&) {
      continue;
    }
    for (int r = 0; r < m.num_darts(); ++r) found.insert(m.rerooted(r));
  } while (std::next_permutation(s.begin(), s.end()));
  return {found.begin(), found.end()};
}

bool passes(const CombMap& m, MapFilter f) {
  switch (f) {
    case MapFilter::bipartite:
      return m.is_bipartite();
    case MapFilter::quadrangulation:
      return m.is_quadrangulation();
    default:
      return true;
  }
}

ZPolynomial PointedCount::at(const std::vector<int>& key) const {
  auto it = table.find(key);
  return it == table.end() ? ZPolynomial() : it->second;
}

PointedCount count_pointed(int n, PointedKind kind, MapFilter filter) {
  check_bound(n);
  std::map<std::vector<int>, std::vector<long>> raw;
  for_each_rooted_map(n, [&](const CombMap& m) {
    if (!passes(m, filter)) return;
    auto dist = m.distances();
    const int V = m.num_vertices(), F = m.num_faces();
    auto bump = [&](std::vector<int> key) {
      auto& v = raw[std::move(key)];
      if (static_cast<int>(v.size()) <= F) v.resize(F + 1);
      ++v[F];
    };
    for (int a = 0; a < V; ++a)
      for (int b = 0; b < V; ++b) {
        if (a == b) continue;
        if (kind == PointedKind::bipointed) {
          bump({dist[a][b]});
          continue;
        }
        for (int c = 0; c < V; ++c)
          if (c != a && c != b) bump({dist[a][b], dist[a][c], dist[b][c]});
      }
  });
  PointedCount out{n, kind, filter, {}};
  for (auto& [key, v] : raw) {
    std::vector<Rational> c;
    for (long k : v) c.push_back(Rational(k, 2 * n));
    out.table.emplace(key, ZPolynomial(std::move(c)));
  }
  return out;
}

ZPolynomial rooted_face_polynomial(int n, MapFilter filter) {
  std::vector<long> v;
  for_each_rooted_map(n, [&](const CombMap& m) {
    if (!passes(m, filter)) return;
    if (static_cast<int>(v.size()) <= m.num_faces()) v.resize(m.num_faces() + 1);
    ++v[m.num_faces()];
  });
  std::vector<Rational> c(v.begin(), v.end());
  return ZPolynomial(std::move(c));
}

bool is_well_labelled(const CombMap& m, const std::vector<int>& labels) {
  for (int d = 0; d < m.num_darts(); ++d)
    if (std::abs(labels[m.vertex(d)] - labels[m.vertex(CombMap::alpha(d))]) > 1) return false;
  return true;
}

bool is_very_well_labelled(const CombMap& m, const std::vector<int>& labels) {
  for (int d = 0; d < m.num_darts(); ++d)
    if (std::abs(labels[m.vertex(d)] - labels[m.vertex(CombMap::alpha(d))]) != 1) return false;
  return true;
}

std::vector<std::vector<int>> enumerate_labellings(const CombMap& m, LabellingMode mode) {
  const int V = m.num_vertices();
  std::vector<std::vector<int>> adj(V);
  for (int d = 0; d < m.num_darts(); ++d) adj[m.vertex(d)].push_back(m.vertex(CombMap::alpha(d)));
  std::vector<int> order, parent(V, -1), pos(V, -1);
  order.push_back(m.root_vertex());
  pos[m.root_vertex()] = 0;
  for (size_t i = 0; i < order.size(); ++i)
    for (int w : adj[order[i]])
      if (pos[w] < 0) {
        pos[w] = static_cast<int>(order.size());
        parent[w] = order[i];
        order.push_back(w);
      }
  std::vector<int> steps = mode == LabellingMode::well ? std::vector<int>{-1, 0, 1} : std::vector<int>{-1, 1};
  std::vector<std::vector<int>> out;
  std::vector<int> label(V, 0);
  std::function<void(int)> rec = [&](int i) {
    if (i == V) {
      int lo = *std::min_element(label.begin(), label.end());
      std::vector<int> l = label;
      for (int& x : l) x -= lo;
      out.push_back(std::move(l));
      return;
    }
    int v = order[i];
    for (int st : steps) {
      label[v] = label[parent[v]] + st;
      bool ok = true;
      for (int w : adj[v]) {
        if (pos[w] > i) continue;
        int diff = std::abs(label[v] - label[w]);
        if (diff > 1 || (mode == LabellingMode::very_well && diff != 1)) {
          ok = false;
          break;
        }
      }
      if (ok) rec(i + 1);
    }
  };
  if (mode == LabellingMode::very_well)
    for (int w : adj[order[0]])
      if (w == order[0]) return out;
  label[order[0]] = 0;
  rec(1);
  return out;
}

std::string to_string(PointedKind k) { return k == PointedKind::bipointed ? "bipointed" : "tripointed"; }

PointedKind parse_pointed_kind(const std::string& s) {
  if (s == "bipointed") return PointedKind::bipointed;
  if (s == "tripointed") return PointedKind::tripointed;
  throw std::invalid_argument("unknown pointed kind: " + s);
}

}  // namespace mapdist
