#include "mapdist/bijection.hpp"

#include "mapdist/oracle.hpp"

#include <algorithm>
#include <functional>
#include <limits>
#include <map>
#include <numeric>
#include <set>
#include <sstream>
#include <stdexcept>

namespace mapdist {

namespace {

std::string join_ints(const std::vector<int>& v) {
  std::ostringstream os;
  os << '[';
  for (size_t i = 0; i < v.size(); ++i) os << (i ? "," : "") << v[i];
  os << ']';
  return os.str();
}

std::string describe(const LabelledMap& m) {
  return "sigma=" + join_ints(m.base.sigma_vector()) + " labels=" + join_ints(m.labels);
}

class Tally {
 public:
  explicit Tally(std::string name) { c_.name = std::move(name); }
  void record(bool ok, const std::function<std::string()>& why) {
    ++c_.cases;
    if (!ok && c_.failures++ == 0) c_.first_failure = why();
  }
  void merge_into(std::vector<BijectionCheck>& out) const { out.push_back(c_); }

 private:
  BijectionCheck c_;
};

// Rank of an end inside its corner, counterclockwise: towards the previous corner first.
int rank_in_corner(int delta) {
  switch ((delta % 4 + 4) % 4) {
    case 3: return 0;
    case 2: return 1;
    case 1: return 2;
  }
  throw std::logic_error("edge with both ends in one corner");
}

void check_faces(int n) {
  if (n < 1 || n > kMaxBijectionFaces)
    throw std::out_of_range("face count must be between 1 and " + std::to_string(kMaxBijectionFaces));
}

using Tallies = std::map<std::vector<int>, ZPolynomial>;

ZPolynomial get(const Tallies& t, const std::vector<int>& k) {
  auto it = t.find(k);
  return it == t.end() ? ZPolynomial() : it->second;
}

}  // namespace

std::string to_string(CornerRule r) { return r == CornerRule::next ? "next" : "previous"; }

std::string to_string(MapType t) {
  switch (t) {
    case MapType::A: return "A";
    case MapType::B: return "B";
    case MapType::neither: return "neither";
  }
  return "?";
}

int LabelledMap::min_label() const { return *std::min_element(labels.begin(), labels.end()); }

int LabelledMap::face_min(int f) const {
  int best = std::numeric_limits<int>::max();
  for (int d : base.face_darts(f)) best = std::min(best, label_of_dart(d));
  return best;
}

int LabelledMap::face_max(int f) const {
  int best = std::numeric_limits<int>::min();
  for (int d : base.face_darts(f)) best = std::max(best, label_of_dart(d));
  return best;
}

LabelledMap LabelledMap::shifted(int c) const {
  LabelledMap r = *this;
  for (int& l : r.labels) l += c;
  return r;
}

LabelledMap LabelledMap::normalized() const { return shifted(-min_label()); }

std::vector<int> LabelledMap::local_minima() const {
  std::vector<char> ok(labels.size(), 1);
  for (int d = 0; d < base.num_darts(); ++d)
    if (label_of_dart(d ^ 1) < label_of_dart(d)) ok[base.vertex(d)] = 0;
  std::vector<int> r;
  for (size_t v = 0; v < ok.size(); ++v)
    if (ok[v]) r.push_back(static_cast<int>(v));
  return r;
}

std::vector<int> LabelledMap::local_maxima() const {
  std::vector<char> ok(labels.size(), 1);
  for (int d = 0; d < base.num_darts(); ++d)
    if (label_of_dart(d ^ 1) > label_of_dart(d)) ok[base.vertex(d)] = 0;
  std::vector<int> r;
  for (size_t v = 0; v < ok.size(); ++v)
    if (ok[v]) r.push_back(static_cast<int>(v));
  return r;
}

bool LabelledMap::well_labelled() const { return is_well_labelled(base, labels); }
bool LabelledMap::very_well_labelled() const { return is_very_well_labelled(base, labels); }

std::vector<int> LabelledMap::code() const {
  std::vector<int> mark(labels.size(), -1), face(base.num_faces(), -1);
  for (size_t i = 0; i < marks.size(); ++i) mark[marks[i]] = static_cast<int>(i);
  for (size_t i = 0; i < faces.size(); ++i) face[faces[i]] = static_cast<int>(i);
  std::vector<int> tags(base.num_darts());
  for (int d = 0; d < base.num_darts(); ++d)
    tags[d] = label_of_dart(d) * 64 + (mark[base.vertex(d)] + 1) * 8 + face[base.face(d)] + 1;
  if (base.num_darts() == 0) return {labels.at(0) * 64 + (mark[0] + 1) * 8};
  return unrooted_code(base, tags);
}

SuperimposedPair superimpose(const LabelledMap& q, LocalRules rules) {
  const CombMap& b = q.base;
  if (b.num_edges() == 0 || !b.is_quadrangulation()) throw std::invalid_argument("not a quadrangulation");
  if (!q.very_well_labelled()) throw std::invalid_argument("not very-well-labelled");
  const int nf = b.num_faces();

  struct End {
    int key;  // q dart following the corner counterclockwise
    int rank;
    int pos;
  };
  std::vector<End> ends[2];
  ends[0].resize(2 * nf);
  ends[1].resize(2 * nf);
  auto place = [&](int layer, int f, const std::vector<int>& fd, int a, int c) {
    a %= 4;
    c %= 4;
    ends[layer][2 * f] = {fd[a], rank_in_corner(c - a), a};
    ends[layer][2 * f + 1] = {fd[c], rank_in_corner(a - c), c};
  };
  for (int f = 0; f < nf; ++f) {
    std::vector<int> fd = b.face_darts(f);
    int lab[4];
    for (int i = 0; i < 4; ++i) lab[i] = q.label_of_dart(fd[i]);
    int c0 = static_cast<int>(std::min_element(lab, lab + 4) - lab);
    if (lab[(c0 + 2) % 4] == lab[c0]) {
      place(0, f, fd, c0, c0 + 2);
      place(1, f, fd, c0 + 1, c0 + 3);
    } else {
      place(0, f, fd, c0, c0 + (rules.phi == CornerRule::next ? 1 : 3));
      int top = c0 + 2;
      place(1, f, fd, top, top + (rules.phi_minus == CornerRule::next ? 1 : 3));
    }
  }

  std::vector<std::vector<std::pair<int, RotationItem>>> corner(b.num_darts());
  for (int layer = 0; layer < 2; ++layer)
    for (int d = 0; d < 2 * nf; ++d)
      corner[ends[layer][d].key].push_back(
          {ends[layer][d].rank, RotationItem{layer == 0 ? Layer::m : Layer::mprime, d}});

  SuperimposedPair p;
  p.q = q;
  const int V = b.num_vertices();
  p.rotation.resize(V);
  for (int v = 0; v < V; ++v)
    for (int e : b.darts_at(v)) {
      p.rotation[v].push_back({Layer::q, e});
      auto& c = corner[b.sigma(e)];
      std::sort(c.begin(), c.end(), [](const auto& x, const auto& y) { return x.first < y.first; });
      for (const auto& it : c) p.rotation[v].push_back(it.second);
    }

  for (int layer = 0; layer < 2; ++layer) {
    const Layer L = layer == 0 ? Layer::m : Layer::mprime;
    std::vector<int> s(2 * nf, -1);
    for (int v = 0; v < V; ++v) {
      std::vector<int> ds;
      for (const auto& it : p.rotation[v])
        if (it.layer == L) ds.push_back(it.dart);
      for (size_t j = 0; j < ds.size(); ++j) s[ds[j]] = ds[(j + 1) % ds.size()];
    }
    LabelledMap out;
    out.base = CombMap(s);
    std::vector<int> qv(out.base.num_vertices(), -1), back(V, -1), pos(2 * nf);
    for (int d = 0; d < 2 * nf; ++d) {
      qv[out.base.vertex(d)] = b.vertex(ends[layer][d].key);
      pos[d] = ends[layer][d].pos;
    }
    out.labels.resize(qv.size());
    for (size_t w = 0; w < qv.size(); ++w) {
      out.labels[w] = q.labels[qv[w]];
      back[qv[w]] = static_cast<int>(w);
    }
    if (layer == 0) {
      p.m = std::move(out);
      p.q_vertex_of_m = std::move(qv);
      p.m_vertex_of_q = std::move(back);
      p.m_dart_position = std::move(pos);
    } else {
      p.mprime = std::move(out);
      p.q_vertex_of_mprime = std::move(qv);
      p.mprime_vertex_of_q = std::move(back);
      p.mprime_dart_position = std::move(pos);
    }
  }
  return p;
}

LabelledMap phi(const LabelledMap& q, LocalRules rules) { return superimpose(q, rules).m; }
LabelledMap phi_minus(const LabelledMap& q, LocalRules rules) { return superimpose(q, rules).mprime; }

int containing_face(const SuperimposedPair& p, Layer layer, int q_vertex) {
  const LabelledMap& target = layer == Layer::m ? p.m : p.mprime;
  const std::vector<int>& kept = layer == Layer::m ? p.m_vertex_of_q : p.mprime_vertex_of_q;
  if (layer == Layer::q || kept[q_vertex] >= 0) return -1;
  const CombMap& b = p.q.base;
  for (int d : b.darts_at(q_vertex)) {
    int w = b.vertex(d ^ 1);
    if (kept[w] < 0) continue;
    const auto& rot = p.rotation[w];
    const size_t n = rot.size();
    size_t i = 0;
    while (!(rot[i].layer == Layer::q && rot[i].dart == (d ^ 1))) ++i;
    for (size_t k = 1; k < n; ++k) {
      const RotationItem& it = rot[(i + k) % n];
      if (it.layer == layer) return target.base.face(it.dart);
    }
  }
  return -1;
}

CombMap corner_quadrangulation(const CombMap& m) {
  const int n = m.num_darts();
  std::vector<int> s(2 * n);
  for (int d = 0; d < n; ++d) {
    s[2 * d] = 2 * m.sigma(d);
    s[2 * d + 1] = 2 * m.sigma_inv(d ^ 1) + 1;
  }
  return CombMap(s);
}

std::vector<LabelledMap> labelled_quadrangulations(int n_faces, bool rooted, QuadSource source) {
  check_faces(n_faces);
  std::vector<LabelledMap> out;
  std::set<std::vector<int>> seen;
  auto take = [&](const CombMap& q) {
    for (auto& l : enumerate_labellings(q, LabellingMode::very_well)) {
      LabelledMap x{q, std::move(l), {}, {}};
      if (rooted || seen.insert(x.code()).second) out.push_back(std::move(x));
    }
  };
  if (source == QuadSource::automatic)
    source = 2 * n_faces <= kMaxOracleEdges ? QuadSource::filter : QuadSource::corners;
  if (source == QuadSource::filter) {
    if (2 * n_faces > kMaxOracleEdges) throw std::out_of_range("filtering needs maps beyond the oracle bound");
    for_each_rooted_map(2 * n_faces, [&](const CombMap& m) {
      if (m.is_quadrangulation()) take(m);
    });
  } else {
    for_each_rooted_map(n_faces, [&](const CombMap& m) { take(corner_quadrangulation(m)); });
  }
  return out;
}

std::vector<LabelledMap> well_labelled_maps(int n_edges) {
  std::vector<LabelledMap> out;
  std::set<std::vector<int>> seen;
  for_each_rooted_map(n_edges, [&](const CombMap& m) {
    for (auto& l : enumerate_labellings(m, LabellingMode::well)) {
      LabelledMap x{m, std::move(l), {}, {}};
      if (seen.insert(x.code()).second) out.push_back(std::move(x));
    }
  });
  return out;
}

std::vector<SuperimposedPair> lambda_pairs(int n_faces, LocalRules rules) {
  std::vector<SuperimposedPair> out;
  for (const auto& q : labelled_quadrangulations(n_faces, false)) out.push_back(superimpose(q, rules));
  return out;
}

LabelledMap canonical_labelling(const CombMap& m, const std::vector<int>& marks, const std::vector<int>& stu) {
  const int k = static_cast<int>(marks.size());
  if ((k != 2 && k != 3) || static_cast<int>(stu.size()) != k)
    throw std::invalid_argument("canonical labelling needs 2 or 3 marks with matching (s,t[,u])");
  for (int i = 0; i < k; ++i) {
    if (marks[i] < 0 || marks[i] >= m.num_vertices()) throw std::invalid_argument("mark is not a vertex");
    if (stu[i] < 1) throw std::invalid_argument("s, t, u must be positive");
    for (int j = 0; j < i; ++j)
      if (marks[i] == marks[j]) throw std::invalid_argument("marks must be distinct");
  }
  auto D = m.distances();
  bool even = true, odd = true;
  for (int i = 0; i < k; ++i)
    for (int j = i + 1; j < k; ++j) {
      int d = D[marks[i]][marks[j]];
      even = even && d == stu[i] + stu[j];
      odd = odd && d == stu[i] + stu[j] - 1;
    }
  if (!even && !odd) throw std::invalid_argument("distance precondition violated");
  LabelledMap r{m, std::vector<int>(m.num_vertices()), marks, {}};
  for (int v = 0; v < m.num_vertices(); ++v) {
    int best = std::numeric_limits<int>::max();
    for (int i = 0; i < k; ++i) best = std::min(best, D[v][marks[i]] - stu[i]);
    r.labels[v] = best;
  }
  if (!is_pointed_well_labelled(r, stu)) throw std::logic_error("canonical labelling is not pointed-well-labelled");
  return r;
}

bool is_pointed_well_labelled(const LabelledMap& m, const std::vector<int>& stu) {
  if (m.marks.size() != stu.size() || !m.well_labelled()) return false;
  std::vector<int> mins = m.local_minima(), marks = m.marks;
  std::sort(marks.begin(), marks.end());
  if (mins != marks) return false;
  for (size_t i = 0; i < stu.size(); ++i)
    if (m.labels[m.marks[i]] != -stu[i]) return false;
  return true;
}

namespace {

struct Border {
  std::vector<int> mask;  // distinguished faces incident to each vertex, as bits
  bool any = false;
  int min_label = 0;
  bool zero_edge_any = false;
  bool zero_vertex[3][3] = {};
  bool zero_edge[3][3] = {};
};

Border border_of(const LabelledMap& m, const std::vector<int>& face_index) {
  const CombMap& b = m.base;
  Border r;
  r.mask.assign(b.num_vertices(), 0);
  for (int d = 0; d < b.num_darts(); ++d) r.mask[b.vertex(d)] |= 1 << face_index[b.face(d)];
  for (int v = 0; v < b.num_vertices(); ++v) {
    if (__builtin_popcount(r.mask[v]) < 2) continue;
    r.min_label = r.any ? std::min(r.min_label, m.labels[v]) : m.labels[v];
    r.any = true;
    if (m.labels[v] != 0) continue;
    for (int i = 0; i < 3; ++i)
      for (int j = 0; j < 3; ++j)
        if ((r.mask[v] >> i & 1) && (r.mask[v] >> j & 1)) r.zero_vertex[i][j] = true;
  }
  for (int d = 0; d < b.num_darts(); ++d) {
    int fi = face_index[b.face(d)], fj = face_index[b.face(d ^ 1)];
    if (fi == fj || m.label_of_dart(d) != 0 || m.label_of_dart(d ^ 1) != 0) continue;
    r.zero_edge_any = true;
    r.zero_edge[fi][fj] = r.zero_edge[fj][fi] = true;
  }
  return r;
}

}  // namespace

TypeClass classify(const LabelledMap& m, const std::vector<int>& stu) {
  const int k = static_cast<int>(stu.size());
  if ((k != 2 && k != 3) || static_cast<int>(m.faces.size()) != k || m.base.num_faces() != k)
    throw std::invalid_argument("face count mismatch");
  std::vector<int> index(k, -1);
  for (int i = 0; i < k; ++i) {
    if (m.faces[i] < 0 || m.faces[i] >= k || index[m.faces[i]] >= 0)
      throw std::invalid_argument("distinguished faces must list every face once");
    index[m.faces[i]] = i;
    if (m.face_min(m.faces[i]) != 1 - stu[i]) throw std::invalid_argument("face minimum does not match -s+1");
  }
  Border br = border_of(m, index);
  TypeClass r;
  r.context = stu;
  if (!br.any || br.min_label != 0) return r;
  bool all_vertex = true, all_edge = true;
  for (int i = 0; i < k; ++i)
    for (int j = i + 1; j < k; ++j) {
      all_vertex = all_vertex && br.zero_vertex[i][j];
      all_edge = all_edge && br.zero_edge[i][j];
    }
  if (!br.zero_edge_any && all_vertex)
    r.value = MapType::A;
  else if (all_edge)
    r.value = MapType::B;
  return r;
}

BorderSummary border_summary(const LabelledMap& m) {
  const CombMap& b = m.base;
  std::vector<int> index(b.num_faces());
  std::iota(index.begin(), index.end(), 0);
  BorderSummary s;
  std::vector<std::vector<int>> faces(b.num_vertices());
  for (int d = 0; d < b.num_darts(); ++d) faces[b.vertex(d)].push_back(b.face(d));
  for (int v = 0; v < b.num_vertices(); ++v) {
    auto& f = faces[v];
    std::sort(f.begin(), f.end());
    if (std::unique(f.begin(), f.end()) - f.begin() < 2) continue;
    s.min_label = s.has_border ? std::min(s.min_label, m.labels[v]) : m.labels[v];
    s.has_border = true;
    if (m.labels[v] == 0) ++s.zero_vertices;
  }
  for (int d = 0; d < b.num_darts(); d += 2)
    if (b.face(d) != b.face(d ^ 1) && m.label_of_dart(d) == 0 && m.label_of_dart(d ^ 1) == 0) ++s.zero_edges;
  return s;
}

bool BijectionReport::pass() const {
  return !checks.empty() && std::all_of(checks.begin(), checks.end(), [](const auto& c) { return c.pass(); });
}

namespace {

// Empty when the correspondence holds.
std::string extremum_face_failure(const SuperimposedPair& p, bool minima) {
  const LabelledMap& src = minima ? p.m : p.mprime;
  const LabelledMap& dst = minima ? p.mprime : p.m;
  const std::vector<int>& to_q = minima ? p.q_vertex_of_m : p.q_vertex_of_mprime;
  std::vector<int> ext = minima ? src.local_minima() : src.local_maxima();
  std::vector<int> qext = minima ? p.q.local_minima() : p.q.local_maxima();
  std::vector<int> mapped;
  for (int v : ext) mapped.push_back(to_q[v]);
  std::sort(mapped.begin(), mapped.end());
  if (mapped != qext) return "extrema differ from those of q";
  std::vector<int> hit(dst.base.num_faces(), 0);
  for (int v : qext) {
    int f = containing_face(p, minima ? Layer::mprime : Layer::m, v);
    if (f < 0) return "vertex lies in no face";
    if (hit[f]++) return "two extrema in one face";
    int expect = minima ? dst.face_min(f) - 1 : dst.face_max(f) + 1;
    if (p.q.labels[v] != expect) return "label relation fails";
  }
  if (static_cast<int>(qext.size()) != dst.base.num_faces()) return "extremum count differs from face count";
  return {};
}

std::string dual_edge_failure(const SuperimposedPair& p) {
  for (int f = 0; f < p.m.base.num_edges(); ++f) {
    int a = p.m.label_of_dart(2 * f), b = p.m.label_of_dart(2 * f + 1);
    int c = p.mprime.label_of_dart(2 * f), d = p.mprime.label_of_dart(2 * f + 1);
    int pa = p.m_dart_position[2 * f], pb = p.m_dart_position[2 * f + 1];
    int pc = p.mprime_dart_position[2 * f], pd = p.mprime_dart_position[2 * f + 1];
    bool flat_m = a == b, flat_mp = c == d;
    if (flat_m != flat_mp) return "flat edges do not pair up in face " + std::to_string(f);
    if (!flat_mp) continue;
    if (a != c - 1) return "dual edge labels differ by other than one in face " + std::to_string(f);
    auto between = [](int lo, int hi, int x) {
      if (lo > hi) std::swap(lo, hi);
      return lo < x && x < hi;
    };
    if (between(pa, pb, pc) == between(pa, pb, pd)) return "dual edges do not cross in face " + std::to_string(f);
  }
  return {};
}

void check_sectors(const SuperimposedPair& p, Tally& t) {
  const LabelledMap& mp = p.mprime;
  for (int w = 0; w < mp.base.num_vertices(); ++w) {
    const int u = p.q_vertex_of_mprime[w];
    const int i = p.q.labels[u];
    const auto& rot = p.rotation[u];
    const int n = static_cast<int>(rot.size());
    std::vector<int> up;
    for (int k = 0; k < n; ++k)
      if (rot[k].layer == Layer::mprime && mp.label_of_dart(rot[k].dart ^ 1) == i + 1) up.push_back(k);
    for (int e1 : up)
      for (int e2 : up) {
        if (e1 == e2) continue;
        bool found = false;
        for (int k = (e1 - 1 + n) % n; k != e2; k = (k - 1 + n) % n)
          if (rot[k].layer == Layer::m && p.m.label_of_dart(rot[k].dart ^ 1) == i - 1) {
            found = true;
            break;
          }
        t.record(found, [&] {
          return describe(p.q) + " vertex " + std::to_string(u) + " darts " + std::to_string(rot[e1].dart) + "," +
                 std::to_string(rot[e2].dart);
        });
      }
  }
}

}  // namespace

BijectionReport verify_lambda(int n_faces, LocalRules rules) {
  check_faces(n_faces);
  BijectionReport rep;
  rep.n_faces = n_faces;
  rep.rules = rules;
  Tally build("local_rules_apply"), edges("edge_counts_connected_well_labelled"), verts("vertex_sets"),
      vwell("very_well_preserved"), tmin("minima_to_faces"), tmax("faces_to_maxima"), dual("dual_edges"),
      sector("sector_edges"), pinj("phi_injective"), psur("phi_surjective"), minj("phi_minus_injective"),
      msur("phi_minus_surjective");
  for (int n = 1; n <= n_faces; ++n) {
    std::vector<LabelledMap> qs = labelled_quadrangulations(n, false);
    std::set<std::vector<int>> phi_codes, phim_codes;
    for (const auto& q : qs) {
      SuperimposedPair p;
      bool ok = true;
      std::string err;
      try {
        p = superimpose(q, rules);
      } catch (const std::exception& e) {
        ok = false;
        err = e.what();
      }
      build.record(ok, [&] { return describe(q) + ": " + err; });
      if (!ok) continue;
      edges.record(p.m.base.num_edges() == n && p.mprime.base.num_edges() == n && p.m.well_labelled() &&
                       p.mprime.well_labelled(),
                   [&] { return describe(q); });
      {
        std::vector<int> qmax = q.local_maxima(), qmin = q.local_minima();
        bool vs = true;
        for (int v = 0; v < q.base.num_vertices(); ++v) {
          bool is_max = std::binary_search(qmax.begin(), qmax.end(), v);
          bool is_min = std::binary_search(qmin.begin(), qmin.end(), v);
          vs = vs && (p.m_vertex_of_q[v] < 0) == is_max && (p.mprime_vertex_of_q[v] < 0) == is_min;
        }
        verts.record(vs, [&] { return describe(q); });
      }
      vwell.record(p.m.very_well_labelled() == p.mprime.very_well_labelled(), [&] { return describe(q); });
      std::string f1 = extremum_face_failure(p, true), f2 = extremum_face_failure(p, false), f3 = dual_edge_failure(p);
      tmin.record(f1.empty(), [&] { return describe(q) + ": " + f1; });
      tmax.record(f2.empty(), [&] { return describe(q) + ": " + f2; });
      dual.record(f3.empty(), [&] { return describe(q) + ": " + f3; });
      check_sectors(p, sector);
      bool fresh = phi_codes.insert(p.m.normalized().code()).second;
      pinj.record(fresh, [&] { return describe(q) + " collides under phi"; });
      fresh = phim_codes.insert(p.mprime.normalized().code()).second;
      minj.record(fresh, [&] { return describe(q) + " collides under phi-"; });
    }
    for (const auto& m : well_labelled_maps(n)) {
      auto c = m.code();
      psur.record(phi_codes.count(c) > 0, [&] { return describe(m) + " is not an image of phi"; });
      msur.record(phim_codes.count(c) > 0, [&] { return describe(m) + " is not an image of phi-"; });
    }
  }
  for (const Tally* t : {&build, &edges, &verts, &vwell, &tmin, &tmax, &dual, &sector, &pinj, &psur, &minj, &msur})
    t->merge_into(rep.checks);
  return rep;
}

BijectionReport verify_pointed_bijections(int n_faces, LocalRules rules, int labelling_edges) {
  check_faces(n_faces);
  if (labelling_edges < 1 || labelling_edges > kMaxOracleEdges) throw std::out_of_range("labelling edge bound");
  BijectionReport rep;
  rep.n_faces = n_faces;
  rep.rules = rules;
  Tally fmin("pointed_face_minima"), dich2("distance_dichotomy_bipointed"), dich3("distance_dichotomy_tripointed"),
      geo("geodesic_border_correspondence"), c2a("count_bipointed_A"), c2b("count_bipointed_B"),
      c2v("count_bipointed_bipartite_A"), c2nb("no_very_well_type_B"), c3a("count_tripointed_A"),
      c3b("count_tripointed_B"), c3v("count_tripointed_bipartite_A"), c3al("count_tripointed_aligned"),
      canon("canonical_labelling");

  for (int n = 1; n <= n_faces; ++n) {
    Tallies A2, B2, A2v, B2v, A3, B3, A3v, aligned;
    const Rational weight(1, 4L * n);
    for (const auto& q : labelled_quadrangulations(n, true)) {
      SuperimposedPair p = superimpose(q, rules);
      std::vector<int> mins = p.m.local_minima();
      const int K = static_cast<int>(mins.size());
      if (K != 2 && K != 3) continue;
      auto D = p.m.base.distances();
      std::vector<int> face_of(K);
      for (int i = 0; i < K; ++i) face_of[i] = containing_face(p, Layer::mprime, p.q_vertex_of_m[mins[i]]);
      const ZPolynomial zw = ZPolynomial::monomial(static_cast<int>(p.mprime.local_maxima().size()), weight);
      const bool vw = p.m.very_well_labelled();
      std::vector<int> perm(K);
      std::iota(perm.begin(), perm.end(), 0);
      do {
        std::vector<int> v(K), lab(K), fl(K);
        for (int i = 0; i < K; ++i) {
          v[i] = mins[perm[i]];
          lab[i] = p.m.labels[v[i]];
          fl[i] = face_of[perm[i]];
        }
        for (int c = -*std::max_element(lab.begin(), lab.end()) - 1;; --c) {
          std::vector<int> stu(K);
          for (int i = 0; i < K; ++i) stu[i] = -(lab[i] + c);
          int excess = std::numeric_limits<int>::max();
          bool even = true, odd = true;
          for (int i = 0; i < K; ++i)
            for (int j = i + 1; j < K; ++j) {
              int d = D[v[i]][v[j]];
              excess = std::min(excess, stu[i] + stu[j] - d);
              even = even && d == stu[i] + stu[j];
              odd = odd && d == stu[i] + stu[j] - 1;
            }
          if (excess > 2) break;
          LabelledMap mp = p.mprime.shifted(c);
          mp.faces = fl;
          TypeClass t;
          std::string err;
          try {
            t = classify(mp, stu);
          } catch (const std::exception& e) {
            err = e.what();
          }
          fmin.record(err.empty(), [&] { return describe(q) + ": " + err; });
          if (!err.empty()) continue;
          Tally& dich = K == 2 ? dich2 : dich3;
          dich.record(even == (t.value == MapType::A) && odd == (t.value == MapType::B), [&] {
            return describe(q) + " stu=" + join_ints(stu) + " type " + to_string(t.value);
          });
          if (t.value == MapType::neither) continue;
          Tallies& dest = K == 2 ? (t.value == MapType::A ? A2 : B2) : (t.value == MapType::A ? A3 : B3);
          dest[stu] += zw;
          if (vw) {
            if (K == 2) (t.value == MapType::A ? A2v : B2v)[stu] += zw;
            if (K == 3 && t.value == MapType::A) A3v[stu] += zw;
          }
          if (K != 2) continue;
          BorderSummary bs = border_summary(mp);
          const int s = stu[0], tt = stu[1];
          int expected = 0;
          if (t.value == MapType::A) {
            for (int x = 0; x < p.m.base.num_vertices(); ++x)
              if (D[x][v[0]] == s && D[x][v[1]] == tt) ++expected;
            aligned[stu] += zw * Rational(bs.zero_vertices);
          } else {
            for (int d = 0; d < p.m.base.num_darts(); ++d) {
              int a = p.m.base.vertex(d), b = p.m.base.vertex(d ^ 1);
              if (D[a][v[0]] == s - 1 && D[b][v[0]] == s && D[b][v[1]] == tt - 1) ++expected;
            }
          }
          int got = t.value == MapType::A ? bs.zero_vertices : bs.zero_edges;
          geo.record(got == expected, [&] {
            return describe(q) + " stu=" + join_ints(stu) + " border " + std::to_string(got) + " geodesic " +
                   std::to_string(expected);
          });
        }
      } while (std::next_permutation(perm.begin(), perm.end()));
    }

    const PointedCount bi = count_pointed(n, PointedKind::bipointed);
    const PointedCount bib = count_pointed(n, PointedKind::bipointed, MapFilter::bipartite);
    const PointedCount tri = count_pointed(n, PointedKind::tripointed);
    const PointedCount trib = count_pointed(n, PointedKind::tripointed, MapFilter::bipartite);
    auto cmp = [&](Tally& t, const ZPolynomial& lhs, const ZPolynomial& rhs, const std::vector<int>& stu) {
      t.record(lhs == rhs, [&] {
        return "n=" + std::to_string(n) + " stu=" + join_ints(stu) + ": " + lhs.to_string() + " vs " + rhs.to_string();
      });
    };
    for (int s = 1; s <= n + 1; ++s)
      for (int t = 1; t <= n + 1; ++t) {
        cmp(c2a, get(A2, {s, t}), bi.at({s + t}), {s, t});
        cmp(c2b, get(B2, {s, t}), bi.at({s + t - 1}), {s, t});
        cmp(c2v, get(A2v, {s, t}), bib.at({s + t}), {s, t});
        cmp(c2nb, get(B2v, {s, t}), ZPolynomial(), {s, t});
        cmp(c3al, get(aligned, {s, t}), tri.at({s + t, s, t}), {s, t});
        for (int u = 1; u <= n + 1; ++u) {
          cmp(c3a, get(A3, {s, t, u}), tri.at({s + t, s + u, t + u}), {s, t, u});
          cmp(c3b, get(B3, {s, t, u}), tri.at({s + t - 1, s + u - 1, t + u - 1}), {s, t, u});
          cmp(c3v, get(A3v, {s, t, u}), trib.at({s + t, s + u, t + u}), {s, t, u});
        }
      }
  }

  for (int e = 1; e <= labelling_edges; ++e)
    for_each_rooted_map(e, [&](const CombMap& m) {
      auto D = m.distances();
      const int V = m.num_vertices();
      const bool bip = m.is_bipartite();
      auto run = [&](const std::vector<int>& marks, const std::vector<int>& stu, bool even) {
        bool ok;
        std::string err;
        try {
          LabelledMap l = canonical_labelling(m, marks, stu);
          ok = l.well_labelled() && is_pointed_well_labelled(l, stu) && (!even || l.very_well_labelled() == bip);
        } catch (const std::exception& ex) {
          ok = false;
          err = ex.what();
        }
        canon.record(ok, [&] {
          return "sigma=" + join_ints(m.sigma_vector()) + " marks=" + join_ints(marks) + " stu=" + join_ints(stu) + " " + err;
        });
      };
      for (int a = 0; a < V; ++a)
        for (int b = 0; b < V; ++b) {
          if (a == b) continue;
          const int d = D[a][b];
          for (int s = 1; s <= d; ++s) {
            if (d - s >= 1) run({a, b}, {s, d - s}, true);
            run({a, b}, {s, d + 1 - s}, false);
          }
          for (int c = 0; c < V; ++c) {
            if (c == a || c == b) continue;
            const int d12 = D[a][b], d13 = D[a][c], d23 = D[b][c];
            const int tw = d12 + d13 - d23, tt = d12 + d23 - d13, tu = d13 + d23 - d12;
            if (tw % 2 == 0) {
              if (tw > 0 && tt > 0 && tu > 0) run({a, b, c}, {tw / 2, tt / 2, tu / 2}, true);
            } else {
              run({a, b, c}, {(tw + 1) / 2, (tt + 1) / 2, (tu + 1) / 2}, false);
            }
          }
        }
    });

  for (const Tally* t : {&fmin, &dich2, &dich3, &geo, &c2a, &c2b, &c2v, &c2nb, &c3a, &c3b, &c3v, &c3al, &canon})
    t->merge_into(rep.checks);
  return rep;
}

BijectionReport verify_bijections(int n_faces, LocalRules rules) {
  BijectionReport r = verify_lambda(n_faces, rules);
  BijectionReport p = verify_pointed_bijections(n_faces, rules);
  r.checks.insert(r.checks.end(), p.checks.begin(), p.checks.end());
  return r;
}

nlohmann::ordered_json to_json(const BijectionReport& r) {
  nlohmann::ordered_json j;
  j["n_faces"] = r.n_faces;
  j["rules"] = {{"phi", to_string(r.rules.phi)}, {"phi_minus", to_string(r.rules.phi_minus)}};
  j["pass"] = r.pass();
  j["checks"] = nlohmann::ordered_json::array();
  for (const auto& c : r.checks) {
    nlohmann::ordered_json x;
    x["name"] = c.name;
    x["pass"] = c.pass();
    x["cases"] = c.cases;
    x["failures"] = c.failures;
    if (c.failures) x["first_failure"] = c.first_failure;
    j["checks"].push_back(x);
  }
  return j;
}

}  // namespace mapdist
