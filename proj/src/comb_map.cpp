#include "mapdist/comb_map.hpp"

#include <algorithm>
#include <queue>
#include <stdexcept>

namespace mapdist {

CombMap::CombMap() = default;

CombMap::CombMap(std::vector<int> sigma) : sigma_(std::move(sigma)) {
  const int n = num_darts();
  if (n % 2 != 0) throw std::invalid_argument("a map needs an even number of darts");
  if (n == 0) return;
  sigma_inv_.assign(n, -1);
  for (int d = 0; d < n; ++d) {
    int e = sigma_[d];
    if (e < 0 || e >= n || sigma_inv_[e] != -1) throw std::invalid_argument("rotation is not a permutation");
    sigma_inv_[e] = d;
  }
  vertex_.assign(n, -1);
  face_.assign(n, -1);
  nv_ = nf_ = 0;
  for (int d = 0; d < n; ++d) {
    if (vertex_[d] < 0) {
      for (int e = d; vertex_[e] < 0; e = sigma_[e]) vertex_[e] = nv_;
      ++nv_;
    }
    if (face_[d] < 0) {
      for (int e = d; face_[e] < 0; e = phi(e)) face_[e] = nf_;
      ++nf_;
    }
  }
  std::vector<char> seen(n, 0);
  std::vector<int> stack = {0};
  seen[0] = 1;
  int reached = 0;
  while (!stack.empty()) {
    int d = stack.back();
    stack.pop_back();
    ++reached;
    for (int e : {sigma_[d], alpha(d)})
      if (!seen[e]) {
        seen[e] = 1;
        stack.push_back(e);
      }
  }
  if (reached != n) throw std::invalid_argument("map is not connected");
  if (nv_ - num_edges() + nf_ != 2) throw std::invalid_argument("map is not planar");
}

std::vector<int> CombMap::darts_at(int v) const {
  std::vector<int> out;
  for (int d = 0; d < num_darts(); ++d)
    if (vertex_[d] == v) {
      for (int e = d;;) {
        out.push_back(e);
        e = sigma_[e];
        if (e == d) break;
      }
      break;
    }
  return out;
}

std::vector<int> CombMap::face_darts(int f) const {
  std::vector<int> out;
  for (int d = 0; d < num_darts(); ++d)
    if (face_[d] == f) {
      for (int e = d;;) {
        out.push_back(e);
        e = phi(e);
        if (e == d) break;
      }
      break;
    }
  return out;
}

int CombMap::face_degree(int f) const {
  if (sigma_.empty()) return 0;
  return static_cast<int>(std::count(face_.begin(), face_.end(), f));
}

bool CombMap::is_bipartite() const {
  for (int f = 0; f < nf_; ++f)
    if (face_degree(f) % 2 != 0) return false;
  return true;
}

bool CombMap::is_quadrangulation() const {
  if (sigma_.empty()) return false;
  for (int f = 0; f < nf_; ++f)
    if (face_degree(f) != 4) return false;
  return true;
}

std::vector<std::vector<int>> CombMap::distances() const {
  std::vector<std::vector<int>> adj(nv_);
  for (int d = 0; d < num_darts(); ++d) adj[vertex_[d]].push_back(vertex_[alpha(d)]);
  std::vector<std::vector<int>> dist(nv_, std::vector<int>(nv_, -1));
  for (int s = 0; s < nv_; ++s) {
    std::queue<int> q;
    q.push(s);
    dist[s][s] = 0;
    while (!q.empty()) {
      int v = q.front();
      q.pop();
      for (int w : adj[v])
        if (dist[s][w] < 0) {
          dist[s][w] = dist[s][v] + 1;
          q.push(w);
        }
    }
  }
  return dist;
}

std::vector<int> CombMap::canonical_order(int root) const {
  const int n = num_darts();
  std::vector<int> label(n, -1), order;
  order.reserve(n);
  label[root] = 0;
  label[alpha(root)] = 1;
  order.push_back(root);
  order.push_back(alpha(root));
  int next = 2;
  for (size_t i = 0; i < order.size(); ++i) {
    int e = sigma_[order[i]];
    if (label[e] >= 0) continue;
    label[e] = next++;
    label[alpha(e)] = next++;
    order.push_back(e);
    order.push_back(alpha(e));
  }
  return label;
}

CombMap CombMap::rerooted(int root) const {
  if (sigma_.empty()) return *this;
  std::vector<int> label = canonical_order(root);
  std::vector<int> s(num_darts());
  for (int d = 0; d < num_darts(); ++d) s[label[d]] = label[sigma_[d]];
  return CombMap(std::move(s));
}

std::vector<int> unrooted_code(const CombMap& m, const std::vector<int>& dart_tags) {
  const int n = m.num_darts();
  if (n == 0) return dart_tags;
  std::vector<int> best, code(2 * n);
  for (int r = 0; r < n; ++r) {
    std::vector<int> label = m.canonical_order(r);
    for (int d = 0; d < n; ++d) {
      code[label[d]] = label[m.sigma(d)];
      code[n + label[d]] = dart_tags[d];
    }
    if (best.empty() || code < best) best = code;
  }
  return best;
}

}  // namespace mapdist
