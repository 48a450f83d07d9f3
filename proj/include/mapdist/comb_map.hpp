#pragma once

#include <cstdint>
#include <vector>

namespace mapdist {

// Rooted planar map on darts 0..2n-1. Dart d and d^1 form an edge, sigma is the
// counterclockwise rotation around vertices, and faces are the cycles of phi = sigma o alpha,
// which visit the corners of a face in clockwise order. The root is dart 0.
// The map with no edge is the vertex map.
class CombMap {
 public:
  CombMap();
  explicit CombMap(std::vector<int> sigma);

  int num_edges() const { return static_cast<int>(sigma_.size()) / 2; }
  int num_darts() const { return static_cast<int>(sigma_.size()); }
  int num_vertices() const { return nv_; }
  int num_faces() const { return nf_; }

  static int alpha(int d) { return d ^ 1; }
  int sigma(int d) const { return sigma_[d]; }
  int sigma_inv(int d) const { return sigma_inv_[d]; }
  int phi(int d) const { return sigma_[d ^ 1]; }

  // Vertex at the origin of d; face whose phi-cycle contains d.
  int vertex(int d) const { return vertex_[d]; }
  int face(int d) const { return face_[d]; }
  int root_vertex() const { return sigma_.empty() ? 0 : vertex_[0]; }

  const std::vector<int>& sigma_vector() const { return sigma_; }
  // Darts leaving v in counterclockwise order; darts of face f in phi order.
  std::vector<int> darts_at(int v) const;
  std::vector<int> face_darts(int f) const;
  int face_degree(int f) const;

  bool is_bipartite() const;
  bool is_quadrangulation() const;

  // All-pairs graph distances between vertices.
  std::vector<std::vector<int>> distances() const;

  // The same map with darts renumbered by the canonical traversal from `root`.
  CombMap rerooted(int root) const;
  // old dart -> new dart for the canonical traversal from `root`.
  std::vector<int> canonical_order(int root) const;

  friend bool operator==(const CombMap& a, const CombMap& b) { return a.sigma_ == b.sigma_; }
  friend bool operator<(const CombMap& a, const CombMap& b) { return a.sigma_ < b.sigma_; }

 private:
  std::vector<int> sigma_;
  std::vector<int> sigma_inv_;
  std::vector<int> vertex_;
  std::vector<int> face_;
  int nv_ = 1;
  int nf_ = 1;
};

// Smallest code over all rootings of (map, per-dart tags); equal codes mean the tagged
// maps are isomorphic as unrooted maps.
std::vector<int> unrooted_code(const CombMap& m, const std::vector<int>& dart_tags);

}  // namespace mapdist
