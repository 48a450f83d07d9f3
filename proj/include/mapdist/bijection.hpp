#pragma once

#include "mapdist/comb_map.hpp"
#include "mapdist/zpolynomial.hpp"

#include <json.hpp>

#include <string>
#include <vector>

namespace mapdist {

constexpr int kMaxBijectionFaces = 4;

struct LabelledMap {
  CombMap base;
  std::vector<int> labels;  // per vertex
  std::vector<int> marks;   // ordered marked vertices
  std::vector<int> faces;   // ordered distinguished faces

  int label_of_dart(int d) const { return labels[base.vertex(d)]; }
  int min_label() const;
  int face_min(int f) const;
  int face_max(int f) const;
  LabelledMap shifted(int c) const;
  LabelledMap normalized() const;
  // Vertices not larger (resp. not smaller) than any neighbour.
  std::vector<int> local_minima() const;
  std::vector<int> local_maxima() const;
  bool well_labelled() const;
  bool very_well_labelled() const;
  // Equal codes iff isomorphic as unrooted maps carrying labels, marks and distinguished faces.
  std::vector<int> code() const;
};

// Which neighbouring corner of the face receives the edge drawn from the extreme corner of a
// face with labels l, l+1, l+2, l+1. "next" follows the phi order of the face (clockwise).
enum class CornerRule { previous, next };

struct LocalRules {
  CornerRule phi = CornerRule::next;
  CornerRule phi_minus = CornerRule::previous;
};

std::string to_string(CornerRule r);

enum class Layer { q, m, mprime };

struct RotationItem {
  Layer layer;
  int dart;
};

// q with Phi(q) and Phi^-(q) drawn on top of it. Edge k of m and of mprime (darts 2k, 2k+1)
// lies inside face k of q.
struct SuperimposedPair {
  LabelledMap q, m, mprime;
  std::vector<int> q_vertex_of_m, q_vertex_of_mprime;
  std::vector<int> m_vertex_of_q, mprime_vertex_of_q;  // -1 for deleted vertices
  // Position 0..3 (in the phi order of its q face) of the corner holding each dart.
  std::vector<int> m_dart_position, mprime_dart_position;
  // Counterclockwise order of the darts of all three maps around every q vertex.
  std::vector<std::vector<RotationItem>> rotation;
};

SuperimposedPair superimpose(const LabelledMap& q, LocalRules rules = {});
LabelledMap phi(const LabelledMap& q, LocalRules rules = {});
LabelledMap phi_minus(const LabelledMap& q, LocalRules rules = {});

// Face of the m or mprime layer containing a q vertex deleted from that layer; -1 if none.
int containing_face(const SuperimposedPair& p, Layer layer, int q_vertex);

// Quadrangulation whose vertices are the vertices and faces of m and whose edges are the corners
// of m, rooted at the corner edge leaving the root vertex of m. Rooted maps with n edges give every
// rooted quadrangulation with n faces exactly once.
CombMap corner_quadrangulation(const CombMap& m);

// filter: keep the quadrangulations among maps with 2n edges (needs 2n <= oracle bound).
// corners: corner quadrangulations of maps with n edges. automatic: filter when possible.
enum class QuadSource { automatic, filter, corners };

// Very-well-labelled quadrangulations with n faces, minimum label 0. With rooted = false one
// representative per unrooted class.
std::vector<LabelledMap> labelled_quadrangulations(int n_faces, bool rooted,
                                                   QuadSource source = QuadSource::automatic);
// Well-labelled maps with n edges, minimum label 0, one per unrooted class.
std::vector<LabelledMap> well_labelled_maps(int n_edges);
std::vector<SuperimposedPair> lambda_pairs(int n_faces, LocalRules rules = {});

// l0(v) = min_i d(v, marks_i) - stu_i. Marks must be pairwise at distance s_i + s_j, or all at
// s_i + s_j - 1.
LabelledMap canonical_labelling(const CombMap& m, const std::vector<int>& marks, const std::vector<int>& stu);
// Marks are exactly the local minima and carry labels -stu.
bool is_pointed_well_labelled(const LabelledMap& m, const std::vector<int>& stu);

enum class MapType { A, B, neither };

struct TypeClass {
  MapType value = MapType::neither;
  std::vector<int> context;
};

std::string to_string(MapType t);
TypeClass classify(const LabelledMap& m, const std::vector<int>& stu);

struct BorderSummary {
  int min_label = 0;        // over border vertices; meaningless when there are none
  bool has_border = false;
  int zero_vertices = 0;    // border vertices of label 0
  int zero_edges = 0;       // border edges of labels 0-0
};
BorderSummary border_summary(const LabelledMap& m);

struct BijectionCheck {
  std::string name;
  long cases = 0;
  long failures = 0;
  std::string first_failure;
  bool pass() const { return failures == 0 && cases > 0; }
};

struct BijectionReport {
  int n_faces = 0;
  LocalRules rules;
  std::vector<BijectionCheck> checks;
  bool pass() const;
};

// Correspondence checks on every pair with up to n faces: edge counts, vertex sets, face/extremum
// correspondences, dual edges, sector property, injectivity and surjectivity.
BijectionReport verify_lambda(int n_faces, LocalRules rules = {});
// Distance dichotomies, pointed count equalities against the oracle, geodesic correspondences
// and the canonical labelling on maps with up to max_edges edges.
BijectionReport verify_pointed_bijections(int n_faces, LocalRules rules = {}, int labelling_edges = 4);
BijectionReport verify_bijections(int n_faces, LocalRules rules = {});

nlohmann::ordered_json to_json(const BijectionReport& r);

}  // namespace mapdist
