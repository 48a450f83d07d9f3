#pragma once

#include "mapdist/comb_map.hpp"
#include "mapdist/zpolynomial.hpp"

#include <functional>
#include <map>
#include <string>
#include <vector>

namespace mapdist {

constexpr int kMaxOracleEdges = 7;

// Rooted planar maps with n edges, each exactly once, in a fixed order, in canonical dart numbering.
// Generated by root-edge deletion: either the root edge is not an isthmus (a chord of the root
// face of a smaller map) or it joins two smaller maps.
std::vector<CombMap> enumerate_rooted_maps(int n);
void for_each_rooted_map(int n, const std::function<void(const CombMap&)>& visit);

// Independent check: every rotation on 2n darts, kept when connected and planar, rooted at every
// dart and deduplicated by canonical form. Only practical for n <= 4.
std::vector<CombMap> enumerate_rooted_maps_naive(int n);

enum class PointedKind { bipointed, tripointed };
enum class MapFilter { none, bipartite, quadrangulation };

bool passes(const CombMap& m, MapFilter f);

// Weighted tallies of (rooted map, ordered tuple of distinct vertices), keyed by the distances
// (d12) or (d12, d13, d23), weighted by z^faces and divided by 2n.
struct PointedCount {
  int n = 0;
  PointedKind kind = PointedKind::bipointed;
  MapFilter filter = MapFilter::none;
  std::map<std::vector<int>, ZPolynomial> table;

  ZPolynomial at(const std::vector<int>& key) const;
};

PointedCount count_pointed(int n, PointedKind kind, MapFilter filter = MapFilter::none);

// Sum over rooted maps with n edges of z^faces.
ZPolynomial rooted_face_polynomial(int n, MapFilter filter = MapFilter::none);

enum class LabellingMode { well, very_well };

bool is_well_labelled(const CombMap& m, const std::vector<int>& labels);
bool is_very_well_labelled(const CombMap& m, const std::vector<int>& labels);

// All labellings (indexed by vertex) with minimum label 0.
std::vector<std::vector<int>> enumerate_labellings(const CombMap& m, LabellingMode mode);

std::string to_string(PointedKind k);
PointedKind parse_pointed_kind(const std::string& s);

}  // namespace mapdist
