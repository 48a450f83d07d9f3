#include "mapdist/bijection.hpp"

#include "mapdist/oracle.hpp"

#include <doctest.h>

#include <set>

using namespace mapdist;

namespace {

// Two vertices joined by two parallel edges.
CombMap digon() { return CombMap({2, 3, 0, 1}); }

const BijectionCheck& find_check(const BijectionReport& r, const std::string& name) {
  for (const auto& c : r.checks)
    if (c.name == name) return c;
  throw std::runtime_error("missing check " + name);
}

}  // namespace

TEST_CASE("corner quadrangulations agree with filtered oracle maps") {
  for (int n = 1; n <= 3; ++n) {
    auto a = labelled_quadrangulations(n, false, QuadSource::filter);
    auto b = labelled_quadrangulations(n, false, QuadSource::corners);
    std::set<std::vector<int>> ca, cb;
    for (const auto& q : a) ca.insert(q.code());
    for (const auto& q : b) cb.insert(q.code());
    CHECK(ca == cb);
    CHECK(labelled_quadrangulations(n, true, QuadSource::filter).size() ==
          labelled_quadrangulations(n, true, QuadSource::corners).size());
  }
  int rooted = 0;
  for_each_rooted_map(4, [&](const CombMap& m) {
    CombMap q = corner_quadrangulation(m);
    CHECK(q.is_quadrangulation());
    CHECK(q.num_faces() == 4);
    ++rooted;
  });
  CHECK(rooted == 378);
  CHECK_THROWS_AS(labelled_quadrangulations(kMaxBijectionFaces + 1, false), std::out_of_range);
}

TEST_CASE("one-face quadrangulation") {
  CombMap path = corner_quadrangulation(CombMap(std::vector<int>{0, 1}));
  REQUIRE(path.num_faces() == 1);
  REQUIRE(path.num_edges() == 2);
  for (const auto& l : enumerate_labellings(path, LabellingMode::very_well)) {
    LabelledMap q{path, l, {}, {}};
    LabelledMap m = phi(q), mp = phi_minus(q);
    CHECK(m.base.num_edges() == 1);
    CHECK(mp.base.num_edges() == 1);
    CHECK(m.well_labelled());
    CHECK(mp.well_labelled());
  }
}

TEST_CASE("local rules reject bad input") {
  LabelledMap tri{CombMap(std::vector<int>{0, 1}), {0, 1}, {}, {}};
  CHECK_THROWS_WITH_AS(phi(tri), "not a quadrangulation", std::invalid_argument);
  CombMap path = corner_quadrangulation(CombMap(std::vector<int>{0, 1}));
  LabelledMap flat{path, std::vector<int>(path.num_vertices(), 0), {}, {}};
  CHECK_THROWS_WITH_AS(phi_minus(flat), "not very-well-labelled", std::invalid_argument);
}

TEST_CASE("superimposed pairs keep the right vertices") {
  for (const auto& p : lambda_pairs(3)) {
    CHECK(p.m.base.num_edges() == p.q.base.num_faces());
    CHECK(p.mprime.base.num_edges() == p.q.base.num_faces());
    CHECK(p.m.base.num_vertices() + p.q.local_maxima().size() == static_cast<size_t>(p.q.base.num_vertices()));
    CHECK(p.mprime.base.num_vertices() + p.q.local_minima().size() == static_cast<size_t>(p.q.base.num_vertices()));
    CHECK(p.m.local_minima().size() == static_cast<size_t>(p.mprime.base.num_faces()));
    for (int v : p.q.local_minima()) {
      int f = containing_face(p, Layer::mprime, v);
      REQUIRE(f >= 0);
      CHECK(p.q.labels[v] == p.mprime.face_min(f) - 1);
    }
  }
}

TEST_CASE("phi is injective on one-face quadrangulations") {
  std::set<std::vector<int>> seen;
  auto pairs = lambda_pairs(1);
  for (const auto& p : pairs) seen.insert(p.m.normalized().code());
  CHECK(seen.size() == pairs.size());
  CHECK(seen.size() == well_labelled_maps(1).size());
}

TEST_CASE("classification of small two-face maps") {
  LabelledMap a{digon(), {0, 1}, {}, {0, 1}};
  CHECK(classify(a, {1, 1}).value == MapType::A);
  LabelledMap b{digon(), {0, 0}, {}, {0, 1}};
  CHECK(classify(b, {1, 1}).value == MapType::B);
  LabelledMap c{digon(), {1, 2}, {}, {0, 1}};
  CHECK(classify(c, {0, 0}).value == MapType::neither);
  CHECK_THROWS_AS(classify(a, {2, 1}), std::invalid_argument);
  LabelledMap one{CombMap(std::vector<int>{0, 1}), {0, 1}, {}, {0}};
  CHECK_THROWS_WITH_AS(classify(one, {1, 1}), "face count mismatch", std::invalid_argument);
}

TEST_CASE("very-well-labelled two-face maps are never of type B") {
  int checked = 0;
  for (int n = 2; n <= 4; ++n)
    for_each_rooted_map(n, [&](const CombMap& m) {
      if (m.num_faces() != 2) return;
      for (const auto& l : enumerate_labellings(m, LabellingMode::very_well))
        for (std::vector<int> faces : {std::vector<int>{0, 1}, std::vector<int>{1, 0}}) {
          LabelledMap x{m, l, {}, faces};
          for (int c = -3; c <= 1; ++c) {
            LabelledMap y = x.shifted(c);
            std::vector<int> st = {1 - y.face_min(faces[0]), 1 - y.face_min(faces[1])};
            if (st[0] < 1 || st[1] < 1) continue;
            TypeClass t = classify(y, st);
            CHECK(t.value != MapType::B);
            if (border_summary(y).min_label == 0) CHECK(t.value == MapType::A);
            ++checked;
          }
        }
    });
  CHECK(checked > 0);
}

TEST_CASE("canonical labelling") {
  CombMap edge(std::vector<int>{0, 1});
  LabelledMap l = canonical_labelling(edge, {0, 1}, {1, 1});
  CHECK(l.labels == std::vector<int>{-1, -1});
  CHECK(is_pointed_well_labelled(l, {1, 1}));
  CHECK_THROWS_WITH_AS(canonical_labelling(edge, {0, 1}, {2, 2}), "distance precondition violated",
                       std::invalid_argument);
  CHECK_THROWS_AS(canonical_labelling(edge, {0, 0}, {1, 1}), std::invalid_argument);

  // Path of two edges, marks at the ends: d = 2 = 1 + 1, bipartite, so very-well-labelled.
  CombMap path = corner_quadrangulation(CombMap(std::vector<int>{0, 1}));
  auto D = path.distances();
  int a = -1, b = -1;
  for (int x = 0; x < path.num_vertices(); ++x)
    for (int y = 0; y < path.num_vertices(); ++y)
      if (D[x][y] == 2) a = x, b = y;
  REQUIRE(a >= 0);
  LabelledMap p = canonical_labelling(path, {a, b}, {1, 1});
  CHECK(p.very_well_labelled());
  CHECK(is_pointed_well_labelled(p, {1, 1}));
}

TEST_CASE("full bijection suite up to three faces") {
  BijectionReport r = verify_bijections(3);
  for (const auto& c : r.checks) {
    INFO(c.name << ": " << c.first_failure);
    CHECK(c.pass());
  }
  CHECK(r.pass());
  CHECK(find_check(r, "sector_edges").cases > 0);
  CHECK(find_check(r, "count_bipointed_A").cases > 0);
  auto j = to_json(r);
  CHECK(j["pass"] == true);
  CHECK(j["checks"].size() == r.checks.size());
}

TEST_CASE("four faces through corner quadrangulations") {
  BijectionReport r = verify_lambda(4);
  for (const auto& c : r.checks) {
    INFO(c.name << ": " << c.first_failure);
    CHECK(c.pass());
  }
}

TEST_CASE("the suite is independent of the corner convention") {
  for (auto a : {CornerRule::previous, CornerRule::next})
    for (auto b : {CornerRule::previous, CornerRule::next}) CHECK(verify_bijections(3, LocalRules{a, b}).pass());
}
