#include <doctest.h>

#include "eskel/error.hpp"
#include "eskel/skeleton.hpp"
#include "eskel/verify.hpp"
#include "support.hpp"

using namespace eskel;

namespace {

std::vector<Vector> unit_square() { return {{0, 0}, {1, 0}, {0, 1}, {1, 1}}; }

SkeletonGraph reference_skeleton(const std::vector<Vector>& pts) {
  auto verts = testing::reference_vertices(pts);
  std::vector<std::pair<Vector, Vector>> edges;
  for (const auto& [i, j] : testing::reference_edges(verts)) edges.emplace_back(verts[i], verts[j]);
  return make_skeleton_graph(verts, edges);
}

NeighborCandidateSet candidates(const Vector& v, const std::vector<Vector>& qs) {
  NeighborCandidateSet s{v, {}};
  for (std::size_t i = 0; i < qs.size(); ++i) s.candidates.push_back({i, qs[i]});
  return s;
}

}  // namespace

TEST_CASE("direction sets are canonical, sorted and duplicate free") {
  auto d = DirectionSet::directed({{2, 0}, {1, 0}, {0, -3}}, DirectionSource::UserProvided);
  CHECK(d.directions() == std::vector<Vector>{{0, -1}, {1, 0}});
  CHECK(d.contains({1, 0}));
  CHECK_FALSE(d.contains({-1, 0}));
  CHECK(d.covers_segment({0, 0}, {-5, 0}));
  CHECK_FALSE(d.covers_segment({0, 0}, {1, 1}));

  auto u = DirectionSet::undirected({{2, 0}, {-1, 0}, {1, 1}}, DirectionSource::UserProvided);
  CHECK(u.size() == 4);
  CHECK(u.contains({-1, -1}));
  CHECK_THROWS_AS(DirectionSet::directed({{0, 0}}, DirectionSource::UserProvided), MalformedInput);
  CHECK_THROWS_AS(DirectionSet::directed({{1, 0}, {1}}, DirectionSource::UserProvided), MalformedInput);
  CHECK(d.merged(u).size() == 5);
}

TEST_CASE("pairwise differences of the square") {
  auto d = pairwise_differences(unit_square());
  CHECK(d.size() == 8);
  CHECK(d.source() == DirectionSource::PairwiseDifferences);
  CHECK(d.contains({1, -1}));
  CHECK(d.contains({-1, 1}));
}

TEST_CASE("square skeleton through V, H and Minkowski oracles") {
  const SkeletonGraph expected =
      make_skeleton_graph(unit_square(), {{{0, 0}, {1, 0}}, {{0, 0}, {0, 1}}, {{1, 0}, {1, 1}}, {{0, 1}, {1, 1}}});
  auto dirs = pairwise_differences(unit_square());
  VPolytopeOracle v(unit_square());
  HPolytopeOracle h({{1, 0}, {-1, 0}, {0, 1}, {0, -1}}, {1, 0, 1, 0});
  auto sx = std::make_shared<VPolytopeOracle>(std::vector<Vector>{{0, 0}, {1, 0}});
  auto sy = std::make_shared<VPolytopeOracle>(std::vector<Vector>{{0, 0}, {0, 1}});
  SignedMinkowskiOracle m({{1, sx}, {1, sy}});
  CHECK(edge_skeleton(v, dirs) == expected);
  CHECK(edge_skeleton(h, dirs) == expected);
  CHECK(edge_skeleton(m, dirs) == expected);
  SkeletonOptions generic;
  generic.ray.force_generic = true;
  CHECK(edge_skeleton(v, dirs, generic) == expected);
  CHECK(expected.vertices.front() == Vector{0, 0});
  CHECK(expected.edges == std::vector<std::pair<std::size_t, std::size_t>>{{0, 1}, {0, 2}, {1, 3}, {2, 3}});
}

TEST_CASE("degenerate polytopes") {
  VPolytopeOracle point({{3, 4}, {3, 4}});
  auto g = edge_skeleton(point, pairwise_differences({{0, 0}, {1, 0}}));
  CHECK(g.vertices == std::vector<Vector>{{3, 4}});
  CHECK(g.edges.empty());
  CHECK(g.dimension == 0);

  VPolytopeOracle seg({{0, 0, 0}, {1, 2, 3}, {2, 4, 6}});
  g = edge_skeleton(seg, pairwise_differences({{0, 0, 0}, {1, 2, 3}}));
  CHECK(g.vertices.size() == 2);
  CHECK(g.edges.size() == 1);
  CHECK(g.dimension == 1);
}

TEST_CASE("filter keeps extremal rays only (square diagonal)") {
  auto kept = filter_neighbors({0, 0}, candidates({0, 0}, {{1, 0}, {1, 1}, {0, 1}}));
  CHECK(kept == std::vector<Vector>{{1, 0}, {0, 1}});
  // Two candidates on one ray: the farther one survives.
  kept = filter_neighbors({0, 0}, candidates({0, 0}, {{1, 0}, {0, 1}, {2, 0}}));
  CHECK(kept == std::vector<Vector>{{0, 1}, {2, 0}});
  CHECK(filter_neighbors({0, 0}, candidates({0, 0}, {})).empty());
  CHECK(filter_neighbors({0, 0}, candidates({0, 0}, {{5, 5}})) == std::vector<Vector>{{5, 5}});
}

TEST_CASE("separating functional") {
  auto set = candidates({0, 0}, {{1, 0}, {1, 1}, {0, 2}});
  Vector a = separating_functional({0, 0}, set);
  for (const auto& c : set.candidates) CHECK(dot(a, c.point) >= 1);
  CHECK_THROWS_AS(separating_functional({0, 0}, candidates({0, 0}, {{1, 0}, {-1, 0}})), InternalError);
}

TEST_CASE("3-cube skeleton") {
  std::vector<Vector> cube;
  for (int m = 0; m < 8; ++m) cube.push_back({m & 1, (m >> 1) & 1, (m >> 2) & 1});
  VPolytopeOracle c(cube);
  auto g = edge_skeleton(c, pairwise_differences(cube));
  CHECK(g.vertices.size() == 8);
  CHECK(g.edges.size() == 12);
  auto check = check_skeleton(g, pairwise_differences(cube));
  CHECK(check.connected);
  CHECK(check.degrees_ok);
  CHECK(check.directions_ok);
}

TEST_CASE("missing directions give a subgraph and a diagnostic") {
  VPolytopeOracle sq(unit_square());
  auto partial = DirectionSet::undirected({{1, 0}}, DirectionSource::UserProvided);
  auto g = edge_skeleton(sq, partial);
  CHECK(g.vertices == std::vector<Vector>{{0, 1}, {1, 1}});
  CHECK(g.edges.size() == 1);
  auto check = check_skeleton(g, partial, &sq);
  CHECK_FALSE(check.spans_polytope);
  CHECK_FALSE(check.degrees_ok);
  CHECK(check.directions_likely_incomplete());

  auto tri = make_skeleton_graph({{0, 0}, {1, 0}, {0, 1}}, {{{0, 0}, {1, 0}}});
  auto c2 = check_skeleton(tri, partial);
  CHECK_FALSE(c2.connected);
}

TEST_CASE("thread count does not change the result") {
  testing::Rng rng(12);
  for (int trial = 0; trial < 10; ++trial) {
    auto pts = testing::random_points(rng, 3, 9, -10, 10);
    VPolytopeOracle p(pts);
    auto dirs = pairwise_differences(pts);
    SkeletonOptions many;
    many.threads = 4;
    CHECK(edge_skeleton(p, dirs) == edge_skeleton(p, dirs, many));
    Vector v = initial_vertex(p);
    auto a = candidate_neighbors(p, v, dirs);
    auto b = candidate_neighbors(p, v, dirs, many);
    REQUIRE(a.candidates.size() == b.candidates.size());
    for (std::size_t i = 0; i < a.candidates.size(); ++i) {
      CHECK(a.candidates[i].direction_index == b.candidates[i].direction_index);
      CHECK(a.candidates[i].point == b.candidates[i].point);
    }
  }
}

TEST_CASE("pruning blocked directions does not change candidates") {
  testing::Rng rng(13);
  SkeletonOptions plain;
  plain.prune_blocked = false;
  for (int trial = 0; trial < 8; ++trial) {
    auto pts = testing::random_points(rng, 2 + trial % 3, 8, -6, 6);
    VPolytopeOracle p(pts);
    auto dirs = pairwise_differences(pts);
    for (const auto& v : bf_vertices(ExplicitPolytope::from_points(pts))) {
      auto a = candidate_neighbors(p, v, dirs);
      auto b = candidate_neighbors(p, v, dirs, plain);
      REQUIRE(a.candidates.size() == b.candidates.size());
      for (std::size_t i = 0; i < a.candidates.size(); ++i) CHECK(a.candidates[i].point == b.candidates[i].point);
    }
  }
}

TEST_CASE("random V-polytopes match the reference skeleton") {
  testing::Rng rng(77);
  for (int trial = 0; trial < 30; ++trial) {
    std::size_t d = 2 + trial % 3;
    auto pts = testing::random_points(rng, d, 5 + trial % 6, -10, 10);
    VPolytopeOracle p(pts);
    CHECK(edge_skeleton(p, pairwise_differences(pts)) == reference_skeleton(pts));
  }
}
