#include <doctest.h>

#include <sstream>

#include "eskel/error.hpp"
#include "eskel/gkz.hpp"
#include "eskel/reverse_search.hpp"
#include "support.hpp"

using namespace eskel;

namespace {

std::vector<Vector> unit_square() { return {{0, 0}, {1, 0}, {0, 1}, {1, 1}}; }

}  // namespace

TEST_CASE("search order compares the objective, then coordinates") {
  SearchOrder order({1, 1});
  CHECK(order.compare({1, 0}, {0, 1}) == 1);
  CHECK(order.compare({0, 1}, {1, 0}) == -1);
  CHECK(order.compare({0, 0}, {0, 1}) == -1);
  CHECK(order.compare({2, 2}, {2, 2}) == 0);
}

TEST_CASE("adjacency enumerates neighbors in descending order") {
  VPolytopeOracle sq(unit_square());
  auto dirs = pairwise_differences(unit_square());
  SearchOrder order({1, 1});
  // Both neighbors of (0,0) have c-value 1; (1,0) is lexicographically larger.
  CHECK(adjacency(sq, dirs, order, {0, 0}, 1) == Vector{1, 0});
  CHECK(adjacency(sq, dirs, order, {0, 0}, 2) == Vector{0, 1});
  CHECK_FALSE(adjacency(sq, dirs, order, {0, 0}, 3));
  CHECK_THROWS_AS(adjacency(sq, dirs, order, {0, 0}, 0), PreconditionError);

  VPolytopeOracle seg({{0, 0}, {2, 1}});
  auto sdirs = pairwise_differences({{0, 0}, {2, 1}});
  CHECK(adjacency(seg, sdirs, order, {0, 0}, 1) == Vector{2, 1});
  CHECK_FALSE(adjacency(seg, sdirs, order, {0, 0}, 2));
}

TEST_CASE("local search moves to the best neighbor and refuses the root") {
  VPolytopeOracle sq(unit_square());
  auto dirs = pairwise_differences(unit_square());
  SearchOrder order({1, 1});
  CHECK(local_search(sq, dirs, order, {0, 0}) == Vector{1, 0});
  CHECK(local_search(sq, dirs, order, {0, 1}) == Vector{1, 1});
  CHECK_THROWS_AS(local_search(sq, dirs, order, {1, 1}), PreconditionError);

  VPolytopeOracle seg({{0, 0}, {2, 1}});
  SearchOrder along({2, 1});
  CHECK(local_search(seg, pairwise_differences({{0, 0}, {2, 1}}), along, {0, 0}) == Vector{2, 1});
}

TEST_CASE("reverse search on the square streams lines and matches BFS") {
  VPolytopeOracle sq(unit_square());
  auto dirs = pairwise_differences(unit_square());
  std::ostringstream lines;
  auto summary = rs_edge_skeleton(sq, dirs, SearchOrder({1, 1}), line_sink(lines));
  CHECK(summary.vertices == 4);
  CHECK(summary.edges == 4);
  CHECK(lines.str().rfind("V 1,1\n", 0) == 0);
  CHECK(lines.str().find("E 1,1 1,0\n") != std::string::npos);

  GraphCollector collect;
  rs_edge_skeleton(sq, dirs, SearchOrder({1, 1}), collect.sink());
  CHECK(collect.graph() == edge_skeleton(sq, dirs));
  CHECK(collect.duplicate_vertices() == 0);
  CHECK(collect.duplicate_edges() == 0);
}

TEST_CASE("reverse search on a single point") {
  VPolytopeOracle pt({{1, 2, 3}});
  GraphCollector collect;
  auto s = rs_edge_skeleton(pt, pairwise_differences({{0, 0, 0}, {1, 0, 0}}), SearchOrder({1, 0, 0}), collect.sink());
  CHECK(s.vertices == 1);
  CHECK(s.edges == 0);
  CHECK(collect.graph().vertices == std::vector<Vector>{{1, 2, 3}});
}

TEST_CASE("reverse search equals BFS on random polytopes and keeps only the path") {
  testing::Rng rng(404);
  for (int trial = 0; trial < 25; ++trial) {
    std::size_t d = 2 + trial % 3;
    auto pts = testing::random_points(rng, d, 6 + trial % 5, -10, 10);
    VPolytopeOracle p(pts);
    auto dirs = pairwise_differences(pts);
    Vector c = testing::random_integer_vector(rng, d, -3, 3);
    GraphCollector collect;
    auto s = rs_edge_skeleton(p, dirs, SearchOrder(c), collect.sink());
    auto bfs = edge_skeleton(p, dirs);
    CHECK(collect.graph() == bfs);
    CHECK(collect.duplicate_vertices() == 0);
    CHECK(collect.duplicate_edges() == 0);
    CHECK(s.vertices == bfs.vertices.size());
    CHECK(s.edges == bfs.edges.size());
    CHECK(s.peak_excess <= 4);
    CHECK(s.peak_retained <= s.max_depth + 4);
  }
}

TEST_CASE("memo cache changes cost, not output") {
  std::vector<Vector> cube;
  for (int m = 0; m < 8; ++m) cube.push_back({m & 1, (m >> 1) & 1, (m >> 2) & 1});
  VPolytopeOracle p(cube);
  auto dirs = pairwise_differences(cube);
  GraphCollector plain, cached;
  auto a = rs_edge_skeleton(p, dirs, SearchOrder({1, 2, 3}), plain.sink());
  ReverseSearchOptions opts;
  opts.memo_capacity = 4;
  auto b = rs_edge_skeleton(p, dirs, SearchOrder({1, 2, 3}), cached.sink(), opts);
  CHECK(plain.graph() == cached.graph());
  CHECK(b.neighbor_computations < a.neighbor_computations);
  CHECK(a.peak_memo_vertices == 0);
  CHECK(b.peak_memo_vertices > 0);
}

TEST_CASE("local search increases the order on the secondary pentagon") {
  PointConfiguration a({{0, 0}, {2, 0}, {2, 1}, {1, 1}, {0, 1}});
  SecondaryOracle sigma(a);
  auto dirs = circuit_directions_secondary(a);
  SearchOrder order({1, 1, 1, 1, 1});
  auto g = edge_skeleton(sigma, dirs);
  REQUIRE(g.vertices.size() == 5);
  Vector root = initial_vertex(sigma, order.objective());
  for (const auto& v : g.vertices) {
    if (v == root) {
      CHECK_THROWS_AS(local_search(sigma, dirs, order, v), PreconditionError);
      continue;
    }
    CHECK(order.less(v, local_search(sigma, dirs, order, v)));
  }
}
