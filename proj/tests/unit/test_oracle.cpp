#include <doctest.h>

#include <algorithm>

#include "eskel/error.hpp"
#include "eskel/oracle.hpp"
#include "eskel/procedures.hpp"
#include "support.hpp"

using namespace eskel;

namespace {

std::vector<Vector> unit_square() { return {{0, 0}, {1, 0}, {0, 1}, {1, 1}}; }

OraclePtr square_h() {
  return std::make_shared<HPolytopeOracle>(Matrix{{1, 0}, {-1, 0}, {0, 1}, {0, -1}}, Vector{1, 0, 1, 0});
}

/// Lexicographically largest maximizer over an explicit point list.
Vector reference_opt(const std::vector<Vector>& pts, const Vector& c) {
  Vector best = pts.front();
  for (const auto& p : pts) {
    int s = cmp(dot(c, p), dot(c, best));
    if (s > 0 || (s == 0 && p > best)) best = p;
  }
  return best;
}

}  // namespace

TEST_CASE("V-oracle breaks ties toward the lexicographically largest point") {
  VPolytopeOracle v(unit_square());
  CHECK(v.optimize({1, 0}) == Vector{1, 1});
  CHECK(v.optimize({0, 0}) == Vector{1, 1});
  CHECK(v.optimize({-1, 0}) == Vector{0, 1});
  CHECK(v.optimize({-1, -1}) == Vector{0, 0});
  CHECK(v.optimize_calls() == 4);
  CHECK_THROWS_AS(v.optimize({1}), MalformedInput);
}

TEST_CASE("H-oracle returns the lexicographic maximum of the optimal face") {
  auto h = square_h();
  CHECK(h->optimize({1, 0}) == Vector{1, 1});
  CHECK(h->optimize({0, -1}) == Vector{1, 0});
  CHECK(h->optimize({0, 0}) == Vector{1, 1});
  CHECK(h->optimize({-1, 1}) == Vector{0, 1});
}

TEST_CASE("H-oracle rejects empty and unbounded systems") {
  CHECK_THROWS_AS(HPolytopeOracle(Matrix{{1}, {-1}}, Vector{0, -1}), MalformedInput);
  CHECK_THROWS_AS(HPolytopeOracle(Matrix{{1, 0}, {-1, 0}}, Vector{1, 0}), MalformedInput);
  CHECK_THROWS_AS(HPolytopeOracle(Matrix{{1, 0}}, Vector{1, 0}), MalformedInput);
}

TEST_CASE("V- and H-oracles agree with explicit maximization") {
  testing::Rng rng(7);
  for (int trial = 0; trial < 60; ++trial) {
    std::size_t d = 2 + trial % 3;
    auto pts = testing::random_points(rng, d, 8, -10, 10);
    VPolytopeOracle v(pts);
    for (int k = 0; k < 5; ++k) {
      Vector c = testing::random_integer_vector(rng, d, -3, 3);
      CHECK(v.optimize(c) == reference_opt(pts, c));
    }
  }
  // The cube as an H-polytope against its vertex list.
  Matrix a;
  Vector b;
  std::vector<Vector> cube;
  for (std::size_t i = 0; i < 3; ++i) {
    a.push_back(unit_vector(3, i));
    b.push_back(1);
    a.push_back(negated(unit_vector(3, i)));
    b.push_back(1);
  }
  for (int m = 0; m < 8; ++m) cube.push_back({m & 1 ? 1 : -1, m & 2 ? 1 : -1, m & 4 ? 1 : -1});
  HPolytopeOracle h(a, b);
  for (int k = 0; k < 40; ++k) {
    Vector c = testing::random_integer_vector(rng, 3, -2, 2);
    CHECK(h.optimize(c) == reference_opt(cube, c));
  }
}

TEST_CASE("signed Minkowski oracle sums term optima") {
  auto seg_x = std::make_shared<VPolytopeOracle>(std::vector<Vector>{{0, 0}, {1, 0}});
  auto seg_y = std::make_shared<VPolytopeOracle>(std::vector<Vector>{{0, 0}, {0, 1}});
  SignedMinkowskiOracle sq({{1, seg_x}, {1, seg_y}});
  CHECK(sq.optimize({1, 1}) == Vector{1, 1});
  CHECK(sq.optimize({-1, 1}) == Vector{0, 1});
  CHECK(sq.optimize({0, 0}) == Vector{1, 1});
  CHECK(minkowski_optimize({{1, seg_x}, {-1, seg_y}}, {1, 1}) == Vector{1, -1});
}

TEST_CASE("(B + C) - B optimizes like C") {
  testing::Rng rng(99);
  for (int trial = 0; trial < 40; ++trial) {
    std::size_t d = 2 + trial % 2;
    auto b = testing::random_points(rng, d, 4, -5, 5);
    auto c = testing::random_points(rng, d, 4, -5, 5);
    auto bc = std::make_shared<VPolytopeOracle>(testing::sum_points(b, c));
    auto bo = std::make_shared<VPolytopeOracle>(b);
    VPolytopeOracle co(c);
    SignedMinkowskiOracle diff({{1, bc}, {-1, bo}});
    for (int k = 0; k < 10; ++k) {
      Vector obj = testing::random_integer_vector(rng, d, -3, 3);
      CHECK(diff.optimize(obj) == co.optimize(obj));
    }
  }
}

TEST_CASE("signed Minkowski construction errors") {
  auto seg = std::make_shared<VPolytopeOracle>(std::vector<Vector>{{0, 0}, {1, 0}});
  auto line = std::make_shared<VPolytopeOracle>(std::vector<Vector>{{0}, {1}});
  CHECK_THROWS_AS(SignedMinkowskiOracle({}), MalformedInput);
  CHECK_THROWS_AS(SignedMinkowskiOracle({{1, seg}, {1, line}}), MalformedInput);
  CHECK_THROWS_AS(SignedMinkowskiOracle({{2, seg}}), MalformedInput);
  CHECK_THROWS_AS(SignedMinkowskiOracle({{-1, seg}}), MalformedInput);
}

TEST_CASE("well-described bookkeeping bounds every vertex") {
  testing::Rng rng(3);
  for (int trial = 0; trial < 30; ++trial) {
    auto pts = testing::random_points(rng, 3, 6, -10, 10);
    VPolytopeOracle v(pts);
    auto m = v.meta();
    CHECK(m.encoding_length() == m.dimension + m.facet_complexity);
    CHECK(m.vertex_bound() == 4 * 9 * m.facet_complexity);
    for (const auto& p : pts) CHECK(m.admits_vertex(p));
  }
  auto h = square_h();
  auto hm = h->meta();
  CHECK(hm.facet_complexity == encoding_length(Vector{1, 0}) + encoding_length(Scalar(1)));
  for (const auto& p : unit_square()) CHECK(hm.admits_vertex(p));
}

TEST_CASE("native ray shooting matches the oracle-only method") {
  testing::Rng rng(17);
  for (int trial = 0; trial < 40; ++trial) {
    std::size_t d = 2 + trial % 2;
    auto pts = testing::random_full_points(rng, d, 6, -6, 6);
    VPolytopeOracle v(pts);
    Vector origin = v.optimize(testing::random_integer_vector(rng, d, -2, 2));
    Vector e = testing::random_integer_vector(rng, d, -3, 3);
    if (is_zero(e)) continue;
    auto native = v.native_ray_shoot(origin, e);
    REQUIRE(native);
    CHECK(*native == ray_shoot_generic(v, origin, e));
  }
}
