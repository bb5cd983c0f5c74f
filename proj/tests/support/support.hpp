#pragma once

// Test-only helpers: seeded random instances and brute-force references that do not go
// through the code under test.

#include <cstddef>
#include <cstdint>
#include <random>
#include <vector>

#include "eskel/rational.hpp"

namespace eskel::testing {

using Rng = std::mt19937_64;

long uniform_int(Rng& rng, long lo, long hi);
Vector random_integer_vector(Rng& rng, std::size_t d, long lo, long hi);
std::vector<Vector> random_points(Rng& rng, std::size_t d, std::size_t n, long lo, long hi);
/// Random points with full affine rank (resampled until they span R^d).
std::vector<Vector> random_full_points(Rng& rng, std::size_t d, std::size_t n, long lo, long hi);

/// {p + q : p in P, q in Q}.
std::vector<Vector> sum_points(const std::vector<Vector>& p, const std::vector<Vector>& q);

/// Vertices of conv(points) by an LP per point, written independently of the library's verify module.
std::vector<Vector> reference_vertices(std::vector<Vector> points);

/// Edges of conv(vertices): {i, j} is an edge iff the midpoint is not a convex combination that
/// uses any other vertex with positive weight.
std::vector<std::pair<std::size_t, std::size_t>> reference_edges(const std::vector<Vector>& vertices);

/// All triangulations of a small point configuration (labels 0..n-1) in R^k, found by
/// backtracking over simplices that pairwise intersect properly; a family counts when its
/// volume equals the largest volume any such family attains.
std::vector<std::vector<std::vector<std::size_t>>> all_triangulations(const std::vector<Vector>& points);

/// The two simplices (label sets) meet in a common face, decided by a separating-hyperplane LP.
bool properly_intersect(const std::vector<Vector>& points, const std::vector<std::size_t>& s,
                        const std::vector<std::size_t>& t);

/// |det| of the simplex, k! times its volume.
Scalar simplex_volume(const std::vector<Vector>& points, const std::vector<std::size_t>& s);

}  // namespace eskel::testing
