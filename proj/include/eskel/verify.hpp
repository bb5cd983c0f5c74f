#pragma once

// Brute-force vertex and edge enumeration for small explicit polytopes, used to cross-check
// the oracle-based traversals.

#include <cstddef>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "eskel/procedures.hpp"
#include "eskel/skeleton.hpp"

namespace eskel {

/// A polytope given either by points or by A x <= b.
class ExplicitPolytope {
 public:
  static ExplicitPolytope from_points(std::vector<Vector> points);
  static ExplicitPolytope from_inequalities(Matrix a, Vector b);

  bool has_points() const { return !points_.empty(); }
  const std::vector<Vector>& points() const { return points_; }
  const Matrix& constraint_matrix() const { return a_; }
  const Vector& rhs() const { return b_; }
  std::size_t dimension() const { return dimension_; }

  /// The matching V- or H-oracle.
  OraclePtr oracle() const;

 private:
  ExplicitPolytope() = default;
  std::vector<Vector> points_;
  Matrix a_;
  Vector b_;
  std::size_t dimension_ = 0;
};

/// Extreme points, lexicographically sorted. H input enumerates d-subsets of rows (d <= 6) and
/// throws PreconditionError when the system is empty or unbounded.
std::vector<Vector> bf_vertices(const ExplicitPolytope& p);

/// A functional c with c^T v = c^T w > c^T u for every other vertex u, or nullopt when
/// {v, w} is not an edge. `vertices` must be exactly the extreme points.
std::optional<Vector> edge_certificate(const std::vector<Vector>& vertices, std::size_t i, std::size_t j);

/// All pairs i < j with an edge certificate.
std::vector<std::pair<std::size_t, std::size_t>> bf_edges(const std::vector<Vector>& vertices);

SkeletonGraph bf_skeleton(const ExplicitPolytope& p);

struct CrossCheckReport {
  std::vector<Vector> missing_vertices;  // true vertices absent from the graph
  std::vector<Vector> extra_vertices;    // graph vertices that are not vertices of P
  std::vector<std::pair<Vector, Vector>> missing_edges;
  std::vector<std::pair<Vector, Vector>> extra_edges;
  /// One membership answer per extra vertex: a convex combination when it lies in P, a separator otherwise.
  std::vector<MembershipResult> extra_vertex_certificates;

  bool ok() const {
    return missing_vertices.empty() && extra_vertices.empty() && missing_edges.empty() && extra_edges.empty();
  }
  /// "OK", or one line per divergence.
  std::string summary() const;
};

CrossCheckReport cross_check(const ExplicitPolytope& p, const SkeletonGraph& g);

}  // namespace eskel
