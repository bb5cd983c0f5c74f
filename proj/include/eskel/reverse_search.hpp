#pragma once

// Depth-first reverse search over the vertices of an oracle polytope. Only the current
// path is stored; neighbor lists are recomputed whenever they are needed.

#include <cstddef>
#include <functional>
#include <optional>
#include <ostream>

#include "eskel/skeleton.hpp"

namespace eskel {

/// Total order on points: c^T x first, then lexicographic coordinates.
class SearchOrder {
 public:
  explicit SearchOrder(Vector objective) : objective_(std::move(objective)) {}

  const Vector& objective() const { return objective_; }
  /// -1, 0, 1 as a is below, equal to, above b.
  int compare(const Vector& a, const Vector& b) const;
  bool less(const Vector& a, const Vector& b) const { return compare(a, b) < 0; }

 private:
  Vector objective_;
};

/// Where the traversal streams its output.
struct ReverseSearchSink {
  std::function<void(const Vector&)> vertex;
  std::function<void(const Vector&, const Vector&)> edge;
};

/// "V 1,0" and "E 1,0 1,1" lines.
ReverseSearchSink line_sink(std::ostream& out);

/// Accumulates a stream into a SkeletonGraph and counts repeated emissions.
class GraphCollector {
 public:
  ReverseSearchSink sink();
  SkeletonGraph graph() const;
  std::size_t vertex_emissions() const { return vertex_emissions_; }
  std::size_t edge_emissions() const { return edge_emissions_; }
  std::size_t duplicate_vertices() const;
  std::size_t duplicate_edges() const;

 private:
  std::vector<Vector> vertices_;
  std::vector<std::pair<Vector, Vector>> edges_;
  std::size_t vertex_emissions_ = 0;
  std::size_t edge_emissions_ = 0;
};

struct ReverseSearchOptions {
  SkeletonOptions skeleton;
  /// Neighbor lists kept for reuse (FIFO eviction). 0 disables the cache.
  std::size_t memo_capacity = 0;
};

struct ReverseSearchSummary {
  std::size_t vertices = 0;
  std::size_t edges = 0;
  std::size_t max_depth = 0;
  /// Most vertices held at once by the traversal itself (path plus working slots); a single
  /// neighbor query additionally holds at most |D| candidates while it runs.
  std::size_t peak_retained = 0;
  /// max over time of (retained - current depth).
  std::size_t peak_excess = 0;
  std::size_t peak_memo_vertices = 0;
  std::size_t neighbor_computations = 0;
  std::size_t optimize_calls = 0;
};

/// The j-th neighbor of v (1-based) in descending SearchOrder, or nullopt past the end.
std::optional<Vector> adjacency(const PolytopeOracle& oracle, const DirectionSet& directions, const SearchOrder& order,
                                const Vector& v, std::size_t j, const SkeletonOptions& options = {});

/// The order-best neighbor of v. Throws PreconditionError when v has no better neighbor (v is the root).
Vector local_search(const PolytopeOracle& oracle, const DirectionSet& directions, const SearchOrder& order,
                    const Vector& v, const SkeletonOptions& options = {});

/// Streams every vertex and every edge exactly once. The root is initial_vertex(oracle, c).
ReverseSearchSummary rs_edge_skeleton(const PolytopeOracle& oracle, const DirectionSet& directions,
                                      const SearchOrder& order, const ReverseSearchSink& sink,
                                      const ReverseSearchOptions& options = {});

}  // namespace eskel
