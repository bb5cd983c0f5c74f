#pragma once

// Edge-skeleton computation from an optimization oracle and a superset of edge directions.

#include <cstddef>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "eskel/linalg.hpp"
#include "eskel/oracle.hpp"
#include "eskel/procedures.hpp"

namespace eskel {

enum class DirectionSource { UserProvided, PairwiseDifferences, Circuits };

std::string_view to_string(DirectionSource source);

/// Canonical primitive integer directions, sorted and duplicate free.
class DirectionSet {
 public:
  DirectionSet() = default;

  /// Keeps orientation: both e and -e must be present to walk an edge both ways.
  static DirectionSet directed(const std::vector<Vector>& raw, DirectionSource source);
  /// Every direction is expanded to +e and -e.
  static DirectionSet undirected(const std::vector<Vector>& raw, DirectionSource source);

  const std::vector<Vector>& directions() const { return directions_; }
  DirectionSource source() const { return source_; }
  std::size_t size() const { return directions_.size(); }
  bool empty() const { return directions_.empty(); }

  bool contains(const Vector& direction) const;
  /// canonical_direction(to - from) or its negation belongs to the set.
  bool covers_segment(const Vector& from, const Vector& to) const;

  DirectionSet merged(const DirectionSet& other) const;

 private:
  DirectionSet(std::vector<Vector> dirs, DirectionSource source);

  std::vector<Vector> directions_;
  DirectionSource source_ = DirectionSource::UserProvided;
};

/// All differences p_j - p_i of distinct points, undirected.
DirectionSet pairwise_differences(const std::vector<Vector>& points);

struct SkeletonGraph {
  std::vector<Vector> vertices;                          // lexicographically sorted
  std::vector<std::pair<std::size_t, std::size_t>> edges;  // i < j, sorted
  std::size_t dimension = 0;                             // affine rank of the vertices

  bool operator==(const SkeletonGraph&) const = default;
};

/// Builds a graph from vertex coordinates and coordinate pairs, sorting and indexing them.
SkeletonGraph make_skeleton_graph(std::vector<Vector> vertices,
                                  const std::vector<std::pair<Vector, Vector>>& edges);

struct NeighborCandidate {
  std::size_t direction_index;
  Vector point;
};

struct NeighborCandidateSet {
  Vector base;
  std::vector<NeighborCandidate> candidates;
};

struct SkeletonOptions {
  std::size_t threads = 1;  ///< cap on the per-vertex ray-shooting fan-out
  RayShootOptions ray;
  /// Skip a direction when a functional from an earlier blocked shot at the same vertex
  /// already proves it blocked. Output is unchanged.
  bool prune_blocked = true;
};

/// One ray shot from v per direction; points equal to v are dropped. Results are ordered by
/// direction index regardless of the thread count.
NeighborCandidateSet candidate_neighbors(const PolytopeOracle& oracle, const Vector& v, const DirectionSet& directions,
                                         const SkeletonOptions& options = {});

/// A functional a with a^T (q - v) >= 1 for every candidate q (LP, minimizing the sum of those
/// products). Throws InternalError when no such a exists, i.e. v is not a vertex.
Vector separating_functional(const Vector& v, const NeighborCandidateSet& candidates);

/// Keeps exactly the candidates lying on extremal rays of the cone they span from v: the
/// candidates are mapped to q' / (a^T q') on the hyperplane a^T x = 1 and tested for extremality.
std::vector<Vector> filter_neighbors(const Vector& v, const NeighborCandidateSet& candidates);

/// Neighbors of a vertex v: candidate_neighbors followed by filter_neighbors.
std::vector<Vector> vertex_neighbors(const PolytopeOracle& oracle, const Vector& v, const DirectionSet& directions,
                                     const SkeletonOptions& options = {});

/// Breadth-first traversal from initial_vertex(oracle); exact when the directions contain a
/// positive multiple of every edge direction of P.
SkeletonGraph edge_skeleton(const PolytopeOracle& oracle, const DirectionSet& directions,
                            const SkeletonOptions& options = {});

/// Structural post-check of a computed skeleton.
struct SkeletonCheck {
  bool connected = true;
  bool degrees_ok = true;       // every vertex has degree >= dimension
  bool spans_polytope = true;   // the vertices span the affine hull of P (only checked with an oracle)
  bool directions_ok = true;    // every edge direction is covered by the direction set
  std::vector<std::string> problems;

  bool directions_likely_incomplete() const { return !connected || !degrees_ok || !spans_polytope; }
};

/// Dimension of P, found by probing the orthogonal complement of the affine hull of `known`
/// (points of P) with the oracle.
std::size_t oracle_affine_dimension(const PolytopeOracle& oracle, const std::vector<Vector>& known);

/// With an oracle the degree bound uses the dimension of P rather than that of the found vertices.
SkeletonCheck check_skeleton(const SkeletonGraph& graph, const DirectionSet& directions,
                             const PolytopeOracle* oracle = nullptr);

}  // namespace eskel
