#include "eskel/reverse_search.hpp"

#include <algorithm>
#include <deque>
#include <map>

#include "eskel/error.hpp"

namespace eskel {

int SearchOrder::compare(const Vector& a, const Vector& b) const {
  int s = cmp(dot(objective_, a), dot(objective_, b));
  if (s != 0) return s < 0 ? -1 : 1;
  if (a < b) return -1;
  if (b < a) return 1;
  return 0;
}

ReverseSearchSink line_sink(std::ostream& out) {
  return {[&out](const Vector& v) { out << "V " << to_compact_string(v) << '\n'; },
          [&out](const Vector& a, const Vector& b) {
            out << "E " << to_compact_string(a) << ' ' << to_compact_string(b) << '\n';
          }};
}

ReverseSearchSink GraphCollector::sink() {
  return {[this](const Vector& v) {
            ++vertex_emissions_;
            vertices_.push_back(v);
          },
          [this](const Vector& a, const Vector& b) {
            ++edge_emissions_;
            edges_.emplace_back(a, b);
          }};
}

SkeletonGraph GraphCollector::graph() const { return make_skeleton_graph(vertices_, edges_); }

std::size_t GraphCollector::duplicate_vertices() const {
  std::vector<Vector> v = vertices_;
  std::sort(v.begin(), v.end());
  return v.size() - static_cast<std::size_t>(std::unique(v.begin(), v.end()) - v.begin());
}

std::size_t GraphCollector::duplicate_edges() const {
  std::vector<std::pair<Vector, Vector>> e;
  for (const auto& [a, b] : edges_) e.push_back(a < b ? std::make_pair(a, b) : std::make_pair(b, a));
  std::sort(e.begin(), e.end());
  return e.size() - static_cast<std::size_t>(std::unique(e.begin(), e.end()) - e.begin());
}

namespace {

class Neighborhoods {
 public:
  Neighborhoods(const PolytopeOracle& oracle, const DirectionSet& directions, const SearchOrder& order,
                const SkeletonOptions& options, std::size_t memo_capacity)
      : oracle_(oracle), directions_(directions), order_(order), options_(options), capacity_(memo_capacity) {}

  /// Neighbors of v, best first.
  std::vector<Vector> sorted(const Vector& v) {
    if (capacity_ > 0) {
      auto it = memo_.find(v);
      if (it != memo_.end()) return it->second;
    }
    ++computations_;
    std::vector<Vector> nbrs = vertex_neighbors(oracle_, v, directions_, options_);
    std::sort(nbrs.begin(), nbrs.end(), [&](const Vector& a, const Vector& b) { return order_.less(b, a); });
    for (const auto& w : nbrs)
      if (order_.compare(w, v) == 0) throw InternalError("search order is not total at " + to_string(v));
    if (capacity_ > 0) remember(v, nbrs);
    return nbrs;
  }

  std::optional<Vector> nth(const Vector& v, std::size_t j) {
    if (j == 0) throw PreconditionError("adjacency index starts at 1");
    std::vector<Vector> nbrs = sorted(v);
    if (j > nbrs.size()) return std::nullopt;
    return std::move(nbrs[j - 1]);
  }

  Vector parent(const Vector& v) {
    std::vector<Vector> nbrs = sorted(v);
    if (nbrs.empty() || order_.less(nbrs.front(), v))
      throw PreconditionError("local_search called on the order-maximal vertex " + to_string(v));
    return std::move(nbrs.front());
  }

  std::size_t computations() const { return computations_; }
  std::size_t memo_vertices() const { return memo_vertices_; }

 private:
  void remember(const Vector& v, const std::vector<Vector>& nbrs) {
    if (memo_.size() >= capacity_) {
      auto it = memo_.find(fifo_.front());
      memo_vertices_ -= 1 + it->second.size();
      memo_.erase(it);
      fifo_.pop_front();
    }
    memo_.emplace(v, nbrs);
    fifo_.push_back(v);
    memo_vertices_ += 1 + nbrs.size();
  }

  const PolytopeOracle& oracle_;
  const DirectionSet& directions_;
  const SearchOrder& order_;
  const SkeletonOptions& options_;
  std::size_t capacity_;
  std::size_t computations_ = 0;
  std::map<Vector, std::vector<Vector>> memo_;
  std::deque<Vector> fifo_;
  std::size_t memo_vertices_ = 0;
};

}  // namespace

std::optional<Vector> adjacency(const PolytopeOracle& oracle, const DirectionSet& directions, const SearchOrder& order,
                                const Vector& v, std::size_t j, const SkeletonOptions& options) {
  return Neighborhoods(oracle, directions, order, options, 0).nth(v, j);
}

Vector local_search(const PolytopeOracle& oracle, const DirectionSet& directions, const SearchOrder& order,
                    const Vector& v, const SkeletonOptions& options) {
  return Neighborhoods(oracle, directions, order, options, 0).parent(v);
}

ReverseSearchSummary rs_edge_skeleton(const PolytopeOracle& oracle, const DirectionSet& directions,
                                      const SearchOrder& order, const ReverseSearchSink& sink,
                                      const ReverseSearchOptions& options) {
  require_dimension(order.objective(), oracle.dimension(), "search objective");
  const std::size_t calls_before = oracle.optimize_calls();
  Neighborhoods hood(oracle, directions, order, options.skeleton, options.memo_capacity);
  ReverseSearchSummary summary;

  struct Frame {
    Vector v;
    std::size_t next = 1;
  };
  std::vector<Frame> path;
  // Vertices held outside the path: the neighbor under inspection and its parent.
  std::size_t working = 0;
  auto account = [&] {
    std::size_t depth = path.empty() ? 0 : path.size() - 1;
    std::size_t retained = path.size() + working;
    summary.max_depth = std::max(summary.max_depth, depth);
    summary.peak_retained = std::max(summary.peak_retained, retained);
    summary.peak_excess = std::max(summary.peak_excess, retained - depth);
    summary.peak_memo_vertices = std::max(summary.peak_memo_vertices, hood.memo_vertices());
  };

  path.push_back({initial_vertex(oracle, order.objective())});
  if (sink.vertex) sink.vertex(path.back().v);
  ++summary.vertices;
  account();

  while (!path.empty()) {
    Frame& top = path.back();
    std::optional<Vector> w = hood.nth(top.v, top.next);
    if (!w) {
      path.pop_back();
      account();
      continue;
    }
    ++top.next;
    working = 1;
    account();
    if (order.less(*w, top.v)) {
      if (sink.edge) sink.edge(top.v, *w);
      ++summary.edges;
      Vector p = hood.parent(*w);
      working = 2;
      account();
      if (p == top.v) {
        if (sink.vertex) sink.vertex(*w);
        ++summary.vertices;
        path.push_back({std::move(*w)});
      }
    }
    working = 0;
    account();
  }

  summary.neighbor_computations = hood.computations();
  summary.optimize_calls = oracle.optimize_calls() - calls_before;
  return summary;
}

}  // namespace eskel
