#include "eskel/skeleton.hpp"

#include <algorithm>
#include <deque>
#include <exception>
#include <map>
#include <optional>
#include <set>
#include <thread>

#include "eskel/error.hpp"
#include "eskel/lp.hpp"

namespace eskel {

std::string_view to_string(DirectionSource source) {
  switch (source) {
    case DirectionSource::UserProvided: return "user";
    case DirectionSource::PairwiseDifferences: return "pairwise";
    case DirectionSource::Circuits: return "circuits";
  }
  return "unknown";
}

DirectionSet::DirectionSet(std::vector<Vector> dirs, DirectionSource source) : source_(source) {
  for (const auto& d : dirs)
    if (!dirs.empty()) require_dimension(d, dirs.front().size(), "direction");
  std::sort(dirs.begin(), dirs.end());
  dirs.erase(std::unique(dirs.begin(), dirs.end()), dirs.end());
  directions_ = std::move(dirs);
}

DirectionSet DirectionSet::directed(const std::vector<Vector>& raw, DirectionSource source) {
  std::vector<Vector> dirs;
  dirs.reserve(raw.size());
  for (const auto& v : raw) dirs.push_back(canonical_direction(v, Orientation::Directed));
  return DirectionSet(std::move(dirs), source);
}

DirectionSet DirectionSet::undirected(const std::vector<Vector>& raw, DirectionSource source) {
  std::vector<Vector> dirs;
  dirs.reserve(2 * raw.size());
  for (const auto& v : raw) {
    Vector u = canonical_direction(v, Orientation::Directed);
    dirs.push_back(negated(u));
    dirs.push_back(std::move(u));
  }
  return DirectionSet(std::move(dirs), source);
}

bool DirectionSet::contains(const Vector& direction) const {
  return std::binary_search(directions_.begin(), directions_.end(), direction);
}

bool DirectionSet::covers_segment(const Vector& from, const Vector& to) const {
  Vector u = canonical_direction(sub(to, from), Orientation::Directed);
  return contains(u) || contains(negated(u));
}

DirectionSet DirectionSet::merged(const DirectionSet& other) const {
  std::vector<Vector> all = directions_;
  all.insert(all.end(), other.directions_.begin(), other.directions_.end());
  DirectionSource src = source_ == other.source_ || other.empty() ? source_ : DirectionSource::UserProvided;
  if (empty()) src = other.source_;
  return DirectionSet(std::move(all), src);
}

DirectionSet pairwise_differences(const std::vector<Vector>& points) {
  std::vector<Vector> distinct = points;
  std::sort(distinct.begin(), distinct.end());
  distinct.erase(std::unique(distinct.begin(), distinct.end()), distinct.end());
  std::vector<Vector> diffs;
  for (std::size_t i = 0; i < distinct.size(); ++i)
    for (std::size_t j = i + 1; j < distinct.size(); ++j) diffs.push_back(sub(distinct[j], distinct[i]));
  return DirectionSet::undirected(diffs, DirectionSource::PairwiseDifferences);
}

SkeletonGraph make_skeleton_graph(std::vector<Vector> vertices, const std::vector<std::pair<Vector, Vector>>& edges) {
  std::sort(vertices.begin(), vertices.end());
  vertices.erase(std::unique(vertices.begin(), vertices.end()), vertices.end());
  auto index_of = [&](const Vector& v) {
    auto it = std::lower_bound(vertices.begin(), vertices.end(), v);
    if (it == vertices.end() || *it != v) throw InternalError("edge endpoint " + to_string(v) + " is not a vertex");
    return static_cast<std::size_t>(it - vertices.begin());
  };
  SkeletonGraph g;
  for (const auto& [a, b] : edges) {
    std::size_t i = index_of(a), j = index_of(b);
    if (i == j) throw InternalError("self loop in skeleton");
    g.edges.emplace_back(std::min(i, j), std::max(i, j));
  }
  std::sort(g.edges.begin(), g.edges.end());
  g.edges.erase(std::unique(g.edges.begin(), g.edges.end()), g.edges.end());
  g.dimension = vertices.empty() ? 0 : affine_rank(vertices);
  g.vertices = std::move(vertices);
  return g;
}

NeighborCandidateSet candidate_neighbors(const PolytopeOracle& oracle, const Vector& v, const DirectionSet& directions,
                                         const SkeletonOptions& options) {
  const auto& dirs = directions.directions();
  std::vector<std::optional<Vector>> hits(dirs.size());
  // Blockers are kept per worker so the outcome does not depend on scheduling.
  auto shoot = [&](std::size_t k, std::vector<Vector>& blockers) {
    for (const auto& c : blockers)
      if (sgn(dot(c, dirs[k])) > 0) return;
    RayShot shot = ray_shot(oracle, v, dirs[k], options.ray);
    if (shot.point != v) hits[k] = std::move(shot.point);
    else if (options.prune_blocked && shot.blocker) blockers.push_back(std::move(*shot.blocker));
  };

  const std::size_t workers = std::min(std::max<std::size_t>(options.threads, 1), dirs.size());
  if (workers <= 1) {
    std::vector<Vector> blockers;
    for (std::size_t k = 0; k < dirs.size(); ++k) shoot(k, blockers);
  } else {
    std::vector<std::exception_ptr> errors(workers);
    std::vector<std::thread> pool;
    pool.reserve(workers);
    for (std::size_t w = 0; w < workers; ++w) {
      pool.emplace_back([&, w] {
        try {
          std::vector<Vector> blockers;
          for (std::size_t k = w; k < dirs.size(); k += workers) shoot(k, blockers);
        } catch (...) {
          errors[w] = std::current_exception();
        }
      });
    }
    for (auto& t : pool) t.join();
    for (auto& e : errors)
      if (e) std::rethrow_exception(e);
  }

  NeighborCandidateSet out{v, {}};
  for (std::size_t k = 0; k < hits.size(); ++k)
    if (hits[k]) out.candidates.push_back({k, std::move(*hits[k])});
  return out;
}

Vector separating_functional(const Vector& v, const NeighborCandidateSet& candidates) {
  if (candidates.candidates.empty()) throw MalformedInput("separating_functional: no candidates");
  const std::size_t d = v.size();
  LpProblem lp;
  lp.sense = LpSense::Minimize;
  lp.objective = zeros(d);
  // Many rays hit the same vertex; one row per distinct point.
  std::set<Vector> distinct;
  for (const auto& c : candidates.candidates) distinct.insert(c.point);
  for (const auto& p : distinct) {
    Vector q = sub(p, v);
    if (is_zero(q)) throw MalformedInput("separating_functional: candidate equals the base vertex");
    lp.objective = add(lp.objective, q);
    lp.constraint_matrix.push_back(negated(q));
    lp.rhs.push_back(-1);
  }
  LpResult r = solve_lp(lp);
  if (r.status != LpStatus::Optimal)
    throw InternalError("no hyperplane separates " + to_string(v) + " from its candidates; not a vertex");
  return *r.point;
}

namespace {

bool in_convex_hull(const Vector& p, const std::vector<const Vector*>& others) {
  if (others.empty()) return false;
  const std::size_t d = p.size();
  StandardFormProblem lp;
  lp.equations.assign(d + 1, zeros(others.size()));
  for (std::size_t j = 0; j < others.size(); ++j) {
    for (std::size_t i = 0; i < d; ++i) lp.equations[i][j] = (*others[j])[i];
    lp.equations[d][j] = 1;
  }
  lp.rhs = p;
  lp.rhs.push_back(1);
  lp.objective = zeros(others.size());
  return solve_standard_form(lp).status == LpStatus::Optimal;
}

}  // namespace

std::vector<Vector> filter_neighbors(const Vector& v, const NeighborCandidateSet& candidates) {
  const auto& cand = candidates.candidates;
  if (cand.empty()) return {};
  if (cand.size() == 1) return {cand.front().point};

  const Vector a = separating_functional(v, candidates);

  // Chart image -> (distance a^T q', candidate index); a shared image keeps the farthest point.
  std::map<Vector, std::pair<Scalar, std::size_t>> images;
  for (std::size_t k = 0; k < cand.size(); ++k) {
    Vector q = sub(cand[k].point, v);
    Scalar s = dot(a, q);
    Vector img = scaled(q, 1 / s);
    auto [it, fresh] = images.try_emplace(std::move(img), s, k);
    if (!fresh && s > it->second.first) it->second = {s, k};
  }

  std::vector<const Vector*> pts;
  for (const auto& [img, info] : images) pts.push_back(&img);
  std::vector<bool> keep(cand.size(), false);
  std::size_t idx = 0;
  for (const auto& [img, info] : images) {
    std::vector<const Vector*> others;
    for (std::size_t j = 0; j < pts.size(); ++j)
      if (j != idx) others.push_back(pts[j]);
    if (!in_convex_hull(img, others)) keep[info.second] = true;
    ++idx;
  }
  std::vector<Vector> out;
  for (std::size_t k = 0; k < cand.size(); ++k)
    if (keep[k]) out.push_back(cand[k].point);
  return out;
}

std::vector<Vector> vertex_neighbors(const PolytopeOracle& oracle, const Vector& v, const DirectionSet& directions,
                                     const SkeletonOptions& options) {
  return filter_neighbors(v, candidate_neighbors(oracle, v, directions, options));
}

SkeletonGraph edge_skeleton(const PolytopeOracle& oracle, const DirectionSet& directions,
                            const SkeletonOptions& options) {
  if (!directions.empty()) require_dimension(directions.directions().front(), oracle.dimension(), "direction");
  Vector start = initial_vertex(oracle);
  std::set<Vector> discovered{start};
  std::deque<Vector> pending{start};
  std::set<std::pair<Vector, Vector>> edges;

  while (!pending.empty()) {
    Vector v = std::move(pending.front());
    pending.pop_front();
    std::vector<Vector> nbrs = vertex_neighbors(oracle, v, directions, options);
    std::sort(nbrs.begin(), nbrs.end());
    for (auto& w : nbrs) {
      edges.insert(v < w ? std::make_pair(v, w) : std::make_pair(w, v));
      if (discovered.insert(w).second) pending.push_back(std::move(w));
    }
  }
  return make_skeleton_graph({discovered.begin(), discovered.end()}, {edges.begin(), edges.end()});
}

std::size_t oracle_affine_dimension(const PolytopeOracle& oracle, const std::vector<Vector>& known) {
  std::vector<Vector> points = known;
  if (points.empty()) points.push_back(oracle.optimize(zeros(oracle.dimension())));
  for (;;) {
    Matrix span;
    for (std::size_t i = 1; i < points.size(); ++i) span.push_back(sub(points[i], points[0]));
    std::vector<Vector> normals = span.empty() ? std::vector<Vector>{} : null_space(span, oracle.dimension());
    if (span.empty())
      for (std::size_t i = 0; i < oracle.dimension(); ++i) normals.push_back(unit_vector(oracle.dimension(), i));
    bool grew = false;
    for (const auto& u : normals) {
      for (const Vector& w : {u, scaled(u, Scalar(-1))}) {
        Vector x = oracle.optimize(w);
        if (dot(w, x) != dot(w, points[0])) {
          points.push_back(std::move(x));
          grew = true;
          break;
        }
      }
      if (grew) break;
    }
    if (!grew) return affine_rank(points);
  }
}

SkeletonCheck check_skeleton(const SkeletonGraph& graph, const DirectionSet& directions,
                             const PolytopeOracle* oracle) {
  SkeletonCheck check;
  const std::size_t n = graph.vertices.size();
  std::size_t dimension = graph.dimension;
  if (oracle) {
    dimension = oracle_affine_dimension(*oracle, graph.vertices);
    if (dimension > graph.dimension) {
      check.spans_polytope = false;
      check.problems.push_back("vertices span dimension " + std::to_string(graph.dimension) + " but P has dimension " +
                               std::to_string(dimension));
    }
  }
  std::vector<std::vector<std::size_t>> adj(n);
  for (const auto& [i, j] : graph.edges) {
    adj[i].push_back(j);
    adj[j].push_back(i);
    if (!directions.covers_segment(graph.vertices[i], graph.vertices[j])) {
      check.directions_ok = false;
      check.problems.push_back("edge " + to_string(graph.vertices[i]) + " -- " + to_string(graph.vertices[j]) +
                               " has a direction outside D");
    }
  }
  if (dimension >= 1) {
    for (std::size_t i = 0; i < n; ++i)
      if (adj[i].size() < dimension) {
        check.degrees_ok = false;
        check.problems.push_back("vertex " + to_string(graph.vertices[i]) + " has degree " +
                                 std::to_string(adj[i].size()) + " < dimension " + std::to_string(dimension));
      }
  }
  if (n > 0) {
    std::vector<bool> seen(n, false);
    std::deque<std::size_t> q{0};
    seen[0] = true;
    std::size_t count = 1;
    while (!q.empty()) {
      std::size_t i = q.front();
      q.pop_front();
      for (std::size_t j : adj[i])
        if (!seen[j]) {
          seen[j] = true;
          ++count;
          q.push_back(j);
        }
    }
    if (count != n) {
      check.connected = false;
      check.problems.push_back("graph is disconnected");
    }
  }
  return check;
}

}  // namespace eskel
