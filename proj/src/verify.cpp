#include "eskel/verify.hpp"

#include <algorithm>
#include <functional>
#include <set>
#include <sstream>

#include "eskel/error.hpp"
#include "eskel/linalg.hpp"
#include "eskel/lp.hpp"

namespace eskel {

ExplicitPolytope ExplicitPolytope::from_points(std::vector<Vector> points) {
  if (points.empty()) throw MalformedInput("explicit polytope needs at least one point");
  ExplicitPolytope p;
  p.dimension_ = points.front().size();
  for (const auto& x : points) require_dimension(x, p.dimension_, "point");
  p.points_ = std::move(points);
  return p;
}

ExplicitPolytope ExplicitPolytope::from_inequalities(Matrix a, Vector b) {
  if (a.empty()) throw MalformedInput("explicit polytope needs at least one inequality");
  if (a.size() != b.size()) throw MalformedInput("|b| != number of rows");
  ExplicitPolytope p;
  p.dimension_ = column_count(a);
  p.a_ = std::move(a);
  p.b_ = std::move(b);
  return p;
}

OraclePtr ExplicitPolytope::oracle() const {
  if (has_points()) return std::make_shared<VPolytopeOracle>(points_);
  return std::make_shared<HPolytopeOracle>(a_, b_);
}

namespace {

bool in_hull(const Vector& y, const std::vector<Vector>& pts) {
  if (pts.empty()) return false;
  const std::size_t d = y.size();
  StandardFormProblem lp;
  lp.equations.assign(d + 1, zeros(pts.size()));
  for (std::size_t j = 0; j < pts.size(); ++j) {
    for (std::size_t i = 0; i < d; ++i) lp.equations[i][j] = pts[j][i];
    lp.equations[d][j] = 1;
  }
  lp.rhs = y;
  lp.rhs.push_back(1);
  lp.objective = zeros(pts.size());
  return solve_standard_form(lp).status == LpStatus::Optimal;
}

std::vector<Vector> h_vertices(const Matrix& a, const Vector& b) {
  const std::size_t d = column_count(a);
  if (d > 6) throw PreconditionError("brute-force H enumeration supports d <= 6");
  for (std::size_t j = 0; j < d; ++j)
    for (LpSense sense : {LpSense::Maximize, LpSense::Minimize}) {
      LpResult r = solve_lp({a, b, unit_vector(d, j), sense});
      if (r.status == LpStatus::Infeasible) throw PreconditionError("inequality system is infeasible");
      if (r.status == LpStatus::Unbounded) throw PreconditionError("inequality system is unbounded");
    }

  std::set<Vector> found;
  std::vector<std::size_t> rows(d);
  std::function<void(std::size_t, std::size_t)> choose = [&](std::size_t pos, std::size_t from) {
    if (pos == d) {
      Matrix m;
      Vector rhs;
      for (auto r : rows) {
        m.push_back(a[r]);
        rhs.push_back(b[r]);
      }
      auto x = solve_square(m, rhs);
      if (!x) return;
      for (std::size_t i = 0; i < a.size(); ++i)
        if (dot(a[i], *x) > b[i]) return;
      found.insert(std::move(*x));
      return;
    }
    for (std::size_t r = from; r < a.size(); ++r) {
      rows[pos] = r;
      choose(pos + 1, r + 1);
    }
  };
  choose(0, 0);
  return {found.begin(), found.end()};
}

}  // namespace

std::vector<Vector> bf_vertices(const ExplicitPolytope& p) {
  if (!p.has_points()) return h_vertices(p.constraint_matrix(), p.rhs());
  std::vector<Vector> pts = p.points();
  std::sort(pts.begin(), pts.end());
  pts.erase(std::unique(pts.begin(), pts.end()), pts.end());
  std::vector<Vector> out;
  for (std::size_t i = 0; i < pts.size(); ++i) {
    std::vector<Vector> others;
    for (std::size_t j = 0; j < pts.size(); ++j)
      if (j != i) others.push_back(pts[j]);
    if (!in_hull(pts[i], others)) out.push_back(pts[i]);
  }
  return out;
}

std::optional<Vector> edge_certificate(const std::vector<Vector>& vertices, std::size_t i, std::size_t j) {
  if (i == j || i >= vertices.size() || j >= vertices.size()) throw MalformedInput("edge_certificate: bad index pair");
  const std::size_t d = vertices[i].size();
  // Variables (c, delta): maximize delta.
  LpProblem lp;
  lp.sense = LpSense::Maximize;
  lp.objective = unit_vector(d + 1, d);
  auto row = [&](Vector r, Scalar rhs) {
    lp.constraint_matrix.push_back(std::move(r));
    lp.rhs.push_back(std::move(rhs));
  };
  Vector diff = sub(vertices[i], vertices[j]);
  diff.push_back(0);
  row(diff, 0);
  row(negated(diff), 0);
  for (std::size_t u = 0; u < vertices.size(); ++u) {
    if (u == i || u == j) continue;
    Vector r = sub(vertices[u], vertices[i]);
    r.push_back(1);
    row(std::move(r), 0);
  }
  for (std::size_t k = 0; k < d; ++k) {
    row(unit_vector(d + 1, k), 1);
    row(negated(unit_vector(d + 1, k)), 1);
  }
  row(unit_vector(d + 1, d), 1);
  LpResult r = solve_lp(lp);
  if (r.status != LpStatus::Optimal || sgn(*r.value) <= 0) return std::nullopt;
  Vector c = *r.point;
  c.pop_back();
  return c;
}

std::vector<std::pair<std::size_t, std::size_t>> bf_edges(const std::vector<Vector>& vertices) {
  std::vector<std::pair<std::size_t, std::size_t>> out;
  for (std::size_t i = 0; i < vertices.size(); ++i)
    for (std::size_t j = i + 1; j < vertices.size(); ++j)
      if (edge_certificate(vertices, i, j)) out.emplace_back(i, j);
  return out;
}

SkeletonGraph bf_skeleton(const ExplicitPolytope& p) {
  std::vector<Vector> verts = bf_vertices(p);
  std::vector<std::pair<Vector, Vector>> edges;
  for (const auto& [i, j] : bf_edges(verts)) edges.emplace_back(verts[i], verts[j]);
  return make_skeleton_graph(std::move(verts), edges);
}

std::string CrossCheckReport::summary() const {
  if (ok()) return "OK";
  std::ostringstream out;
  for (const auto& v : missing_vertices) out << "missing vertex " << to_string(v) << '\n';
  for (std::size_t i = 0; i < extra_vertices.size(); ++i) {
    out << "extra vertex " << to_string(extra_vertices[i]);
    if (i < extra_vertex_certificates.size()) {
      const auto& m = extra_vertex_certificates[i];
      if (m.inside()) {
        out << " = ";
        for (std::size_t k = 0; k < m.support.size(); ++k)
          out << (k ? " + " : "") << eskel::to_string(m.weights[k]) << " * " << to_string(m.support[k]);
      } else {
        out << " outside: " << to_string(m.separator) << " . y > " << eskel::to_string(m.threshold);
      }
    }
    out << '\n';
  }
  for (const auto& [a, b] : missing_edges) out << "missing edge " << to_string(a) << " -- " << to_string(b) << '\n';
  for (const auto& [a, b] : extra_edges) out << "extra edge " << to_string(a) << " -- " << to_string(b) << '\n';
  std::string s = out.str();
  if (!s.empty()) s.pop_back();
  return s;
}

CrossCheckReport cross_check(const ExplicitPolytope& p, const SkeletonGraph& g) {
  SkeletonGraph truth = bf_skeleton(p);
  CrossCheckReport report;
  std::set_difference(truth.vertices.begin(), truth.vertices.end(), g.vertices.begin(), g.vertices.end(),
                      std::back_inserter(report.missing_vertices));
  std::set_difference(g.vertices.begin(), g.vertices.end(), truth.vertices.begin(), truth.vertices.end(),
                      std::back_inserter(report.extra_vertices));
  if (!report.extra_vertices.empty()) {
    OraclePtr oracle = p.oracle();
    for (const auto& v : report.extra_vertices) report.extra_vertex_certificates.push_back(membership(*oracle, v));
  }

  auto coordinate_edges = [](const SkeletonGraph& h) {
    std::set<std::pair<Vector, Vector>> out;
    for (const auto& [i, j] : h.edges) out.emplace(h.vertices[i], h.vertices[j]);
    return out;
  };
  auto want = coordinate_edges(truth), have = coordinate_edges(g);
  std::set_difference(want.begin(), want.end(), have.begin(), have.end(), std::back_inserter(report.missing_edges));
  std::set_difference(have.begin(), have.end(), want.begin(), want.end(), std::back_inserter(report.extra_edges));
  return report;
}

}  // namespace eskel
