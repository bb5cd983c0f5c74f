#include "support.hpp"

#include <algorithm>
#include <functional>

#include "eskel/linalg.hpp"
#include "eskel/lp.hpp"

namespace eskel::testing {

long uniform_int(Rng& rng, long lo, long hi) { return std::uniform_int_distribution<long>(lo, hi)(rng); }

Vector random_integer_vector(Rng& rng, std::size_t d, long lo, long hi) {
  Vector v(d);
  for (auto& x : v) x = uniform_int(rng, lo, hi);
  return v;
}

std::vector<Vector> random_points(Rng& rng, std::size_t d, std::size_t n, long lo, long hi) {
  std::vector<Vector> pts;
  for (std::size_t i = 0; i < n; ++i) pts.push_back(random_integer_vector(rng, d, lo, hi));
  return pts;
}

std::vector<Vector> random_full_points(Rng& rng, std::size_t d, std::size_t n, long lo, long hi) {
  while (true) {
    auto pts = random_points(rng, d, n, lo, hi);
    if (affine_rank(pts) == d) return pts;
  }
}

std::vector<Vector> sum_points(const std::vector<Vector>& p, const std::vector<Vector>& q) {
  std::vector<Vector> out;
  for (const auto& a : p)
    for (const auto& b : q) out.push_back(add(a, b));
  return out;
}

std::vector<Vector> reference_vertices(std::vector<Vector> points) {
  std::sort(points.begin(), points.end());
  points.erase(std::unique(points.begin(), points.end()), points.end());
  if (points.size() == 1) return points;
  const std::size_t d = points.front().size();
  std::vector<Vector> out;
  for (std::size_t i = 0; i < points.size(); ++i) {
    // Is there c with c^T p_i >= c^T u + delta for all other u, delta > 0?
    LpProblem lp;
    lp.sense = LpSense::Maximize;
    lp.objective = unit_vector(d + 1, d);
    for (std::size_t j = 0; j < points.size(); ++j) {
      if (j == i) continue;
      Vector row = sub(points[j], points[i]);
      row.push_back(1);
      lp.constraint_matrix.push_back(row);
      lp.rhs.push_back(0);
    }
    for (std::size_t k = 0; k < d; ++k) {
      lp.constraint_matrix.push_back(unit_vector(d + 1, k));
      lp.rhs.push_back(1);
      lp.constraint_matrix.push_back(negated(unit_vector(d + 1, k)));
      lp.rhs.push_back(1);
    }
    lp.constraint_matrix.push_back(unit_vector(d + 1, d));
    lp.rhs.push_back(1);
    LpResult r = solve_lp(lp);
    if (r.status == LpStatus::Optimal && sgn(*r.value) > 0) out.push_back(points[i]);
  }
  return out;
}

std::vector<std::pair<std::size_t, std::size_t>> reference_edges(const std::vector<Vector>& vertices) {
  std::vector<std::pair<std::size_t, std::size_t>> out;
  const std::size_t n = vertices.size();
  if (n < 2) return out;
  const std::size_t d = vertices.front().size();
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = i + 1; j < n; ++j) {
      Vector mid = scaled(add(vertices[i], vertices[j]), Scalar(1, 2));
      StandardFormProblem lp;
      lp.equations.assign(d + 1, zeros(n));
      for (std::size_t u = 0; u < n; ++u) {
        for (std::size_t k = 0; k < d; ++k) lp.equations[k][u] = vertices[u][k];
        lp.equations[d][u] = 1;
      }
      lp.rhs = mid;
      lp.rhs.push_back(1);
      lp.objective = Vector(n, Scalar(1));
      lp.objective[i] = 0;
      lp.objective[j] = 0;
      LpResult r = solve_standard_form(lp);
      if (r.status == LpStatus::Optimal && sgn(*r.value) == 0) out.emplace_back(i, j);
    }
  return out;
}

Scalar simplex_volume(const std::vector<Vector>& points, const std::vector<std::size_t>& s) {
  Matrix m;
  for (std::size_t i = 1; i < s.size(); ++i) m.push_back(sub(points[s[i]], points[s[0]]));
  return abs(determinant(m));
}

bool properly_intersect(const std::vector<Vector>& points, const std::vector<std::size_t>& s,
                        const std::vector<std::size_t>& t) {
  const std::size_t k = points.front().size();
  // Variables (a, b): a^T x = b on shared labels, a^T x <= b - 1 on the rest of s, >= b + 1 on the rest of t.
  LpProblem lp;
  lp.sense = LpSense::Maximize;
  lp.objective = zeros(k + 1);
  auto lifted = [&](std::size_t label) {
    Vector row = points[label];
    row.push_back(-1);
    return row;
  };
  for (auto l : s) {
    bool shared = std::find(t.begin(), t.end(), l) != t.end();
    lp.constraint_matrix.push_back(lifted(l));
    lp.rhs.push_back(shared ? 0 : -1);
    if (shared) {
      lp.constraint_matrix.push_back(negated(lifted(l)));
      lp.rhs.push_back(0);
    }
  }
  for (auto l : t) {
    if (std::find(s.begin(), s.end(), l) != s.end()) continue;
    lp.constraint_matrix.push_back(negated(lifted(l)));
    lp.rhs.push_back(-1);
  }
  return solve_lp(lp).status == LpStatus::Optimal;
}

std::vector<std::vector<std::vector<std::size_t>>> all_triangulations(const std::vector<Vector>& points) {
  const std::size_t n = points.size(), k = points.front().size();
  std::vector<std::vector<std::size_t>> simplices;
  std::vector<std::size_t> pick(k + 1);
  std::function<void(std::size_t, std::size_t)> gen = [&](std::size_t pos, std::size_t from) {
    if (pos == k + 1) {
      if (sgn(simplex_volume(points, pick)) != 0) simplices.push_back(pick);
      return;
    }
    for (std::size_t i = from; i < n; ++i) {
      pick[pos] = i;
      gen(pos + 1, i + 1);
    }
  };
  gen(0, 0);

  const std::size_t m = simplices.size();
  std::vector<std::vector<bool>> ok(m, std::vector<bool>(m, false));
  for (std::size_t i = 0; i < m; ++i)
    for (std::size_t j = i + 1; j < m; ++j) ok[i][j] = ok[j][i] = properly_intersect(points, simplices[i], simplices[j]);

  std::vector<std::pair<Scalar, std::vector<std::size_t>>> families;
  std::vector<std::size_t> chosen;
  std::function<void(std::size_t, Scalar)> grow = [&](std::size_t from, Scalar vol) {
    bool extended = false;
    for (std::size_t i = from; i < m; ++i) {
      if (!std::all_of(chosen.begin(), chosen.end(), [&](std::size_t c) { return ok[c][i]; })) continue;
      extended = true;
      chosen.push_back(i);
      grow(i + 1, vol + simplex_volume(points, simplices[i]));
      chosen.pop_back();
    }
    if (!extended && !chosen.empty()) families.emplace_back(vol, chosen);
  };
  grow(0, 0);

  Scalar best = 0;
  for (const auto& f : families) best = std::max(best, f.first);
  std::vector<std::vector<std::vector<std::size_t>>> out;
  for (const auto& [vol, fam] : families) {
    if (vol != best) continue;
    std::vector<std::vector<std::size_t>> tri;
    for (auto i : fam) tri.push_back(simplices[i]);
    std::sort(tri.begin(), tri.end());
    out.push_back(std::move(tri));
  }
  std::sort(out.begin(), out.end());
  out.erase(std::unique(out.begin(), out.end()), out.end());
  return out;
}

}  // namespace eskel::testing
