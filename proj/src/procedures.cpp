#include "eskel/procedures.hpp"

#include <algorithm>
#include <optional>
#include <utility>

#include "eskel/error.hpp"
#include "eskel/linalg.hpp"
#include "eskel/lp.hpp"

namespace eskel {

MembershipResult membership(const PolytopeOracle& oracle, const Vector& y) {
  const std::size_t d = oracle.dimension();
  require_dimension(y, d, "membership query");
  MembershipResult out;
  std::vector<Vector> inner{oracle.optimize(zeros(d))};
  out.optimize_calls = 1;

  for (;;) {
    // y = sum lambda_j s_j, sum lambda_j = 1, lambda >= 0
    StandardFormProblem lp;
    lp.equations.assign(d + 1, zeros(inner.size()));
    for (std::size_t j = 0; j < inner.size(); ++j) {
      for (std::size_t i = 0; i < d; ++i) lp.equations[i][j] = inner[j][i];
      lp.equations[d][j] = 1;
    }
    lp.rhs = y;
    lp.rhs.push_back(1);
    lp.objective = zeros(inner.size());
    LpResult r = solve_standard_form(lp);

    if (r.status == LpStatus::Optimal) {
      out.verdict = MembershipResult::Verdict::Inside;
      for (std::size_t j = 0; j < inner.size(); ++j) {
        if (sgn((*r.point)[j]) == 0) continue;
        out.support.push_back(inner[j]);
        out.weights.push_back((*r.point)[j]);
      }
      return out;
    }
    if (r.status != LpStatus::Optimal && r.status != LpStatus::Infeasible)
      throw InternalError("membership LP unbounded");

    // Farkas (alpha, beta): alpha^T s_j + beta >= 0, alpha^T y + beta < 0, so c = -alpha separates.
    Vector alpha(r.certificate->begin(), r.certificate->begin() + static_cast<std::ptrdiff_t>(d));
    Vector c = canonical_direction(negated(alpha), Orientation::Directed);
    Vector u = oracle.optimize(c);
    ++out.optimize_calls;
    Scalar gamma = dot(c, u);
    if (gamma < dot(c, y)) {
      out.verdict = MembershipResult::Verdict::Outside;
      out.separator = std::move(c);
      out.threshold = std::move(gamma);
      return out;
    }
    if (std::find(inner.begin(), inner.end(), u) != inner.end())
      throw InternalError("column generation returned a known vertex");
    inner.push_back(std::move(u));
  }
}

Vector ray_shoot_generic(const PolytopeOracle& oracle, const Vector& v, const Vector& e,
                         std::size_t iteration_cap) {
  return ray_shot_generic(oracle, v, e, iteration_cap).point;
}

RayShot ray_shot_generic(const PolytopeOracle& oracle, const Vector& v, const Vector& e,
                         std::size_t iteration_cap) {
  const std::size_t d = oracle.dimension();
  require_dimension(v, d, "ray origin");
  require_dimension(e, d, "ray direction");
  if (is_zero(e)) throw MalformedInput("ray direction must be nonzero");
  if (!membership(oracle, v).inside()) throw PreconditionError("ray origin " + to_string(v) + " is not in P");

  // Cut (a, gamma) with gamma = max_P a^T x bounds t by (gamma - a^T v) / a^T e when a^T e > 0.
  auto bound = [&](const Vector& a, const Scalar& gamma) -> Scalar { return (gamma - dot(a, v)) / dot(a, e); };
  Vector a0 = canonical_direction(e);
  Scalar t_out = bound(a0, dot(a0, oracle.optimize(a0)));
  // The cut that set the bound to zero is maximized at v and has a^T e > 0.
  Vector last_cut = a0;

  for (std::size_t iter = 0; iter < iteration_cap; ++iter) {
    Vector p = add_scaled(v, t_out, e);
    MembershipResult m = membership(oracle, p);
    if (m.inside()) {
      RayShot shot{std::move(p), std::nullopt};
      if (sgn(t_out) == 0) shot.blocker = std::move(last_cut);
      return shot;
    }
    if (sgn(dot(m.separator, e)) <= 0) throw InternalError("separator does not cut the ray");
    Scalar t = bound(m.separator, m.threshold);
    if (t >= t_out) throw InternalError("cut did not shrink the ray bound");
    t_out = std::move(t);
    last_cut = std::move(m.separator);
  }
  throw UnresolvedRay("ray from " + to_string(v) + " along " + to_string(e) + " unresolved after " +
                      std::to_string(iteration_cap) + " cuts");
}

Vector ray_shoot(const PolytopeOracle& oracle, const Vector& v, const Vector& e, const RayShootOptions& options) {
  return ray_shot(oracle, v, e, options).point;
}

RayShot ray_shot(const PolytopeOracle& oracle, const Vector& v, const Vector& e, const RayShootOptions& options) {
  if (!options.force_generic)
    if (auto shot = oracle.native_ray_shot(v, e)) return std::move(*shot);
  return ray_shot_generic(oracle, v, e, options.iteration_cap);
}

Vector initial_vertex(const PolytopeOracle& oracle, const Vector& objective) {
  const std::size_t d = oracle.dimension();
  require_dimension(objective, d, "objective");
  const Scalar target = dot(objective, oracle.optimize(objective));

  // Stage i maximizes objective + sum_{j<=i} eps^(j+1) e_j. A returned point that still lies on
  // the face fixed by the earlier stages certifies the maximum of x_i over that face; otherwise
  // eps is halved, which eventually succeeds because the perturbed optimum converges to the
  // lexicographic refinement.
  Vector fixed;
  Scalar eps = 1;
  Vector point;
  for (std::size_t i = 0; i < d; ++i) {
    for (;;) {
      Vector c = objective;
      Scalar power = eps;
      for (std::size_t j = 0; j <= i; ++j) {
        c[j] += power;
        power *= eps;
      }
      point = oracle.optimize(c);
      bool on_face = dot(objective, point) == target;
      for (std::size_t j = 0; on_face && j < i; ++j) on_face = point[j] == fixed[j];
      if (on_face) break;
      eps /= 2;
    }
    fixed.push_back(point[i]);
  }
  return point;
}

Vector initial_vertex(const PolytopeOracle& oracle) {
  return initial_vertex(oracle, Vector(oracle.dimension(), Scalar(1)));
}

}  // namespace eskel
