#include "eskel/oracle.hpp"

#include <algorithm>
#include <utility>

#include "eskel/error.hpp"
#include "eskel/lp.hpp"

namespace eskel {

namespace {

// For the ray LPs below the dual u has u_x^T e <= -1 on the t column, and when t* = 0
// strong duality makes v a maximizer of -u_x over P.
RayShot shot_from_dual(const Vector& v, const Vector& e, const Scalar& t, const Vector& dual) {
  RayShot shot{add_scaled(v, t, e), std::nullopt};
  if (sgn(t) == 0) shot.blocker = negated(Vector(dual.begin(), dual.begin() + static_cast<std::ptrdiff_t>(v.size())));
  return shot;
}

// max t  s.t.  v + t e = sum_g sum_j lambda_gj p_gj,  sum_j lambda_gj = 1 for every group g.
RayShot joint_ray_lp(const std::vector<const std::vector<Vector>*>& groups, const Vector& v,
                     const Vector& e) {
  const std::size_t d = v.size();
  std::size_t n = 1;
  for (const auto* g : groups) n += g->size();
  StandardFormProblem lp;
  lp.equations.assign(d + groups.size(), zeros(n));
  lp.rhs = zeros(d + groups.size());
  lp.objective = zeros(n);
  std::size_t col = 0;
  for (std::size_t g = 0; g < groups.size(); ++g) {
    for (const auto& p : *groups[g]) {
      for (std::size_t i = 0; i < d; ++i) lp.equations[i][col] = p[i];
      lp.equations[d + g][col] = 1;
      ++col;
    }
    lp.rhs[d + g] = 1;
  }
  for (std::size_t i = 0; i < d; ++i) {
    lp.equations[i][col] = -e[i];
    lp.rhs[i] = v[i];
  }
  lp.objective[col] = 1;
  LpResult r = solve_standard_form(lp);
  if (r.status == LpStatus::Infeasible) throw PreconditionError("ray origin " + to_string(v) + " is not in P");
  if (r.status != LpStatus::Optimal) throw InternalError("ray LP unbounded over a polytope");
  return shot_from_dual(v, e, (*r.point)[col], *r.certificate);
}

void check_ray_arguments(const PolytopeOracle& p, const Vector& v, const Vector& e) {
  require_dimension(v, p.dimension(), "ray origin");
  require_dimension(e, p.dimension(), "ray direction");
  if (is_zero(e)) throw MalformedInput("ray direction must be nonzero");
}

std::size_t bits(std::size_t x) {
  std::size_t b = 0;
  while (x) {
    ++b;
    x >>= 1;
  }
  return b;
}

}  // namespace

std::string_view to_string(OracleKind kind) {
  switch (kind) {
    case OracleKind::VPolytope: return "vpolytope";
    case OracleKind::HPolytope: return "hpolytope";
    case OracleKind::SignedMinkowski: return "minkowski";
    case OracleKind::Secondary: return "secondary";
    case OracleKind::Resultant: return "resultant";
  }
  return "unknown";
}

WellDescribedMeta WellDescribedMeta::from_vertex_complexity(std::size_t dimension, std::size_t nu) {
  return {dimension, 3 * dimension * dimension * std::max<std::size_t>(nu, 1)};
}

Vector PolytopeOracle::optimize(const Vector& c) const {
  require_dimension(c, dimension_, "objective");
  calls_.fetch_add(1, std::memory_order_relaxed);
  return do_optimize(c);
}

std::optional<Vector> PolytopeOracle::native_ray_shoot(const Vector& v, const Vector& e) const {
  if (auto shot = native_ray_shot(v, e)) return std::move(shot->point);
  return std::nullopt;
}

std::optional<RayShot> PolytopeOracle::native_ray_shot(const Vector&, const Vector&) const { return std::nullopt; }

// ---------------------------------------------------------------- V-polytope

VPolytopeOracle::VPolytopeOracle(std::vector<Vector> points)
    : PolytopeOracle(points.empty() ? 0 : points.front().size()), points_(std::move(points)) {
  if (points_.empty()) throw MalformedInput("V-polytope needs at least one point");
  if (dimension() == 0) throw MalformedInput("V-polytope points must have dimension >= 1");
  for (const auto& p : points_) require_dimension(p, dimension(), "V-polytope point");
}

WellDescribedMeta VPolytopeOracle::meta() const {
  std::size_t nu = 0;
  for (const auto& p : points_) nu = std::max(nu, encoding_length(p));
  return WellDescribedMeta::from_vertex_complexity(dimension(), nu);
}

Vector VPolytopeOracle::do_optimize(const Vector& c) const {
  const Vector* best = &points_.front();
  Scalar best_value = dot(c, *best);
  for (const auto& p : points_) {
    Scalar value = dot(c, p);
    if (value > best_value || (value == best_value && *best < p)) {
      best = &p;
      best_value = std::move(value);
    }
  }
  return *best;
}

std::optional<RayShot> VPolytopeOracle::native_ray_shot(const Vector& v, const Vector& e) const {
  check_ray_arguments(*this, v, e);
  auto origin = std::find(points_.begin(), points_.end(), v);
  if (origin == points_.end()) return joint_ray_lp({&points_}, v, e);

  // Origin at an input point: max t  s.t.  sum_j lambda_j (p_j - v) = t e,  sum_j lambda_j + s = 1.
  // All but the last row have zero rhs, so the simplex starts without a phase 1.
  const std::size_t d = dimension();
  std::vector<const Vector*> others;
  for (const auto& p : points_)
    if (p != v) others.push_back(&p);
  const std::size_t n = others.size() + 2;
  StandardFormProblem lp;
  lp.equations.assign(d + 1, zeros(n));
  lp.rhs = zeros(d + 1);
  lp.rhs[d] = 1;
  lp.objective = zeros(n);
  for (std::size_t j = 0; j < others.size(); ++j) {
    for (std::size_t i = 0; i < d; ++i) lp.equations[i][j] = (*others[j])[i] - v[i];
    lp.equations[d][j] = 1;
  }
  const std::size_t t = others.size();
  for (std::size_t i = 0; i < d; ++i) lp.equations[i][t] = -e[i];
  lp.equations[d][t + 1] = 1;
  lp.objective[t] = 1;
  LpResult r = solve_standard_form(lp);
  if (r.status != LpStatus::Optimal) throw InternalError("ray LP from an input point not optimal");
  return shot_from_dual(v, e, (*r.point)[t], *r.certificate);
}

// ---------------------------------------------------------------- H-polytope

HPolytopeOracle::HPolytopeOracle(Matrix a, Vector b)
    : PolytopeOracle(a.empty() ? 0 : a.front().size()), a_(std::move(a)), b_(std::move(b)) {
  if (a_.empty()) throw MalformedInput("H-polytope needs at least one inequality");
  if (dimension() == 0) throw MalformedInput("H-polytope rows must have dimension >= 1");
  if (b_.size() != a_.size()) throw MalformedInput("H-polytope: |b| != number of rows");
  for (const auto& row : a_) require_dimension(row, dimension(), "H-polytope row");
  for (std::size_t j = 0; j < dimension(); ++j) {
    for (LpSense sense : {LpSense::Maximize, LpSense::Minimize}) {
      LpResult r = solve_lp({a_, b_, unit_vector(dimension(), j), sense});
      if (r.status == LpStatus::Infeasible) throw MalformedInput("H-polytope is empty");
      if (r.status == LpStatus::Unbounded) throw MalformedInput("H-polytope is unbounded");
    }
  }
}

WellDescribedMeta HPolytopeOracle::meta() const {
  std::size_t phi = 0;
  for (std::size_t i = 0; i < a_.size(); ++i) phi = std::max(phi, encoding_length(a_[i]) + encoding_length(b_[i]));
  return {dimension(), phi};
}

Vector HPolytopeOracle::do_optimize(const Vector& c) const {
  LpProblem lp{a_, b_, c, LpSense::Maximize};
  auto fix = [&lp](const Vector& row, const Scalar& value) {
    lp.constraint_matrix.push_back(row);
    lp.rhs.push_back(value);
    lp.constraint_matrix.push_back(negated(row));
    lp.rhs.push_back(-value);
  };
  LpResult r = solve_lp(lp);
  if (r.status != LpStatus::Optimal) throw InternalError("H-polytope LP not optimal");
  if (!is_zero(c)) fix(c, *r.value);
  for (std::size_t j = 0; j < dimension(); ++j) {
    lp.objective = unit_vector(dimension(), j);
    r = solve_lp(lp);
    if (r.status != LpStatus::Optimal) throw InternalError("H-polytope refinement LP not optimal");
    fix(lp.objective, *r.value);
  }
  return *r.point;
}

std::optional<RayShot> HPolytopeOracle::native_ray_shot(const Vector& v, const Vector& e) const {
  check_ray_arguments(*this, v, e);
  std::optional<Scalar> t;
  std::size_t row = 0;
  for (std::size_t i = 0; i < a_.size(); ++i) {
    Scalar slack = b_[i] - dot(a_[i], v);
    if (sgn(slack) < 0) throw PreconditionError("ray origin " + to_string(v) + " is not in P");
    Scalar rate = dot(a_[i], e);
    if (sgn(rate) <= 0) continue;
    Scalar s = slack / rate;
    if (!t || s < *t) {
      t = std::move(s);
      row = i;
    }
  }
  if (!t) throw InternalError("H-polytope ray unbounded");
  // A tight row with a_i^T e > 0 is maximized at v.
  RayShot shot{add_scaled(v, *t, e), std::nullopt};
  if (sgn(*t) == 0) shot.blocker = a_[row];
  return shot;
}

// ---------------------------------------------------------------- signed Minkowski sum

SignedMinkowskiOracle::SignedMinkowskiOracle(std::vector<SignedTerm> terms)
    : PolytopeOracle(terms.empty() || !terms.front().oracle ? 0 : terms.front().oracle->dimension()),
      terms_(std::move(terms)) {
  if (terms_.empty()) throw MalformedInput("signed Minkowski sum needs at least one term");
  bool positive = false;
  for (const auto& t : terms_) {
    if (!t.oracle) throw MalformedInput("signed Minkowski term without an oracle");
    if (t.sign != 1 && t.sign != -1) throw MalformedInput("signed Minkowski sign must be +1 or -1");
    if (t.oracle->dimension() != dimension()) throw MalformedInput("signed Minkowski terms differ in dimension");
    positive = positive || t.sign == 1;
  }
  if (!positive) throw MalformedInput("signed Minkowski sum needs a positive term");
}

WellDescribedMeta SignedMinkowskiOracle::meta() const {
  std::size_t pmax = 0;
  for (const auto& t : terms_) pmax = std::max(pmax, t.oracle->meta().encoding_length());
  const std::size_t d = dimension();
  const std::size_t r_bits = 1 + bits(terms_.size());
  return {d, 12 * d * d * d * d * pmax + 3 * d * d * r_bits};
}

Vector SignedMinkowskiOracle::do_optimize(const Vector& c) const { return minkowski_optimize(terms_, c); }

std::optional<RayShot> SignedMinkowskiOracle::native_ray_shot(const Vector& v, const Vector& e) const {
  std::vector<const std::vector<Vector>*> groups;
  for (const auto& t : terms_) {
    const auto* vp = dynamic_cast<const VPolytopeOracle*>(t.oracle.get());
    if (t.sign != 1 || vp == nullptr) return std::nullopt;
    groups.push_back(&vp->points());
  }
  check_ray_arguments(*this, v, e);
  return joint_ray_lp(groups, v, e);
}

Vector minkowski_optimize(const std::vector<SignedTerm>& terms, const Vector& c) {
  if (terms.empty()) throw MalformedInput("minkowski_optimize: no terms");
  Vector sum = zeros(c.size());
  for (const auto& t : terms) {
    if (!t.oracle) throw MalformedInput("minkowski_optimize: null oracle");
    if (t.oracle->dimension() != c.size()) throw MalformedInput("minkowski_optimize: dimension mismatch");
    Vector v = t.oracle->optimize(c);
    sum = t.sign > 0 ? add(sum, v) : sub(sum, v);
  }
  return sum;
}

}  // namespace eskel
