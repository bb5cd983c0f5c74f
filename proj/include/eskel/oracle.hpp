#pragma once

// Polytopes accessed only through an optimization oracle, plus the concrete
// V-, H-, and signed-Minkowski oracles.

#include <atomic>
#include <cstddef>
#include <memory>
#include <optional>
#include <string_view>
#include <vector>

#include "eskel/rational.hpp"

namespace eskel {

enum class OracleKind { VPolytope, HPolytope, SignedMinkowski, Secondary, Resultant };

std::string_view to_string(OracleKind kind);

/// Bookkeeping for a well-described polytope: some H-representation exists whose
/// inequalities each have encoding length at most `facet_complexity`.
struct WellDescribedMeta {
  std::size_t dimension = 0;
  std::size_t facet_complexity = 0;

  std::size_t encoding_length() const { return dimension + facet_complexity; }
  /// Every vertex has encoding length at most 4 d^2 phi.
  std::size_t vertex_bound() const { return 4 * dimension * dimension * facet_complexity; }
  bool admits_vertex(const Vector& v) const { return eskel::encoding_length(v) <= vertex_bound(); }

  /// phi from a bound nu on vertex encoding lengths (phi <= 3 d^2 nu).
  static WellDescribedMeta from_vertex_complexity(std::size_t dimension, std::size_t nu);
};

/// A nonempty bounded polytope P in R^d known through OPT_P.
///
/// optimize() returns a vertex of P maximizing c; repeated calls with the same c return the
/// same vertex. Implementations are re-entrant: concurrent optimize() calls are safe.
/// Result of a ray shot from v along e. When point == v the shot may carry a blocker: a
/// functional c with c^T e > 0 that v maximizes over P, so every direction f with c^T f > 0
/// is blocked at v too.
struct RayShot {
  Vector point;
  std::optional<Vector> blocker;
};

class PolytopeOracle {
 public:
  explicit PolytopeOracle(std::size_t dimension) : dimension_(dimension) {}
  virtual ~PolytopeOracle() = default;
  PolytopeOracle(const PolytopeOracle&) = delete;
  PolytopeOracle& operator=(const PolytopeOracle&) = delete;

  std::size_t dimension() const { return dimension_; }
  virtual OracleKind kind() const = 0;
  virtual WellDescribedMeta meta() const = 0;

  Vector optimize(const Vector& c) const;

  /// Exact farthest point v + t e in P (t >= 0) when the representation allows a direct
  /// computation; nullopt means callers must fall back to the generic oracle-only method.
  std::optional<Vector> native_ray_shoot(const Vector& v, const Vector& e) const;
  virtual std::optional<RayShot> native_ray_shot(const Vector& v, const Vector& e) const;

  std::size_t optimize_calls() const { return calls_.load(std::memory_order_relaxed); }

 protected:
  virtual Vector do_optimize(const Vector& c) const = 0;

 private:
  std::size_t dimension_;
  mutable std::atomic<std::size_t> calls_{0};
};

using OraclePtr = std::shared_ptr<const PolytopeOracle>;

/// conv(points). Ties in optimize() go to the lexicographically largest maximizer.
class VPolytopeOracle final : public PolytopeOracle {
 public:
  explicit VPolytopeOracle(std::vector<Vector> points);

  OracleKind kind() const override { return OracleKind::VPolytope; }
  WellDescribedMeta meta() const override;
  std::optional<RayShot> native_ray_shot(const Vector& v, const Vector& e) const override;
  const std::vector<Vector>& points() const { return points_; }

 protected:
  Vector do_optimize(const Vector& c) const override;

 private:
  std::vector<Vector> points_;
};

/// {x : A x <= b}, validated nonempty and bounded at construction.
/// optimize() refines the optimal face lexicographically so the answer is its lex-max vertex.
class HPolytopeOracle final : public PolytopeOracle {
 public:
  HPolytopeOracle(Matrix a, Vector b);

  OracleKind kind() const override { return OracleKind::HPolytope; }
  WellDescribedMeta meta() const override;
  std::optional<RayShot> native_ray_shot(const Vector& v, const Vector& e) const override;
  const Matrix& constraint_matrix() const { return a_; }
  const Vector& rhs() const { return b_; }

 protected:
  Vector do_optimize(const Vector& c) const override;

 private:
  Matrix a_;
  Vector b_;
};

struct SignedTerm {
  int sign = 1;  // +1 or -1
  OraclePtr oracle;
};

/// s_1 P_1 + ... + s_r P_r. Each subtracted term is assumed (not checked) to be a Minkowski
/// summand of the positive part; optimize() returns sum_i s_i OPT_{P_i}(c).
class SignedMinkowskiOracle final : public PolytopeOracle {
 public:
  explicit SignedMinkowskiOracle(std::vector<SignedTerm> terms);

  OracleKind kind() const override { return OracleKind::SignedMinkowski; }
  WellDescribedMeta meta() const override;
  /// Joint LP when every term is a positive V-polytope; otherwise generic.
  std::optional<RayShot> native_ray_shot(const Vector& v, const Vector& e) const override;
  const std::vector<SignedTerm>& terms() const { return terms_; }

 protected:
  Vector do_optimize(const Vector& c) const override;

 private:
  std::vector<SignedTerm> terms_;
};

/// sum_i s_i optimize(P_i, c), exactly r inner calls.
Vector minkowski_optimize(const std::vector<SignedTerm>& terms, const Vector& c);

}  // namespace eskel
