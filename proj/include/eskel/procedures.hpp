#pragma once

// Procedures derived from OPT_P alone: membership/separation by column generation,
// ray shooting, and lexicographically refined initial vertices.

#include <cstddef>
#include <vector>

#include "eskel/oracle.hpp"

namespace eskel {

struct MembershipResult {
  enum class Verdict { Inside, Outside };

  Verdict verdict = Verdict::Outside;
  // Inside: y = sum_i weights[i] * support[i], weights >= 0 summing to 1, support are oracle vertices.
  std::vector<Vector> support;
  Vector weights;
  // Outside: separator^T y > threshold = separator^T optimize(separator); separator is primitive integral.
  Vector separator;
  Scalar threshold;
  std::size_t optimize_calls = 0;

  bool inside() const { return verdict == Verdict::Inside; }
};

/// Column generation over oracle vertices; uses at most (#vertices of P) + 1 optimize calls.
MembershipResult membership(const PolytopeOracle& oracle, const Vector& y);

struct RayShootOptions {
  std::size_t iteration_cap = 1000;
  bool force_generic = false;  ///< skip the oracle's native shortcut
};

/// The point v + t* e with t* = max{t >= 0 : v + t e in P}.
/// Throws PreconditionError when v is not in P, UnresolvedRay when the generic loop hits its cap.
Vector ray_shoot(const PolytopeOracle& oracle, const Vector& v, const Vector& e,
                 const RayShootOptions& options = {});

/// ray_shoot plus, when the ray is blocked at v, a blocking functional if one is at hand.
RayShot ray_shot(const PolytopeOracle& oracle, const Vector& v, const Vector& e, const RayShootOptions& options = {});

/// Oracle-only cutting-plane ray shooting (the fallback used by ray_shoot).
Vector ray_shoot_generic(const PolytopeOracle& oracle, const Vector& v, const Vector& e,
                         std::size_t iteration_cap = 1000);
RayShot ray_shot_generic(const PolytopeOracle& oracle, const Vector& v, const Vector& e,
                         std::size_t iteration_cap = 1000);

/// The lexicographically largest point of the face maximizing `objective`; always a vertex.
Vector initial_vertex(const PolytopeOracle& oracle, const Vector& objective);
/// initial_vertex with the all-ones objective.
Vector initial_vertex(const PolytopeOracle& oracle);

}  // namespace eskel
