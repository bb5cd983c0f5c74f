#pragma once

// Exact two-phase simplex (Bland's rule) over the rationals.
//
// Two entry points share one tableau engine:
//  * solve_lp:            optimize c^T x subject to A x <= b, x free.
//  * solve_standard_form: maximize c^T z subject to M z = q, z >= 0.
//
// Every result carries a certificate that can be checked by substitution.

#include <optional>

#include "eskel/rational.hpp"

namespace eskel {

enum class LpSense { Maximize, Minimize };
enum class LpStatus { Optimal, Infeasible, Unbounded };

struct LpProblem {
  Matrix constraint_matrix;  // A, m x d
  Vector rhs;                // b, length m
  Vector objective;          // c, length d
  LpSense sense = LpSense::Maximize;
};

/// Certificates for solve_lp:
///  Optimal    point x with A x <= b; certificate y >= 0 with A^T y = c (maximize) or
///             A^T y = -c (minimize); value = c^T x = b^T y (resp. -b^T y).
///             x is a vertex whenever the feasible region is pointed.
///  Infeasible certificate y >= 0, y^T A = 0, y^T b < 0.
///  Unbounded  certificate r with A r <= 0 and c^T r > 0 (maximize) / < 0 (minimize).
struct LpResult {
  LpStatus status = LpStatus::Infeasible;
  std::optional<Vector> point;
  std::optional<Vector> certificate;
  std::optional<Scalar> value;
};

LpResult solve_lp(const LpProblem& problem);

struct StandardFormProblem {
  Matrix equations;  // M, m x n
  Vector rhs;        // q, length m
  Vector objective;  // c, length n (maximized)
};

/// Certificates for solve_standard_form:
///  Optimal    basic feasible point z; certificate u with u^T M >= c and u^T q = c^T z.
///  Infeasible certificate u with u^T M >= 0 and u^T q < 0.
///  Unbounded  certificate r >= 0 with M r = 0 and c^T r > 0.
LpResult solve_standard_form(const StandardFormProblem& problem);

}  // namespace eskel
