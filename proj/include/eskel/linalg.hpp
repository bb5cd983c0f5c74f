#pragma once

// Exact dense linear algebra: ranks, determinants, null spaces, volumes, direction canonicalization.

#include <cstddef>
#include <optional>
#include <vector>

#include "eskel/rational.hpp"

namespace eskel {

enum class Orientation {
  Directed,    ///< u = t*v with t > 0
  Undirected,  ///< v and -v identified; first nonzero coordinate made positive
};

/// Number of columns of a matrix, validating that every row has the same length.
std::size_t column_count(const Matrix& m);

std::size_t rank(const Matrix& m);
Scalar determinant(const Matrix& square);

/// Unique solution of A x = b, or nullopt when A is singular.
std::optional<Vector> solve_square(const Matrix& a, const Vector& b);

/// Basis of {x : A x = 0}; one vector per free column of the reduced row echelon form.
std::vector<Vector> null_space(const Matrix& a, std::size_t columns);

/// Dimension of the affine hull of a nonempty point list (0 for a single point).
std::size_t affine_rank(const std::vector<Vector>& points);
bool affinely_independent(const std::vector<Vector>& points);

/// |det(p1-p0, ..., pk-p0)| for k+1 points in dimension k, i.e. k! times the Euclidean volume.
Scalar normalized_volume(const std::vector<Vector>& simplex);

/// The primitive integer vector u = t*v (t > 0); in undirected mode the sign is also
/// normalized so the first nonzero coordinate is positive. Throws on v = 0.
Vector canonical_direction(const Vector& v, Orientation orientation = Orientation::Directed);

}  // namespace eskel
