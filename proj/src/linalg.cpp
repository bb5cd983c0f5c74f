#include "eskel/linalg.hpp"

#include <utility>

#include "eskel/error.hpp"

namespace eskel {

namespace {

// In-place reduced row echelon form with pivots taken among the first `columns` columns; row
// operations cover every column. Returns the pivot column of each pivot row.
std::vector<std::size_t> rref(Matrix& m, std::size_t columns) {
  std::vector<std::size_t> pivots;
  std::size_t row = 0;
  for (std::size_t col = 0; col < columns && row < m.size(); ++col) {
    std::size_t sel = row;
    while (sel < m.size() && sgn(m[sel][col]) == 0) ++sel;
    if (sel == m.size()) continue;
    std::swap(m[row], m[sel]);
    Scalar inv = 1 / m[row][col];
    const std::size_t width = m[row].size();
    for (std::size_t j = col; j < width; ++j) m[row][j] *= inv;
    for (std::size_t i = 0; i < m.size(); ++i) {
      if (i == row || sgn(m[i][col]) == 0) continue;
      Scalar f = m[i][col];
      for (std::size_t j = col; j < width; ++j)
        if (sgn(m[row][j]) != 0) m[i][j] -= f * m[row][j];
    }
    pivots.push_back(col);
    ++row;
  }
  return pivots;
}

}  // namespace

std::size_t column_count(const Matrix& m) {
  if (m.empty()) return 0;
  std::size_t n = m.front().size();
  for (const auto& row : m)
    if (row.size() != n) throw MalformedInput("ragged matrix");
  return n;
}

std::size_t rank(const Matrix& m) {
  Matrix work = m;
  return rref(work, column_count(m)).size();
}

Scalar determinant(const Matrix& square) {
  const std::size_t n = square.size();
  if (column_count(square) != n && n != 0) throw MalformedInput("determinant of a non-square matrix");
  Matrix a = square;
  Scalar det = 1;
  for (std::size_t col = 0; col < n; ++col) {
    std::size_t sel = col;
    while (sel < n && sgn(a[sel][col]) == 0) ++sel;
    if (sel == n) return 0;
    if (sel != col) {
      std::swap(a[sel], a[col]);
      det = -det;
    }
    det *= a[col][col];
    for (std::size_t i = col + 1; i < n; ++i) {
      if (sgn(a[i][col]) == 0) continue;
      Scalar f = a[i][col] / a[col][col];
      for (std::size_t j = col; j < n; ++j) a[i][j] -= f * a[col][j];
    }
  }
  return det;
}

std::optional<Vector> solve_square(const Matrix& a, const Vector& b) {
  const std::size_t n = a.size();
  if (b.size() != n || (n && column_count(a) != n)) throw MalformedInput("solve_square: shape mismatch");
  Matrix aug(n);
  for (std::size_t i = 0; i < n; ++i) {
    aug[i] = a[i];
    aug[i].push_back(b[i]);
  }
  auto pivots = rref(aug, n);
  if (pivots.size() < n) return std::nullopt;
  Vector x(n);
  for (std::size_t i = 0; i < n; ++i) x[i] = aug[i][n];
  return x;
}

std::vector<Vector> null_space(const Matrix& a, std::size_t columns) {
  for (const auto& row : a)
    if (row.size() != columns) throw MalformedInput("null_space: ragged matrix");
  Matrix work = a;
  auto pivots = rref(work, columns);
  std::vector<bool> is_pivot(columns, false);
  for (auto p : pivots) is_pivot[p] = true;
  std::vector<Vector> basis;
  for (std::size_t free = 0; free < columns; ++free) {
    if (is_pivot[free]) continue;
    Vector x = zeros(columns);
    x[free] = 1;
    for (std::size_t r = 0; r < pivots.size(); ++r) x[pivots[r]] = -work[r][free];
    basis.push_back(std::move(x));
  }
  return basis;
}

std::size_t affine_rank(const std::vector<Vector>& points) {
  if (points.empty()) throw MalformedInput("affine_rank of an empty point list");
  const std::size_t d = points.front().size();
  Matrix diffs;
  diffs.reserve(points.size() - 1);
  for (std::size_t i = 1; i < points.size(); ++i) {
    require_dimension(points[i], d, "affine_rank");
    diffs.push_back(sub(points[i], points.front()));
  }
  return diffs.empty() ? 0 : rank(diffs);
}

bool affinely_independent(const std::vector<Vector>& points) {
  return !points.empty() && affine_rank(points) + 1 == points.size();
}

Scalar normalized_volume(const std::vector<Vector>& simplex) {
  if (simplex.empty()) throw MalformedInput("normalized_volume: empty simplex");
  const std::size_t k = simplex.front().size();
  if (simplex.size() != k + 1)
    throw MalformedInput("normalized_volume: need " + std::to_string(k + 1) + " points in dimension " +
                         std::to_string(k) + ", got " + std::to_string(simplex.size()));
  Matrix m;
  m.reserve(k);
  for (std::size_t i = 1; i <= k; ++i) {
    require_dimension(simplex[i], k, "normalized_volume");
    m.push_back(sub(simplex[i], simplex[0]));
  }
  return abs(determinant(m));
}

Vector canonical_direction(const Vector& v, Orientation orientation) {
  if (is_zero(v)) throw MalformedInput("canonical_direction of the zero vector");
  mpz_class lcm_den = 1;
  for (const auto& x : v) mpz_lcm(lcm_den.get_mpz_t(), lcm_den.get_mpz_t(), x.get_den().get_mpz_t());
  std::vector<mpz_class> ints(v.size());
  mpz_class g = 0;
  for (std::size_t i = 0; i < v.size(); ++i) {
    ints[i] = v[i].get_num() * (lcm_den / v[i].get_den());
    mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), ints[i].get_mpz_t());
  }
  if (orientation == Orientation::Undirected) {
    for (const auto& x : ints) {
      if (x == 0) continue;
      if (x < 0) g = -g;
      break;
    }
  }
  Vector u(v.size());
  for (std::size_t i = 0; i < v.size(); ++i) u[i] = Scalar(ints[i] / g);
  return u;
}

}  // namespace eskel
