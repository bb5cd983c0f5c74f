#include "eskel/lp.hpp"

#include <algorithm>
#include <cstddef>
#include <utility>
#include <vector>

#include "eskel/error.hpp"
#include "eskel/linalg.hpp"

namespace eskel {

namespace {

// Dense tableau for  max c^T z  s.t.  M z = q, z >= 0  with rows pre-normalized to q >= 0.
// Columns [0, n) are structural, [n, total) artificial; the last column holds the rhs.
class Tableau {
 public:
  Tableau(const Matrix& m, const Vector& q, std::size_t n) : rows_(m.size()), n_(n) {
    negated_.assign(rows_, false);
    Matrix body(rows_);
    for (std::size_t i = 0; i < rows_; ++i) {
      body[i] = m[i];
      body[i].push_back(q[i]);
      if (sgn(q[i]) < 0) {
        negated_[i] = true;
        for (auto& x : body[i]) x = -x;
      }
    }

    // Reuse structural unit columns as the starting basis where possible.
    initial_.assign(rows_, npos);
    std::vector<bool> used(n_, false);
    for (std::size_t j = 0; j < n_; ++j) {
      std::size_t hit = npos;
      bool unit = true;
      for (std::size_t i = 0; i < rows_ && unit; ++i) {
        if (sgn(body[i][j]) == 0) continue;
        if (hit != npos || body[i][j] != 1) unit = false;
        hit = i;
      }
      if (unit && hit != npos && initial_[hit] == npos && !used[j]) {
        initial_[hit] = j;
        used[j] = true;
      }
    }
    std::size_t artificials = 0;
    for (std::size_t i = 0; i < rows_; ++i)
      if (initial_[i] == npos) initial_[i] = n_ + artificials++;
    total_ = n_ + artificials;

    t_.assign(rows_, Vector(total_ + 1, Scalar(0)));
    for (std::size_t i = 0; i < rows_; ++i) {
      for (std::size_t j = 0; j < n_; ++j) t_[i][j] = body[i][j];
      t_[i][total_] = body[i][n_];
      if (initial_[i] >= n_) t_[i][initial_[i]] = 1;
    }
    basis_ = initial_;
  }

  std::size_t total() const { return total_; }
  bool has_artificials() const { return total_ > n_; }

  void price(const Vector& cost) {
    cost_ = cost;
    reduced_.assign(total_ + 1, Scalar(0));
    for (std::size_t j = 0; j < total_; ++j) reduced_[j] = cost[j];
    for (std::size_t i = 0; i < rows_; ++i) {
      const Scalar& cb = cost[basis_[i]];
      if (sgn(cb) == 0) continue;
      for (std::size_t j = 0; j <= total_; ++j)
        if (sgn(t_[i][j]) != 0) reduced_[j] -= cb * t_[i][j];
    }
  }

  // Objective value c_B^T x_B of the current basis.
  Scalar value() const { return -reduced_[total_]; }

  // Bland's rule; only columns below `eligible` may enter. Returns the unbounded column, if any.
  std::optional<std::size_t> run(std::size_t eligible) {
    for (;;) {
      std::size_t enter = npos;
      for (std::size_t j = 0; j < eligible; ++j)
        if (sgn(reduced_[j]) > 0) {
          enter = j;
          break;
        }
      if (enter == npos) return std::nullopt;
      std::size_t leave = npos;
      Scalar best;
      for (std::size_t i = 0; i < rows_; ++i) {
        if (sgn(t_[i][enter]) <= 0) continue;
        Scalar ratio = t_[i][total_] / t_[i][enter];
        if (leave == npos || ratio < best || (ratio == best && basis_[i] < basis_[leave])) {
          leave = i;
          best = std::move(ratio);
        }
      }
      if (leave == npos) return enter;
      pivot(leave, enter);
    }
  }

  // Artificials basic in rows whose rhs is zero can leave without phase 1: a pivot on a
  // zero-rhs row leaves every rhs unchanged, whatever the sign of the pivot element.
  void crash_zero_rows() {
    for (std::size_t i = 0; i < rows_; ++i) {
      if (basis_[i] < n_ || sgn(t_[i][total_]) != 0) continue;
      for (std::size_t j = 0; j < n_; ++j)
        if (sgn(t_[i][j]) != 0 && !is_basic(j)) {
          pivot(i, j);
          break;
        }
    }
  }

  // True when every basic artificial sits at level zero, so the basis is already feasible.
  bool artificials_at_zero() const {
    for (std::size_t i = 0; i < rows_; ++i)
      if (basis_[i] >= n_ && sgn(t_[i][total_]) != 0) return false;
    return true;
  }

  // Pivot basic artificials (all at level zero) onto structural columns where the row allows it.
  void evict_artificials() {
    for (std::size_t i = 0; i < rows_; ++i) {
      if (basis_[i] < n_) continue;
      for (std::size_t j = 0; j < n_; ++j)
        if (sgn(t_[i][j]) != 0) {
          pivot(i, j);
          break;
        }
    }
  }

  Vector primal() const {
    Vector z = zeros(n_);
    for (std::size_t i = 0; i < rows_; ++i)
      if (basis_[i] < n_) z[basis_[i]] = t_[i][total_];
    return z;
  }

  Vector ray(std::size_t column) const {
    Vector r = zeros(n_);
    r[column] = 1;
    for (std::size_t i = 0; i < rows_; ++i)
      if (basis_[i] < n_) r[basis_[i]] = -t_[i][column];
    return r;
  }

  // u = c_B^T B^{-1}, read off the reduced costs of the initial identity columns and mapped
  // back to the caller's (un-negated) rows.
  Vector dual() const {
    Vector u(rows_);
    for (std::size_t i = 0; i < rows_; ++i) {
      std::size_t j = initial_[i];
      u[i] = cost_[j] - reduced_[j];
      if (negated_[i]) u[i] = -u[i];
    }
    return u;
  }

 private:
  static constexpr std::size_t npos = static_cast<std::size_t>(-1);

  bool is_basic(std::size_t j) const { return std::find(basis_.begin(), basis_.end(), j) != basis_.end(); }

  void pivot(std::size_t r, std::size_t col) {
    Vector& prow = t_[r];
    Scalar inv = 1 / prow[col];
    std::vector<std::size_t> nz;
    for (std::size_t j = 0; j <= total_; ++j)
      if (sgn(prow[j]) != 0) {
        prow[j] *= inv;
        nz.push_back(j);
      }
    auto eliminate = [&](Vector& row) {
      if (sgn(row[col]) == 0) return;
      Scalar f = row[col];
      for (std::size_t j : nz) row[j] -= f * prow[j];
    };
    for (std::size_t i = 0; i < rows_; ++i)
      if (i != r) eliminate(t_[i]);
    if (!reduced_.empty()) eliminate(reduced_);
    basis_[r] = col;
  }

  std::size_t rows_;
  std::size_t n_;
  std::size_t total_ = 0;
  Matrix t_;
  Vector reduced_;
  Vector cost_;
  std::vector<std::size_t> basis_;
  std::vector<std::size_t> initial_;
  std::vector<bool> negated_;
};

Vector times(const Matrix& m, const Vector& z) {
  Vector out(m.size());
  for (std::size_t i = 0; i < m.size(); ++i) out[i] = dot(m[i], z);
  return out;
}

Vector transpose_times(const Matrix& m, const Vector& u, std::size_t columns) {
  Vector out = zeros(columns);
  for (std::size_t i = 0; i < m.size(); ++i) {
    if (sgn(u[i]) == 0) continue;
    for (std::size_t j = 0; j < columns; ++j)
      if (sgn(m[i][j]) != 0) out[j] += u[i] * m[i][j];
  }
  return out;
}

void check(bool ok, const char* what) {
  if (!ok) throw InternalError(std::string("simplex certificate check failed: ") + what);
}

void validate(const StandardFormProblem& p) {
  const std::size_t n = p.objective.size();
  if (p.rhs.size() != p.equations.size()) throw MalformedInput("standard form: rhs length != row count");
  for (const auto& row : p.equations)
    if (row.size() != n) throw MalformedInput("standard form: row length != objective length");
}

// Moves an optimal x along the null space of its tight rows until it is a vertex.
// Requires rank(A) = d. Complementary slackness keeps the objective value fixed.
Vector purify(const Matrix& a, const Vector& b, Vector x) {
  const std::size_t d = x.size();
  const std::size_t m = a.size();
  std::vector<bool> tight(m);
  for (std::size_t i = 0; i < m; ++i) tight[i] = dot(a[i], x) == b[i];
  for (;;) {
    Matrix active;
    for (std::size_t i = 0; i < m; ++i)
      if (tight[i]) active.push_back(a[i]);
    if (rank(active) == d) return x;
    Vector z = null_space(active, d).front();
    bool forward = false;
    for (std::size_t i = 0; i < m && !forward; ++i)
      if (!tight[i] && sgn(dot(a[i], z)) > 0) forward = true;
    if (!forward) z = negated(z);
    std::optional<Scalar> step;
    for (std::size_t i = 0; i < m; ++i) {
      if (tight[i]) continue;
      Scalar rate = dot(a[i], z);
      if (sgn(rate) <= 0) continue;
      Scalar s = (b[i] - dot(a[i], x)) / rate;
      if (!step || s < *step) step = s;
    }
    if (!step) throw InternalError("purification direction unbounded despite full column rank");
    x = add_scaled(x, *step, z);
    for (std::size_t i = 0; i < m; ++i)
      if (!tight[i]) tight[i] = dot(a[i], x) == b[i];
  }
}

}  // namespace

LpResult solve_standard_form(const StandardFormProblem& p) {
  validate(p);
  const std::size_t n = p.objective.size();
  const std::size_t m = p.equations.size();
  Tableau tab(p.equations, p.rhs, n);

  if (tab.has_artificials()) tab.crash_zero_rows();
  if (tab.has_artificials() && !tab.artificials_at_zero()) {
    Vector phase1 = zeros(tab.total());
    for (std::size_t j = n; j < tab.total(); ++j) phase1[j] = -1;
    tab.price(phase1);
    tab.run(n);
    if (sgn(tab.value()) < 0) {
      Vector u = tab.dual();
      Vector um = transpose_times(p.equations, u, n);
      for (const auto& x : um) check(sgn(x) >= 0, "farkas u^T M >= 0");
      check(sgn(dot(u, p.rhs)) < 0, "farkas u^T q < 0");
      return {LpStatus::Infeasible, std::nullopt, std::move(u), std::nullopt};
    }
  }
  if (tab.has_artificials()) tab.evict_artificials();

  Vector phase2 = zeros(tab.total());
  for (std::size_t j = 0; j < n; ++j) phase2[j] = p.objective[j];
  tab.price(phase2);
  if (auto col = tab.run(n)) {
    Vector r = tab.ray(*col);
    check(is_zero(times(p.equations, r)), "ray M r = 0");
    check(sgn(dot(p.objective, r)) > 0, "ray c^T r > 0");
    return {LpStatus::Unbounded, std::nullopt, std::move(r), std::nullopt};
  }
  Vector z = tab.primal();
  Vector u = tab.dual();
  Scalar value = dot(p.objective, z);
  check(times(p.equations, z) == p.rhs, "primal M z = q");
  Vector um = transpose_times(p.equations, u, n);
  for (std::size_t j = 0; j < n; ++j) check(um[j] >= p.objective[j], "dual u^T M >= c");
  check(m == 0 || dot(u, p.rhs) == value, "strong duality");
  return {LpStatus::Optimal, std::move(z), std::move(u), std::move(value)};
}

LpResult solve_lp(const LpProblem& problem) {
  const auto& a = problem.constraint_matrix;
  const std::size_t d = problem.objective.size();
  const std::size_t m = a.size();
  if (d == 0) throw MalformedInput("solve_lp: objective must have dimension >= 1");
  if (problem.rhs.size() != m) throw MalformedInput("solve_lp: rhs length != row count");
  for (const auto& row : a)
    if (row.size() != d) throw MalformedInput("solve_lp: constraint row length != objective length");

  const bool maximize = problem.sense == LpSense::Maximize;
  const Vector c = maximize ? problem.objective : negated(problem.objective);

  // x = x+ - x-, one slack per row: [A | -A | I] (x+, x-, s) = b.
  StandardFormProblem sf;
  const std::size_t n = 2 * d + m;
  sf.equations.assign(m, zeros(n));
  for (std::size_t i = 0; i < m; ++i) {
    for (std::size_t j = 0; j < d; ++j) {
      sf.equations[i][j] = a[i][j];
      sf.equations[i][d + j] = -a[i][j];
    }
    sf.equations[i][2 * d + i] = 1;
  }
  sf.rhs = problem.rhs;
  sf.objective = zeros(n);
  for (std::size_t j = 0; j < d; ++j) {
    sf.objective[j] = c[j];
    sf.objective[d + j] = -c[j];
  }

  LpResult sfr = solve_standard_form(sf);
  LpResult out;
  out.status = sfr.status;
  switch (sfr.status) {
    case LpStatus::Infeasible:
      out.certificate = std::move(sfr.certificate);
      return out;
    case LpStatus::Unbounded: {
      const Vector& z = *sfr.certificate;
      Vector r(d);
      for (std::size_t j = 0; j < d; ++j) r[j] = z[j] - z[d + j];
      out.certificate = std::move(r);
      return out;
    }
    case LpStatus::Optimal:
      break;
  }
  const Vector& z = *sfr.point;
  Vector x(d);
  for (std::size_t j = 0; j < d; ++j) x[j] = z[j] - z[d + j];
  if (m > 0 && rank(a) == d) x = purify(a, problem.rhs, std::move(x));
  Scalar value = dot(problem.objective, x);
  check(value == (maximize ? *sfr.value : -*sfr.value), "purification kept the optimum");
  out.point = std::move(x);
  out.certificate = std::move(sfr.certificate);
  out.value = std::move(value);
  return out;
}

}  // namespace eskel
