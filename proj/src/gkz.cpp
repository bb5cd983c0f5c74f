#include "eskel/gkz.hpp"

#include <algorithm>
#include <functional>
#include <optional>

#include "eskel/error.hpp"
#include "eskel/linalg.hpp"

namespace eskel {

namespace {

/// Calls fn on every m-subset of {0..n-1} in lexicographic order; stops when fn returns false.
void for_each_subset(std::size_t n, std::size_t m, const std::function<bool(const std::vector<std::size_t>&)>& fn) {
  if (m > n) return;
  std::vector<std::size_t> idx(m);
  for (std::size_t i = 0; i < m; ++i) idx[i] = i;
  while (true) {
    if (!fn(idx)) return;
    std::size_t i = m;
    while (i > 0 && idx[i - 1] == n - m + i - 1) --i;
    if (i == 0) return;
    ++idx[i - 1];
    for (std::size_t j = i; j < m; ++j) idx[j] = idx[j - 1] + 1;
  }
}

/// Columns (p_s, 1) for s in the subset.
Matrix homogeneous_columns(const PointConfiguration& a, const std::vector<std::size_t>& subset) {
  const std::size_t k = a.dimension();
  Matrix m(k + 1, Vector(subset.size()));
  for (std::size_t c = 0; c < subset.size(); ++c) {
    for (std::size_t r = 0; r < k; ++r) m[r][c] = a[subset[c]][r];
    m[k][c] = 1;
  }
  return m;
}

std::vector<Vector> pick(const PointConfiguration& a, const std::vector<std::size_t>& labels) {
  std::vector<Vector> pts;
  pts.reserve(labels.size());
  for (auto l : labels) pts.push_back(a[l]);
  return pts;
}

void check_simplex(const Simplex& s, std::size_t n) {
  for (auto l : s)
    if (l >= n) throw MalformedInput("simplex label " + std::to_string(l) + " out of range");
}

/// Adds vol to out[i] for every i in s that is i-mixed in s.
void add_mixed(const CayleyConfiguration& c, const Simplex& s, const Scalar& vol, Vector& out) {
  std::vector<std::size_t> count(c.supports.size(), 0);
  for (auto l : s) ++count[c.support_of(l)];
  for (auto l : s) {
    const std::size_t own = c.support_of(l);
    bool mixed = count[own] == 1;
    for (std::size_t j = 0; mixed && j < count.size(); ++j)
      if (j != own && count[j] != 2) mixed = false;
    if (mixed) out[l] += vol;
  }
}

Scalar total_volume(const PointConfiguration& a) {
  Scalar total = 0;
  for (const auto& s : regular_triangulation(a, zeros(a.size())).simplices) total += normalized_volume(pick(a, s));
  return total;
}

WellDescribedMeta gkz_meta(std::size_t n, const Scalar& total) {
  // Every coordinate is an integer in [0, total].
  return WellDescribedMeta::from_vertex_complexity(n, n * encoding_length(total));
}

/// Coordinates onto which the affine hull of pts projects injectively.
std::vector<std::size_t> spanning_coordinates(const std::vector<Vector>& pts) {
  std::vector<std::size_t> chosen;
  Matrix rows;
  const std::size_t k = pts.front().size();
  std::size_t current = 0;
  for (std::size_t r = 0; r < k; ++r) {
    Vector row;
    for (std::size_t i = 1; i < pts.size(); ++i) row.push_back(pts[i][r] - pts[0][r]);
    rows.push_back(row);
    std::size_t next = pts.size() > 1 ? rank(rows) : 0;
    if (next > current) {
      current = next;
      chosen.push_back(r);
    } else {
      rows.pop_back();
    }
  }
  return chosen;
}

}  // namespace

PointConfiguration::PointConfiguration(std::vector<Vector> points) : points_(std::move(points)) {
  if (points_.empty()) throw MalformedInput("point configuration is empty");
  dimension_ = points_.front().size();
  for (const auto& p : points_) {
    require_dimension(p, dimension_, "configuration point");
    if (!is_integral(p)) throw MalformedInput("configuration point " + to_string(p) + " is not integral");
  }
  if (affine_rank(points_) != dimension_)
    throw MalformedInput("point configuration is not full-dimensional (affine rank " +
                         std::to_string(affine_rank(points_)) + " in dimension " + std::to_string(dimension_) + ")");
}

CayleyConfiguration cayley_embedding(std::vector<std::vector<Vector>> supports) {
  if (supports.empty() || supports.front().empty()) throw MalformedInput("cayley embedding needs nonempty supports");
  const std::size_t k = supports.front().front().size();
  if (supports.size() != k + 1)
    throw MalformedInput("expected " + std::to_string(k + 1) + " supports in dimension " + std::to_string(k) +
                         ", got " + std::to_string(supports.size()));
  std::vector<Vector> embedded;
  std::vector<std::pair<std::size_t, Vector>> origin;
  for (std::size_t j = 0; j < supports.size(); ++j) {
    if (supports[j].empty()) throw MalformedInput("support " + std::to_string(j) + " is empty");
    for (const auto& p : supports[j]) {
      require_dimension(p, k, "support point");
      Vector q = p;
      q.resize(2 * k, 0);
      if (j > 0) q[k + j - 1] = 1;
      embedded.push_back(std::move(q));
      origin.emplace_back(j, p);
    }
  }
  return {std::move(supports), PointConfiguration(std::move(embedded)), std::move(origin)};
}

Triangulation regular_triangulation(const PointConfiguration& a, const Vector& w) {
  const std::size_t n = a.size(), k = a.dimension();
  require_dimension(w, n, "lifting");
  Triangulation t;
  for_each_subset(n, k + 1, [&](const std::vector<std::size_t>& sigma) {
    Matrix m = homogeneous_columns(a, sigma);
    if (sgn(determinant(m)) == 0) return true;
    std::size_t pos = 0;
    for (std::size_t j = 0; j < n; ++j) {
      if (pos < sigma.size() && sigma[pos] == j) {
        ++pos;
        continue;
      }
      Vector target = a[j];
      target.push_back(1);
      Vector beta = *solve_square(m, target);
      Scalar residual = w[j];
      for (std::size_t s = 0; s < sigma.size(); ++s) residual -= beta[s] * w[sigma[s]];
      int sign = sgn(residual);
      if (sign == 0) {
        // Heights w + eps * N^label: the largest label involved decides.
        std::size_t top = sigma.size();
        for (std::size_t s = 0; s < sigma.size(); ++s)
          if (sgn(beta[s]) != 0) top = s;
        sign = (top == sigma.size() || sigma[top] < j) ? 1 : -sgn(beta[top]);
      }
      if (sign < 0) return true;
    }
    t.simplices.push_back(sigma);
    return true;
  });
  if (t.simplices.empty()) throw InternalError("lower hull has no facets");
  return t;
}

GkzVector phi_vector(const PointConfiguration& a, const Triangulation& t) {
  GkzVector g{zeros(a.size()), GkzVector::Flavor::Phi};
  for (const auto& s : t.simplices) {
    check_simplex(s, a.size());
    Scalar vol = normalized_volume(pick(a, s));
    for (auto l : s) g.coords[l] += vol;
  }
  return g;
}

GkzVector rho_vector(const CayleyConfiguration& c, const Triangulation& t) {
  GkzVector g{zeros(c.embedded.size()), GkzVector::Flavor::Rho};
  for (const auto& s : t.simplices) {
    check_simplex(s, c.embedded.size());
    add_mixed(c, s, normalized_volume(pick(c.embedded, s)), g.coords);
  }
  return g;
}

SecondaryOracle::SecondaryOracle(PointConfiguration a)
    : PolytopeOracle(a.size()), a_(std::move(a)), total_volume_(total_volume(a_)) {}

WellDescribedMeta SecondaryOracle::meta() const { return gkz_meta(a_.size(), total_volume_); }

Vector SecondaryOracle::do_optimize(const Vector& c) const {
  return phi_vector(a_, regular_triangulation(a_, negated(c))).coords;
}

ResultantOracle::ResultantOracle(CayleyConfiguration c)
    : PolytopeOracle(c.embedded.size()), c_(std::move(c)), total_volume_(total_volume(c_.embedded)) {}

WellDescribedMeta ResultantOracle::meta() const { return gkz_meta(c_.embedded.size(), total_volume_); }

Vector ResultantOracle::do_optimize(const Vector& c) const {
  return rho_vector(c_, regular_triangulation(c_.embedded, negated(c))).coords;
}

OraclePtr secondary_oracle(PointConfiguration a) {
  if (a.dimension() > 4) throw MalformedInput("secondary polytopes are supported up to dimension 4");
  return std::make_shared<SecondaryOracle>(std::move(a));
}

OraclePtr resultant_oracle(std::vector<std::vector<Vector>> supports) {
  CayleyConfiguration c = cayley_embedding(std::move(supports));
  if (c.supports.size() > 5) throw MalformedInput("resultant polytopes are supported for k <= 4");
  return std::make_shared<ResultantOracle>(std::move(c));
}

std::vector<std::size_t> Circuit::positive_part() const {
  std::vector<std::size_t> out;
  for (std::size_t i = 0; i < support.size(); ++i)
    if (sgn(dependence[i]) > 0) out.push_back(support[i]);
  return out;
}

std::vector<std::size_t> Circuit::negative_part() const {
  std::vector<std::size_t> out;
  for (std::size_t i = 0; i < support.size(); ++i)
    if (sgn(dependence[i]) < 0) out.push_back(support[i]);
  return out;
}

namespace {

std::optional<Circuit> as_circuit(const PointConfiguration& a, const std::vector<std::size_t>& subset) {
  std::vector<Vector> ns = null_space(homogeneous_columns(a, subset), subset.size());
  if (ns.size() != 1) return std::nullopt;
  for (const auto& x : ns.front())
    if (sgn(x) == 0) return std::nullopt;
  return Circuit{subset, canonical_direction(ns.front(), Orientation::Undirected)};
}

/// (T+, T-) of conv(C): C minus one positive (resp. negative) point.
std::pair<std::vector<Simplex>, std::vector<Simplex>> circuit_triangulations(const Circuit& c) {
  std::pair<std::vector<Simplex>, std::vector<Simplex>> out;
  for (std::size_t i = 0; i < c.support.size(); ++i) {
    Simplex s;
    for (std::size_t j = 0; j < c.support.size(); ++j)
      if (j != i) s.push_back(c.support[j]);
    (sgn(c.dependence[i]) > 0 ? out.first : out.second).push_back(std::move(s));
  }
  return out;
}

}  // namespace

std::vector<Circuit> enumerate_circuits(const PointConfiguration& a) {
  std::vector<Circuit> out;
  const std::size_t top = std::min(a.dimension() + 2, a.size());
  for (std::size_t m = 2; m <= top; ++m)
    for_each_subset(a.size(), m, [&](const std::vector<std::size_t>& subset) {
      if (auto c = as_circuit(a, subset)) out.push_back(std::move(*c));
      return true;
    });
  return out;
}

Vector circuit_phi_difference(const PointConfiguration& a, const Circuit& circuit) {
  // Volumes inside aff(C), measured in a coordinate projection that is injective on it.
  std::vector<Vector> pts = pick(a, circuit.support);
  std::vector<std::size_t> coords = spanning_coordinates(pts);
  auto projected_volume = [&](const Simplex& s) {
    std::vector<Vector> proj;
    for (auto l : s) {
      Vector p;
      for (auto r : coords) p.push_back(a[l][r]);
      proj.push_back(std::move(p));
    }
    return normalized_volume(proj);
  };
  auto [plus, minus] = circuit_triangulations(circuit);
  Vector diff = zeros(a.size());
  for (const auto& s : plus) {
    Scalar vol = projected_volume(s);
    for (auto l : s) diff[l] += vol;
  }
  for (const auto& s : minus) {
    Scalar vol = projected_volume(s);
    for (auto l : s) diff[l] -= vol;
  }
  return diff;
}

Vector circuit_rho_difference(const CayleyConfiguration& c, const Circuit& circuit) {
  auto [plus, minus] = circuit_triangulations(circuit);
  Vector up = zeros(c.embedded.size()), down = zeros(c.embedded.size());
  for (const auto& s : plus) add_mixed(c, s, normalized_volume(pick(c.embedded, s)), up);
  for (const auto& s : minus) add_mixed(c, s, normalized_volume(pick(c.embedded, s)), down);
  return sub(up, down);
}

DirectionSet circuit_directions_secondary(const PointConfiguration& a) {
  std::vector<Vector> raw;
  for (const auto& c : enumerate_circuits(a)) raw.push_back(circuit_phi_difference(a, c));
  return DirectionSet::undirected(raw, DirectionSource::Circuits);
}

DirectionSet circuit_directions_resultant(const CayleyConfiguration& c) {
  if (!genericity_check(c.embedded))
    throw GenericityError("genericity required: the Cayley configuration has an affinely dependent subset of at most " +
                          std::to_string(c.embedded.dimension() + 1) + " points");
  // Choose two labels from every support.
  std::vector<std::vector<std::size_t>> labels(c.supports.size());
  for (std::size_t l = 0; l < c.embedded.size(); ++l) labels[c.support_of(l)].push_back(l);
  std::vector<std::vector<std::pair<std::size_t, std::size_t>>> pairs(labels.size());
  for (std::size_t j = 0; j < labels.size(); ++j)
    for (std::size_t x = 0; x < labels[j].size(); ++x)
      for (std::size_t y = x + 1; y < labels[j].size(); ++y) pairs[j].emplace_back(labels[j][x], labels[j][y]);

  std::vector<Vector> raw;
  std::vector<std::size_t> choice(pairs.size(), 0);
  bool any = std::all_of(pairs.begin(), pairs.end(), [](const auto& p) { return !p.empty(); });
  while (any) {
    std::vector<std::size_t> subset;
    for (std::size_t j = 0; j < pairs.size(); ++j) {
      subset.push_back(pairs[j][choice[j]].first);
      subset.push_back(pairs[j][choice[j]].second);
    }
    std::sort(subset.begin(), subset.end());
    if (auto circuit = as_circuit(c.embedded, subset)) {
      Vector d = circuit_rho_difference(c, *circuit);
      if (!is_zero(d)) raw.push_back(std::move(d));
    }
    std::size_t j = 0;
    while (j < choice.size() && ++choice[j] == pairs[j].size()) choice[j++] = 0;
    if (j == choice.size()) break;
  }
  return DirectionSet::undirected(raw, DirectionSource::Circuits);
}

bool genericity_check(const PointConfiguration& a) {
  bool ok = true;
  const std::size_t top = std::min(a.dimension() + 1, a.size());
  for (std::size_t m = 2; ok && m <= top; ++m)
    for_each_subset(a.size(), m, [&](const std::vector<std::size_t>& subset) {
      ok = affinely_independent(pick(a, subset));
      return ok;
    });
  return ok;
}

}  // namespace eskel
