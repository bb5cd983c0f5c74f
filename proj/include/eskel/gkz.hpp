#pragma once

// Secondary and resultant polytopes: Cayley embedding, regular triangulations by lifting,
// GKZ vectors, circuits and their edge directions.

#include <cstddef>
#include <utility>
#include <vector>

#include "eskel/oracle.hpp"
#include "eskel/skeleton.hpp"

namespace eskel {

/// An ordered list of integer points spanning R^k affinely. Labels are 0-based positions.
class PointConfiguration {
 public:
  explicit PointConfiguration(std::vector<Vector> points);

  const std::vector<Vector>& points() const { return points_; }
  const Vector& operator[](std::size_t label) const { return points_[label]; }
  std::size_t size() const { return points_.size(); }
  /// k, the ambient (and affine) dimension.
  std::size_t dimension() const { return dimension_; }

 private:
  std::vector<Vector> points_;
  std::size_t dimension_ = 0;
};

/// A_0, ..., A_k in Z^k embedded as the union of A_j x {e_j} in Z^{2k}, with e_0 = 0 and
/// e_j the j-th unit vector.
struct CayleyConfiguration {
  std::vector<std::vector<Vector>> supports;
  PointConfiguration embedded;
  /// label -> (support index, original point)
  std::vector<std::pair<std::size_t, Vector>> origin;

  std::size_t support_of(std::size_t label) const { return origin.at(label).first; }
};

CayleyConfiguration cayley_embedding(std::vector<std::vector<Vector>> supports);

using Simplex = std::vector<std::size_t>;  // sorted labels

struct Triangulation {
  std::vector<Simplex> simplices;  // sorted

  bool operator==(const Triangulation&) const = default;
};

/// Lower hull of the lifting p_i -> (p_i, w_i). Ties are broken by placing the points in label
/// order, so the result is always a triangulation refining the w-subdivision.
Triangulation regular_triangulation(const PointConfiguration& a, const Vector& w);

struct GkzVector {
  enum class Flavor { Phi, Rho };
  Vector coords;
  Flavor flavor = Flavor::Phi;
};

/// phi_T(i): total normalized volume of the simplices of T containing point i.
GkzVector phi_vector(const PointConfiguration& a, const Triangulation& t);

/// rho_T(i): the same sum restricted to simplices with one point (i) from i's support and two
/// points from every other support.
GkzVector rho_vector(const CayleyConfiguration& c, const Triangulation& t);

class SecondaryOracle final : public PolytopeOracle {
 public:
  explicit SecondaryOracle(PointConfiguration a);

  OracleKind kind() const override { return OracleKind::Secondary; }
  WellDescribedMeta meta() const override;
  const PointConfiguration& configuration() const { return a_; }

 protected:
  /// phi of the regular triangulation lifted by -c (lower hulls minimize, the oracle maximizes).
  Vector do_optimize(const Vector& c) const override;

 private:
  PointConfiguration a_;
  Scalar total_volume_;
};

class ResultantOracle final : public PolytopeOracle {
 public:
  explicit ResultantOracle(CayleyConfiguration c);

  OracleKind kind() const override { return OracleKind::Resultant; }
  WellDescribedMeta meta() const override;
  const CayleyConfiguration& configuration() const { return c_; }

 protected:
  Vector do_optimize(const Vector& c) const override;

 private:
  CayleyConfiguration c_;
  Scalar total_volume_;
};

/// Accepts configurations of dimension at most 4.
OraclePtr secondary_oracle(PointConfiguration a);
/// Accepts k <= 4 supports in Z^k (k + 1 supports).
OraclePtr resultant_oracle(std::vector<std::vector<Vector>> supports);

struct Circuit {
  std::vector<std::size_t> support;  // sorted labels
  Vector dependence;                 // lambda over `support`, primitive, first entry positive

  std::vector<std::size_t> positive_part() const;
  std::vector<std::size_t> negative_part() const;
};

/// Minimally affinely dependent subsets of size at most k + 2.
std::vector<Circuit> enumerate_circuits(const PointConfiguration& a);

/// phi_{T+} - phi_{T-} over every circuit, canonicalized (undirected).
DirectionSet circuit_directions_secondary(const PointConfiguration& a);

/// rho_{T+} - rho_{T-} over the cubical circuits (two points from every support).
/// Throws GenericityError unless genericity_check(c.embedded) holds.
DirectionSet circuit_directions_resultant(const CayleyConfiguration& c);

/// The edge vector phi_{T+} - phi_{T-} of one circuit, over all labels of `a`.
Vector circuit_phi_difference(const PointConfiguration& a, const Circuit& circuit);
/// The edge vector rho_{T+} - rho_{T-} of one cubical circuit.
Vector circuit_rho_difference(const CayleyConfiguration& c, const Circuit& circuit);

/// Every subset of at most k + 1 points is affinely independent.
bool genericity_check(const PointConfiguration& a);

}  // namespace eskel
