#pragma once

// Job descriptions (JSON) and their execution: oracle construction, automatic edge
// directions, skeleton runs, and serialization of the results.

#include <cstddef>
#include <optional>
#include <ostream>
#include <string>
#include <vector>

#include <json.hpp>

#include "eskel/gkz.hpp"
#include "eskel/reverse_search.hpp"
#include "eskel/verify.hpp"

namespace eskel {

struct PolytopeSpec {
  enum class Type { VPolytope, HPolytope, Minkowski, Secondary, Resultant };
  struct Term;

  Type type = Type::VPolytope;
  std::vector<Vector> points;                 // vpolytope, secondary
  Matrix a;                                   // hpolytope
  Vector b;
  std::vector<Term> terms;                    // minkowski
  std::vector<std::vector<Vector>> supports;  // resultant
};

struct PolytopeSpec::Term {
  int sign = 1;
  PolytopeSpec polytope;
};

/// "auto": the default superset for the polytope type. "edges": vpolytope/hpolytope only, the
/// brute-force edge directions. "cubical": resultant only, strict cubical circuits.
struct DirectionRequest {
  enum class Kind { Auto, Edges, Cubical, Explicit };
  Kind kind = Kind::Auto;
  std::vector<Vector> vectors;
  bool undirected = true;
};

struct JobSpec {
  enum class Mode { Bfs, ReverseSearch };

  PolytopeSpec polytope;
  DirectionRequest directions;
  Mode mode = Mode::Bfs;
  std::optional<Vector> objective;  // search order for reverse search; all ones otherwise
};

Vector parse_json_vector(const nlohmann::ordered_json& j);
std::vector<Vector> parse_json_points(const nlohmann::ordered_json& j);
PolytopeSpec parse_polytope(const nlohmann::ordered_json& j);
DirectionRequest parse_directions(const nlohmann::ordered_json& j);
JobSpec parse_job(const nlohmann::ordered_json& j);
/// Parses text, mapping JSON syntax errors to MalformedInput.
nlohmann::ordered_json parse_json_text(const std::string& text);

std::size_t polytope_dimension(const PolytopeSpec& p);
OraclePtr build_oracle(const PolytopeSpec& p);
/// vpolytope and hpolytope specs as explicit polytopes; nullopt for the other types.
std::optional<ExplicitPolytope> explicit_polytope(const PolytopeSpec& p);

struct ResolvedDirections {
  DirectionSet set;
  std::vector<std::string> notes;
};

ResolvedDirections resolve_directions(const PolytopeSpec& p, const DirectionRequest& request);

nlohmann::ordered_json to_json(const Vector& v);
nlohmann::ordered_json to_json(const SkeletonGraph& g);
nlohmann::ordered_json to_json(const DirectionSet& d);
SkeletonGraph graph_from_json(const nlohmann::ordered_json& j);
void write_dot(std::ostream& out, const SkeletonGraph& g);

struct RunOptions {
  std::size_t threads = 1;
};

struct JobResult {
  SkeletonGraph graph;
  SkeletonCheck check;
  ResolvedDirections directions;
  std::optional<ReverseSearchSummary> reverse_search;
};

/// Resolves directions and runs the traversal. In reverse-search mode `stream`, when given,
/// receives the vertex/edge lines as they are produced.
JobResult run_job(const JobSpec& job, const RunOptions& options, std::ostream* stream = nullptr);

}  // namespace eskel
