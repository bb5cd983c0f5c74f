#include "eskel/job.hpp"

#include <algorithm>

#include "eskel/error.hpp"
#include "eskel/linalg.hpp"

namespace eskel {

using json = nlohmann::ordered_json;

namespace {

Scalar parse_json_scalar(const json& j) {
  if (j.is_string()) return parse_rational(j.get<std::string>());
  if (j.is_number_integer()) return parse_rational(j.dump());
  if (j.is_number()) throw MalformedInput("non-integer JSON number " + j.dump() + "; write rationals as \"p/q\" strings");
  throw MalformedInput("expected a number or rational string, got " + j.dump());
}

const json& field(const json& j, const char* key, const char* where) {
  if (!j.is_object() || !j.contains(key)) throw MalformedInput(std::string(where) + ": missing \"" + key + "\"");
  return j.at(key);
}

}  // namespace

nlohmann::ordered_json parse_json_text(const std::string& text) {
  try {
    return json::parse(text);
  } catch (const json::parse_error& e) {
    throw MalformedInput(std::string("malformed JSON: ") + e.what());
  }
}

Vector parse_json_vector(const json& j) {
  if (!j.is_array()) throw MalformedInput("expected an array of numbers, got " + j.dump());
  Vector v;
  for (const auto& x : j) v.push_back(parse_json_scalar(x));
  return v;
}

std::vector<Vector> parse_json_points(const json& j) {
  if (!j.is_array()) throw MalformedInput("expected an array of points, got " + j.dump());
  std::vector<Vector> pts;
  for (const auto& x : j) pts.push_back(parse_json_vector(x));
  if (!pts.empty())
    for (const auto& p : pts) require_dimension(p, pts.front().size(), "point");
  return pts;
}

PolytopeSpec parse_polytope(const json& j) {
  const std::string type = field(j, "type", "polytope").get<std::string>();
  PolytopeSpec p;
  if (type == "vpolytope") {
    p.type = PolytopeSpec::Type::VPolytope;
    p.points = parse_json_points(field(j, "points", "vpolytope"));
    if (p.points.empty()) throw MalformedInput("vpolytope: no points");
  } else if (type == "hpolytope") {
    p.type = PolytopeSpec::Type::HPolytope;
    p.a = parse_json_points(field(j, "A", "hpolytope"));
    p.b = parse_json_vector(field(j, "b", "hpolytope"));
    if (p.a.size() != p.b.size()) throw MalformedInput("hpolytope: A and b have different row counts");
  } else if (type == "minkowski") {
    p.type = PolytopeSpec::Type::Minkowski;
    const json& terms = field(j, "terms", "minkowski");
    if (!terms.is_array() || terms.empty()) throw MalformedInput("minkowski: terms must be a nonempty array");
    for (const auto& t : terms) {
      PolytopeSpec::Term term;
      if (t.contains("sign")) {
        const json& s = t.at("sign");
        if (s.is_string()) {
          const auto str = s.get<std::string>();
          term.sign = str == "+" || str == "+1" || str == "1" ? 1 : str == "-" || str == "-1" ? -1 : 0;
        } else if (s.is_number_integer()) {
          term.sign = s.get<int>();
        } else {
          term.sign = 0;
        }
        if (term.sign != 1 && term.sign != -1) throw MalformedInput("minkowski: sign must be +1 or -1, got " + s.dump());
      }
      term.polytope = parse_polytope(field(t, "polytope", "minkowski term"));
      p.terms.push_back(std::move(term));
    }
  } else if (type == "secondary") {
    p.type = PolytopeSpec::Type::Secondary;
    p.points = parse_json_points(field(j, "points", "secondary"));
  } else if (type == "resultant") {
    p.type = PolytopeSpec::Type::Resultant;
    const json& s = field(j, "supports", "resultant");
    if (!s.is_array()) throw MalformedInput("resultant: supports must be an array");
    for (const auto& support : s) p.supports.push_back(parse_json_points(support));
  } else {
    throw MalformedInput("unknown polytope type \"" + type + "\"");
  }
  return p;
}

DirectionRequest parse_directions(const json& j) {
  DirectionRequest r;
  if (j.is_string()) {
    const auto s = j.get<std::string>();
    if (s == "auto") r.kind = DirectionRequest::Kind::Auto;
    else if (s == "edges") r.kind = DirectionRequest::Kind::Edges;
    else if (s == "cubical") r.kind = DirectionRequest::Kind::Cubical;
    else throw MalformedInput("unknown direction keyword \"" + s + "\"");
    return r;
  }
  r.kind = DirectionRequest::Kind::Explicit;
  if (j.is_object()) {
    r.vectors = parse_json_points(field(j, "directions", "direction file"));
    if (j.contains("undirected")) r.undirected = j.at("undirected").get<bool>();
  } else {
    r.vectors = parse_json_points(j);
  }
  return r;
}

JobSpec parse_job(const json& j) {
  if (!j.is_object()) throw MalformedInput("job must be a JSON object");
  JobSpec job;
  job.polytope = parse_polytope(field(j, "polytope", "job"));
  if (j.contains("directions")) job.directions = parse_directions(j.at("directions"));
  if (j.contains("undirected")) job.directions.undirected = j.at("undirected").get<bool>();
  if (j.contains("mode")) {
    const auto m = j.at("mode").get<std::string>();
    if (m == "bfs") job.mode = JobSpec::Mode::Bfs;
    else if (m == "reverse-search") job.mode = JobSpec::Mode::ReverseSearch;
    else throw MalformedInput("unknown mode \"" + m + "\"");
  }
  if (j.contains("objective")) job.objective = parse_json_vector(j.at("objective"));
  return job;
}

std::size_t polytope_dimension(const PolytopeSpec& p) {
  switch (p.type) {
    case PolytopeSpec::Type::VPolytope: return p.points.front().size();
    case PolytopeSpec::Type::HPolytope: return column_count(p.a);
    case PolytopeSpec::Type::Minkowski: return polytope_dimension(p.terms.front().polytope);
    case PolytopeSpec::Type::Secondary: return p.points.size();
    case PolytopeSpec::Type::Resultant: {
      std::size_t n = 0;
      for (const auto& s : p.supports) n += s.size();
      return n;
    }
  }
  return 0;
}

OraclePtr build_oracle(const PolytopeSpec& p) {
  switch (p.type) {
    case PolytopeSpec::Type::VPolytope: return std::make_shared<VPolytopeOracle>(p.points);
    case PolytopeSpec::Type::HPolytope: return std::make_shared<HPolytopeOracle>(p.a, p.b);
    case PolytopeSpec::Type::Minkowski: {
      std::vector<SignedTerm> terms;
      for (const auto& t : p.terms) terms.push_back({t.sign, build_oracle(t.polytope)});
      return std::make_shared<SignedMinkowskiOracle>(std::move(terms));
    }
    case PolytopeSpec::Type::Secondary: return secondary_oracle(PointConfiguration(p.points));
    case PolytopeSpec::Type::Resultant: return resultant_oracle(p.supports);
  }
  throw InternalError("unhandled polytope type");
}

std::optional<ExplicitPolytope> explicit_polytope(const PolytopeSpec& p) {
  if (p.type == PolytopeSpec::Type::VPolytope) return ExplicitPolytope::from_points(p.points);
  if (p.type == PolytopeSpec::Type::HPolytope) return ExplicitPolytope::from_inequalities(p.a, p.b);
  return std::nullopt;
}

namespace {

ResolvedDirections auto_directions(const PolytopeSpec& p) {
  switch (p.type) {
    case PolytopeSpec::Type::VPolytope:
      return {pairwise_differences(p.points), {}};
    case PolytopeSpec::Type::HPolytope:
      return {pairwise_differences(bf_vertices(*explicit_polytope(p))),
              {"hpolytope directions derived from brute-force vertex enumeration"}};
    case PolytopeSpec::Type::Minkowski: {
      ResolvedDirections out;
      bool first = true;
      for (const auto& t : p.terms) {
        if (t.sign < 0) continue;
        ResolvedDirections part = auto_directions(t.polytope);
        out.set = first ? part.set : out.set.merged(part.set);
        first = false;
        out.notes.insert(out.notes.end(), part.notes.begin(), part.notes.end());
      }
      if (first) throw MalformedInput("minkowski: no positive term to take directions from");
      return out;
    }
    case PolytopeSpec::Type::Secondary:
      return {circuit_directions_secondary(PointConfiguration(p.points)), {}};
    case PolytopeSpec::Type::Resultant: {
      CayleyConfiguration c = cayley_embedding(p.supports);
      if (genericity_check(c.embedded)) return {circuit_directions_resultant(c), {}};
      return {circuit_directions_secondary(c.embedded),
              {"Cayley configuration is not generic; using the circuit directions of its secondary polytope, "
               "which has the resultant polytope as a Minkowski summand"}};
    }
  }
  throw InternalError("unhandled polytope type");
}

}  // namespace

ResolvedDirections resolve_directions(const PolytopeSpec& p, const DirectionRequest& request) {
  ResolvedDirections out;
  switch (request.kind) {
    case DirectionRequest::Kind::Auto:
      out = auto_directions(p);
      break;
    case DirectionRequest::Kind::Edges: {
      auto ex = explicit_polytope(p);
      if (!ex) throw MalformedInput("\"edges\" directions need a vpolytope or hpolytope");
      SkeletonGraph g = bf_skeleton(*ex);
      std::vector<Vector> raw;
      for (const auto& [i, j] : g.edges) raw.push_back(sub(g.vertices[j], g.vertices[i]));
      out.set = DirectionSet::undirected(raw, DirectionSource::PairwiseDifferences);
      out.notes.push_back("pairwise differences filtered to brute-force edges");
      break;
    }
    case DirectionRequest::Kind::Cubical:
      if (p.type != PolytopeSpec::Type::Resultant) throw MalformedInput("\"cubical\" directions need a resultant");
      out.set = circuit_directions_resultant(cayley_embedding(p.supports));
      break;
    case DirectionRequest::Kind::Explicit:
      out.set = request.undirected ? DirectionSet::undirected(request.vectors, DirectionSource::UserProvided)
                                   : DirectionSet::directed(request.vectors, DirectionSource::UserProvided);
      break;
  }
  const std::size_t d = polytope_dimension(p);
  for (const auto& e : out.set.directions()) require_dimension(e, d, "direction");
  return out;
}

json to_json(const Vector& v) {
  json arr = json::array();
  for (const auto& x : v) arr.push_back(to_string(x));
  return arr;
}

json to_json(const SkeletonGraph& g) {
  json out = json::object();
  json verts = json::array();
  for (const auto& v : g.vertices) verts.push_back(to_json(v));
  json edges = json::array();
  for (const auto& [i, j] : g.edges) edges.push_back(json::array({i, j}));
  out["vertices"] = std::move(verts);
  out["edges"] = std::move(edges);
  return out;
}

json to_json(const DirectionSet& d) {
  json out = json::object();
  out["source"] = std::string(to_string(d.source()));
  json dirs = json::array();
  for (const auto& e : d.directions()) dirs.push_back(to_json(e));
  out["directions"] = std::move(dirs);
  return out;
}

SkeletonGraph graph_from_json(const json& j) {
  std::vector<Vector> verts = parse_json_points(field(j, "vertices", "graph"));
  std::vector<std::pair<Vector, Vector>> edges;
  const json& e = field(j, "edges", "graph");
  if (!e.is_array()) throw MalformedInput("graph: edges must be an array");
  for (const auto& pair : e) {
    if (!pair.is_array() || pair.size() != 2) throw MalformedInput("graph: bad edge " + pair.dump());
    auto i = pair[0].get<std::size_t>(), k = pair[1].get<std::size_t>();
    if (i >= verts.size() || k >= verts.size()) throw MalformedInput("graph: edge index out of range");
    edges.emplace_back(verts[i], verts[k]);
  }
  return make_skeleton_graph(std::move(verts), edges);
}

void write_dot(std::ostream& out, const SkeletonGraph& g) {
  out << "graph skeleton {\n";
  for (std::size_t i = 0; i < g.vertices.size(); ++i)
    out << "  v" << i << " [label=\"" << to_string(g.vertices[i]) << "\"];\n";
  for (const auto& [i, j] : g.edges) out << "  v" << i << " -- v" << j << ";\n";
  out << "}\n";
}

JobResult run_job(const JobSpec& job, const RunOptions& options, std::ostream* stream) {
  OraclePtr oracle = build_oracle(job.polytope);
  JobResult result;
  result.directions = resolve_directions(job.polytope, job.directions);
  SkeletonOptions sk;
  sk.threads = options.threads;

  if (job.mode == JobSpec::Mode::Bfs) {
    result.graph = edge_skeleton(*oracle, result.directions.set, sk);
  } else {
    Vector c = job.objective ? *job.objective : Vector(oracle->dimension(), Scalar(1));
    SearchOrder order(c);
    GraphCollector collector;
    ReverseSearchSink collect = collector.sink();
    ReverseSearchSink sink = collect;
    if (stream) {
      ReverseSearchSink lines = line_sink(*stream);
      sink.vertex = [collect, lines](const Vector& v) {
        collect.vertex(v);
        lines.vertex(v);
      };
      sink.edge = [collect, lines](const Vector& a, const Vector& b) {
        collect.edge(a, b);
        lines.edge(a, b);
      };
    }
    ReverseSearchOptions rs;
    rs.skeleton = sk;
    result.reverse_search = rs_edge_skeleton(*oracle, result.directions.set, order, sink, rs);
    result.graph = collector.graph();
  }
  result.check = check_skeleton(result.graph, result.directions.set, oracle.get());
  return result;
}

}  // namespace eskel
