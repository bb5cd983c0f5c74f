#include "eskel/cli.hpp"

#include <algorithm>
#include <fstream>
#include <iostream>
#include <sstream>

#include <CLI11.hpp>

#include "eskel/error.hpp"
#include "eskel/job.hpp"

namespace eskel {

namespace {

using json = nlohmann::ordered_json;

std::string read_source(const std::string& path, std::istream& in) {
  std::ostringstream buf;
  if (path == "-") {
    buf << in.rdbuf();
  } else {
    std::ifstream file(path);
    if (!file) throw MalformedInput("cannot read " + path);
    buf << file.rdbuf();
  }
  return buf.str();
}

Vector parse_objective(const std::string& text) {
  Vector c;
  std::stringstream ss(text);
  std::string item;
  while (std::getline(ss, item, ',')) c.push_back(parse_rational(item));
  if (c.empty()) throw MalformedInput("empty objective");
  return c;
}

DirectionRequest direction_flag(const std::string& value, std::istream& in) {
  if (value == "auto" || value == "edges" || value == "cubical") return parse_directions(json(value));
  return parse_directions(parse_json_text(read_source(value, in)));
}

class Output {
 public:
  Output(const std::string& path, std::ostream& fallback) {
    if (!path.empty()) {
      file_.open(path);
      if (!file_) throw MalformedInput("cannot write " + path);
    }
    stream_ = path.empty() ? &fallback : &file_;
  }
  std::ostream& operator*() { return *stream_; }

 private:
  std::ofstream file_;
  std::ostream* stream_;
};

struct Flags {
  std::string input;
  std::string directions;
  std::string output;
  std::string format = "json";
  std::string objective;
  std::string graph;
  bool reverse_search = false;
  bool check = false;
  std::size_t threads = 1;
};

JobSpec load_job(const Flags& f, std::istream& in) {
  JobSpec job = parse_job(parse_json_text(read_source(f.input, in)));
  if (!f.directions.empty()) {
    bool undirected = job.directions.undirected;
    job.directions = direction_flag(f.directions, in);
    if (job.directions.kind != DirectionRequest::Kind::Explicit) job.directions.undirected = undirected;
  }
  if (f.reverse_search) job.mode = JobSpec::Mode::ReverseSearch;
  if (!f.objective.empty()) job.objective = parse_objective(f.objective);
  return job;
}

/// Post-certification: brute force for explicit inputs, pairwise edge LPs over the found vertices otherwise.
bool certify(const JobSpec& job, const SkeletonGraph& g, std::ostream& err) {
  if (auto ex = explicit_polytope(job.polytope)) {
    CrossCheckReport r = cross_check(*ex, g);
    err << "check: " << r.summary() << '\n';
    return r.ok();
  }
  auto edges = bf_edges(g.vertices);
  if (edges != g.edges) {
    err << "check: edge LPs over the reported vertices disagree with the reported edges\n";
    return false;
  }
  err << "check: OK (" << g.edges.size() << " edges certified)\n";
  return true;
}

int skeleton_command(const Flags& f, std::istream& in, std::ostream& out, std::ostream& err) {
  JobSpec job = load_job(f, in);
  if (f.format != "json" && f.format != "dot" && f.format != "lines")
    throw MalformedInput("unknown format " + f.format);
  if (f.format == "lines" && job.mode != JobSpec::Mode::ReverseSearch)
    throw MalformedInput("--format lines streams a reverse search; add --reverse-search");

  Output sink(f.output, out);
  JobResult r = run_job(job, {f.threads}, f.format == "lines" ? &*sink : nullptr);
  for (const auto& note : r.directions.notes) err << "note: " << note << '\n';
  if (f.format == "json") *sink << to_json(r.graph).dump() << '\n';
  if (f.format == "dot") write_dot(*sink, r.graph);
  if (r.reverse_search) {
    const auto& s = *r.reverse_search;
    err << "reverse search: " << s.vertices << " vertices, " << s.edges << " edges, depth " << s.max_depth
        << ", peak retained " << s.peak_retained << ", neighbor computations " << s.neighbor_computations
        << ", optimize calls " << s.optimize_calls << '\n';
  }

  int code = 0;
  if (f.check && !certify(job, r.graph, err)) code = 1;
  for (const auto& p : r.check.problems) err << "diagnostic: " << p << '\n';
  if (code == 0 && r.check.directions_likely_incomplete()) {
    err << "diagnostic: the direction set is probably missing edge directions; output may be a subgraph\n";
    code = 2;
  }
  return code;
}

int directions_command(const Flags& f, std::istream& in, std::ostream& out, std::ostream& err) {
  JobSpec job = load_job(f, in);
  ResolvedDirections d = resolve_directions(job.polytope, job.directions);
  for (const auto& note : d.notes) err << "note: " << note << '\n';
  Output sink(f.output, out);
  *sink << to_json(d.set).dump() << '\n';
  return 0;
}

int oracle_command(const Flags& f, std::istream& in, std::ostream& out) {
  JobSpec job = load_job(f, in);
  if (!job.objective) throw MalformedInput("oracle needs --objective");
  OraclePtr oracle = build_oracle(job.polytope);
  json result = json::object();
  result["point"] = to_json(oracle->optimize(*job.objective));
  Output sink(f.output, out);
  *sink << result.dump() << '\n';
  return 0;
}

int verify_command(const Flags& f, std::istream& in, std::ostream& out, std::ostream& err) {
  JobSpec job = load_job(f, in);
  auto ex = explicit_polytope(job.polytope);
  if (!ex) throw MalformedInput("verify needs a vpolytope or hpolytope");
  SkeletonGraph g;
  if (!f.graph.empty()) {
    g = graph_from_json(parse_json_text(read_source(f.graph, in)));
  } else {
    JobResult r = run_job(job, {f.threads});
    for (const auto& note : r.directions.notes) err << "note: " << note << '\n';
    g = r.graph;
  }
  CrossCheckReport report = cross_check(*ex, g);
  Output sink(f.output, out);
  *sink << report.summary() << '\n';
  return report.ok() ? 0 : 1;
}

}  // namespace

int run_cli(const std::vector<std::string>& args, std::istream& in, std::ostream& out, std::ostream& err) {
  CLI::App app{"Edge skeletons of polytopes given by optimization oracles"};
  app.require_subcommand(1);
  Flags f;

  auto common = [&f](CLI::App* sub) {
    sub->add_option("--input,-i", f.input, "job JSON file, - for stdin")->required();
    sub->add_option("--directions,-d", f.directions, "auto, edges, cubical, or a JSON file of directions");
    sub->add_option("--output,-o", f.output, "output file (default stdout)");
    sub->add_option("--objective", f.objective, "comma-separated objective, e.g. 1,-1/2");
    sub->add_option("--threads", f.threads, "ray-shooting fan-out per vertex")->check(CLI::PositiveNumber);
  };
  auto* skeleton = app.add_subcommand("skeleton", "compute the vertices and edges");
  common(skeleton);
  skeleton->add_flag("--reverse-search", f.reverse_search, "depth-first reverse search instead of BFS");
  skeleton->add_option("--format", f.format, "json, dot, or lines (reverse search stream)");
  skeleton->add_flag("--check", f.check, "certify the result with independent LPs");
  auto* directions = app.add_subcommand("directions", "print the edge-direction set only");
  common(directions);
  auto* oracle = app.add_subcommand("oracle", "one optimize call");
  common(oracle);
  auto* verify = app.add_subcommand("verify", "brute-force cross-check of an explicit polytope");
  common(verify);
  verify->add_option("--graph", f.graph, "graph JSON to check instead of computing one");

  try {
    std::vector<std::string> reversed(args.rbegin(), args.rend());
    app.parse(reversed);
  } catch (const CLI::ParseError& e) {
    return app.exit(e, out, err) == 0 ? 0 : 1;
  }

  try {
    if (*skeleton) return skeleton_command(f, in, out, err);
    if (*directions) return directions_command(f, in, out, err);
    if (*oracle) return oracle_command(f, in, out);
    if (*verify) return verify_command(f, in, out, err);
  } catch (const GenericityError& e) {
    err << "genericity error: " << e.what() << '\n';
  } catch (const UnresolvedRay& e) {
    err << "unresolved ray shoot: " << e.what() << '\n';
  } catch (const MalformedInput& e) {
    err << "malformed input: " << e.what() << '\n';
  } catch (const PreconditionError& e) {
    err << "precondition violated: " << e.what() << '\n';
  } catch (const InternalError& e) {
    err << "internal error: " << e.what() << '\n';
  } catch (const nlohmann::ordered_json::exception& e) {
    err << "malformed input: " << e.what() << '\n';
  } catch (const std::exception& e) {
    err << "error: " << e.what() << '\n';
  }
  return 1;
}

}  // namespace eskel
