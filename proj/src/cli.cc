// Copyright 2026 The planecolor Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include "planecolor/cli.h"

#include <CLI11.hpp>

#include <cstdint>
#include <sstream>
#include <string>

#include "planecolor/cycles.h"
#include "planecolor/discharge.h"
#include "planecolor/error.h"
#include "planecolor/gen.h"
#include "planecolor/io.h"
#include "planecolor/oracle.h"
#include "planecolor/recolor.h"
#include "planecolor/structure.h"

namespace planecolor {
namespace {

struct Options {
  std::string graph;
  std::string from;
  std::string to;
  std::string sequence;
  std::string out;
  std::string spec;
  int k = kColorCount;
  std::uint64_t seed = 1;
  bool seed_given = false;
  std::int64_t max_oracle_nodes = kDefaultOracleLimit;
};

class Usage : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

std::string join(const std::vector<Vertex>& vs) {
  std::string s;
  for (Vertex v : vs) {
    if (!s.empty()) s += ' ';
    s += std::to_string(v);
  }
  return s;
}

PlaneGraph load_graph(const Options& o) {
  if (o.graph.empty()) throw Usage("--graph is required");
  return parse_graph(read_text_file(o.graph));
}

Coloring load_coloring(const std::string& path, const char* flag) {
  if (path.empty()) throw Usage(std::string(flag) + " is required");
  return parse_coloring(read_text_file(path));
}

void emit(const Options& o, std::ostream& out, const std::string& text) {
  if (o.out.empty()) {
    out << text;
  } else {
    write_text_file(o.out, text);
  }
}

int cmd_check(const Options& o, std::ostream& out) {
  const auto g = load_graph(o);
  const auto report = forbidden_cycle_check(g);
  const bool euler = euler_identity_holds(g);
  const bool partition = face_partition_holds(g);
  std::ostringstream s;
  s << "vertices " << g.vertex_count() << "\n";
  s << "edges " << g.edge_count() << "\n";
  s << "faces " << g.faces().size() << "\n";
  s << "euler " << (euler ? "ok" : "FAIL") << "\n";
  s << "face_partition " << (partition ? "ok" : "FAIL") << "\n";
  if (report.three_cycle) {
    s << "3-cycle found: " << join(*report.three_cycle) << "\n";
  } else {
    s << "3-cycle none\n";
  }
  if (report.five_cycle) {
    s << "5-cycle found: " << join(*report.five_cycle) << "\n";
  } else {
    s << "5-cycle none\n";
  }
  s << "separating_7_cycles " << report.separating_7_cycles.size() << "\n";
  for (const auto& c : report.separating_7_cycles) {
    s << "separating_7_cycle " << join(c.cycle) << " interior "
      << c.interior_vertex_count << "\n";
  }
  emit(o, out, s.str());
  const bool bad = !euler || !partition || report.has_3_cycle() || report.has_5_cycle();
  return bad ? kExitViolation : kExitOk;
}

int cmd_faces(const Options& o, std::ostream& out) {
  const auto g = load_graph(o);
  std::ostringstream s;
  const auto& faces = g.faces();
  for (std::size_t i = 0; i < faces.size(); ++i) {
    s << "face " << i << " length " << faces[i].length()
      << (faces[i].is_outer ? " outer" : "") << ":";
    for (Vertex v : faces[i].vertices()) s << " " << v;
    s << "\n";
  }
  emit(o, out, s.str());
  return kExitOk;
}

int cmd_good_vertex(const Options& o, std::ostream& out) {
  const auto g = load_graph(o);
  const auto c = find_good_vertex(g);
  std::ostringstream s;
  s << "v " << c.v << "\nv1 " << c.v1 << "\nv2 " << c.v2 << "\nv3 " << c.v3
    << "\nw " << c.w << "\nlevel_of_v3 " << c.level_of_v3 << "\nface "
    << join(c.opposite_face.vertices()) << "\n";
  emit(o, out, s.str());
  return kExitOk;
}

int cmd_levels(const Options& o, std::ostream& out) {
  const auto g = load_graph(o);
  const auto type = classify_type(g);
  const auto levels = compute_levels(g, type);
  std::ostringstream s;
  s << "type " << graph_type_name(type) << "\n";
  s << "t " << join(levels.t) << "\n";
  for (Vertex v = 0; v < g.vertex_count(); ++v) {
    s << "level " << v << " " << levels.level[v] << "\n";
  }
  emit(o, out, s.str());
  return kExitOk;
}

int cmd_audit(const Options& o, std::ostream& out) {
  const auto report = audit_key_lemma(load_graph(o));
  emit(o, out, format_audit(report));
  return report.passed() ? kExitOk : kExitViolation;
}

std::string summary(const VerificationReport& r) {
  std::ostringstream s;
  s << "steps " << r.total << "\n";
  s << "budget " << r.budget << ", max used " << r.max_count << "\n";
  s << "total " << r.total << " of " << r.total_budget << "\n";
  s << "verified " << (r.ok() ? "ok" : "FAIL") << "\n";
  if (r.first_improper_step) s << "improper_step " << *r.first_improper_step << "\n";
  if (r.first_stale_step) s << "stale_step " << *r.first_stale_step << "\n";
  if (r.first_malformed_step) s << "malformed_step " << *r.first_malformed_step << "\n";
  if (!r.endpoints_match) s << "endpoints mismatch\n";
  if (!r.start_proper) s << "start improper\n";
  if (!r.target_proper) s << "target improper\n";
  return s.str();
}

int cmd_recolor(const Options& o, std::ostream& out, std::ostream& err) {
  if (o.k != kColorCount) throw Usage("recolor supports only --k 5");
  const auto g = load_graph(o);
  const auto start = load_coloring(o.from, "--from");
  const auto target = load_coloring(o.to, "--to");
  const auto seq = recolor_path(g, start, target);
  const auto report = verify_sequence(g, start, target, seq);
  if (o.out.empty()) {
    out << serialize_sequence(seq);
    err << summary(report);
  } else {
    write_text_file(o.out, serialize_sequence(seq));
    out << summary(report);
  }
  return report.ok() ? kExitOk : kExitViolation;
}

int cmd_verify(const Options& o, std::ostream& out) {
  const auto g = load_graph(o);
  const auto start = load_coloring(o.from, "--from");
  const auto target = load_coloring(o.to, "--to");
  if (o.sequence.empty()) throw Usage("--sequence is required");
  const auto seq = parse_sequence(read_text_file(o.sequence));
  const auto report = verify_sequence(g, start, target, seq, o.k);
  emit(o, out, summary(report));
  return report.ok() ? kExitOk : kExitViolation;
}

int cmd_oracle_distance(const Options& o, std::ostream& out) {
  const auto g = load_graph(o);
  const auto a = load_coloring(o.from, "--from");
  const auto b = load_coloring(o.to, "--to");
  const auto rg = build_reconfig_graph(g, o.k, o.max_oracle_nodes);
  const auto d = distance(rg, a, b);
  std::ostringstream s;
  s << "nodes " << rg.node_count() << "\n";
  s << "distance " << (d ? std::to_string(*d) : "unreachable") << "\n";
  emit(o, out, s.str());
  return kExitOk;
}

int cmd_oracle_diameter(const Options& o, std::ostream& out) {
  const auto g = load_graph(o);
  const auto rg = build_reconfig_graph(g, o.k, o.max_oracle_nodes);
  const auto d = diameter(rg);
  const long long bound = 4LL * g.vertex_count() * g.vertex_count();
  const auto cycles = short_odd_cycle_check(g);
  const bool covered = o.k == kColorCount && !cycles.has_3_cycle() && !cycles.has_5_cycle();
  const bool within = d.connected && d.value <= bound;
  std::ostringstream s;
  s << "nodes " << rg.node_count() << "\n";
  s << "diameter " << d.value << "\n";
  s << "connected " << (d.connected ? "yes" : "no") << "\n";
  s << "bound " << bound << " " << (within ? "ok" : "exceeded") << "\n";
  emit(o, out, s.str());
  return covered && !within ? kExitViolation : kExitOk;
}

int cmd_generate(Options o, std::ostream& out) {
  auto spec = parse_generator_spec(o.spec);
  if (spec.family == "coloring") {
    for (const auto& [key, value] : spec.params) {
      if (key != "seed") throw Error(ErrorCode::kBadParameters, "unknown key '" + key + "' for coloring");
    }
    std::uint64_t seed = o.seed;
    if (const auto it = spec.params.find("seed"); it != spec.params.end()) {
      try {
        seed = std::stoull(it->second);
      } catch (const std::exception&) {
        throw Error(ErrorCode::kBadParameters, "seed must be an integer");
      }
    }
    emit(o, out, serialize_coloring(random_proper_coloring(load_graph(o), o.k, seed)));
    return kExitOk;
  }
  if (o.seed_given && !spec.params.count("seed")) {
    spec.params["seed"] = std::to_string(o.seed);
  }
  emit(o, out, serialize_graph(generate(spec)));
  return kExitOk;
}

}  // namespace

int run_cli(int argc, const char* const* argv, std::ostream& out,
            std::ostream& err) {
  CLI::App app{"Plane graph 5-coloring reconfiguration engine", "planecolor"};
  app.require_subcommand(1);
  Options o;

  auto graph_opt = [&](CLI::App* sub) {
    sub->add_option("--graph", o.graph, "Graph file");
  };
  auto out_opt = [&](CLI::App* sub) {
    sub->add_option("--out", o.out, "Output file (default stdout)");
  };
  auto pair_opts = [&](CLI::App* sub) {
    sub->add_option("--from", o.from, "Start coloring file");
    sub->add_option("--to", o.to, "Target coloring file");
  };
  auto k_opt = [&](CLI::App* sub) {
    sub->add_option("--k", o.k, "Number of colors")->check(CLI::Range(1, 64));
  };
  auto limit_opt = [&](CLI::App* sub) {
    sub->add_option("--max-oracle-nodes", o.max_oracle_nodes,
                    "Refuse when k^n exceeds this")
        ->check(CLI::PositiveNumber);
  };

  auto* check = app.add_subcommand("check", "Euler audit and forbidden-cycle report");
  auto* faces = app.add_subcommand("faces", "List face walks");
  auto* good = app.add_subcommand("good-vertex", "Find a good vertex with a safe identification");
  auto* levels = app.add_subcommand("levels", "Classify the graph and print vertex levels");
  auto* audit = app.add_subcommand("audit", "Discharging audit");
  for (auto* sub : {check, faces, good, levels, audit}) {
    graph_opt(sub);
    out_opt(sub);
  }
  auto* recolor = app.add_subcommand("recolor", "Recolor --from into --to");
  graph_opt(recolor);
  pair_opts(recolor);
  out_opt(recolor);
  k_opt(recolor);
  auto* verify = app.add_subcommand("verify", "Check a recoloring sequence");
  graph_opt(verify);
  pair_opts(verify);
  verify->add_option("--sequence", o.sequence, "Sequence file");
  out_opt(verify);
  k_opt(verify);
  auto* odist = app.add_subcommand("oracle-distance", "Exact recoloring distance");
  auto* odiam = app.add_subcommand("oracle-diameter", "Exact diameter of the coloring graph");
  for (auto* sub : {odist, odiam}) {
    graph_opt(sub);
    out_opt(sub);
    k_opt(sub);
    limit_opt(sub);
  }
  pair_opts(odist);
  auto* gen = app.add_subcommand("generate", "Generate a graph, or a coloring with coloring:seed=<s>");
  gen->add_option("spec", o.spec, "family:key=val,...")->required();
  gen->add_option("--seed", o.seed, "Seed")->each([&](const std::string&) { o.seed_given = true; });
  graph_opt(gen);
  out_opt(gen);
  k_opt(gen);

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    if (code == 0) return kExitOk;
    err << app.help();
    return kExitUsage;
  }

  try {
    if (check->parsed()) return cmd_check(o, out);
    if (faces->parsed()) return cmd_faces(o, out);
    if (good->parsed()) return cmd_good_vertex(o, out);
    if (levels->parsed()) return cmd_levels(o, out);
    if (audit->parsed()) return cmd_audit(o, out);
    if (recolor->parsed()) return cmd_recolor(o, out, err);
    if (verify->parsed()) return cmd_verify(o, out);
    if (odist->parsed()) return cmd_oracle_distance(o, out);
    if (odiam->parsed()) return cmd_oracle_diameter(o, out);
    if (gen->parsed()) return cmd_generate(o, out);
  } catch (const Usage& e) {
    err << "error: " << e.what() << "\n" << app.help();
    return kExitUsage;
  } catch (const Error& e) {
    err << "error: " << e.what() << "\n";
    switch (e.code()) {
      case ErrorCode::kParse:
      case ErrorCode::kBadParameters:
      case ErrorCode::kTooLarge:
      case ErrorCode::kVertexOutOfRange:
      case ErrorCode::kInconsistentRotation:
      case ErrorCode::kLoopOrMultiEdge:
      case ErrorCode::kEulerViolation:
      case ErrorCode::kInvalidOuterFace:
      case ErrorCode::kNodeMissing:
        return kExitUsage;
      default:
        return kExitViolation;
    }
  }
  return kExitUsage;
}

}  // namespace planecolor
