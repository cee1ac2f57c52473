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

#include "planecolor/recolor.h"

#include <algorithm>
#include <string>

#include "planecolor/cycles.h"
#include "planecolor/error.h"

namespace planecolor {
namespace {

std::vector<RecolorStep> solve(const PlaneGraph& g, const Coloring& start,
                               const Coloring& target, RecolorStats* stats,
                               int depth);

void note_depth(RecolorStats* stats, int depth) {
  if (stats) stats->max_depth = std::max(stats->max_depth, depth);
}

void check_budget(const PlaneGraph& g, const std::vector<RecolorStep>& steps,
                  const char* where) {
  const int n = g.vertex_count();
  std::vector<int> counts(n, 0);
  for (const auto& s : steps) {
    if (++counts[s.vertex] > 4 * n) {
      throw Error(ErrorCode::kBudgetExceeded,
                  std::string(where) + ": vertex " + std::to_string(s.vertex) +
                      " recolored more than " + std::to_string(4 * n) +
                      " times");
    }
  }
}

Coloring restrict_coloring(const Coloring& c, const std::vector<Vertex>& to_parent) {
  Coloring out(to_parent.size());
  for (std::size_t i = 0; i < to_parent.size(); ++i) out[i] = c[to_parent[i]];
  return out;
}

std::vector<RecolorStep> replay_around(const PlaneGraph& g,
                                       const Coloring& start,
                                       const Coloring& target, Vertex v,
                                       const std::vector<RecolorStep>& sub) {
  std::vector<bool> is_nbr(g.vertex_count(), false);
  for (Vertex u : g.rotation(v)) is_nbr[u] = true;
  // next_target[i]: target color of the first neighbor step after i.
  std::vector<int> next_target(sub.size(), 0);
  int upcoming = 0;
  for (std::size_t i = sub.size(); i-- > 0;) {
    next_target[i] = upcoming;
    if (is_nbr[sub[i].vertex]) upcoming = sub[i].new_color;
  }
  Coloring cur = start;
  std::vector<RecolorStep> out;
  out.reserve(sub.size() + sub.size() / 2 + 1);
  for (std::size_t i = 0; i < sub.size(); ++i) {
    const auto& s = sub[i];
    if (is_nbr[s.vertex] && s.new_color == cur[v]) {
      bool used[kColorCount + 1] = {};
      used[cur[v]] = true;
      for (Vertex u : g.rotation(v)) used[cur[u]] = true;
      used[s.new_color] = true;
      int pick = 0;
      for (int c = 1; c <= kColorCount && !pick; ++c) {
        if (!used[c] && c != next_target[i]) pick = c;
      }
      if (!pick) {
        throw Error(ErrorCode::kBudgetExceeded,
                    "no evasive color for vertex " + std::to_string(v));
      }
      out.push_back({v, cur[v], pick});
      cur[v] = pick;
    }
    out.push_back(s);
    cur[s.vertex] = s.new_color;
  }
  if (cur[v] != target[v]) out.push_back({v, cur[v], target[v]});
  return out;
}

std::vector<RecolorStep> low_degree_case(const PlaneGraph& g,
                                         const Coloring& start,
                                         const Coloring& target, Vertex v,
                                         RecolorStats* stats, int depth) {
  if (stats) ++stats->low_degree_reductions;
  const Subgraph rest = remove_vertex(g, v);
  auto sub = solve(rest.graph, restrict_coloring(start, rest.to_parent),
                   restrict_coloring(target, rest.to_parent), stats, depth + 1);
  for (auto& s : sub) s.vertex = rest.to_parent[s.vertex];
  return replay_around(g, start, target, v, sub);
}

std::vector<RecolorStep> identification_case(const PlaneGraph& g,
                                             const Coloring& start,
                                             const Coloring& target,
                                             RecolorStats* stats, int depth) {
  if (stats) ++stats->identifications;
  const SafeReduction red = find_safe_reduction(g);
  const auto& cert = red.certificate;
  auto [seq_a, phi_a] = align_colors_across_face(g, start, cert, stats);
  auto [seq_b, phi_b] = align_colors_across_face(g, target, cert, stats);

  const auto& id = red.identified;
  Coloring reduced_a(id.graph.vertex_count()), reduced_b(id.graph.vertex_count());
  for (Vertex x = 0; x < g.vertex_count(); ++x) {
    reduced_a[id.old_to_new[x]] = phi_a[x];
    reduced_b[id.old_to_new[x]] = phi_b[x];
  }
  const auto reduced = make_sequence(
      solve(id.graph, reduced_a, reduced_b, stats, depth + 1));
  const auto lifted = lift_through_identification(reduced, id, cert.v, cert.w);

  std::vector<RecolorStep> out = std::move(seq_a.steps);
  out.insert(out.end(), lifted.steps.begin(), lifted.steps.end());
  for (auto it = seq_b.steps.rbegin(); it != seq_b.steps.rend(); ++it) {
    out.push_back({it->vertex, it->new_color, it->old_color});
  }
  return out;
}

std::vector<RecolorStep> solve(const PlaneGraph& g, const Coloring& start,
                               const Coloring& target, RecolorStats* stats,
                               int depth) {
  note_depth(stats, depth);
  const int n = g.vertex_count();
  if (n == 0 || start == target) return {};
  std::vector<RecolorStep> out;
  if (!g.connected()) {
    for (const auto& part : split_components(g)) {
      auto sub = solve(part.graph, restrict_coloring(start, part.to_parent),
                       restrict_coloring(target, part.to_parent), stats,
                       depth + 1);
      for (auto& s : sub) s.vertex = part.to_parent[s.vertex];
      out.insert(out.end(), sub.begin(), sub.end());
    }
  } else if (n == 1) {
    out.push_back({0, start[0], target[0]});
  } else if (g.min_degree() <= 2) {
    Vertex v = 0;
    for (Vertex x = 1; x < n; ++x) {
      if (g.degree(x) < g.degree(v)) v = x;
    }
    out = low_degree_case(g, start, target, v, stats, depth);
  } else {
    out = identification_case(g, start, target, stats, depth);
  }
  check_budget(g, out, "recolor");
  return out;
}

void require_proper(const PlaneGraph& g, const Coloring& c, const char* what) {
  require_coloring_shape(g, c);
  if (!is_proper(g, c)) {
    throw Error(ErrorCode::kImproperColoring,
                std::string(what) + " coloring has a monochromatic edge");
  }
}

}  // namespace

void RecolorSequence::push(const RecolorStep& step) {
  steps.push_back(step);
  if (step.vertex >= static_cast<Vertex>(per_vertex_counts.size())) {
    per_vertex_counts.resize(step.vertex + 1, 0);
  }
  ++per_vertex_counts[step.vertex];
}

void RecolorSequence::append(const RecolorSequence& other) {
  for (const auto& s : other.steps) push(s);
}

int RecolorSequence::count(Vertex v) const {
  return v >= 0 && v < static_cast<Vertex>(per_vertex_counts.size())
             ? per_vertex_counts[v]
             : 0;
}

int RecolorSequence::max_count() const {
  return per_vertex_counts.empty()
             ? 0
             : *std::max_element(per_vertex_counts.begin(),
                                 per_vertex_counts.end());
}

RecolorSequence make_sequence(std::vector<RecolorStep> steps) {
  RecolorSequence seq;
  seq.steps.reserve(steps.size());
  for (const auto& s : steps) seq.push(s);
  return seq;
}

void require_coloring_shape(const PlaneGraph& g, const Coloring& c, int k) {
  if (static_cast<int>(c.size()) != g.vertex_count()) {
    throw Error(ErrorCode::kImproperColoring,
                "coloring has " + std::to_string(c.size()) + " entries for " +
                    std::to_string(g.vertex_count()) + " vertices");
  }
  for (std::size_t v = 0; v < c.size(); ++v) {
    if (c[v] < 1 || c[v] > k) {
      throw Error(ErrorCode::kImproperColoring,
                  "vertex " + std::to_string(v) + " has color " +
                      std::to_string(c[v]) + " outside 1.." + std::to_string(k));
    }
  }
}

bool is_proper(const PlaneGraph& g, const Coloring& c, int k) {
  if (static_cast<int>(c.size()) != g.vertex_count()) return false;
  for (Vertex v = 0; v < g.vertex_count(); ++v) {
    if (c[v] < 1 || c[v] > k) return false;
    for (Vertex u : g.rotation(v)) {
      if (c[u] == c[v]) return false;
    }
  }
  return true;
}

RecolorSequence recolor_path(const PlaneGraph& g, const Coloring& start,
                             const Coloring& target, RecolorStats* stats) {
  require_proper(g, start, "start");
  require_proper(g, target, "target");
  const auto report = short_odd_cycle_check(g);
  if (report.has_3_cycle() || report.has_5_cycle()) {
    throw Error(ErrorCode::kForbiddenCycle, "graph has a 3- or 5-cycle");
  }
  auto seq = make_sequence(solve(g, start, target, stats, 0));
  seq.per_vertex_counts.resize(g.vertex_count(), 0);
  return seq;
}

RecolorSequence reduce_low_degree(const PlaneGraph& g, const Coloring& start,
                                  const Coloring& target, Vertex v,
                                  RecolorStats* stats) {
  require_proper(g, start, "start");
  require_proper(g, target, "target");
  if (v < 0 || v >= g.vertex_count()) {
    throw Error(ErrorCode::kVertexOutOfRange, "vertex " + std::to_string(v));
  }
  if (g.degree(v) > 2) {
    throw Error(ErrorCode::kBadParameters,
                "vertex " + std::to_string(v) + " has degree above 2");
  }
  const auto report = short_odd_cycle_check(g);
  if (report.has_3_cycle() || report.has_5_cycle()) {
    throw Error(ErrorCode::kForbiddenCycle, "graph has a 3- or 5-cycle");
  }
  auto steps = low_degree_case(g, start, target, v, stats, 0);
  check_budget(g, steps, "reduce_low_degree");
  auto seq = make_sequence(std::move(steps));
  seq.per_vertex_counts.resize(g.vertex_count(), 0);
  return seq;
}

std::pair<RecolorSequence, Coloring> align_colors_across_face(
    const PlaneGraph& g, const Coloring& phi,
    const GoodVertexCertificate& cert, RecolorStats* stats) {
  const int n = g.vertex_count();
  auto bad = [](const std::string& why) {
    return Error(ErrorCode::kCertificateInvalid, why);
  };
  for (Vertex x : {cert.v, cert.v1, cert.v2, cert.v3, cert.w}) {
    if (x < 0 || x >= n) throw bad("vertex out of range");
  }
  if (g.degree(cert.v) != 3) throw bad("v is not a 3-vertex");
  for (Vertex x : {cert.v1, cert.v2, cert.v3}) {
    if (!g.adjacent(cert.v, x)) throw bad("listed neighbor is not adjacent");
  }
  if (cert.v1 == cert.v2 || cert.v1 == cert.v3 || cert.v2 == cert.v3) {
    throw bad("neighbors are not distinct");
  }
  if (cert.w == cert.v || g.adjacent(cert.v, cert.w) ||
      !g.adjacent(cert.w, cert.v1) || !g.adjacent(cert.w, cert.v2)) {
    throw bad("w is not opposite v on a 4-face");
  }
  std::vector<Vertex> heavy;
  for (Vertex x : g.rotation(cert.v3)) {
    if (g.degree(x) >= 4) heavy.push_back(x);
  }
  if (heavy.size() > 3) throw bad("v3 has more than three 4+-neighbors");
  require_coloring_shape(g, phi);

  Coloring cur = phi;
  RecolorSequence seq;
  auto recolor = [&](Vertex x, int c) {
    seq.push({x, cur[x], c});
    cur[x] = c;
  };
  if (stats) ++stats->align_calls;
  const int alpha = phi[cert.w];
  if (phi[cert.v] != alpha) {
    if (phi[cert.v3] != alpha) {
      recolor(cert.v, alpha);
    } else {
      std::vector<Vertex> xs = heavy;
      std::vector<Vertex> nbrs(g.rotation(cert.v3).begin(),
                               g.rotation(cert.v3).end());
      std::sort(nbrs.begin(), nbrs.end());
      for (Vertex x : nbrs) {
        if (xs.size() >= 3) break;
        if (std::find(xs.begin(), xs.end(), x) == xs.end()) xs.push_back(x);
      }
      bool blocked[kColorCount + 1] = {};
      blocked[alpha] = true;
      for (Vertex x : xs) blocked[phi[x]] = true;
      int beta = 1;
      while (blocked[beta]) ++beta;
      for (Vertex u : nbrs) {
        if (cur[u] != beta) continue;
        bool seen[kColorCount + 1] = {};
        seen[cur[u]] = true;
        for (Vertex y : g.rotation(u)) seen[cur[y]] = true;
        int c = 1;
        while (c <= kColorCount && seen[c]) ++c;
        if (c > kColorCount) throw bad("no free color at a neighbor of v3");
        recolor(u, c);
      }
      recolor(cert.v3, beta);
      recolor(cert.v, alpha);
    }
  }
  const int touches = seq.max_count();
  if (stats) stats->max_align_touches = std::max(stats->max_align_touches, touches);
  if (touches > 2) {
    throw Error(ErrorCode::kBudgetExceeded,
                "alignment recolored a vertex " + std::to_string(touches) +
                    " times");
  }
  seq.per_vertex_counts.resize(n, 0);
  return {std::move(seq), std::move(cur)};
}

RecolorSequence lift_through_identification(const RecolorSequence& reduced,
                                            const Identification& id,
                                            Vertex v, Vertex w) {
  std::vector<Vertex> to_old(id.graph.vertex_count(), -1);
  for (Vertex x = 0; x < static_cast<Vertex>(id.old_to_new.size()); ++x) {
    if (x != v && x != w) to_old[id.old_to_new[x]] = x;
  }
  RecolorSequence out;
  for (const auto& s : reduced.steps) {
    if (s.vertex == id.merged) {
      out.push({v, s.old_color, s.new_color});
      out.push({w, s.old_color, s.new_color});
    } else {
      out.push({to_old[s.vertex], s.old_color, s.new_color});
    }
  }
  out.per_vertex_counts.resize(id.old_to_new.size(), 0);
  return out;
}

bool VerificationReport::ok() const {
  return well_formed && start_proper && target_proper && endpoints_match &&
         !first_stale_step && !first_improper_step && within_budget;
}

VerificationReport verify_sequence(const PlaneGraph& g, const Coloring& start,
                                   const Coloring& target,
                                   const RecolorSequence& seq, int k) {
  const int n = g.vertex_count();
  VerificationReport r;
  r.start_proper = is_proper(g, start, k);
  r.target_proper = is_proper(g, target, k);
  r.budget = 4LL * n;
  r.total_budget = 4LL * n * n;
  r.per_vertex_counts.assign(n, 0);
  if (static_cast<int>(start.size()) != n || static_cast<int>(target.size()) != n) {
    r.well_formed = false;
    return r;
  }
  Coloring cur = start;
  bool proper = r.start_proper;
  for (std::size_t i = 0; i < seq.steps.size(); ++i) {
    const auto& s = seq.steps[i];
    if (s.vertex < 0 || s.vertex >= n || s.new_color < 1 || s.new_color > k ||
        s.old_color == s.new_color) {
      r.well_formed = false;
      if (!r.first_malformed_step) r.first_malformed_step = i;
      continue;
    }
    if (cur[s.vertex] != s.old_color && !r.first_stale_step) {
      r.first_stale_step = i;
    }
    cur[s.vertex] = s.new_color;
    ++r.per_vertex_counts[s.vertex];
    ++r.total;
    if (proper) {
      for (Vertex u : g.rotation(s.vertex)) {
        if (cur[u] == s.new_color) {
          proper = false;
          r.first_improper_step = i;
          break;
        }
      }
    }
  }
  r.endpoints_match = cur == target;
  r.max_count = r.per_vertex_counts.empty()
                    ? 0
                    : *std::max_element(r.per_vertex_counts.begin(),
                                        r.per_vertex_counts.end());
  r.within_budget = r.max_count <= r.budget && r.total <= r.total_budget;
  return r;
}

}  // namespace planecolor
