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

#include "planecolor/structure.h"

#include <algorithm>
#include <string>

#include "planecolor/cycles.h"
#include "planecolor/error.h"

namespace planecolor {

std::string_view graph_type_name(GraphType type) {
  switch (type) {
    case GraphType::kType1: return "Type1";
    case GraphType::kType2: return "Type2";
    case GraphType::kNeither: return "Neither";
  }
  return "Neither";
}

std::vector<Vertex> outer_face_vertices(const PlaneGraph& g) {
  std::vector<Vertex> out = g.outer_face().vertices();
  std::sort(out.begin(), out.end());
  out.erase(std::unique(out.begin(), out.end()), out.end());
  return out;
}

GraphType classify_type(const PlaneGraph& g) {
  const int n = g.vertex_count();
  if (n == 0) return GraphType::kNeither;
  const int delta = g.min_degree();
  if (delta >= 2 && g.outer_face().length() == 7) {
    const auto boundary = outer_face_vertices(g);
    bool twos_on_boundary = true;
    for (Vertex v = 0; v < n; ++v) {
      if (g.degree(v) == 2 &&
          !std::binary_search(boundary.begin(), boundary.end(), v)) {
        twos_on_boundary = false;
        break;
      }
    }
    if (static_cast<int>(boundary.size()) < n && twos_on_boundary) {
      return GraphType::kType2;
    }
  }
  return delta >= 3 ? GraphType::kType1 : GraphType::kNeither;
}

LevelAssignment compute_levels_with_t(const PlaneGraph& g,
                                      std::vector<Vertex> t) {
  const int n = g.vertex_count();
  std::sort(t.begin(), t.end());
  t.erase(std::unique(t.begin(), t.end()), t.end());
  LevelAssignment out;
  out.level.assign(n, 3);
  for (Vertex v : t) {
    if (v < 0 || v >= n) throw Error(ErrorCode::kVertexOutOfRange, std::to_string(v));
    out.level[v] = 4;
  }
  out.t = std::move(t);
  for (Vertex v = 0; v < n; ++v) {
    if (out.level[v] != 4 && g.degree(v) <= 3) out.level[v] = 1;
  }
  for (Vertex v = 0; v < n; ++v) {
    if (out.level[v] != 3) continue;
    const auto rot = g.rotation(v);
    const auto remaining = std::count_if(
        rot.begin(), rot.end(), [&](Vertex u) { return out.level[u] != 1; });
    if (remaining <= 3) out.level[v] = 2;
  }
  return out;
}

LevelAssignment compute_levels(const PlaneGraph& g, GraphType type) {
  if (type == GraphType::kType2) {
    return compute_levels_with_t(g, outer_face_vertices(g));
  }
  return compute_levels_with_t(g, {});
}

std::vector<GoodVertexCertificate> enumerate_good_vertices(
    const PlaneGraph& g, const LevelAssignment& levels,
    const std::vector<Vertex>& restrict_outside) {
  std::vector<bool> banned(g.vertex_count(), false);
  for (Vertex x : restrict_outside) {
    if (x >= 0 && x < g.vertex_count()) banned[x] = true;
  }
  std::vector<GoodVertexCertificate> out;
  for (Vertex v = 0; v < g.vertex_count(); ++v) {
    if (g.degree(v) != 3 || banned[v]) continue;
    const auto rot = g.rotation(v);
    int face_at[3];
    for (int i = 0; i < 3; ++i) face_at[i] = g.face_left_of({v, rot[i]});
    if (face_at[0] == face_at[1] || face_at[1] == face_at[2] ||
        face_at[0] == face_at[2]) {
      continue;
    }
    std::vector<GoodVertexCertificate> here;
    for (int j = 0; j < 3; ++j) {
      const Vertex v3 = rot[j];
      if (banned[v3] || levels.level[v3] > 2) continue;
      // The corner between the other two neighbors is entered from
      // rot[j+1] and left towards rot[j+2].
      const Vertex v1 = rot[(j + 2) % 3];
      const Vertex v2 = rot[(j + 1) % 3];
      const FaceWalk& face = g.faces()[g.face_left_of({v, v1})];
      if (face.length() != 4) continue;
      const auto tails = face.vertices();
      const auto at = std::find(tails.begin(), tails.end(), v) - tails.begin();
      const Vertex w = tails[(at + 2) % 4];
      if (w == v || g.adjacent(v, w)) continue;
      GoodVertexCertificate cert;
      cert.v = v;
      cert.v1 = v1;
      cert.v2 = v2;
      cert.v3 = v3;
      cert.opposite_face = face;
      cert.w = w;
      cert.level_of_v3 = levels.level[v3];
      here.push_back(std::move(cert));
    }
    std::sort(here.begin(), here.end(),
              [](const auto& a, const auto& b) { return a.v3 < b.v3; });
    out.insert(out.end(), here.begin(), here.end());
  }
  return out;
}

std::vector<GoodVertexCertificate> enumerate_good_vertices(
    const PlaneGraph& g, const std::vector<Vertex>& restrict_outside) {
  return enumerate_good_vertices(g, compute_levels(g, classify_type(g)),
                                 restrict_outside);
}

SafeReduction find_safe_reduction(const PlaneGraph& g) {
  const auto levels = compute_levels_with_t(g, {});
  for (auto& cert : enumerate_good_vertices(g, levels, {})) {
    Identification merged =
        identify_across_face(g, cert.v, cert.w, cert.opposite_face);
    if (!has_short_odd_cycle_through(merged.graph, merged.merged)) {
      return {std::move(cert), std::move(merged)};
    }
  }
  throw Error(ErrorCode::kNotFound,
              "no good vertex with a safe identification among " +
                  std::to_string(g.vertex_count()) + " vertices");
}

GoodVertexCertificate find_good_vertex(const PlaneGraph& g) {
  if (g.vertex_count() == 0 || g.min_degree() < 3) {
    throw Error(ErrorCode::kHypothesisViolation, "minimum degree below 3");
  }
  const auto report = short_odd_cycle_check(g);
  if (report.has_3_cycle() || report.has_5_cycle()) {
    throw Error(ErrorCode::kHypothesisViolation,
                report.has_3_cycle() ? "graph has a 3-cycle"
                                     : "graph has a 5-cycle");
  }
  return find_safe_reduction(g).certificate;
}

}  // namespace planecolor
