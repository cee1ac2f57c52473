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

#include "planecolor/plane_graph.h"

#include <algorithm>
#include <numeric>
#include <string>
#include <tuple>

#include "planecolor/error.h"

namespace planecolor {
namespace {

std::string edge_name(Vertex u, Vertex v) {
  return std::to_string(u) + "-" + std::to_string(v);
}

}  // namespace

std::vector<Vertex> FaceWalk::vertices() const {
  std::vector<Vertex> out;
  out.reserve(edges.size());
  for (const auto& e : edges) out.push_back(e.tail);
  return out;
}

bool FaceWalk::contains(Vertex v) const {
  return std::any_of(edges.begin(), edges.end(),
                     [v](const DirectedEdge& e) { return e.tail == v; });
}

PlaneGraph::PlaneGraph() {
  faces_.push_back(FaceWalk{{}, true});
  outer_face_ = 0;
}

PlaneGraph PlaneGraph::from_rotation(std::vector<std::vector<Vertex>> rotation,
                                     std::optional<DirectedEdge> outer) {
  PlaneGraph g;
  g.rotation_ = std::move(rotation);
  g.outer_ = outer;
  g.faces_.clear();
  const auto n = static_cast<Vertex>(g.rotation_.size());

  // Darts sorted by (tail, head) give twins by binary search and expose
  // loops and repeated neighbors.
  std::vector<std::tuple<Vertex, Vertex, std::size_t>> keyed;
  g.dart_offset_.assign(g.rotation_.size() + 1, 0);
  for (Vertex u = 0; u < n; ++u) {
    const auto& rot = g.rotation_[static_cast<std::size_t>(u)];
    g.dart_offset_[static_cast<std::size_t>(u) + 1] =
        g.dart_offset_[static_cast<std::size_t>(u)] + rot.size();
    for (std::size_t i = 0; i < rot.size(); ++i) {
      const Vertex v = rot[i];
      if (v < 0 || v >= n) {
        throw Error(ErrorCode::kVertexOutOfRange,
                    "neighbor " + std::to_string(v) + " of vertex " +
                        std::to_string(u) + " is not a vertex");
      }
      if (v == u) {
        throw Error(ErrorCode::kLoopOrMultiEdge,
                    "loop at vertex " + std::to_string(u));
      }
      keyed.emplace_back(u, v, g.dart_offset_[static_cast<std::size_t>(u)] + i);
    }
  }
  std::sort(keyed.begin(), keyed.end());
  for (std::size_t i = 1; i < keyed.size(); ++i) {
    if (std::get<0>(keyed[i]) == std::get<0>(keyed[i - 1]) &&
        std::get<1>(keyed[i]) == std::get<1>(keyed[i - 1])) {
      throw Error(ErrorCode::kLoopOrMultiEdge,
                  "parallel edge " + edge_name(std::get<0>(keyed[i]),
                                               std::get<1>(keyed[i])));
    }
  }
  const std::size_t darts = keyed.size();
  g.twin_.assign(darts, 0);
  for (const auto& [u, v, d] : keyed) {
    auto it = std::lower_bound(keyed.begin(), keyed.end(),
                               std::make_tuple(v, u, std::size_t{0}));
    if (it == keyed.end() || std::get<0>(*it) != v || std::get<1>(*it) != u) {
      throw Error(ErrorCode::kInconsistentRotation,
                  "edge " + edge_name(u, v) + " appears at " +
                      std::to_string(u) + " but not at " + std::to_string(v));
    }
    g.twin_[d] = std::get<2>(*it);
  }
  g.edge_count_ = static_cast<int>(darts / 2);

  // Components.
  g.component_.assign(g.rotation_.size(), -1);
  g.component_count_ = 0;
  std::vector<Vertex> stack;
  for (Vertex s = 0; s < n; ++s) {
    if (g.component_[static_cast<std::size_t>(s)] != -1) continue;
    const int label = g.component_count_++;
    g.component_[static_cast<std::size_t>(s)] = label;
    stack.push_back(s);
    while (!stack.empty()) {
      const Vertex u = stack.back();
      stack.pop_back();
      for (Vertex v : g.rotation_[static_cast<std::size_t>(u)]) {
        if (g.component_[static_cast<std::size_t>(v)] == -1) {
          g.component_[static_cast<std::size_t>(v)] = label;
          stack.push_back(v);
        }
      }
    }
  }

  // Vertex owning each dart.
  std::vector<Vertex> tail_of(darts);
  for (Vertex u = 0; u < n; ++u) {
    for (auto d = g.dart_offset_[static_cast<std::size_t>(u)];
         d < g.dart_offset_[static_cast<std::size_t>(u) + 1]; ++d) {
      tail_of[d] = u;
    }
  }
  auto head_of = [&](std::size_t d) { return tail_of[g.twin_[d]]; };

  // Faces: next(u->v) = v->cw_succ_v(u).
  g.face_of_dart_.assign(darts, -1);
  for (std::size_t start = 0; start < darts; ++start) {
    if (g.face_of_dart_[start] != -1) continue;
    const int face = static_cast<int>(g.faces_.size());
    FaceWalk walk;
    std::size_t d = start;
    do {
      g.face_of_dart_[d] = face;
      walk.edges.push_back({tail_of[d], head_of(d)});
      const std::size_t back = g.twin_[d];
      const Vertex v = tail_of[back];
      const std::size_t base = g.dart_offset_[static_cast<std::size_t>(v)];
      const std::size_t deg = g.rotation_[static_cast<std::size_t>(v)].size();
      d = base + (back - base + 1) % deg;
    } while (d != start);
    g.faces_.push_back(std::move(walk));
  }

  // Euler per component with edges: V - E + F = 2.
  const auto comps = static_cast<std::size_t>(g.component_count_);
  std::vector<long> v_count(comps, 0), half_edges(comps, 0), f_count(comps, 0);
  for (Vertex u = 0; u < n; ++u) {
    const auto c = static_cast<std::size_t>(g.component_[static_cast<std::size_t>(u)]);
    ++v_count[c];
    half_edges[c] += static_cast<long>(g.rotation_[static_cast<std::size_t>(u)].size());
  }
  for (const auto& f : g.faces_) {
    const auto c = static_cast<std::size_t>(
        g.component_[static_cast<std::size_t>(f.edges.front().tail)]);
    ++f_count[c];
  }
  for (std::size_t c = 0; c < comps; ++c) {
    if (half_edges[c] == 0) continue;
    const long chi = v_count[c] - half_edges[c] / 2 + f_count[c];
    if (chi != 2) {
      throw Error(ErrorCode::kEulerViolation,
                  "component " + std::to_string(c) + " has V-E+F = " +
                      std::to_string(chi) + ", rotation is not planar");
    }
  }

  if (darts == 0) {
    if (g.outer_) {
      throw Error(ErrorCode::kInvalidOuterFace,
                  "edgeless graph cannot designate an outer edge");
    }
    g.faces_.push_back(FaceWalk{{}, true});
    g.outer_face_ = 0;
    return g;
  }
  if (!g.outer_) {
    throw Error(ErrorCode::kInvalidOuterFace,
                "graph with edges needs an outer face designation");
  }
  const auto [ou, ov] = *g.outer_;
  if (ou < 0 || ou >= n || ov < 0 || ov >= n || !g.adjacent(ou, ov)) {
    throw Error(ErrorCode::kInvalidOuterFace,
                "outer designation " + edge_name(ou, ov) + " is not an edge");
  }
  g.outer_face_ = g.face_of_dart_[g.dart_index(ou, ov)];
  g.faces_[static_cast<std::size_t>(g.outer_face_)].is_outer = true;
  return g;
}

int PlaneGraph::min_degree() const {
  int best = 0;
  for (std::size_t v = 0; v < rotation_.size(); ++v) {
    const int d = static_cast<int>(rotation_[v].size());
    if (v == 0 || d < best) best = d;
  }
  return best;
}

int PlaneGraph::max_degree() const {
  int best = 0;
  for (const auto& r : rotation_) best = std::max(best, static_cast<int>(r.size()));
  return best;
}

bool PlaneGraph::adjacent(Vertex u, Vertex v) const {
  if (u < 0 || v < 0 || u >= vertex_count() || v >= vertex_count()) return false;
  const auto& a = rotation_[static_cast<std::size_t>(u)];
  const auto& b = rotation_[static_cast<std::size_t>(v)];
  if (a.size() <= b.size()) return std::find(a.begin(), a.end(), v) != a.end();
  return std::find(b.begin(), b.end(), u) != b.end();
}

std::size_t PlaneGraph::dart_index(Vertex u, Vertex v) const {
  const auto& rot = rotation_[static_cast<std::size_t>(u)];
  const auto it = std::find(rot.begin(), rot.end(), v);
  if (it == rot.end()) {
    throw Error(ErrorCode::kVertexOutOfRange,
                edge_name(u, v) + " is not an edge");
  }
  return dart_offset_[static_cast<std::size_t>(u)] +
         static_cast<std::size_t>(it - rot.begin());
}

Vertex PlaneGraph::clockwise_successor(Vertex v, Vertex u) const {
  const auto& rot = rotation_[static_cast<std::size_t>(v)];
  const auto i = dart_index(v, u) - dart_offset_[static_cast<std::size_t>(v)];
  return rot[(i + 1) % rot.size()];
}

int PlaneGraph::face_left_of(DirectedEdge e) const {
  return face_of_dart_[dart_index(e.tail, e.head)];
}

std::vector<FaceWalk> trace_faces(const PlaneGraph& g) { return g.faces(); }

bool euler_identity_holds(const PlaneGraph& g) {
  // Faces of separate components: each component with edges has its own
  // outer walk; in the plane they are all one face.
  std::vector<bool> has_edge(static_cast<std::size_t>(g.component_count()), false);
  for (Vertex v = 0; v < g.vertex_count(); ++v) {
    if (g.degree(v) > 0) {
      has_edge[static_cast<std::size_t>(g.component_labels()[static_cast<std::size_t>(v)])] = true;
    }
  }
  const long with_edges = std::count(has_edge.begin(), has_edge.end(), true);
  long faces = static_cast<long>(g.faces().size());
  if (g.edge_count() > 0) faces = faces - with_edges + 1;
  return g.vertex_count() - g.edge_count() + faces == 1 + g.component_count();
}

bool face_partition_holds(const PlaneGraph& g) {
  std::vector<DirectedEdge> seen;
  long total = 0;
  int outer = 0;
  for (const auto& f : g.faces()) {
    total += f.length();
    if (f.is_outer) ++outer;
    seen.insert(seen.end(), f.edges.begin(), f.edges.end());
  }
  if (total != 2L * g.edge_count() || outer != 1) return false;
  std::sort(seen.begin(), seen.end());
  if (std::adjacent_find(seen.begin(), seen.end()) != seen.end()) return false;
  for (const auto& e : seen) {
    if (!g.is_edge(e)) return false;
  }
  return true;
}

std::optional<DirectedEdge> default_outer_designation(
    const std::vector<std::vector<Vertex>>& rotation) {
  for (std::size_t v = 0; v < rotation.size(); ++v) {
    if (!rotation[v].empty()) {
      return DirectedEdge{static_cast<Vertex>(v), rotation[v].front()};
    }
  }
  return std::nullopt;
}

}  // namespace planecolor
