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

#include "planecolor/surgery.h"

#include <algorithm>
#include <set>
#include <string>
#include <utility>

#include "planecolor/error.h"

namespace planecolor {
namespace {

using EdgeSet = std::set<std::pair<Vertex, Vertex>>;

std::pair<Vertex, Vertex> key(Vertex a, Vertex b) {
  return a < b ? std::pair{a, b} : std::pair{b, a};
}

EdgeSet cycle_edges(const std::vector<Vertex>& cycle) {
  EdgeSet out;
  for (std::size_t i = 0; i < cycle.size(); ++i) {
    out.insert(key(cycle[i], cycle[(i + 1) % cycle.size()]));
  }
  return out;
}

// Face index treated as the outer face of the component holding v.
int component_outer_face(const PlaneGraph& g, Vertex v) {
  const auto& label = g.component_labels();
  if (const auto outer = g.outer_designation();
      outer && label[outer->tail] == label[v]) {
    return g.outer_face_index();
  }
  for (Vertex u = 0; u < g.vertex_count(); ++u) {
    if (label[u] == label[v] && g.degree(u) > 0) {
      return g.face_left_of({u, g.rotation(u).front()});
    }
  }
  return g.outer_face_index();
}

// Faces on the inner side of the cycle (a face is outside if it can be
// reached from the outer face without crossing a cycle edge).
std::vector<bool> inside_faces(const PlaneGraph& g,
                               const std::vector<Vertex>& cycle) {
  const EdgeSet on_cycle = cycle_edges(cycle);
  const auto& faces = g.faces();
  std::vector<bool> outside(faces.size(), false);
  const int root = component_outer_face(g, cycle.front());
  std::vector<int> stack{root};
  outside[root] = true;
  while (!stack.empty()) {
    const int f = stack.back();
    stack.pop_back();
    for (const auto& e : faces[f].edges) {
      if (on_cycle.count(key(e.tail, e.head))) continue;
      const int across = g.face_left_of(e.reversed());
      if (!outside[across]) {
        outside[across] = true;
        stack.push_back(across);
      }
    }
  }
  const int comp = g.component_labels()[cycle.front()];
  std::vector<bool> inside(faces.size(), false);
  for (std::size_t f = 0; f < faces.size(); ++f) {
    if (faces[f].edges.empty()) continue;
    if (g.component_labels()[faces[f].edges.front().tail] != comp) continue;
    inside[f] = !outside[f];
  }
  return inside;
}

// Restricts g to the kept vertices and the edges accepted by keep_edge.
// The outer face is designated by the first surviving candidate dart.
template <typename KeepEdge>
Subgraph restrict_graph(const PlaneGraph& g, const std::vector<bool>& keep,
                        KeepEdge keep_edge,
                        const std::vector<DirectedEdge>& outer_candidates) {
  const int n = g.vertex_count();
  std::vector<Vertex> new_id(n, -1);
  Subgraph sub;
  for (Vertex v = 0; v < n; ++v) {
    if (keep[v]) {
      new_id[v] = static_cast<Vertex>(sub.to_parent.size());
      sub.to_parent.push_back(v);
    }
  }
  std::vector<std::vector<Vertex>> rotation(sub.to_parent.size());
  for (Vertex v = 0; v < n; ++v) {
    if (!keep[v]) continue;
    for (Vertex u : g.rotation(v)) {
      if (keep[u] && keep_edge(v, u)) rotation[new_id[v]].push_back(new_id[u]);
    }
  }
  std::optional<DirectedEdge> outer;
  for (const auto& e : outer_candidates) {
    if (keep[e.tail] && keep[e.head] && keep_edge(e.tail, e.head)) {
      outer = DirectedEdge{new_id[e.tail], new_id[e.head]};
      break;
    }
  }
  if (!outer) outer = default_outer_designation(rotation);
  sub.graph = PlaneGraph::from_rotation(std::move(rotation), outer);
  return sub;
}

// The outer face walk starting at the designated dart.
std::vector<DirectedEdge> outer_walk_from_designation(const PlaneGraph& g) {
  std::vector<DirectedEdge> walk = g.outer_face().edges;
  if (const auto d = g.outer_designation()) {
    const auto it = std::find(walk.begin(), walk.end(), *d);
    if (it != walk.end()) std::rotate(walk.begin(), it, walk.end());
  }
  return walk;
}

}  // namespace

void require_cycle(const PlaneGraph& g, const std::vector<Vertex>& cycle) {
  if (cycle.size() < 3) {
    throw Error(ErrorCode::kNotACycle, "a cycle needs at least 3 vertices");
  }
  std::vector<Vertex> sorted = cycle;
  std::sort(sorted.begin(), sorted.end());
  if (std::adjacent_find(sorted.begin(), sorted.end()) != sorted.end()) {
    throw Error(ErrorCode::kNotACycle, "cycle repeats a vertex");
  }
  for (std::size_t i = 0; i < cycle.size(); ++i) {
    const Vertex a = cycle[i];
    const Vertex b = cycle[(i + 1) % cycle.size()];
    if (a < 0 || a >= g.vertex_count() || !g.adjacent(a, b)) {
      throw Error(ErrorCode::kNotACycle,
                  std::to_string(a) + "-" + std::to_string(b) +
                      " is not an edge");
    }
  }
}

std::vector<Vertex> interior_vertices(const PlaneGraph& g,
                                      const std::vector<Vertex>& cycle) {
  require_cycle(g, cycle);
  const std::vector<bool> inside = inside_faces(g, cycle);
  std::vector<bool> on_cycle(g.vertex_count(), false);
  for (Vertex c : cycle) on_cycle[c] = true;
  std::vector<bool> mark(g.vertex_count(), false);
  for (std::size_t f = 0; f < inside.size(); ++f) {
    if (!inside[f]) continue;
    for (const auto& e : g.faces()[f].edges) {
      if (!on_cycle[e.tail]) mark[e.tail] = true;
    }
  }
  std::vector<Vertex> out;
  for (Vertex v = 0; v < g.vertex_count(); ++v) {
    if (mark[v]) out.push_back(v);
  }
  return out;
}

Subgraph extract_interior(const PlaneGraph& g,
                          const std::vector<Vertex>& cycle) {
  require_cycle(g, cycle);
  const std::vector<bool> inside = inside_faces(g, cycle);
  const EdgeSet on_cycle = cycle_edges(cycle);

  std::vector<bool> keep(g.vertex_count(), false);
  for (Vertex c : cycle) keep[c] = true;
  for (Vertex v : interior_vertices(g, cycle)) keep[v] = true;

  auto keep_edge = [&](Vertex a, Vertex b) {
    if (on_cycle.count(key(a, b))) return true;
    return static_cast<bool>(inside[g.face_left_of({a, b})]) ||
           static_cast<bool>(inside[g.face_left_of({b, a})]);
  };
  // The cycle direction with the outside on its left bounds the new outer
  // face.
  DirectedEdge first{cycle[0], cycle[1]};
  if (inside[g.face_left_of(first)]) first = first.reversed();
  return restrict_graph(g, keep, keep_edge, {first});
}

Identification identify_across_face(const PlaneGraph& g, Vertex v, Vertex w,
                                    const FaceWalk& f) {
  const int n = g.vertex_count();
  if (f.length() != 4 || f.edges.empty() || !g.is_edge(f.edges.front()) ||
      g.faces()[g.face_left_of(f.edges.front())].length() != 4) {
    throw Error(ErrorCode::kNotAFourFace, "face is not a 4-face of the graph");
  }
  const FaceWalk& face = g.faces()[g.face_left_of(f.edges.front())];
  if (v < 0 || w < 0 || v >= n || w >= n || v == w || !face.contains(v) ||
      !face.contains(w)) {
    throw Error(ErrorCode::kVerticesNotOnFace,
                std::to_string(v) + " and " + std::to_string(w) +
                    " are not distinct vertices of the face");
  }
  if (g.adjacent(v, w)) {
    throw Error(ErrorCode::kVerticesAdjacent,
                std::to_string(v) + " and " + std::to_string(w) +
                    " are adjacent");
  }
  // Walk v -> b1 -> w -> b2 -> v.
  const auto tails = face.vertices();
  std::size_t i = 0;
  while (!(tails[i] == v && tails[(i + 2) % 4] == w)) ++i;
  const Vertex b1 = tails[(i + 1) % 4];
  const Vertex b2 = tails[(i + 3) % 4];

  std::vector<bool> near_v(n, false);
  for (Vertex u : g.rotation(v)) near_v[u] = true;
  auto common = [&](Vertex u) { return near_v[u] && g.adjacent(u, w); };

  auto rotated_from = [&](Vertex center, Vertex first) {
    std::vector<Vertex> r(g.rotation(center).begin(), g.rotation(center).end());
    std::rotate(r.begin(), std::find(r.begin(), r.end(), first), r.end());
    return r;
  };

  Identification out;
  out.old_to_new.resize(n);
  for (Vertex u = 0; u < n; ++u) out.old_to_new[u] = u < w ? u : u - 1;
  out.old_to_new[w] = out.old_to_new[v];
  out.merged = out.old_to_new[v];
  const auto& id = out.old_to_new;

  std::vector<std::vector<Vertex>> rotation(n - 1);
  for (Vertex u = 0; u < n; ++u) {
    if (u == v || u == w) continue;
    auto& r = rotation[id[u]];
    const bool shared = common(u);
    for (Vertex x : g.rotation(u)) {
      if (x == w && shared) continue;
      r.push_back(id[x]);
    }
  }
  auto& merged = rotation[out.merged];
  for (Vertex x : rotated_from(v, b1)) merged.push_back(id[x]);
  for (Vertex x : rotated_from(w, b2)) {
    if (!common(x)) merged.push_back(id[x]);
  }

  // Keep the outer face: first dart of the old outer walk that survives.
  std::optional<DirectedEdge> outer;
  for (const auto& e : outer_walk_from_designation(g)) {
    const bool dropped = (e.tail == w && common(e.head)) ||
                         (e.head == w && common(e.tail));
    if (!dropped) {
      outer = DirectedEdge{id[e.tail], id[e.head]};
      break;
    }
  }
  if (!outer) outer = default_outer_designation(rotation);
  out.graph = PlaneGraph::from_rotation(std::move(rotation), outer);
  return out;
}

Subgraph remove_vertex(const PlaneGraph& g, Vertex v) {
  if (v < 0 || v >= g.vertex_count()) {
    throw Error(ErrorCode::kVertexOutOfRange, std::to_string(v));
  }
  std::vector<bool> keep(g.vertex_count(), true);
  keep[v] = false;
  return restrict_graph(
      g, keep, [](Vertex, Vertex) { return true; },
      outer_walk_from_designation(g));
}

std::vector<Subgraph> split_components(const PlaneGraph& g) {
  std::vector<Subgraph> out;
  const auto walk = outer_walk_from_designation(g);
  for (int c = 0; c < g.component_count(); ++c) {
    std::vector<bool> keep(g.vertex_count(), false);
    for (Vertex v = 0; v < g.vertex_count(); ++v) {
      keep[v] = g.component_labels()[v] == c;
    }
    out.push_back(restrict_graph(
        g, keep, [](Vertex, Vertex) { return true; }, walk));
  }
  return out;
}

}  // namespace planecolor
