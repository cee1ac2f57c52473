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

#ifndef PLANECOLOR_PLANE_GRAPH_H_
#define PLANECOLOR_PLANE_GRAPH_H_

#include <compare>
#include <cstddef>
#include <optional>
#include <span>
#include <utility>
#include <vector>

namespace planecolor {

using Vertex = int;

struct DirectedEdge {
  Vertex tail = 0;
  Vertex head = 0;

  DirectedEdge reversed() const { return {head, tail}; }
  friend auto operator<=>(const DirectedEdge&, const DirectedEdge&) = default;
};

// Boundary walk of one face. The face lies to the left of every directed
// edge; a vertex appears once per incidence, so a bridge contributes two
// edges and a cut vertex may repeat.
struct FaceWalk {
  std::vector<DirectedEdge> edges;
  bool is_outer = false;

  int length() const { return static_cast<int>(edges.size()); }
  // Tails of the walk's edges, in walk order (with repeats).
  std::vector<Vertex> vertices() const;
  bool contains(Vertex v) const;

  friend bool operator==(const FaceWalk&, const FaceWalk&) = default;
};

// A simple graph embedded in the plane by a rotation system.
//
// rotation(v) lists the neighbors of v in clockwise order. The face to the
// left of u->v continues with v->w where w is the clockwise successor of u
// around v. One directed edge designates the outer face (the face on its
// left); edgeless graphs carry no designation and have a single empty face.
//
// Values are immutable; every operation that changes the graph returns a new
// PlaneGraph.
class PlaneGraph {
 public:
  PlaneGraph();

  // Validates and builds. Throws Error with kVertexOutOfRange,
  // kInconsistentRotation, kLoopOrMultiEdge, kEulerViolation or
  // kInvalidOuterFace.
  static PlaneGraph from_rotation(std::vector<std::vector<Vertex>> rotation,
                                  std::optional<DirectedEdge> outer);

  int vertex_count() const { return static_cast<int>(rotation_.size()); }
  int edge_count() const { return edge_count_; }
  int degree(Vertex v) const {
    return static_cast<int>(rotation_[static_cast<std::size_t>(v)].size());
  }
  int min_degree() const;
  int max_degree() const;

  std::span<const Vertex> rotation(Vertex v) const {
    return rotation_[static_cast<std::size_t>(v)];
  }
  const std::vector<std::vector<Vertex>>& rotations() const {
    return rotation_;
  }
  bool adjacent(Vertex u, Vertex v) const;
  bool is_edge(DirectedEdge e) const { return adjacent(e.tail, e.head); }

  // Clockwise successor of u among the neighbors of v. u must be adjacent
  // to v.
  Vertex clockwise_successor(Vertex v, Vertex u) const;

  std::optional<DirectedEdge> outer_designation() const { return outer_; }
  const std::vector<FaceWalk>& faces() const { return faces_; }
  // Index into faces() of the outer face.
  int outer_face_index() const { return outer_face_; }
  const FaceWalk& outer_face() const {
    return faces_[static_cast<std::size_t>(outer_face_)];
  }
  // Index of the face to the left of e. e must be an edge.
  int face_left_of(DirectedEdge e) const;

  // Component label per vertex (labels dense, in order of first vertex).
  const std::vector<int>& component_labels() const { return component_; }
  int component_count() const { return component_count_; }
  bool connected() const { return component_count_ <= 1; }

  friend bool operator==(const PlaneGraph& a, const PlaneGraph& b) {
    return a.rotation_ == b.rotation_ && a.outer_ == b.outer_;
  }

 private:
  std::size_t dart_index(Vertex u, Vertex v) const;

  std::vector<std::vector<Vertex>> rotation_;
  std::optional<DirectedEdge> outer_;
  int edge_count_ = 0;
  std::vector<std::size_t> dart_offset_;
  std::vector<std::size_t> twin_;
  std::vector<int> face_of_dart_;
  std::vector<FaceWalk> faces_;
  int outer_face_ = 0;
  std::vector<int> component_;
  int component_count_ = 0;
};

inline PlaneGraph build_from_rotation(
    std::vector<std::vector<Vertex>> rotation,
    std::optional<DirectedEdge> outer) {
  return PlaneGraph::from_rotation(std::move(rotation), outer);
}

// Faces of g in deterministic order (by first dart in vertex/rotation order);
// exactly one is marked outer.
std::vector<FaceWalk> trace_faces(const PlaneGraph& g);

// |V| - |E| + |F| = 1 + c where the faces of all components share one outer
// face. Always true for a constructed PlaneGraph; exposed for audits.
bool euler_identity_holds(const PlaneGraph& g);

// Sum of face lengths equals 2|E| and every directed edge lies on exactly one
// face walk.
bool face_partition_holds(const PlaneGraph& g);

// Deterministic fallback designation for a component that has edges: the
// lowest-id vertex with an edge, towards its first rotation neighbor.
std::optional<DirectedEdge> default_outer_designation(
    const std::vector<std::vector<Vertex>>& rotation);

}  // namespace planecolor

#endif  // PLANECOLOR_PLANE_GRAPH_H_
