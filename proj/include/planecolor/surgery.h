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

#ifndef PLANECOLOR_SURGERY_H_
#define PLANECOLOR_SURGERY_H_

#include <vector>

#include "planecolor/plane_graph.h"

namespace planecolor {

// A graph derived from a parent, with the parent id of every new vertex.
struct Subgraph {
  PlaneGraph graph;
  std::vector<Vertex> to_parent;
};

struct Identification {
  PlaneGraph graph;
  // New id of every old vertex; v and w both map to `merged`.
  std::vector<Vertex> old_to_new;
  Vertex merged = 0;
};

// Checks that `cycle` lists the vertices of a simple cycle of g in order.
// Throws kNotACycle otherwise.
void require_cycle(const PlaneGraph& g, const std::vector<Vertex>& cycle);

// Vertices not on `cycle` that lie on its inner side. The outer side is the
// side holding the outer face (or, when the cycle's component does not hold
// the designated outer face, the face of that component's default
// designation). Faces reachable from it without crossing the cycle are
// outside.
std::vector<Vertex> interior_vertices(const PlaneGraph& g,
                                      const std::vector<Vertex>& cycle);

// The cycle together with everything inside it; the cycle bounds the new
// outer face. Edges drawn outside the cycle (including outer chords) are
// dropped. New ids follow ascending parent ids.
Subgraph extract_interior(const PlaneGraph& g,
                          const std::vector<Vertex>& cycle);

// Merges v and w, opposite corners of the 4-face f, into one vertex. The
// merged rotation is v's rotation followed by w's, spliced at f; duplicate
// edges to common neighbors are dropped (w's copy). Ids above w shift down
// by one.
Identification identify_across_face(const PlaneGraph& g, Vertex v, Vertex w,
                                    const FaceWalk& f);

// g - v, with ids above v shifted down by one.
Subgraph remove_vertex(const PlaneGraph& g, Vertex v);

// One subgraph per connected component, in order of smallest vertex.
std::vector<Subgraph> split_components(const PlaneGraph& g);

}  // namespace planecolor

#endif  // PLANECOLOR_SURGERY_H_
