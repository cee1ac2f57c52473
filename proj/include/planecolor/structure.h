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

#ifndef PLANECOLOR_STRUCTURE_H_
#define PLANECOLOR_STRUCTURE_H_

#include <string_view>
#include <vector>

#include "planecolor/plane_graph.h"
#include "planecolor/surgery.h"

namespace planecolor {

enum class GraphType { kType1, kType2, kNeither };

std::string_view graph_type_name(GraphType type);

// T is empty for Type 1 (and Neither) and the outer-face vertex set for
// Type 2. Level 1: outside T with degree <= 3. Level 2: outside T, not
// level 1, with at most 3 neighbors outside level 1. Level 3: the rest
// outside T. Level 4: T.
struct LevelAssignment {
  std::vector<Vertex> t;   // sorted
  std::vector<int> level;  // indexed by vertex, values 1..4

  bool in_t(Vertex v) const { return level[v] == 4; }
};

// A good 3-vertex v with neighbors v1, v2, v3, where v3 (level <= 2) is the
// good neighbor and the face opposite v3 is the 4-face v -> v1 -> w -> v2.
// w is the merge partner, not the good neighbor.
struct GoodVertexCertificate {
  Vertex v = 0;
  Vertex v1 = 0;
  Vertex v2 = 0;
  Vertex v3 = 0;
  FaceWalk opposite_face;
  Vertex w = 0;
  int level_of_v3 = 0;

  friend bool operator==(const GoodVertexCertificate&,
                         const GoodVertexCertificate&) = default;
};

// Type 2 wins when both definitions apply. g is expected connected.
GraphType classify_type(const PlaneGraph& g);

LevelAssignment compute_levels(const PlaneGraph& g, GraphType type);
LevelAssignment compute_levels_with_t(const PlaneGraph& g,
                                      std::vector<Vertex> t);

// Vertices of the outer face walk, sorted and deduplicated.
std::vector<Vertex> outer_face_vertices(const PlaneGraph& g);

// Every (v, v3) pair matching the definition, with v and v3 outside
// `restrict_outside`, ordered by v then v3. No identification check.
std::vector<GoodVertexCertificate> enumerate_good_vertices(
    const PlaneGraph& g, const LevelAssignment& levels,
    const std::vector<Vertex>& restrict_outside);

// As above with levels from classify_type(g).
std::vector<GoodVertexCertificate> enumerate_good_vertices(
    const PlaneGraph& g, const std::vector<Vertex>& restrict_outside);

struct SafeReduction {
  GoodVertexCertificate certificate;
  Identification identified;
};

// First good vertex (lowest v, then lowest v3; levels with T empty) whose
// identification with w leaves no 3-cycle and no 5-cycle. Requires no 3-
// or 5-cycles and minimum degree >= 3 (kHypothesisViolation); kNotFound
// means the search is broken or the hypotheses were not met.
GoodVertexCertificate find_good_vertex(const PlaneGraph& g);

// Same search, returning the identified graph too. Skips the hypothesis
// check; the caller guarantees g has no 3-/5-cycles and minimum degree >= 3.
SafeReduction find_safe_reduction(const PlaneGraph& g);

}  // namespace planecolor

#endif  // PLANECOLOR_STRUCTURE_H_
