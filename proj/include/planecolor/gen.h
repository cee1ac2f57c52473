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

#ifndef PLANECOLOR_GEN_H_
#define PLANECOLOR_GEN_H_

#include <cstdint>
#include <map>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "planecolor/plane_graph.h"
#include "planecolor/recolor.h"

namespace planecolor {

// `family` or `family:key=val,key=val`.
struct GeneratorSpec {
  std::string family;
  std::map<std::string, std::string> params;

  std::string to_string() const;
};

GeneratorSpec parse_generator_spec(std::string_view text);  // kBadParameters

// Families and their keys (defaults in parentheses):
//   grid                     rows, cols (3, 3)
//   hex_patch                rows, cols (2, 2)          honeycomb patch
//   cycle                    n (8); n must not be 3 or 5
//   even_subdivision         base = k4 | cube | octahedron (k4),
//                            times (1) subdivision vertices per edge
//   bipartite_planar_random  seed (1), insets (4), deletions (0)
//   cylinder                 m (7), k (2) rings, seed (1), insets (0),
//                            deletions (0)
//   eared_prism              ear (2); a path of `ear` edges around a
//                            9-prism closing a 7-face outer boundary
//   heptagon_witness         a 7-cycle with a chord path inside and a
//                            pendant outside
// Every output passes the Euler audit and has no 3- or 5-cycle; a failure
// throws kGeneratorPostconditionFailed.
PlaneGraph generate(const GeneratorSpec& spec);
PlaneGraph generate(std::string_view spec_text);

std::vector<std::string> generator_families();

// A straight-line drawing; rotations come from the angles (clockwise) and
// the outer face is the one with negative signed area.
struct Drawing {
  std::vector<std::pair<double, double>> points;
  std::vector<std::pair<Vertex, Vertex>> edges;
};

PlaneGraph from_drawing(const Drawing& d);

// Greedy coloring over a random degeneracy order with per-vertex shuffled
// color preference. Deterministic per seed. Throws kBadParameters if some
// subgraph has minimum degree >= k.
Coloring random_proper_coloring(const PlaneGraph& g, int k, std::uint64_t seed);

}  // namespace planecolor

#endif  // PLANECOLOR_GEN_H_
