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

#ifndef PLANECOLOR_CYCLES_H_
#define PLANECOLOR_CYCLES_H_

#include <optional>
#include <vector>

#include "planecolor/plane_graph.h"

namespace planecolor {

struct SeparatingCycle {
  std::vector<Vertex> cycle;
  // Vertices strictly inside the cycle, relative to the outer face.
  int interior_vertex_count = 0;

  friend bool operator==(const SeparatingCycle&,
                         const SeparatingCycle&) = default;
};

struct CycleReport {
  std::optional<std::vector<Vertex>> three_cycle;
  std::optional<std::vector<Vertex>> five_cycle;
  std::vector<SeparatingCycle> separating_7_cycles;

  bool has_3_cycle() const { return three_cycle.has_value(); }
  bool has_5_cycle() const { return five_cycle.has_value(); }
};

// Exact 3-/5-cycle detection with witnesses, plus every separating 7-cycle.
// The 7-cycle enumeration is a pruned DFS, O(n * d^6) in the worst case.
CycleReport forbidden_cycle_check(const PlaneGraph& g);

// Cheaper variant that skips the 7-cycle enumeration.
CycleReport short_odd_cycle_check(const PlaneGraph& g);

// All simple cycles with exactly `length` vertices, each listed once,
// starting at its smallest vertex and continuing towards the smaller of its
// two neighbors on the cycle. Sorted lexicographically.
std::vector<std::vector<Vertex>> enumerate_cycles(const PlaneGraph& g,
                                                  int length);

// First cycle of the given length in enumeration order.
std::optional<std::vector<Vertex>> find_cycle_of_length(const PlaneGraph& g,
                                                        int length);

// True if some 3-cycle or 5-cycle passes through x.
bool has_short_odd_cycle_through(const PlaneGraph& g, Vertex x);

// True if `cycle` is a cycle of g whose removal disconnects the rest of its
// connected component.
bool is_separating(const PlaneGraph& g, const std::vector<Vertex>& cycle);

}  // namespace planecolor

#endif  // PLANECOLOR_CYCLES_H_
