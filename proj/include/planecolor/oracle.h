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

#ifndef PLANECOLOR_ORACLE_H_
#define PLANECOLOR_ORACLE_H_

#include <cstdint>
#include <optional>
#include <vector>

#include "planecolor/plane_graph.h"
#include "planecolor/recolor.h"

namespace planecolor {

// Refuse enumeration when k^n exceeds this many candidate colorings.
inline constexpr std::int64_t kDefaultOracleLimit = 9765625;  // 5^10

// The graph of proper k-colorings, two colorings adjacent when they differ
// at exactly one vertex. Node i is the coloring with the i-th smallest code,
// where the code reads colors as base-k digits, vertex 0 most significant.
struct ReconfigGraph {
  int n = 0;
  int k = 0;
  std::vector<std::uint64_t> codes;  // ascending
  std::vector<std::int64_t> offsets;  // CSR, size node_count() + 1
  std::vector<int> targets;

  int node_count() const { return static_cast<int>(codes.size()); }
  int degree(int node) const {
    return static_cast<int>(offsets[node + 1] - offsets[node]);
  }
  std::optional<int> index_of(const Coloring& c) const;
  Coloring coloring(int node) const;
};

std::uint64_t encode_coloring(const Coloring& c, int k);

// All proper k-colorings in increasing code order. Throws kTooLarge.
std::vector<Coloring> enumerate_colorings(const PlaneGraph& g, int k,
                                          std::int64_t limit = kDefaultOracleLimit);

ReconfigGraph build_reconfig_graph(const PlaneGraph& g, int k,
                                   std::int64_t limit = kDefaultOracleLimit);

// Shortest number of recolorings, or nullopt when b is unreachable.
// Throws kNodeMissing if a or b is not a proper coloring of the graph.
std::optional<int> distance(const ReconfigGraph& rg, const Coloring& a,
                            const Coloring& b);

// Distances from one node to every node (-1 when unreachable).
std::vector<int> bfs_distances(const ReconfigGraph& rg, int source);

struct DiameterResult {
  int value = 0;  // largest finite distance
  bool connected = true;
};

// Exact. Permuting colors is an automorphism, so only sources whose colors
// first appear in the order 1, 2, 3, ... need a search.
DiameterResult diameter(const ReconfigGraph& rg);

}  // namespace planecolor

#endif  // PLANECOLOR_ORACLE_H_
