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

// Test-side helpers: hand-built graphs, brute-force oracles, and the shared
// corpus. Nothing here calls into the library's cycle or coloring logic.
#ifndef PLANECOLOR_TESTS_SUPPORT_H_
#define PLANECOLOR_TESTS_SUPPORT_H_

#include <algorithm>
#include <cstdint>
#include <functional>
#include <optional>
#include <set>
#include <string>
#include <utility>
#include <vector>

#include "planecolor/error.h"
#include "planecolor/gen.h"
#include "planecolor/plane_graph.h"

namespace planecolor::testing {

template <typename F>
std::optional<ErrorCode> error_code_of(F&& f) {
  try {
    f();
  } catch (const Error& e) {
    return e.code();
  }
  return std::nullopt;
}

// Standard cube embedding: top face 0-1-2-3, bottom 4-5-6-7, i above i+4.
inline PlaneGraph cube() {
  return PlaneGraph::from_rotation({{1, 4, 3},
                                    {2, 5, 0},
                                    {3, 6, 1},
                                    {0, 7, 2},
                                    {0, 5, 7},
                                    {1, 6, 4},
                                    {2, 7, 5},
                                    {3, 4, 6}},
                                   DirectedEdge{0, 1});
}

inline PlaneGraph cycle_graph(int n) {
  std::vector<std::vector<Vertex>> rot(n);
  for (int i = 0; i < n; ++i) rot[i] = {(i + n - 1) % n, (i + 1) % n};
  return PlaneGraph::from_rotation(rot, DirectedEdge{1, 0});
}

inline PlaneGraph path_graph(int n) {
  std::vector<std::vector<Vertex>> rot(n);
  for (int i = 0; i + 1 < n; ++i) {
    rot[i].push_back(i + 1);
    rot[i + 1].push_back(i);
  }
  if (n < 2) return PlaneGraph::from_rotation(rot, std::nullopt);
  return PlaneGraph::from_rotation(rot, DirectedEdge{0, 1});
}

inline PlaneGraph single_vertex() {
  return PlaneGraph::from_rotation({{}}, std::nullopt);
}

// K_{2,3}: poles 0 and 1, middle vertices 2, 3, 4.
inline PlaneGraph k23() {
  return PlaneGraph::from_rotation({{2, 3, 4}, {4, 3, 2}, {0, 1}, {0, 1}, {0, 1}},
                                   DirectedEdge{0, 2});
}

// Star with center 0.
inline PlaneGraph star(int leaves) {
  std::vector<std::vector<Vertex>> rot(leaves + 1);
  for (int i = 1; i <= leaves; ++i) {
    rot[0].push_back(i);
    rot[i].push_back(0);
  }
  return PlaneGraph::from_rotation(rot, DirectedEdge{0, 1});
}

inline std::vector<std::pair<Vertex, Vertex>> edge_list(const PlaneGraph& g) {
  std::vector<std::pair<Vertex, Vertex>> out;
  for (Vertex v = 0; v < g.vertex_count(); ++v) {
    for (Vertex u : g.rotation(v)) {
      if (v < u) out.emplace_back(v, u);
    }
  }
  return out;
}

inline std::vector<std::vector<bool>> adjacency_matrix(const PlaneGraph& g) {
  std::vector<std::vector<bool>> adj(g.vertex_count(),
                                     std::vector<bool>(g.vertex_count(), false));
  for (const auto& [a, b] : edge_list(g)) adj[a][b] = adj[b][a] = true;
  return adj;
}

// Every simple cycle of the given length as a sorted vertex set plus the
// cyclic order, found by plain DFS from every start.
inline std::set<std::vector<Vertex>> brute_force_cycles(const PlaneGraph& g,
                                                        int length) {
  const auto adj = adjacency_matrix(g);
  const int n = g.vertex_count();
  std::set<std::vector<Vertex>> found;
  std::vector<Vertex> path;
  std::vector<bool> used(n, false);
  std::function<void(Vertex)> dfs = [&](Vertex x) {
    if (static_cast<int>(path.size()) == length) {
      if (adj[x][path.front()]) {
        // canonical: rotate to minimum, pick the smaller direction
        auto best = path;
        for (int r = 0; r < length; ++r) {
          std::vector<Vertex> fwd, bwd;
          for (int i = 0; i < length; ++i) {
            fwd.push_back(path[(r + i) % length]);
            bwd.push_back(path[(r - i + length) % length]);
          }
          best = std::min({best, fwd, bwd});
        }
        found.insert(best);
      }
      return;
    }
    for (Vertex y = 0; y < n; ++y) {
      if (adj[x][y] && !used[y]) {
        used[y] = true;
        path.push_back(y);
        dfs(y);
        path.pop_back();
        used[y] = false;
      }
    }
  };
  for (Vertex s = 0; s < n; ++s) {
    used[s] = true;
    path = {s};
    dfs(s);
    used[s] = false;
  }
  return found;
}

// Components of g minus the listed vertices, by BFS over the adjacency
// matrix.
inline int components_without(const PlaneGraph& g,
                               const std::vector<Vertex>& removed) {
  const auto adj = adjacency_matrix(g);
  const int n = g.vertex_count();
  std::vector<bool> gone(n, false);
  for (Vertex v : removed) gone[v] = true;
  std::vector<bool> seen(n, false);
  int parts = 0;
  for (Vertex s = 0; s < n; ++s) {
    if (gone[s] || seen[s]) continue;
    ++parts;
    std::vector<Vertex> stack{s};
    seen[s] = true;
    while (!stack.empty()) {
      const Vertex x = stack.back();
      stack.pop_back();
      for (Vertex y = 0; y < n; ++y) {
        if (adj[x][y] && !gone[y] && !seen[y]) {
          seen[y] = true;
          stack.push_back(y);
        }
      }
    }
  }
  return parts;
}

inline bool is_bipartite(const PlaneGraph& g) {
  const auto adj = adjacency_matrix(g);
  const int n = g.vertex_count();
  std::vector<int> side(n, -1);
  for (Vertex s = 0; s < n; ++s) {
    if (side[s] >= 0) continue;
    side[s] = 0;
    std::vector<Vertex> queue{s};
    for (std::size_t h = 0; h < queue.size(); ++h) {
      for (Vertex y = 0; y < n; ++y) {
        if (!adj[queue[h]][y]) continue;
        if (side[y] < 0) {
          side[y] = 1 - side[queue[h]];
          queue.push_back(y);
        } else if (side[y] == side[queue[h]]) {
          return false;
        }
      }
    }
  }
  return true;
}

// P(G, k) by deletion-contraction on a simple edge set.
inline std::int64_t chromatic_polynomial(int n,
                                         std::set<std::pair<int, int>> edges,
                                         std::int64_t k) {
  if (edges.empty()) {
    std::int64_t p = 1;
    for (int i = 0; i < n; ++i) p *= k;
    return p;
  }
  const auto [a, b] = *edges.begin();
  auto deleted = edges;
  deleted.erase(deleted.begin());
  // contract b into a, relabel the last vertex as b
  std::set<std::pair<int, int>> contracted;
  auto relabel = [&](int x) {
    if (x == b) x = a;
    if (x == n - 1) x = b;
    return x;
  };
  for (const auto& [x, y] : deleted) {
    int p = relabel(x), q = relabel(y);
    if (p == q) continue;
    contracted.insert({std::min(p, q), std::max(p, q)});
  }
  return chromatic_polynomial(n, deleted, k) -
         chromatic_polynomial(n - 1, contracted, k);
}

inline std::int64_t chromatic_polynomial(const PlaneGraph& g, std::int64_t k) {
  std::set<std::pair<int, int>> edges;
  for (const auto& e : edge_list(g)) edges.insert(e);
  return chromatic_polynomial(g.vertex_count(), edges, k);
}

// Generator specs used across the suites.
inline std::vector<std::string> corpus_specs() {
  std::vector<std::string> specs;
  for (int r = 1; r <= 5; ++r) {
    for (int c = r; c <= 6; ++c) {
      if (r * c >= 2) specs.push_back("grid:rows=" + std::to_string(r) + ",cols=" + std::to_string(c));
    }
  }
  for (int r = 1; r <= 3; ++r) {
    for (int c = 1; c <= 3; ++c) {
      specs.push_back("hex_patch:rows=" + std::to_string(r) + ",cols=" + std::to_string(c));
    }
  }
  for (int n : {4, 6, 7, 8, 9, 10, 11, 13}) specs.push_back("cycle:n=" + std::to_string(n));
  for (const char* base : {"k4", "cube", "octahedron"}) {
    for (int t = 1; t <= 3; ++t) {
      specs.push_back(std::string("even_subdivision:base=") + base + ",times=" + std::to_string(t));
    }
  }
  specs.push_back("even_subdivision:base=cube,times=0");
  for (int seed = 1; seed <= 6; ++seed) {
    for (int insets : {0, 2, 5, 9}) {
      for (int del : {0, 3}) {
        specs.push_back("bipartite_planar_random:seed=" + std::to_string(seed) +
                        ",insets=" + std::to_string(insets) + ",deletions=" + std::to_string(del));
      }
    }
  }
  for (int m : {4, 6, 7, 8, 9, 11}) {
    for (int k : {2, 3}) {
      for (int insets : {0, 3}) {
        specs.push_back("cylinder:m=" + std::to_string(m) + ",k=" + std::to_string(k) +
                        ",insets=" + std::to_string(insets) + ",seed=" + std::to_string(m + k));
      }
    }
  }
  specs.push_back("cylinder:m=7,k=2,insets=2,deletions=2,seed=5");
  specs.push_back("cylinder:m=9,k=2,insets=4,deletions=3,seed=2");
  for (int ear = 2; ear <= 6; ++ear) specs.push_back("eared_prism:ear=" + std::to_string(ear));
  specs.push_back("heptagon_witness");
  return specs;
}

struct NamedGraph {
  std::string name;
  PlaneGraph graph;
};

inline std::vector<NamedGraph> corpus() {
  std::vector<NamedGraph> out;
  out.push_back({"cube", cube()});
  out.push_back({"k23", k23()});
  out.push_back({"star3", star(3)});
  out.push_back({"path2", path_graph(2)});
  out.push_back({"path4", path_graph(4)});
  out.push_back({"cycle4", cycle_graph(4)});
  for (const auto& s : corpus_specs()) out.push_back({s, generate(s)});
  return out;
}

}  // namespace planecolor::testing

#endif  // PLANECOLOR_TESTS_SUPPORT_H_
