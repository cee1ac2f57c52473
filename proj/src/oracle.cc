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

#include "planecolor/oracle.h"

#include <algorithm>
#include <string>

#include "planecolor/error.h"

namespace planecolor {
namespace {

void guard(const PlaneGraph& g, int k, std::int64_t limit) {
  if (k < 1) throw Error(ErrorCode::kBadParameters, "k must be positive");
  std::int64_t total = 1;
  for (int i = 0; i < g.vertex_count(); ++i) {
    total *= k;
    if (total > limit) {
      throw Error(ErrorCode::kTooLarge,
                  std::to_string(k) + "^" + std::to_string(g.vertex_count()) +
                      " colorings exceed the limit of " + std::to_string(limit));
    }
  }
}

void extend(const PlaneGraph& g, int k, Coloring& c, int v,
            std::vector<Coloring>& out) {
  if (v == g.vertex_count()) {
    out.push_back(c);
    return;
  }
  for (int color = 1; color <= k; ++color) {
    bool clash = false;
    for (Vertex u : g.rotation(v)) {
      if (u < v && c[u] == color) clash = true;
    }
    if (clash) continue;
    c[v] = color;
    extend(g, k, c, v + 1, out);
  }
  c[v] = 0;
}

bool canonical(const Coloring& c) {
  int next = 1;
  for (int x : c) {
    if (x > next) return false;
    if (x == next) ++next;
  }
  return true;
}

}  // namespace

std::uint64_t encode_coloring(const Coloring& c, int k) {
  std::uint64_t code = 0;
  for (int x : c) code = code * k + static_cast<std::uint64_t>(x - 1);
  return code;
}

std::optional<int> ReconfigGraph::index_of(const Coloring& c) const {
  if (static_cast<int>(c.size()) != n) return std::nullopt;
  for (int x : c) {
    if (x < 1 || x > k) return std::nullopt;
  }
  const auto code = encode_coloring(c, k);
  const auto it = std::lower_bound(codes.begin(), codes.end(), code);
  if (it == codes.end() || *it != code) return std::nullopt;
  return static_cast<int>(it - codes.begin());
}

Coloring ReconfigGraph::coloring(int node) const {
  Coloring c(n);
  auto code = codes[node];
  for (int v = n - 1; v >= 0; --v) {
    c[v] = static_cast<int>(code % k) + 1;
    code /= k;
  }
  return c;
}

std::vector<Coloring> enumerate_colorings(const PlaneGraph& g, int k,
                                          std::int64_t limit) {
  guard(g, k, limit);
  std::vector<Coloring> out;
  Coloring c(g.vertex_count(), 0);
  extend(g, k, c, 0, out);
  return out;
}

ReconfigGraph build_reconfig_graph(const PlaneGraph& g, int k,
                                   std::int64_t limit) {
  const auto all = enumerate_colorings(g, k, limit);
  ReconfigGraph rg;
  rg.n = g.vertex_count();
  rg.k = k;
  rg.codes.reserve(all.size());
  for (const auto& c : all) rg.codes.push_back(encode_coloring(c, k));

  std::vector<std::uint64_t> place(rg.n, 1);
  for (int v = rg.n - 2; v >= 0; --v) place[v] = place[v + 1] * k;

  rg.offsets.assign(1, 0);
  for (std::size_t i = 0; i < all.size(); ++i) {
    const auto& c = all[i];
    for (Vertex v = 0; v < rg.n; ++v) {
      for (int color = 1; color <= k; ++color) {
        if (color == c[v]) continue;
        bool clash = false;
        for (Vertex u : g.rotation(v)) {
          if (c[u] == color) clash = true;
        }
        if (clash) continue;
        const std::uint64_t code =
            rg.codes[i] - place[v] * (c[v] - 1) + place[v] * (color - 1);
        const auto it = std::lower_bound(rg.codes.begin(), rg.codes.end(), code);
        rg.targets.push_back(static_cast<int>(it - rg.codes.begin()));
      }
    }
    rg.offsets.push_back(static_cast<std::int64_t>(rg.targets.size()));
  }
  return rg;
}

std::vector<int> bfs_distances(const ReconfigGraph& rg, int source) {
  std::vector<int> dist(rg.node_count(), -1);
  std::vector<int> queue;
  queue.reserve(rg.node_count());
  dist[source] = 0;
  queue.push_back(source);
  for (std::size_t head = 0; head < queue.size(); ++head) {
    const int x = queue[head];
    for (auto e = rg.offsets[x]; e < rg.offsets[x + 1]; ++e) {
      const int y = rg.targets[e];
      if (dist[y] < 0) {
        dist[y] = dist[x] + 1;
        queue.push_back(y);
      }
    }
  }
  return dist;
}

std::optional<int> distance(const ReconfigGraph& rg, const Coloring& a,
                            const Coloring& b) {
  const auto ia = rg.index_of(a);
  const auto ib = rg.index_of(b);
  if (!ia || !ib) {
    throw Error(ErrorCode::kNodeMissing,
                "coloring is not a node of the reconfiguration graph");
  }
  const int d = bfs_distances(rg, *ia)[*ib];
  if (d < 0) return std::nullopt;
  return d;
}

DiameterResult diameter(const ReconfigGraph& rg) {
  DiameterResult result;
  for (int i = 0; i < rg.node_count(); ++i) {
    if (!canonical(rg.coloring(i))) continue;
    for (int d : bfs_distances(rg, i)) {
      if (d < 0) {
        result.connected = false;
      } else {
        result.value = std::max(result.value, d);
      }
    }
  }
  return result;
}

}  // namespace planecolor
