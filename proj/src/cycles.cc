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

#include "planecolor/cycles.h"

#include <algorithm>
#include <deque>
#include <functional>

#include "planecolor/surgery.h"

namespace planecolor {
namespace {

// DFS over simple cycles of a fixed length whose smallest vertex is `start`.
// `visit` returns false to stop the search.
class CycleSearch {
 public:
  CycleSearch(const PlaneGraph& g, int length)
      : g_(g),
        length_(length),
        on_path_(static_cast<std::size_t>(g.vertex_count()), false),
        dist_(static_cast<std::size_t>(g.vertex_count()), -1) {}

  bool run(Vertex start,
           const std::function<bool(const std::vector<Vertex>&)>& visit) {
    if (g_.degree(start) < 2) return true;
    start_ = start;
    visit_ = &visit;
    bfs_from(start);
    path_.assign(1, start);
    on_path_[static_cast<std::size_t>(start)] = true;
    const bool keep_going = extend(start);
    on_path_[static_cast<std::size_t>(start)] = false;
    return keep_going;
  }

 private:
  // Distances from start using only vertices >= start, capped at length.
  void bfs_from(Vertex s) {
    std::fill(dist_.begin(), dist_.end(), -1);
    std::deque<Vertex> queue{s};
    dist_[static_cast<std::size_t>(s)] = 0;
    while (!queue.empty()) {
      const Vertex u = queue.front();
      queue.pop_front();
      const int du = dist_[static_cast<std::size_t>(u)];
      if (du >= length_) continue;
      for (Vertex v : g_.rotation(u)) {
        if (v < s || dist_[static_cast<std::size_t>(v)] != -1) continue;
        dist_[static_cast<std::size_t>(v)] = du + 1;
        queue.push_back(v);
      }
    }
  }

  bool extend(Vertex u) {
    const int depth = static_cast<int>(path_.size());
    if (depth == length_) {
      if (g_.adjacent(u, start_) && path_[1] < path_.back()) {
        return (*visit_)(path_);
      }
      return true;
    }
    for (Vertex v : g_.rotation(u)) {
      if (v <= start_ || on_path_[static_cast<std::size_t>(v)]) continue;
      const int d = dist_[static_cast<std::size_t>(v)];
      if (d < 0 || d > length_ - depth) continue;
      on_path_[static_cast<std::size_t>(v)] = true;
      path_.push_back(v);
      const bool keep_going = extend(v);
      path_.pop_back();
      on_path_[static_cast<std::size_t>(v)] = false;
      if (!keep_going) return false;
    }
    return true;
  }

  const PlaneGraph& g_;
  int length_;
  Vertex start_ = 0;
  const std::function<bool(const std::vector<Vertex>&)>* visit_ = nullptr;
  std::vector<Vertex> path_;
  std::vector<bool> on_path_;
  std::vector<int> dist_;
};

}  // namespace

std::vector<std::vector<Vertex>> enumerate_cycles(const PlaneGraph& g,
                                                  int length) {
  std::vector<std::vector<Vertex>> out;
  if (length < 3) return out;
  CycleSearch search(g, length);
  const std::function<bool(const std::vector<Vertex>&)> collect =
      [&out](const std::vector<Vertex>& c) {
        out.push_back(c);
        return true;
      };
  for (Vertex s = 0; s < g.vertex_count(); ++s) search.run(s, collect);
  std::sort(out.begin(), out.end());
  return out;
}

std::optional<std::vector<Vertex>> find_cycle_of_length(const PlaneGraph& g,
                                                        int length) {
  if (length < 3) return std::nullopt;
  std::optional<std::vector<Vertex>> found;
  CycleSearch search(g, length);
  const std::function<bool(const std::vector<Vertex>&)> take_first =
      [&found](const std::vector<Vertex>& c) {
        found = c;
        return false;
      };
  for (Vertex s = 0; s < g.vertex_count() && !found; ++s) {
    search.run(s, take_first);
  }
  return found;
}

bool has_short_odd_cycle_through(const PlaneGraph& g, Vertex x) {
  std::vector<Vertex> path{x};
  std::vector<bool> on_path(static_cast<std::size_t>(g.vertex_count()), false);
  on_path[static_cast<std::size_t>(x)] = true;
  std::function<bool(Vertex)> extend = [&](Vertex u) {
    const auto edges = path.size() - 1;
    if (edges == 2 || edges == 4) {
      if (g.adjacent(u, x)) return true;
      if (edges == 4) return false;
    }
    for (Vertex v : g.rotation(u)) {
      if (on_path[static_cast<std::size_t>(v)]) continue;
      on_path[static_cast<std::size_t>(v)] = true;
      path.push_back(v);
      const bool hit = extend(v);
      path.pop_back();
      on_path[static_cast<std::size_t>(v)] = false;
      if (hit) return true;
    }
    return false;
  };
  return extend(x);
}

bool is_separating(const PlaneGraph& g, const std::vector<Vertex>& cycle) {
  require_cycle(g, cycle);
  const auto n = static_cast<std::size_t>(g.vertex_count());
  const int comp = g.component_labels()[static_cast<std::size_t>(cycle.front())];
  std::vector<bool> blocked(n, false);
  for (Vertex c : cycle) blocked[static_cast<std::size_t>(c)] = true;
  int pieces = 0;
  std::vector<Vertex> stack;
  for (Vertex s = 0; s < g.vertex_count(); ++s) {
    if (blocked[static_cast<std::size_t>(s)] ||
        g.component_labels()[static_cast<std::size_t>(s)] != comp) {
      continue;
    }
    if (++pieces > 1) return true;
    blocked[static_cast<std::size_t>(s)] = true;
    stack.push_back(s);
    while (!stack.empty()) {
      const Vertex u = stack.back();
      stack.pop_back();
      for (Vertex v : g.rotation(u)) {
        if (!blocked[static_cast<std::size_t>(v)]) {
          blocked[static_cast<std::size_t>(v)] = true;
          stack.push_back(v);
        }
      }
    }
  }
  return false;
}

CycleReport short_odd_cycle_check(const PlaneGraph& g) {
  CycleReport report;
  report.three_cycle = find_cycle_of_length(g, 3);
  report.five_cycle = find_cycle_of_length(g, 5);
  return report;
}

CycleReport forbidden_cycle_check(const PlaneGraph& g) {
  CycleReport report = short_odd_cycle_check(g);
  for (auto& c : enumerate_cycles(g, 7)) {
    if (!is_separating(g, c)) continue;
    const int inside = static_cast<int>(interior_vertices(g, c).size());
    report.separating_7_cycles.push_back({std::move(c), inside});
  }
  return report;
}

}  // namespace planecolor
