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

#include "planecolor/gen.h"

#include <algorithm>
#include <cmath>
#include <numeric>
#include <random>
#include <set>

#include "planecolor/cycles.h"
#include "planecolor/error.h"

namespace planecolor {
namespace {

constexpr double kPi = 3.14159265358979323846;

std::uint64_t below(std::mt19937_64& rng, std::uint64_t bound) {
  return rng() % bound;
}

template <typename T>
void shuffle_in_place(std::vector<T>& xs, std::mt19937_64& rng) {
  for (std::size_t i = xs.size(); i > 1; --i) {
    std::swap(xs[i - 1], xs[below(rng, i)]);
  }
}

Error bad_params(const std::string& what) {
  return Error(ErrorCode::kBadParameters, what);
}

class Params {
 public:
  Params(const GeneratorSpec& spec, std::set<std::string> keys)
      : spec_(spec) {
    for (const auto& [key, value] : spec.params) {
      if (!keys.count(key)) {
        throw bad_params("unknown key '" + key + "' for " + spec.family);
      }
    }
  }

  std::int64_t integer(const std::string& key, std::int64_t fallback,
                       std::int64_t lo, std::int64_t hi) const {
    const auto it = spec_.params.find(key);
    if (it == spec_.params.end()) return fallback;
    std::size_t used = 0;
    std::int64_t value = 0;
    try {
      value = std::stoll(it->second, &used);
    } catch (const std::exception&) {
      used = 0;
    }
    if (used == 0 || used != it->second.size()) {
      throw bad_params(key + " must be an integer");
    }
    if (value < lo || value > hi) {
      throw bad_params(key + " must lie in " + std::to_string(lo) + ".." +
                       std::to_string(hi));
    }
    return value;
  }

  std::string text(const std::string& key, const std::string& fallback) const {
    const auto it = spec_.params.find(key);
    return it == spec_.params.end() ? fallback : it->second;
  }

 private:
  const GeneratorSpec& spec_;
};

Vertex add_point(Drawing& d, double x, double y) {
  d.points.emplace_back(x, y);
  return static_cast<Vertex>(d.points.size()) - 1;
}

Vertex add_polar(Drawing& d, double r, double degrees) {
  const double a = degrees * kPi / 180.0;
  return add_point(d, r * std::cos(a), r * std::sin(a));
}

// m points on a circle, clockwise from the top, joined into a cycle.
std::vector<Vertex> add_ring(Drawing& d, int m, double r, double phase = 0) {
  std::vector<Vertex> ids;
  for (int i = 0; i < m; ++i) ids.push_back(add_polar(d, r, 90 + phase - 360.0 * i / m));
  for (int i = 0; i < m; ++i) d.edges.emplace_back(ids[i], ids[(i + 1) % m]);
  return ids;
}

Drawing subdivide(const Drawing& d, int times) {
  Drawing out;
  out.points = d.points;
  for (const auto& [a, b] : d.edges) {
    Vertex prev = a;
    const auto [ax, ay] = d.points[a];
    const auto [bx, by] = d.points[b];
    for (int i = 1; i <= times; ++i) {
      const double t = static_cast<double>(i) / (times + 1);
      const Vertex p = add_point(out, ax + t * (bx - ax), ay + t * (by - ay));
      out.edges.emplace_back(prev, p);
      prev = p;
    }
    out.edges.emplace_back(prev, b);
  }
  return out;
}

// Repeatedly drops vertices of degree <= 1 (as long as an edge remains
// elsewhere) and renumbers the rest in order.
Drawing prune_leaves(const Drawing& d) {
  const int n = static_cast<int>(d.points.size());
  std::vector<int> deg(n, 0);
  std::vector<bool> alive(n, true);
  std::vector<bool> edge_alive(d.edges.size(), true);
  for (const auto& [a, b] : d.edges) ++deg[a], ++deg[b];
  bool changed = true;
  while (changed) {
    changed = false;
    for (std::size_t e = 0; e < d.edges.size(); ++e) {
      if (!edge_alive[e]) continue;
      const auto [a, b] = d.edges[e];
      if (deg[a] == 1 || deg[b] == 1) {
        if (deg[a] == 1 && deg[b] == 1) continue;
        edge_alive[e] = false;
        --deg[a];
        --deg[b];
        changed = true;
      }
    }
    for (int v = 0; v < n; ++v) {
      if (alive[v] && deg[v] == 0) alive[v] = false;
    }
  }
  Drawing out;
  std::vector<Vertex> id(n, -1);
  for (int v = 0; v < n; ++v) {
    if (alive[v]) {
      id[v] = static_cast<Vertex>(out.points.size());
      out.points.push_back(d.points[v]);
    }
  }
  for (std::size_t e = 0; e < d.edges.size(); ++e) {
    if (edge_alive[e]) out.edges.emplace_back(id[d.edges[e].first], id[d.edges[e].second]);
  }
  return out;
}

double signed_area(const Drawing& d, const FaceWalk& f) {
  double area = 0;
  for (const auto& e : f.edges) {
    const auto [x1, y1] = d.points[e.tail];
    const auto [x2, y2] = d.points[e.head];
    area += x1 * y2 - x2 * y1;
  }
  return area / 2;
}

// Inset a smaller copy of a random bounded 4-face and join corresponding
// corners.
bool add_inset(Drawing& d, std::mt19937_64& rng) {
  const PlaneGraph g = from_drawing(d);
  std::vector<const FaceWalk*> quads;
  for (const auto& f : g.faces()) {
    if (f.is_outer || f.length() != 4) continue;
    auto vs = f.vertices();
    std::sort(vs.begin(), vs.end());
    if (std::unique(vs.begin(), vs.end()) == vs.end()) quads.push_back(&f);
  }
  if (quads.empty()) return false;
  const auto corners = quads[below(rng, quads.size())]->vertices();
  double cx = 0, cy = 0;
  for (Vertex v : corners) {
    cx += d.points[v].first / 4;
    cy += d.points[v].second / 4;
  }
  std::vector<Vertex> inner;
  for (Vertex v : corners) {
    const auto [x, y] = d.points[v];
    inner.push_back(add_point(d, cx + 0.5 * (x - cx), cy + 0.5 * (y - cy)));
    d.edges.emplace_back(v, inner.back());
  }
  for (int i = 0; i < 4; ++i) d.edges.emplace_back(inner[i], inner[(i + 1) % 4]);
  return true;
}

bool connected_without(const Drawing& d, std::size_t skip) {
  const int n = static_cast<int>(d.points.size());
  std::vector<int> parent(n);
  std::iota(parent.begin(), parent.end(), 0);
  auto find = [&](int x) {
    while (parent[x] != x) x = parent[x] = parent[parent[x]];
    return x;
  };
  int parts = n;
  for (std::size_t e = 0; e < d.edges.size(); ++e) {
    if (e == skip) continue;
    const int a = find(d.edges[e].first), b = find(d.edges[e].second);
    if (a != b) {
      parent[a] = b;
      --parts;
    }
  }
  return parts == 1;
}

void decorate(Drawing& d, std::uint64_t seed, std::int64_t insets,
              std::int64_t deletions) {
  std::mt19937_64 rng(seed);
  for (std::int64_t i = 0; i < insets; ++i) {
    if (!add_inset(d, rng)) break;
  }
  for (std::int64_t i = 0; i < deletions && !d.edges.empty(); ++i) {
    const std::size_t e = below(rng, d.edges.size());
    if (connected_without(d, e)) d.edges.erase(d.edges.begin() + e);
  }
}

Drawing cube_drawing() {
  Drawing d;
  const auto outer = add_ring(d, 4, 2.0, 45);
  const auto inner = add_ring(d, 4, 1.0, 45);
  for (int i = 0; i < 4; ++i) d.edges.emplace_back(outer[i], inner[i]);
  return d;
}

Drawing grid_drawing(const Params& p) {
  const auto rows = p.integer("rows", 3, 1, 1000);
  const auto cols = p.integer("cols", 3, 1, 1000);
  if (rows * cols > 100000) throw bad_params("grid too large");
  Drawing d;
  for (std::int64_t r = 0; r < rows; ++r) {
    for (std::int64_t c = 0; c < cols; ++c) add_point(d, c, -r);
  }
  auto id = [&](std::int64_t r, std::int64_t c) { return static_cast<Vertex>(r * cols + c); };
  for (std::int64_t r = 0; r < rows; ++r) {
    for (std::int64_t c = 0; c < cols; ++c) {
      if (c + 1 < cols) d.edges.emplace_back(id(r, c), id(r, c + 1));
      if (r + 1 < rows) d.edges.emplace_back(id(r, c), id(r + 1, c));
    }
  }
  return d;
}

Drawing hex_drawing(const Params& p) {
  const auto rows = p.integer("rows", 2, 1, 300);
  const auto cols = p.integer("cols", 2, 1, 300);
  const std::int64_t width = 2 * cols + 1;
  Drawing d;
  for (std::int64_t r = 0; r <= rows; ++r) {
    for (std::int64_t c = 0; c < width; ++c) add_point(d, c, -r);
  }
  auto id = [&](std::int64_t r, std::int64_t c) { return static_cast<Vertex>(r * width + c); };
  for (std::int64_t r = 0; r <= rows; ++r) {
    for (std::int64_t c = 0; c < width; ++c) {
      if (c + 1 < width) d.edges.emplace_back(id(r, c), id(r, c + 1));
      if (r < rows && (r + c) % 2 == 0) d.edges.emplace_back(id(r, c), id(r + 1, c));
    }
  }
  return prune_leaves(d);
}

Drawing cycle_drawing(const Params& p) {
  const auto n = p.integer("n", 8, 4, 100000);
  if (n == 5) throw bad_params("a 5-cycle is excluded");
  Drawing d;
  add_ring(d, static_cast<int>(n), 1.0);
  return d;
}

Drawing subdivision_drawing(const Params& p) {
  const auto base = p.text("base", "k4");
  const auto times = p.integer("times", 1, 0, 200);
  Drawing d;
  if (base == "k4") {
    const auto outer = add_ring(d, 3, 2.0);
    const Vertex center = add_point(d, 0, 0);
    for (Vertex v : outer) d.edges.emplace_back(v, center);
  } else if (base == "cube") {
    d = cube_drawing();
  } else if (base == "octahedron") {
    const auto outer = add_ring(d, 3, 3.0);
    const auto inner = add_ring(d, 3, 1.0, 60);
    for (int i = 0; i < 3; ++i) {
      d.edges.emplace_back(inner[i], outer[i]);
      d.edges.emplace_back(inner[i], outer[(i + 2) % 3]);
    }
  } else {
    throw bad_params("base must be k4, cube or octahedron");
  }
  if (times == 0 && base != "cube") {
    throw bad_params("base " + base + " needs times >= 1");
  }
  return subdivide(d, static_cast<int>(times));
}

Drawing cylinder_drawing(const Params& p) {
  const auto m = p.integer("m", 7, 4, 10000);
  const auto k = p.integer("k", 2, 2, 1000);
  if (m == 5) throw bad_params("m = 5 would create 5-cycles");
  Drawing d;
  std::vector<std::vector<Vertex>> rings;
  for (std::int64_t r = 0; r < k; ++r) {
    rings.push_back(add_ring(d, static_cast<int>(m), static_cast<double>(r + 1)));
  }
  for (std::int64_t r = 0; r + 1 < k; ++r) {
    for (std::int64_t i = 0; i < m; ++i) d.edges.emplace_back(rings[r][i], rings[r + 1][i]);
  }
  decorate(d, static_cast<std::uint64_t>(p.integer("seed", 1, 0, INT64_MAX)),
           p.integer("insets", 0, 0, 10000), p.integer("deletions", 0, 0, 100000));
  return d;
}

Drawing random_bipartite_drawing(const Params& p) {
  Drawing d = cube_drawing();
  decorate(d, static_cast<std::uint64_t>(p.integer("seed", 1, 0, INT64_MAX)),
           p.integer("insets", 4, 0, 10000), p.integer("deletions", 0, 0, 100000));
  return d;
}

Drawing eared_prism_drawing(const Params& p) {
  const auto ear = p.integer("ear", 2, 2, 6);
  const int span = static_cast<int>(ear) + 2;
  Drawing d;
  const auto outer = add_ring(d, 9, 2.0);
  const auto inner = add_ring(d, 9, 1.0);
  for (int i = 0; i < 9; ++i) d.edges.emplace_back(outer[i], inner[i]);
  Vertex prev = outer[0];
  for (int i = 1; i < ear; ++i) {
    const Vertex e = add_polar(d, 10.0, 90 - 40.0 * span * i / ear);
    d.edges.emplace_back(prev, e);
    prev = e;
  }
  d.edges.emplace_back(prev, outer[span]);
  return d;
}

Drawing heptagon_witness_drawing(const Params&) {
  Drawing d;
  const auto c = add_ring(d, 7, 2.0);
  const Vertex x = add_polar(d, 1.0, 90 - 360.0 / 7);
  const Vertex pendant = add_polar(d, 3.0, 90 - 4 * 360.0 / 7);
  d.edges.emplace_back(x, c[0]);
  d.edges.emplace_back(x, c[2]);
  d.edges.emplace_back(pendant, c[4]);
  return d;
}

}  // namespace

std::string GeneratorSpec::to_string() const {
  std::string out = family;
  char sep = ':';
  for (const auto& [key, value] : params) {
    out += sep + key + "=" + value;
    sep = ',';
  }
  return out;
}

GeneratorSpec parse_generator_spec(std::string_view text) {
  GeneratorSpec spec;
  const auto colon = text.find(':');
  spec.family = std::string(text.substr(0, colon));
  if (spec.family.empty()) throw bad_params("missing family name");
  if (colon == std::string_view::npos) return spec;
  std::string_view rest = text.substr(colon + 1);
  while (true) {
    const auto comma = rest.find(',');
    const auto item = rest.substr(0, comma);
    const auto eq = item.find('=');
    if (eq == std::string_view::npos || eq == 0 || eq + 1 == item.size()) {
      throw bad_params("expected key=value, got '" + std::string(item) + "'");
    }
    const std::string key(item.substr(0, eq));
    if (!spec.params.emplace(key, std::string(item.substr(eq + 1))).second) {
      throw bad_params("duplicate key '" + key + "'");
    }
    if (comma == std::string_view::npos) break;
    rest = rest.substr(comma + 1);
  }
  return spec;
}

std::vector<std::string> generator_families() {
  return {"grid",     "hex_patch",   "cycle",           "even_subdivision",
          "bipartite_planar_random", "cylinder", "eared_prism",
          "heptagon_witness"};
}

PlaneGraph from_drawing(const Drawing& d) {
  const int n = static_cast<int>(d.points.size());
  std::vector<std::vector<Vertex>> rotation(n);
  for (const auto& [a, b] : d.edges) {
    if (a < 0 || b < 0 || a >= n || b >= n) {
      throw Error(ErrorCode::kVertexOutOfRange, "drawing edge out of range");
    }
    rotation[a].push_back(b);
    rotation[b].push_back(a);
  }
  for (int v = 0; v < n; ++v) {
    const auto [x, y] = d.points[v];
    auto angle = [&](Vertex u) {
      return std::atan2(d.points[u].second - y, d.points[u].first - x);
    };
    std::stable_sort(rotation[v].begin(), rotation[v].end(),
                     [&](Vertex a, Vertex b) { return angle(a) > angle(b); });
  }
  const auto fallback = default_outer_designation(rotation);
  if (!fallback) return PlaneGraph::from_rotation(std::move(rotation), std::nullopt);
  const auto trial = PlaneGraph::from_rotation(rotation, fallback);
  const FaceWalk* best = nullptr;
  double best_area = 0;
  for (const auto& f : trial.faces()) {
    if (f.edges.empty()) continue;
    const double area = signed_area(d, f);
    if (!best || area < best_area) {
      best = &f;
      best_area = area;
    }
  }
  return PlaneGraph::from_rotation(std::move(rotation), best->edges.front());
}

PlaneGraph generate(const GeneratorSpec& spec) {
  const auto& f = spec.family;
  Drawing d;
  if (f == "grid") {
    d = grid_drawing(Params(spec, {"rows", "cols"}));
  } else if (f == "hex_patch") {
    d = hex_drawing(Params(spec, {"rows", "cols"}));
  } else if (f == "cycle") {
    d = cycle_drawing(Params(spec, {"n"}));
  } else if (f == "even_subdivision") {
    d = subdivision_drawing(Params(spec, {"base", "times"}));
  } else if (f == "bipartite_planar_random") {
    d = random_bipartite_drawing(Params(spec, {"seed", "insets", "deletions"}));
  } else if (f == "cylinder") {
    d = cylinder_drawing(Params(spec, {"m", "k", "seed", "insets", "deletions"}));
  } else if (f == "eared_prism") {
    d = eared_prism_drawing(Params(spec, {"ear"}));
  } else if (f == "heptagon_witness") {
    d = heptagon_witness_drawing(Params(spec, {}));
  } else {
    throw bad_params("unknown family '" + f + "'");
  }
  PlaneGraph g;
  try {
    g = from_drawing(d);
  } catch (const Error& e) {
    throw Error(ErrorCode::kGeneratorPostconditionFailed,
                spec.to_string() + ": " + e.what());
  }
  if (!euler_identity_holds(g) || !face_partition_holds(g)) {
    throw Error(ErrorCode::kGeneratorPostconditionFailed,
                spec.to_string() + ": face audit failed");
  }
  const auto cycles = short_odd_cycle_check(g);
  if (cycles.has_3_cycle() || cycles.has_5_cycle()) {
    throw Error(ErrorCode::kGeneratorPostconditionFailed,
                spec.to_string() + ": produced a 3- or 5-cycle");
  }
  return g;
}

PlaneGraph generate(std::string_view spec_text) {
  return generate(parse_generator_spec(spec_text));
}

Coloring random_proper_coloring(const PlaneGraph& g, int k, std::uint64_t seed) {
  if (k < 1) throw bad_params("k must be positive");
  const int n = g.vertex_count();
  std::mt19937_64 rng(seed);
  std::vector<int> deg(n);
  std::vector<bool> removed(n, false);
  for (Vertex v = 0; v < n; ++v) deg[v] = g.degree(v);
  std::vector<Vertex> order;
  std::vector<Vertex> ready;
  for (int step = 0; step < n; ++step) {
    ready.clear();
    for (Vertex v = 0; v < n; ++v) {
      if (!removed[v] && deg[v] < k) ready.push_back(v);
    }
    if (ready.empty()) {
      throw bad_params("graph is not " + std::to_string(k - 1) + "-degenerate");
    }
    const Vertex v = ready[below(rng, ready.size())];
    removed[v] = true;
    order.push_back(v);
    for (Vertex u : g.rotation(v)) --deg[u];
  }
  Coloring c(n, 0);
  std::vector<int> prefs(k);
  for (auto it = order.rbegin(); it != order.rend(); ++it) {
    const Vertex v = *it;
    std::iota(prefs.begin(), prefs.end(), 1);
    shuffle_in_place(prefs, rng);
    for (int color : prefs) {
      bool clash = false;
      for (Vertex u : g.rotation(v)) {
        if (c[u] == color) clash = true;
      }
      if (!clash) {
        c[v] = color;
        break;
      }
    }
  }
  return c;
}

}  // namespace planecolor
