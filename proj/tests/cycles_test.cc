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

#include <gtest/gtest.h>

#include <algorithm>
#include <cmath>

#include "planecolor/gen.h"
#include "support.h"

namespace planecolor {
namespace {

using testing::brute_force_cycles;
using testing::components_without;

// K4 drawn as a triangle with a center vertex.
PlaneGraph k4() {
  Drawing d;
  d.points = {{0, 2}, {1.7, -1}, {-1.7, -1}, {0, 0}};
  d.edges = {{0, 1}, {1, 2}, {2, 0}, {0, 3}, {1, 3}, {2, 3}};
  return from_drawing(d);
}

// Wheel with a 5-cycle rim.
PlaneGraph wheel5() {
  Drawing d;
  for (int i = 0; i < 5; ++i) {
    d.points.emplace_back(std::cos(1.2566 * i), std::sin(1.2566 * i));
    d.edges.emplace_back(i, (i + 1) % 5);
    d.edges.emplace_back(i, 5);
  }
  d.points.emplace_back(0, 0);
  return from_drawing(d);
}

std::vector<testing::NamedGraph> small_graphs() {
  std::vector<testing::NamedGraph> out;
  for (auto& ng : testing::corpus()) {
    if (ng.graph.vertex_count() <= 12) out.push_back(std::move(ng));
  }
  out.push_back({"k4", k4()});
  out.push_back({"wheel5", wheel5()});
  out.push_back({"c5", testing::cycle_graph(5)});
  out.push_back({"c3", testing::cycle_graph(3)});
  return out;
}

TEST(Cycles, CubeHasNoForbiddenCycles) {
  const auto report = forbidden_cycle_check(testing::cube());
  EXPECT_FALSE(report.has_3_cycle());
  EXPECT_FALSE(report.has_5_cycle());
  EXPECT_TRUE(report.separating_7_cycles.empty());
  EXPECT_TRUE(testing::is_bipartite(testing::cube()));
}

TEST(Cycles, FiveCycleDetected) {
  const auto report = forbidden_cycle_check(testing::cycle_graph(5));
  ASSERT_TRUE(report.has_5_cycle());
  EXPECT_EQ(report.five_cycle->size(), 5u);
  EXPECT_FALSE(report.has_3_cycle());
}

TEST(Cycles, WitnessesAreRealCycles) {
  const auto report = forbidden_cycle_check(wheel5());
  ASSERT_TRUE(report.has_3_cycle());
  ASSERT_TRUE(report.has_5_cycle());
  for (const auto* c : {&*report.three_cycle, &*report.five_cycle}) {
    for (std::size_t i = 0; i < c->size(); ++i) {
      EXPECT_TRUE(wheel5().adjacent((*c)[i], (*c)[(i + 1) % c->size()]));
    }
    auto sorted = *c;
    std::sort(sorted.begin(), sorted.end());
    EXPECT_EQ(std::unique(sorted.begin(), sorted.end()), sorted.end());
  }
}

TEST(Cycles, SeparatingSevenCycleWitness) {
  const auto g = generate("heptagon_witness");
  const auto report = forbidden_cycle_check(g);
  EXPECT_FALSE(report.has_3_cycle());
  EXPECT_FALSE(report.has_5_cycle());
  ASSERT_EQ(report.separating_7_cycles.size(), 2u);
  const auto& rim = report.separating_7_cycles[0];
  EXPECT_EQ(rim.cycle, (std::vector<Vertex>{0, 1, 2, 3, 4, 5, 6}));
  EXPECT_EQ(rim.interior_vertex_count, 1);
  EXPECT_GE(components_without(g, rim.cycle), 2);
  // the 7-cycle through the inner vertex cuts off vertex 1 from the pendant
  const auto& other = report.separating_7_cycles[1];
  EXPECT_EQ(other.interior_vertex_count, 0);
  EXPECT_GE(components_without(g, other.cycle), 2);
}

TEST(Cycles, AgreesWithBruteForce) {
  for (const auto& [name, g] : small_graphs()) {
    SCOPED_TRACE(name);
    for (int len = 3; len <= 7; ++len) {
      const auto fast = enumerate_cycles(g, len);
      const auto slow = brute_force_cycles(g, len);
      EXPECT_EQ(std::set<std::vector<Vertex>>(fast.begin(), fast.end()), slow);
      EXPECT_EQ(fast.size(), slow.size());
    }
    const auto report = forbidden_cycle_check(g);
    EXPECT_EQ(report.has_3_cycle(), !brute_force_cycles(g, 3).empty());
    EXPECT_EQ(report.has_5_cycle(), !brute_force_cycles(g, 5).empty());
    std::set<std::vector<Vertex>> separating;
    for (const auto& c : brute_force_cycles(g, 7)) {
      if (components_without(g, c) > components_without(g, {})) separating.insert(c);
    }
    std::set<std::vector<Vertex>> listed;
    for (const auto& s : report.separating_7_cycles) listed.insert(s.cycle);
    EXPECT_EQ(listed, separating);
  }
}

TEST(Cycles, ShortOddCycleThroughVertex) {
  const auto w = wheel5();
  for (Vertex v = 0; v < w.vertex_count(); ++v) EXPECT_TRUE(has_short_odd_cycle_through(w, v));
  const auto c = testing::cube();
  for (Vertex v = 0; v < c.vertex_count(); ++v) EXPECT_FALSE(has_short_odd_cycle_through(c, v));
  // a 5-cycle with a pendant: the pendant lies on no cycle
  std::vector<std::vector<Vertex>> rot(6);
  for (int i = 0; i < 5; ++i) rot[i] = {(i + 4) % 5, (i + 1) % 5};
  rot[0] = {4, 5, 1};
  rot[5] = {0};
  const auto g = PlaneGraph::from_rotation(rot, DirectedEdge{0, 1});
  EXPECT_TRUE(has_short_odd_cycle_through(g, 3));
  EXPECT_FALSE(has_short_odd_cycle_through(g, 5));
}

TEST(Cycles, FindCycleOfLength) {
  EXPECT_EQ(find_cycle_of_length(testing::cube(), 4), (std::vector<Vertex>{0, 1, 2, 3}));
  EXPECT_FALSE(find_cycle_of_length(testing::cube(), 5).has_value());
  EXPECT_FALSE(find_cycle_of_length(testing::path_graph(4), 3).has_value());
}

TEST(Cycles, IsSeparating) {
  const auto g = generate("cylinder:m=7,k=3");
  EXPECT_TRUE(is_separating(g, {7, 8, 9, 10, 11, 12, 13}));
  EXPECT_FALSE(is_separating(g, {0, 1, 2, 3, 4, 5, 6}));
  EXPECT_FALSE(is_separating(testing::cube(), {0, 1, 2, 3}));
}

}  // namespace
}  // namespace planecolor
