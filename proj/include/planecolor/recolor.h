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

#ifndef PLANECOLOR_RECOLOR_H_
#define PLANECOLOR_RECOLOR_H_

#include <cstddef>
#include <optional>
#include <utility>
#include <vector>

#include "planecolor/plane_graph.h"
#include "planecolor/structure.h"
#include "planecolor/surgery.h"

namespace planecolor {

inline constexpr int kColorCount = 5;

// color[v] in 1..kColorCount.
using Coloring = std::vector<int>;

struct RecolorStep {
  Vertex vertex = 0;
  int old_color = 0;
  int new_color = 0;

  friend bool operator==(const RecolorStep&, const RecolorStep&) = default;
};

struct RecolorSequence {
  std::vector<RecolorStep> steps;
  std::vector<int> per_vertex_counts;  // grows on demand

  void push(const RecolorStep& step);
  void append(const RecolorSequence& other);
  std::size_t size() const { return steps.size(); }
  bool empty() const { return steps.empty(); }
  int count(Vertex v) const;
  int max_count() const;
};

RecolorSequence make_sequence(std::vector<RecolorStep> steps);

// Throws kImproperColoring unless c has one color in 1..k per vertex.
void require_coloring_shape(const PlaneGraph& g, const Coloring& c,
                            int k = kColorCount);
bool is_proper(const PlaneGraph& g, const Coloring& c, int k = kColorCount);

// Counters filled in by the solver.
struct RecolorStats {
  long low_degree_reductions = 0;
  long identifications = 0;
  long align_calls = 0;
  int max_align_touches = 0;  // most recolorings of one vertex in one align
  int max_depth = 0;
};

// Recolors start into target one vertex at a time, keeping every
// intermediate coloring proper and recoloring each vertex at most 4n times.
// Throws kForbiddenCycle, kImproperColoring, or kBudgetExceeded (a bug).
RecolorSequence recolor_path(const PlaneGraph& g, const Coloring& start,
                             const Coloring& target,
                             RecolorStats* stats = nullptr);

// Solves g - v recursively and replays the result, moving v out of the way
// only when a neighbor is about to take its color. v must have degree <= 2.
RecolorSequence reduce_low_degree(const PlaneGraph& g, const Coloring& start,
                                  const Coloring& target, Vertex v,
                                  RecolorStats* stats = nullptr);

// Recolors phi so that cert.v and cert.w share a color, recoloring each
// vertex at most twice. Returns the steps and the resulting coloring.
// Throws kCertificateInvalid.
std::pair<RecolorSequence, Coloring> align_colors_across_face(
    const PlaneGraph& g, const Coloring& phi,
    const GoodVertexCertificate& cert, RecolorStats* stats = nullptr);

// Maps a sequence on the identified graph back to g: a step on the merged
// vertex becomes a step on v followed by the same step on w.
RecolorSequence lift_through_identification(const RecolorSequence& reduced,
                                            const Identification& id,
                                            Vertex v, Vertex w);

struct VerificationReport {
  bool well_formed = true;  // vertices in range, colors in 1..k, old != new
  bool start_proper = false;
  bool target_proper = false;
  bool endpoints_match = false;
  std::optional<std::size_t> first_malformed_step;
  std::optional<std::size_t> first_stale_step;  // old color disagrees
  std::optional<std::size_t> first_improper_step;
  std::vector<int> per_vertex_counts;
  int max_count = 0;
  long long budget = 0;  // 4n
  long long total = 0;
  long long total_budget = 0;  // 4n^2
  bool within_budget = false;

  bool ok() const;
};

VerificationReport verify_sequence(const PlaneGraph& g, const Coloring& start,
                                   const Coloring& target,
                                   const RecolorSequence& seq,
                                   int k = kColorCount);

}  // namespace planecolor

#endif  // PLANECOLOR_RECOLOR_H_
