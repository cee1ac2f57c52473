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

#ifndef PLANECOLOR_DISCHARGE_H_
#define PLANECOLOR_DISCHARGE_H_

#include <string>
#include <vector>

#include <boost/rational.hpp>

#include "planecolor/plane_graph.h"
#include "planecolor/structure.h"

namespace planecolor {

using Charge = boost::rational<long long>;

std::string format_charge(const Charge& c);  // always "p/q"

// Charges per vertex and per face (indexed like g.faces()).
//
// n2, g_hat and h_hat describe the outer face: n2 counts its 2-vertices,
// g_hat is the charge its vertices receive through the face rule from faces
// other than the outer one, and h_hat = (2/3) n2 - 5/3. They are only
// meaningful for Type 2 graphs.
struct ChargeLedger {
  std::vector<Charge> vertex_initial;
  std::vector<Charge> vertex_final;
  std::vector<Charge> face_initial;
  std::vector<Charge> face_final;
  int n2 = 0;
  Charge g_hat;
  Charge h_hat;

  Charge total_initial() const;
  Charge total_final() const;
};

// ch(v) = d(v) - 4, ch(f) = d(f) - 4; final charges start equal to the
// initial ones. Throws kDisconnected.
ChargeLedger initial_charges(const PlaneGraph& g);

// Face rule: every face of length >= 6 gives (d(f) - 4) / d(f) to each
// incident vertex, once per incidence on its walk.
// Vertex rule: every 3-vertex outside T takes 1/3 from each neighbor of
// level >= 3.
ChargeLedger apply_rules(const PlaneGraph& g, const LevelAssignment& levels,
                         ChargeLedger ledger);

enum class AuditVerdict { kGoodVertexFound, kCounterexampleCandidate };

struct AuditReport {
  GraphType type = GraphType::kNeither;
  LevelAssignment levels;
  ChargeLedger ledger;

  bool conservation_ok = false;    // sum initial == sum final == -8
  bool faces_nonnegative = false;  // every final face charge >= 0
  bool fat_faces_zero = false;     // 4-faces and 6+-faces end at exactly 0

  // Vertices outside T with negative final charge. The argument allows
  // these only at good vertices.
  std::vector<Vertex> negative_vertices;
  bool negative_vertices_are_good = false;

  std::size_t good_vertex_count = 0;  // good vertices with v, v3 outside T

  // Outer-face accounting, Type 2 only.
  Charge boundary_final_sum;     // sum of final charges on the outer face
  bool boundary_gain_ok = true;  // g_hat > h_hat
  bool boundary_sum_ok = true;   // boundary_final_sum > -8
  bool adjacent_twos_ok = true;  // runs of >= 2 adjacent boundary 2-vertices
                                 // see a 6+-face on the inner side

  AuditVerdict verdict = AuditVerdict::kCounterexampleCandidate;

  bool passed() const;
};

// Runs the charge bookkeeping on a graph satisfying the lemma's hypotheses
// (connected, no 3-/5-cycles, no separating 7-cycle, Type 1 or Type 2);
// throws kHypothesisViolation otherwise.
AuditReport audit_key_lemma(const PlaneGraph& g);

// Line-oriented text form with exact rationals.
std::string format_audit(const AuditReport& report);

}  // namespace planecolor

#endif  // PLANECOLOR_DISCHARGE_H_
