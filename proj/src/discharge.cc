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

#include "planecolor/discharge.h"

#include <algorithm>
#include <numeric>
#include <sstream>

#include "planecolor/cycles.h"
#include "planecolor/error.h"

namespace planecolor {
namespace {

Charge sum(const std::vector<Charge>& xs) {
  return std::accumulate(xs.begin(), xs.end(), Charge(0));
}

}  // namespace

std::string format_charge(const Charge& c) {
  return std::to_string(c.numerator()) + "/" + std::to_string(c.denominator());
}

Charge ChargeLedger::total_initial() const {
  return sum(vertex_initial) + sum(face_initial);
}

Charge ChargeLedger::total_final() const {
  return sum(vertex_final) + sum(face_final);
}

ChargeLedger initial_charges(const PlaneGraph& g) {
  if (!g.connected() || g.vertex_count() == 0) {
    throw Error(ErrorCode::kDisconnected,
                "charges need a connected, nonempty graph");
  }
  ChargeLedger ledger;
  for (Vertex v = 0; v < g.vertex_count(); ++v) {
    ledger.vertex_initial.emplace_back(g.degree(v) - 4);
  }
  for (const auto& f : g.faces()) ledger.face_initial.emplace_back(f.length() - 4);
  ledger.vertex_final = ledger.vertex_initial;
  ledger.face_final = ledger.face_initial;
  return ledger;
}

ChargeLedger apply_rules(const PlaneGraph& g, const LevelAssignment& levels,
                         ChargeLedger ledger) {
  const auto& faces = g.faces();
  const int outer = g.outer_face_index();
  std::vector<bool> on_outer(g.vertex_count(), false);
  for (const auto& e : faces[outer].edges) on_outer[e.tail] = true;

  ledger.g_hat = 0;
  for (std::size_t f = 0; f < faces.size(); ++f) {
    const int d = faces[f].length();
    if (d < 6) continue;
    const Charge share(d - 4, d);
    for (const auto& e : faces[f].edges) {
      ledger.face_final[f] -= share;
      ledger.vertex_final[e.tail] += share;
      if (static_cast<int>(f) != outer && on_outer[e.tail]) ledger.g_hat += share;
    }
  }
  for (Vertex v = 0; v < g.vertex_count(); ++v) {
    if (g.degree(v) != 3 || levels.in_t(v)) continue;
    for (Vertex u : g.rotation(v)) {
      if (levels.level[u] >= 3) {
        ledger.vertex_final[u] -= Charge(1, 3);
        ledger.vertex_final[v] += Charge(1, 3);
      }
    }
  }
  ledger.n2 = 0;
  for (Vertex v = 0; v < g.vertex_count(); ++v) {
    if (on_outer[v] && g.degree(v) == 2) ++ledger.n2;
  }
  ledger.h_hat = Charge(2, 3) * ledger.n2 - Charge(5, 3);
  return ledger;
}

bool AuditReport::passed() const {
  bool ok = conservation_ok && faces_nonnegative && fat_faces_zero &&
            negative_vertices_are_good &&
            verdict == AuditVerdict::kGoodVertexFound;
  if (type == GraphType::kType2) {
    ok = ok && boundary_gain_ok && boundary_sum_ok && adjacent_twos_ok;
  }
  return ok;
}

AuditReport audit_key_lemma(const PlaneGraph& g) {
  if (!g.connected() || g.vertex_count() == 0) {
    throw Error(ErrorCode::kHypothesisViolation, "graph is not connected");
  }
  const auto cycles = forbidden_cycle_check(g);
  if (cycles.has_3_cycle() || cycles.has_5_cycle()) {
    throw Error(ErrorCode::kHypothesisViolation, "graph has a 3- or 5-cycle");
  }
  if (!cycles.separating_7_cycles.empty()) {
    throw Error(ErrorCode::kHypothesisViolation,
                "graph has a separating 7-cycle");
  }
  AuditReport report;
  report.type = classify_type(g);
  if (report.type == GraphType::kNeither) {
    throw Error(ErrorCode::kHypothesisViolation,
                "graph is neither Type 1 nor Type 2");
  }
  report.levels = compute_levels(g, report.type);
  report.ledger = apply_rules(g, report.levels, initial_charges(g));
  const auto& ledger = report.ledger;

  report.conservation_ok = ledger.total_initial() == Charge(-8) &&
                           ledger.total_final() == Charge(-8);
  report.faces_nonnegative = std::all_of(
      ledger.face_final.begin(), ledger.face_final.end(),
      [](const Charge& c) { return c >= Charge(0); });
  report.fat_faces_zero = true;
  for (std::size_t f = 0; f < g.faces().size(); ++f) {
    const int d = g.faces()[f].length();
    if ((d == 4 || d >= 6) && ledger.face_final[f] != Charge(0)) {
      report.fat_faces_zero = false;
    }
  }

  const auto good =
      enumerate_good_vertices(g, report.levels, report.levels.t);
  report.good_vertex_count = good.size();
  std::vector<bool> is_good(g.vertex_count(), false);
  for (const auto& c : good) is_good[c.v] = true;
  report.negative_vertices_are_good = true;
  for (Vertex v = 0; v < g.vertex_count(); ++v) {
    if (report.levels.in_t(v) || ledger.vertex_final[v] >= Charge(0)) continue;
    report.negative_vertices.push_back(v);
    if (!is_good[v]) report.negative_vertices_are_good = false;
  }

  if (report.type == GraphType::kType2) {
    report.boundary_final_sum = 0;
    for (Vertex v : report.levels.t) {
      report.boundary_final_sum += ledger.vertex_final[v];
    }
    report.boundary_gain_ok = ledger.g_hat > ledger.h_hat;
    report.boundary_sum_ok = report.boundary_final_sum > Charge(-8);
    const auto& walk = g.outer_face().edges;
    for (const auto& e : walk) {
      if (g.degree(e.tail) == 2 && g.degree(e.head) == 2 &&
          g.faces()[g.face_left_of(e.reversed())].length() < 6) {
        report.adjacent_twos_ok = false;
      }
    }
  }
  report.verdict = report.good_vertex_count > 0
                       ? AuditVerdict::kGoodVertexFound
                       : AuditVerdict::kCounterexampleCandidate;
  return report;
}

std::string format_audit(const AuditReport& report) {
  const auto& ledger = report.ledger;
  auto flag = [](bool ok) { return ok ? "ok" : "FAIL"; };
  std::ostringstream out;
  out << "audit 1\n";
  out << "type " << graph_type_name(report.type) << "\n";
  out << "total_initial " << format_charge(ledger.total_initial()) << "\n";
  out << "total_final " << format_charge(ledger.total_final()) << "\n";
  out << "conservation " << flag(report.conservation_ok) << "\n";
  out << "faces_nonnegative " << flag(report.faces_nonnegative) << "\n";
  out << "fat_faces_zero " << flag(report.fat_faces_zero) << "\n";
  out << "negative_vertices_good " << flag(report.negative_vertices_are_good)
      << "\n";
  out << "good_vertices " << report.good_vertex_count << "\n";
  if (report.type == GraphType::kType2) {
    out << "n2 " << ledger.n2 << "\n";
    out << "g_hat " << format_charge(ledger.g_hat) << "\n";
    out << "h_hat " << format_charge(ledger.h_hat) << "\n";
    out << "boundary_gain " << flag(report.boundary_gain_ok) << "\n";
    out << "boundary_sum " << format_charge(report.boundary_final_sum) << " "
        << flag(report.boundary_sum_ok) << "\n";
    out << "adjacent_twos " << flag(report.adjacent_twos_ok) << "\n";
  }
  for (std::size_t v = 0; v < ledger.vertex_initial.size(); ++v) {
    out << "vertex " << v << " level " << report.levels.level[v] << " "
        << format_charge(ledger.vertex_initial[v]) << " "
        << format_charge(ledger.vertex_final[v]) << "\n";
  }
  for (std::size_t f = 0; f < ledger.face_initial.size(); ++f) {
    out << "face " << f << " length " << ledger.face_initial[f] + 4 << " "
        << format_charge(ledger.face_initial[f]) << " "
        << format_charge(ledger.face_final[f]) << "\n";
  }
  out << "verdict "
      << (report.verdict == AuditVerdict::kGoodVertexFound
              ? "good-vertex-found"
              : "counterexample-candidate")
      << "\n";
  return out.str();
}

}  // namespace planecolor
