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

#include "planecolor/io.h"

#include <charconv>
#include <fstream>
#include <sstream>
#include <vector>

#include "planecolor/error.h"

namespace planecolor {
namespace {

struct Line {
  int number = 0;
  std::vector<std::string_view> tokens;
};

std::vector<Line> split_lines(std::string_view text) {
  std::vector<Line> lines;
  int number = 0;
  while (!text.empty()) {
    const auto end = text.find('\n');
    std::string_view raw = text.substr(0, end);
    text = end == std::string_view::npos ? std::string_view() : text.substr(end + 1);
    ++number;
    Line line{number, {}};
    std::size_t i = 0;
    while (i < raw.size()) {
      if (raw[i] == ' ' || raw[i] == '\t' || raw[i] == '\r') {
        ++i;
        continue;
      }
      std::size_t j = i;
      while (j < raw.size() && raw[j] != ' ' && raw[j] != '\t' && raw[j] != '\r') ++j;
      line.tokens.push_back(raw.substr(i, j - i));
      i = j;
    }
    lines.push_back(std::move(line));
  }
  return lines;
}

[[noreturn]] void fail(int line, const std::string& what) {
  throw Error(ErrorCode::kParse, "line " + std::to_string(line) + ": " + what);
}

int to_int(std::string_view token, int line) {
  int value = 0;
  const auto [ptr, ec] = std::from_chars(token.data(), token.data() + token.size(), value);
  if (ec != std::errc() || ptr != token.data() + token.size()) {
    fail(line, "expected an integer, got '" + std::string(token) + "'");
  }
  return value;
}

// Blank lines are allowed only at the end.
std::vector<Line> body_lines(std::string_view text, std::string_view magic) {
  auto lines = split_lines(text);
  while (!lines.empty() && lines.back().tokens.empty()) lines.pop_back();
  if (lines.empty()) fail(1, "empty input");
  const auto& head = lines.front().tokens;
  if (head.size() != 2 || head[0] != magic || head[1] != "1") {
    fail(1, "expected '" + std::string(magic) + " 1'");
  }
  for (const auto& l : lines) {
    if (l.tokens.empty()) fail(l.number, "blank line");
  }
  return lines;
}

}  // namespace

std::string serialize_graph(const PlaneGraph& g) {
  std::ostringstream out;
  out << "planegraph 1\n";
  out << "n " << g.vertex_count() << "\n";
  for (Vertex v = 0; v < g.vertex_count(); ++v) {
    out << v << ":";
    for (Vertex u : g.rotation(v)) out << " " << u;
    out << "\n";
  }
  if (const auto e = g.outer_designation()) {
    out << "outer " << e->tail << " " << e->head << "\n";
  } else {
    out << "outer none\n";
  }
  return out.str();
}

PlaneGraph parse_graph(std::string_view text) {
  const auto lines = body_lines(text, "planegraph");
  if (lines.size() < 3) fail(static_cast<int>(lines.size()) + 1, "truncated graph");
  const auto& count = lines[1];
  if (count.tokens.size() != 2 || count.tokens[0] != "n") fail(count.number, "expected 'n <count>'");
  const int n = to_int(count.tokens[1], count.number);
  if (n < 0) fail(count.number, "negative vertex count");
  if (static_cast<int>(lines.size()) != n + 3) {
    fail(lines.back().number, "expected " + std::to_string(n) + " vertex lines and an outer line");
  }
  std::vector<std::vector<Vertex>> rotation(n);
  for (int v = 0; v < n; ++v) {
    const auto& l = lines[2 + v];
    const auto head = l.tokens[0];
    if (head.size() < 2 || head.back() != ':' ||
        to_int(head.substr(0, head.size() - 1), l.number) != v) {
      fail(l.number, "expected '" + std::to_string(v) + ":'");
    }
    for (std::size_t i = 1; i < l.tokens.size(); ++i) {
      rotation[v].push_back(to_int(l.tokens[i], l.number));
    }
  }
  const auto& last = lines.back();
  if (last.tokens[0] != "outer") fail(last.number, "expected 'outer'");
  std::optional<DirectedEdge> outer;
  if (last.tokens.size() == 2 && last.tokens[1] == "none") {
    outer = std::nullopt;
  } else if (last.tokens.size() == 3) {
    outer = DirectedEdge{to_int(last.tokens[1], last.number),
                         to_int(last.tokens[2], last.number)};
  } else {
    fail(last.number, "expected 'outer <u> <v>' or 'outer none'");
  }
  return PlaneGraph::from_rotation(std::move(rotation), outer);
}

std::string serialize_coloring(const Coloring& c) {
  std::ostringstream out;
  out << "coloring 1\n";
  for (std::size_t v = 0; v < c.size(); ++v) out << v << " " << c[v] << "\n";
  return out.str();
}

Coloring parse_coloring(std::string_view text) {
  const auto lines = body_lines(text, "coloring");
  Coloring c;
  for (std::size_t i = 1; i < lines.size(); ++i) {
    const auto& l = lines[i];
    if (l.tokens.size() != 2) fail(l.number, "expected '<vertex> <color>'");
    if (to_int(l.tokens[0], l.number) != static_cast<int>(i - 1)) {
      fail(l.number, "expected vertex " + std::to_string(i - 1));
    }
    c.push_back(to_int(l.tokens[1], l.number));
  }
  return c;
}

std::string serialize_sequence(const RecolorSequence& seq) {
  std::ostringstream out;
  out << "sequence 1\n";
  for (const auto& s : seq.steps) {
    out << s.vertex << " " << s.old_color << " " << s.new_color << "\n";
  }
  return out.str();
}

RecolorSequence parse_sequence(std::string_view text) {
  const auto lines = body_lines(text, "sequence");
  RecolorSequence seq;
  for (std::size_t i = 1; i < lines.size(); ++i) {
    const auto& l = lines[i];
    if (l.tokens.size() != 3) fail(l.number, "expected '<vertex> <old> <new>'");
    const int v = to_int(l.tokens[0], l.number);
    if (v < 0) fail(l.number, "negative vertex");
    seq.push({v, to_int(l.tokens[1], l.number), to_int(l.tokens[2], l.number)});
  }
  return seq;
}

std::string read_text_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw Error(ErrorCode::kParse, "cannot read " + path);
  std::ostringstream buf;
  buf << in.rdbuf();
  return buf.str();
}

void write_text_file(const std::string& path, std::string_view text) {
  std::ofstream out(path, std::ios::binary);
  if (!out || !out.write(text.data(), static_cast<std::streamsize>(text.size()))) {
    throw Error(ErrorCode::kParse, "cannot write " + path);
  }
}

}  // namespace planecolor
