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

#include <gtest/gtest.h>

#include <filesystem>

#include "planecolor/gen.h"
#include "support.h"

namespace planecolor {
namespace {

using testing::error_code_of;

std::string parse_message(std::string_view text) {
  try {
    parse_graph(text);
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), ErrorCode::kParse);
    return e.what();
  }
  return "";
}

TEST(GraphText, ExactFormat) {
  EXPECT_EQ(serialize_graph(testing::cycle_graph(4)),
            "planegraph 1\nn 4\n0: 3 1\n1: 0 2\n2: 1 3\n3: 2 0\nouter 1 0\n");
  EXPECT_EQ(serialize_graph(PlaneGraph()), "planegraph 1\nn 0\nouter none\n");
}

TEST(GraphText, RoundTripsCorpus) {
  for (const auto& [name, g] : testing::corpus()) {
    SCOPED_TRACE(name);
    const auto text = serialize_graph(g);
    const auto back = parse_graph(text);
    EXPECT_EQ(back, g);
    EXPECT_EQ(serialize_graph(back), text);
  }
}

TEST(GraphText, AcceptsTrailingBlankLinesAndSpacing) {
  const auto g = parse_graph("planegraph 1\nn 2\n0:   1\n1: 0\t\nouter 0 1\n\n\n");
  EXPECT_EQ(g.edge_count(), 1);
}

TEST(GraphText, ReportsLineNumbers) {
  EXPECT_NE(parse_message("planegraph 2\nn 0\nouter none\n").find("line 1:"), std::string::npos);
  EXPECT_NE(parse_message("planegraph 1\nm 0\nouter none\n").find("line 2:"), std::string::npos);
  EXPECT_NE(parse_message("planegraph 1\nn 2\n0: 1\n2: 0\nouter 0 1\n").find("line 4:"),
            std::string::npos);
  EXPECT_NE(parse_message("planegraph 1\nn 2\n0: x\n1: 0\nouter 0 1\n").find("line 3:"),
            std::string::npos);
  EXPECT_NE(parse_message("planegraph 1\nn 2\n0: 1\n\n1: 0\nouter 0 1\n").find("line 4:"),
            std::string::npos);
  EXPECT_NE(parse_message("planegraph 1\nn 2\n0: 1\n1: 0\nboundary 0 1\n").find("line 5:"),
            std::string::npos);
  EXPECT_NE(parse_message("").find("line 1:"), std::string::npos);
}

TEST(GraphText, StructuralErrorsKeepTheirCodes) {
  EXPECT_EQ(error_code_of([] { parse_graph("planegraph 1\nn 2\n0: 1\n1: 7\nouter none\n"); }),
            ErrorCode::kVertexOutOfRange);
  EXPECT_EQ(error_code_of([] { parse_graph("planegraph 1\nn 2\n0: 1\n1:\nouter none\n"); }),
            ErrorCode::kInconsistentRotation);
}

TEST(ColoringText, RoundTrip) {
  const Coloring c{1, 5, 2, 4};
  EXPECT_EQ(serialize_coloring(c), "coloring 1\n0 1\n1 5\n2 2\n3 4\n");
  EXPECT_EQ(parse_coloring(serialize_coloring(c)), c);
  EXPECT_TRUE(parse_coloring("coloring 1\n").empty());
  EXPECT_EQ(error_code_of([] { parse_coloring("coloring 1\n1 3\n"); }), ErrorCode::kParse);
  EXPECT_EQ(error_code_of([] { parse_coloring("coloring 1\n0 3 4\n"); }), ErrorCode::kParse);
}

TEST(SequenceText, RoundTrip) {
  const auto seq = make_sequence({{0, 1, 3}, {2, 4, 1}, {0, 3, 2}});
  const auto text = serialize_sequence(seq);
  EXPECT_EQ(text, "sequence 1\n0 1 3\n2 4 1\n0 3 2\n");
  const auto back = parse_sequence(text);
  EXPECT_EQ(back.steps, seq.steps);
  EXPECT_EQ(back.count(0), 2);
  EXPECT_EQ(error_code_of([] { parse_sequence("sequence 1\n-1 1 2\n"); }), ErrorCode::kParse);
  EXPECT_EQ(error_code_of([] { parse_sequence("sequence 1\n0 1\n"); }), ErrorCode::kParse);
}

TEST(Files, WriteThenRead) {
  const auto path = (std::filesystem::temp_directory_path() / "planecolor_io_test.txt").string();
  write_text_file(path, "hello\n");
  EXPECT_EQ(read_text_file(path), "hello\n");
  std::filesystem::remove(path);
  EXPECT_EQ(error_code_of([&] { read_text_file(path); }), ErrorCode::kParse);
}

}  // namespace
}  // namespace planecolor
