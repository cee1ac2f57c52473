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

#include "planecolor/cli.h"

#include <gtest/gtest.h>

#include <filesystem>
#include <sstream>

#include "planecolor/gen.h"
#include "planecolor/io.h"
#include "support.h"

namespace planecolor {
namespace {

namespace fs = std::filesystem;

struct Run {
  int code = 0;
  std::string out;
  std::string err;
};

Run run(std::vector<std::string> args) {
  args.insert(args.begin(), "planecolor");
  std::vector<const char*> argv;
  for (const auto& a : args) argv.push_back(a.c_str());
  std::ostringstream out, err;
  const int code = run_cli(static_cast<int>(argv.size()), argv.data(), out, err);
  return {code, out.str(), err.str()};
}

class Cli : public ::testing::Test {
 protected:
  void SetUp() override {
    dir_ = fs::temp_directory_path() /
           ("planecolor_cli_" + std::string(::testing::UnitTest::GetInstance()->current_test_info()->name()));
    fs::create_directories(dir_);
  }
  void TearDown() override { fs::remove_all(dir_); }

  std::string file(const std::string& name, const std::string& text) {
    const auto path = (dir_ / name).string();
    write_text_file(path, text);
    return path;
  }
  std::string path(const std::string& name) const { return (dir_ / name).string(); }

  fs::path dir_;
};

TEST_F(Cli, RecolorThenVerify) {
  const auto g = generate("grid:rows=2,cols=2");
  const auto graph = file("g.txt", serialize_graph(g));
  const auto from = file("a.txt", serialize_coloring({1, 2, 2, 1}));
  const auto to = file("b.txt", serialize_coloring({3, 4, 5, 3}));
  const auto r = run({"recolor", "--graph", graph, "--from", from, "--to", to, "--k", "5",
                      "--out", path("seq.txt")});
  EXPECT_EQ(r.code, 0) << r.err;
  EXPECT_NE(r.out.find("budget 16, max used "), std::string::npos);
  EXPECT_NE(r.out.find("verified ok"), std::string::npos);
  const auto v = run({"verify", "--graph", graph, "--from", from, "--to", to, "--sequence",
                      path("seq.txt")});
  EXPECT_EQ(v.code, 0) << v.out << v.err;
}

TEST_F(Cli, RecolorToStdoutPutsSummaryOnStderr) {
  const auto graph = file("g.txt", serialize_graph(testing::path_graph(2)));
  const auto from = file("a.txt", serialize_coloring({1, 2}));
  const auto to = file("b.txt", serialize_coloring({2, 1}));
  const auto r = run({"recolor", "--graph", graph, "--from", from, "--to", to, "--k", "5"});
  EXPECT_EQ(r.code, 0);
  EXPECT_EQ(parse_sequence(r.out).size(), 3u);
  EXPECT_NE(r.err.find("steps 3"), std::string::npos);
}

TEST_F(Cli, VerifyRejectsBrokenSequence) {
  const auto graph = file("g.txt", serialize_graph(testing::path_graph(2)));
  const auto from = file("a.txt", serialize_coloring({1, 2}));
  const auto seq = file("s.txt", "sequence 1\n0 1 2\n");
  const auto r = run({"verify", "--graph", graph, "--from", from, "--to", from, "--sequence", seq});
  EXPECT_EQ(r.code, 1);
}

TEST_F(Cli, RecolorRequiresFiveColors) {
  const auto graph = file("g.txt", serialize_graph(testing::path_graph(2)));
  const auto from = file("a.txt", serialize_coloring({1, 2}));
  EXPECT_EQ(run({"recolor", "--graph", graph, "--from", from, "--to", from, "--k", "4"}).code, 2);
}

TEST_F(Cli, CheckReportsFiveCycle) {
  const auto graph = file("c5.txt", serialize_graph(testing::cycle_graph(5)));
  const auto r = run({"check", "--graph", graph});
  EXPECT_EQ(r.code, 1);
  EXPECT_NE(r.out.find("5-cycle found"), std::string::npos);
  const auto ok = run({"check", "--graph", file("c4.txt", serialize_graph(testing::cycle_graph(4)))});
  EXPECT_EQ(ok.code, 0);
}

TEST_F(Cli, CheckListsSeparatingSevenCycles) {
  const auto graph = file("w.txt", serialize_graph(generate("heptagon_witness")));
  const auto r = run({"check", "--graph", graph});
  EXPECT_EQ(r.code, 0);
  EXPECT_NE(r.out.find("separating_7_cycles 2\n"), std::string::npos);
}

TEST_F(Cli, UnknownSubcommandIsUsageError) {
  const auto r = run({"bogus"});
  EXPECT_EQ(r.code, 2);
  EXPECT_FALSE(r.err.empty() && r.out.empty());
  EXPECT_EQ(run({}).code, 2);
  EXPECT_EQ(run({"--help"}).code, 0);
}

TEST_F(Cli, ParseErrorsAreUsageErrors) {
  const auto graph = file("bad.txt", "planegraph 1\nn 1\n");
  EXPECT_EQ(run({"faces", "--graph", graph}).code, 2);
  EXPECT_EQ(run({"faces", "--graph", path("missing.txt")}).code, 2);
}

TEST_F(Cli, AuditAndLevels) {
  const auto graph = file("cube.txt", serialize_graph(testing::cube()));
  const auto a = run({"audit", "--graph", graph});
  EXPECT_EQ(a.code, 0) << a.out;
  EXPECT_NE(a.out.find("verdict good-vertex-found"), std::string::npos);
  const auto l = run({"levels", "--graph", graph});
  EXPECT_EQ(l.code, 0);
  EXPECT_NE(l.out.find("Type1"), std::string::npos);
  const auto gv = run({"good-vertex", "--graph", graph});
  EXPECT_EQ(gv.code, 0);
  EXPECT_EQ(run({"audit", "--graph", file("c5.txt", serialize_graph(testing::cycle_graph(5)))}).code, 1);
}

TEST_F(Cli, OracleCommands) {
  const auto graph = file("e.txt", serialize_graph(testing::path_graph(2)));
  const auto from = file("a.txt", serialize_coloring({1, 2}));
  const auto to = file("b.txt", serialize_coloring({2, 1}));
  const auto d = run({"oracle-distance", "--graph", graph, "--from", from, "--to", to});
  EXPECT_EQ(d.code, 0);
  EXPECT_EQ(d.out, "nodes 20\ndistance 3\n");
  const auto diam = run({"oracle-diameter", "--graph", graph});
  EXPECT_EQ(diam.code, 0);
  EXPECT_NE(diam.out.find("bound 16 ok"), std::string::npos);
  const auto big = file("big.txt", serialize_graph(generate("grid:rows=4,cols=4")));
  EXPECT_EQ(run({"oracle-diameter", "--graph", big}).code, 2);
}

TEST_F(Cli, GenerateGraphAndColoring) {
  const auto r = run({"generate", "cylinder:m=7,k=2", "--seed", "3"});
  EXPECT_EQ(r.code, 0);
  const auto g = parse_graph(r.out);
  EXPECT_EQ(g.vertex_count(), 14);
  const auto graph = file("g.txt", r.out);
  const auto c = run({"generate", "coloring:seed=4", "--graph", graph});
  EXPECT_EQ(c.code, 0);
  EXPECT_EQ(parse_coloring(c.out), random_proper_coloring(g, 5, 4));
  EXPECT_EQ(run({"generate", "grid:rows=x"}).code, 2);
}

}  // namespace
}  // namespace planecolor
