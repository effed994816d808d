// Copyright 2026 The polydyn Authors.
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//   http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include <gtest/gtest.h>

#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <regex>
#include <set>
#include <sstream>

#include "oracles.hpp"
#include "polydyn/cli.hpp"

namespace polydyn {
namespace {

namespace fs = std::filesystem;

struct Outcome {
  int code;
  std::string out;
  std::string err;
};

Outcome run(std::vector<std::string> args) {
  args.insert(args.begin(), "polydyn");
  std::vector<const char*> argv;
  for (const auto& a : args) argv.push_back(a.c_str());
  std::ostringstream out, err;
  const int code = cli::run(static_cast<int>(argv.size()), argv.data(), out, err);
  return {code, out.str(), err.str()};
}

std::string data(const std::string& name) { return std::string(POLYDYN_TEST_DATA) + "/" + name; }

class TempDir {
 public:
  TempDir() {
    path_ = fs::temp_directory_path() /
            ("polydyn-cli-" + std::to_string(::testing::UnitTest::GetInstance()->random_seed()) +
             "-" + ::testing::UnitTest::GetInstance()->current_test_info()->name());
    fs::remove_all(path_);
    fs::create_directories(path_);
  }
  ~TempDir() { fs::remove_all(path_); }
  const fs::path& path() const { return path_; }
  std::string write(const std::string& name, const std::string& text) const {
    std::ofstream(path_ / name) << text;
    return (path_ / name).string();
  }

 private:
  fs::path path_;
};

std::string slurp(const fs::path& p) {
  std::ifstream in(p);
  std::ostringstream os;
  os << in.rdbuf();
  return os.str();
}

TEST(Analyze, ThreeGeneReport) {
  const Outcome r = run({"analyze", data("three_gene.pds"), "--cycles", "3"});
  EXPECT_EQ(r.code, 0);
  EXPECT_EQ(r.out, "steady states: 1\n000\n2-cycles: 0\n3-cycles: 1\n010 111 011\n");
  const Outcome sim = run({"analyze", data("three_gene.pds"), "--cycles", "3", "--mode",
                       "simulation"});
  EXPECT_EQ(sim.out, r.out);
  const Outcome one = run({"analyze", data("three_gene.pds"), "--cycles", "1"});
  EXPECT_EQ(one.out, "steady states: 1\n000\n");
}

TEST(Analyze, InputErrorsExitWithTwo) {
  TempDir dir;
  const auto bad = dir.write("bad.pds", "KIND polynomial\nSTATES 2\nf1 = x1 +* x2\n");
  const Outcome r = run({"analyze", bad});
  EXPECT_EQ(r.code, cli::kExitInputError);
  EXPECT_NE(r.err.find("line 3, column"), std::string::npos) << r.err;
  EXPECT_EQ(run({"analyze", (dir.path() / "missing.pds").string()}).code, 2);
  EXPECT_EQ(run({"analyze", data("three_gene.pds"), "--cycles", "0"}).code, 2);
  EXPECT_EQ(run({"analyze", data("three_gene.pds"), "--mode", "guess"}).code, 2);
  EXPECT_EQ(run({"analyze", data("three_gene.pds"), "--schedule", "1,1,2"}).code, 2);
  EXPECT_EQ(run({"frobnicate"}).code, 2);
  EXPECT_EQ(run({}).code, 2);
  EXPECT_EQ(run({"--help"}).code, 0);
}

TEST(Analyze, ResourceCapExitsWithThree) {
  TempDir dir;
  std::string text = "KIND boolean\nSTATES 2\n";
  for (int i = 1; i <= 14; ++i) text += "f" + std::to_string(i) + " = x" + std::to_string(i) + "\n";
  const auto big = dir.write("big.bool", text);
  const Outcome sim = run({"analyze", big, "--mode", "simulation", "--cap", "1000"});
  EXPECT_EQ(sim.code, cli::kExitResourceError);
  EXPECT_NE(sim.err.find("algebraic"), std::string::npos);
  EXPECT_EQ(run({"phase", big, "--cap", "1000"}).code, cli::kExitResourceError);
}

TEST(Analyze, WritesReportFile) {
  TempDir dir;
  const auto out = (dir.path() / "report.txt").string();
  const Outcome r = run({"analyze", data("three_gene.pds"), "--cycles", "2", "--out", out});
  EXPECT_EQ(r.code, 0);
  EXPECT_TRUE(r.out.empty());
  EXPECT_EQ(slurp(out), "steady states: 1\n000\n2-cycles: 0\n");
}

TEST(Trajectory, PrintsPathToAttractor) {
  EXPECT_EQ(run({"trajectory", data("three_gene.pds"), "--init", "100"}).out,
            "100 -> 011 -> 010 -> 111 -> [cycle]\n");
  EXPECT_EQ(run({"trajectory", data("three_gene.pds"), "--init", "000"}).out,
            "000 -> [steady state]\n");
  EXPECT_EQ(run({"trajectory", data("three_gene.pds"), "--init", "10"}).code, 2);
  EXPECT_EQ(run({"trajectory", data("three_gene.pds"), "--init", "102"}).code, 2);
  TempDir dir;
  const auto dot = (dir.path() / "t.dot").string();
  run({"trajectory", data("three_gene.pds"), "--init", "100", "--out", dot});
  const std::string text = slurp(dot);
  EXPECT_NE(text.find("\"111\" -> \"011\";"), std::string::npos);
}

TEST(Wiring, DotMatchesBruteForceEdges) {
  const Outcome r = run({"wiring", data("three_gene.pds")});
  ASSERT_EQ(r.code, 0);
  EXPECT_EQ(r.out.rfind("digraph wiring {", 0), 0u);
  const std::regex edge(R"(x(\d+) -> x(\d+) \[sign=(\w+))");
  std::set<std::tuple<std::uint32_t, std::uint32_t, std::string>> actual;
  for (std::sregex_iterator it(r.out.begin(), r.out.end(), edge), end; it != end; ++it) {
    actual.emplace(std::stoul((*it)[1]) - 1, std::stoul((*it)[2]) - 1, (*it)[3]);
  }
  const auto doc = parse_model(slurp(data("three_gene.pds")));
  const auto t = document_to_system(doc);
  const auto& f = std::get<PDS>(t.system);
  std::set<std::tuple<std::uint32_t, std::uint32_t, std::string>> expected;
  for (std::uint32_t s = 0; s < 3; ++s) {
    for (std::uint32_t tgt = 0; tgt < 3; ++tgt) {
      if (testing::brute_depends(f[tgt], s, 2, 3)) {
        expected.emplace(s, tgt, std::string(to_string(testing::brute_sign(f[tgt], s, 3))));
      }
    }
  }
  EXPECT_EQ(actual, expected);
  EXPECT_NE(r.out.find("// circuit x1 -> x2 -> x1 : positive"), std::string::npos);
}

TEST(Wiring, IdentityOnOneVariable) {
  TempDir dir;
  const auto model = dir.write("id.pds", "KIND polynomial\nSTATES 2\nf1 = x1\n");
  const Outcome w = run({"wiring", model});
  EXPECT_NE(w.out.find("  x1;\n"), std::string::npos);
  EXPECT_EQ(w.out.find("x2"), std::string::npos);
  const Outcome p = run({"phase", model});
  EXPECT_EQ(p.out,
            "digraph phase_space {\n  \"0\";\n  \"1\";\n  \"0\" -> \"0\";\n  \"1\" -> \"1\";\n}\n");
}

TEST(Phase, ProbabilisticEdgesCarryLabels) {
  TempDir dir;
  const auto model = dir.write(
      "p.pds", "KIND probabilistic\nSTATES 2\nf1 = x1 @ 1/4\nf1 = 1 @ 3/4\nf2 = x1\n");
  const Outcome r = run({"phase", model});
  EXPECT_EQ(r.code, 0);
  EXPECT_NE(r.out.find("\"00\" -> \"00\" [label=\"1/4\"];"), std::string::npos) << r.out;
  EXPECT_NE(r.out.find("\"00\" -> \"10\" [label=\"3/4\"];"), std::string::npos);
  EXPECT_NE(r.out.find("\"11\" -> \"11\" [label=\"1\"];"), std::string::npos);
  EXPECT_EQ(run({"trajectory", model, "--init", "00"}).code, 2);
}

double mean_indegree(const std::string& file) {
  std::istringstream in(file);
  std::string line;
  std::size_t rules = 0, regulators = 0;
  while (std::getline(in, line)) {
    if (line.find(" regulators:") == std::string::npos) continue;
    ++rules;
    regulators += static_cast<std::size_t>(std::count(line.begin(), line.end(), 'x'));
  }
  return static_cast<double>(regulators) / static_cast<double>(rules);
}

TEST(Random, DeterministicAndOnTarget) {
  cli::RandomNetworkOptions o;
  o.min_nodes = 50;
  o.max_nodes = 50;
  o.mean_indegree = 1.68;
  o.count = 50;
  o.seed = 1;
  const auto a = cli::random_networks(o);
  const auto b = cli::random_networks(o);
  EXPECT_EQ(a, b);
  double total = 0;
  for (const auto& file : a) {
    const ModelDocument doc = parse_model(file);
    EXPECT_EQ(doc.kind, ModelKind::kBoolean);
    EXPECT_EQ(doc.nvars, 50u);
    total += mean_indegree(file);
  }
  EXPECT_NEAR(total / 50, 1.68, 0.2);
  o.seed = 2;
  EXPECT_NE(cli::random_networks(o), a);
}

TEST(Random, SingleNodeNetworks) {
  cli::RandomNetworkOptions o;
  o.min_nodes = 1;
  o.max_nodes = 1;
  o.mean_indegree = 2.5;
  o.count = 20;
  for (const auto& file : cli::random_networks(o)) {
    EXPECT_NE(file.find("# f1 regulators: x1\n"), std::string::npos);
    const ModelDocument doc = parse_model(file);
    EXPECT_EQ(doc.nvars, 1u);
  }
}

TEST(Random, CommandWritesFiles) {
  TempDir dir;
  const auto out = (dir.path() / "nets").string();
  const Outcome r = run({"random", "--nodes", "5:8", "--count", "12", "--seed", "3", "--out", out});
  EXPECT_EQ(r.code, 0);
  std::vector<fs::path> files;
  for (const auto& e : fs::directory_iterator(out)) files.push_back(e.path());
  EXPECT_EQ(files.size(), 12u);
  EXPECT_TRUE(fs::exists(fs::path(out) / "net_001.txt"));
  const Outcome single = run({"random", "--nodes", "6", "--seed", "3"});
  EXPECT_EQ(single.out, run({"random", "--nodes", "6", "--seed", "3"}).out);
  EXPECT_EQ(parse_model(single.out).nvars, 6u);
  EXPECT_EQ(run({"random", "--count", "2"}).code, 2);
  EXPECT_EQ(run({"random", "--nodes", "9:3"}).code, 2);
}

TEST(Bench, TimesEveryModel) {
  TempDir dir;
  const auto nets = (dir.path() / "nets").string();
  ASSERT_EQ(run({"random", "--nodes", "10:20", "--count", "4", "--out", nets}).code, 0);
  std::ofstream(fs::path(nets) / "net_999.txt") << "KIND nonsense\n";
  const Outcome r = run({"bench", nets, "--jobs", "2"});
  EXPECT_EQ(r.code, 0);
  std::istringstream rows(r.out);
  std::string line;
  std::getline(rows, line);
  EXPECT_EQ(line, "model,n,seconds,steady_states");
  int count = 0;
  const std::regex row(R"(net_\d{3}\.txt,\d+,\d+\.\d{6},\d*)");
  while (std::getline(rows, line)) {
    EXPECT_TRUE(std::regex_match(line, row)) << line;
    ++count;
  }
  EXPECT_EQ(count, 5);
  EXPECT_NE(r.out.find("net_999.txt,0,"), std::string::npos);
  EXPECT_NE(r.err.find("2 worker(s)"), std::string::npos);
  EXPECT_NE(r.err.find("1 failure(s)"), std::string::npos);

  const auto empty = (dir.path() / "empty").string();
  fs::create_directories(empty);
  const Outcome e = run({"bench", empty});
  EXPECT_EQ(e.code, 0);
  EXPECT_EQ(e.out, "model,n,seconds,steady_states\n");
  EXPECT_EQ(run({"bench", (dir.path() / "nowhere").string()}).code, 2);
}

TEST(Tool, ExitCodesFromTheBinary) {
  const std::string tool = POLYDYN_TOOL;
  EXPECT_EQ(std::system((tool + " analyze " + data("three_gene.pds") + " > /dev/null").c_str()), 0);
  const int status = std::system((tool + " analyze /nonexistent 2> /dev/null").c_str());
  EXPECT_TRUE(WIFEXITED(status));
  EXPECT_EQ(WEXITSTATUS(status), 2);
}

}  // namespace
}  // namespace polydyn
