// Copyright 2026 The burnkit Authors
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

#include "cli.hpp"

#include <cstdlib>
#include <fstream>
#include <sstream>
#include <string>
#include <vector>

#include "burnkit/exact_solver.hpp"
#include "burnkit/families.hpp"
#include "burnkit/graph.hpp"
#include "gtest/gtest.h"
#include "json.hpp"

namespace burnkit::cli {
namespace {

struct Run {
  int code;
  std::string out;
  std::string err;
};

Run run_cli(std::vector<std::string> args) {
  std::ostringstream out;
  std::ostringstream err;
  const int code = run(args, out, err);
  return {code, out.str(), err.str()};
}

std::string write_file(const std::string& name, const std::string& body) {
  const std::string path = ::testing::TempDir() + name;
  std::ofstream(path) << body;
  return path;
}

std::string graph_file(const std::string& name, const char* spec) {
  std::ostringstream s;
  write_graph(s, build_family(parse_family_spec(spec)));
  return write_file(name, s.str());
}

class CliTest : public ::testing::Test {
 protected:
  void SetUp() override { unsetenv("BURNKIT_NODE_BUDGET"); }
  void TearDown() override { unsetenv("BURNKIT_NODE_BUDGET"); }
};

TEST_F(CliTest, ComputeCycle) {
  const auto r = run_cli({"compute", "--family", "cycle:5"});
  EXPECT_EQ(r.code, kOk);
  EXPECT_NE(r.out.find("value: 3"), std::string::npos);
  EXPECT_NE(r.out.find("method: formula-cycle"), std::string::npos);
}

TEST_F(CliTest, ComputeTableT1) {
  const auto r = run_cli({"compute", "--family", "uni:7;4", "--method", "auto"});
  EXPECT_EQ(r.code, kOk);
  EXPECT_NE(r.out.find("value: 4"), std::string::npos);
  EXPECT_NE(r.out.find("method: table-t1"), std::string::npos);
}

TEST_F(CliTest, ComputeExactWithCertificate) {
  const auto r = run_cli({"compute", "--family", "forest:3,2,1", "--method", "exact", "--certificate"});
  EXPECT_EQ(r.code, kOk);
  EXPECT_NE(r.out.find("value: 3"), std::string::npos);
  EXPECT_NE(r.out.find("sequence: "), std::string::npos);
  EXPECT_NE(r.out.find("tree 3: root"), std::string::npos);
}

TEST_F(CliTest, ComputeFromFile) {
  const auto path = graph_file("c4.txt", "cycle:4");
  const auto r = run_cli({"compute", "--file", path});
  EXPECT_EQ(r.code, kOk);
  EXPECT_NE(r.out.find("value: 2"), std::string::npos);
}

TEST_F(CliTest, JsonRoundTripReverifies) {
  for (const char* spec : {"uni:9;10,2", "star:5,5,5", "forest:2,2", "cycle:4", "path:1"}) {
    const auto r = run_cli({"compute", "--family", spec, "--json"});
    ASSERT_EQ(r.code, kOk) << spec;
    const auto doc = nlohmann::json::parse(r.out);
    for (const char* key : {"n", "family", "q", "r", "value", "method", "lower", "upper", "certificate"})
      EXPECT_TRUE(doc.contains(key)) << key;
    EXPECT_EQ(doc["family"], spec);
    const BurningSequence seq{doc["certificate"].get<std::vector<VertexId>>()};
    EXPECT_EQ(seq.length(), doc["value"].get<std::size_t>());
    EXPECT_TRUE(verify_sequence(build_family(parse_family_spec(spec)), seq)) << spec;
  }
}

TEST_F(CliTest, ComputeInputErrors) {
  EXPECT_EQ(run_cli({"compute", "--file", "/nonexistent/g.txt"}).code, kInputError);
  EXPECT_EQ(run_cli({"compute", "--family", "uni:2;1"}).code, kInputError);
  EXPECT_EQ(run_cli({"compute", "--family", "blob:3"}).code, kInputError);
  EXPECT_EQ(run_cli({"compute"}).code, kInputError);
  const auto path = graph_file("p3.txt", "path:3");
  EXPECT_EQ(run_cli({"compute", "--file", path, "--family", "path:3"}).code, kInputError);
  EXPECT_EQ(run_cli({"compute", "--family", "star:5,5,5", "--method", "formula"}).code, kInputError);
  EXPECT_EQ(run_cli({"compute", "--family", "path:3", "--method", "guess"}).code, kInputError);
  EXPECT_EQ(run_cli({"frobnicate"}).code, kInputError);
  const auto bad = write_file("bad.txt", "3 2\n0 1\n");
  EXPECT_EQ(run_cli({"compute", "--file", bad}).code, kInputError);
}

TEST_F(CliTest, ComputeInconclusiveUnderBudget) {
  setenv("BURNKIT_NODE_BUDGET", "3", 1);
  const auto r = run_cli({"compute", "--family", "star:9,9,9,9,9"});
  EXPECT_EQ(r.code, kInconclusive);
  EXPECT_NE(r.out.find("bounds:"), std::string::npos);
  setenv("BURNKIT_NODE_BUDGET", "lots", 1);
  EXPECT_EQ(run_cli({"compute", "--family", "star:9,9,9,9,9"}).code, kInputError);
}

TEST_F(CliTest, VerifyExamples) {
  const auto c4 = graph_file("c4.txt", "cycle:4");
  EXPECT_EQ(run_cli({"verify", "--file", c4, "--sequence", "0,2"}).code, kOk);

  const auto p3 = graph_file("p3.txt", "path:3");
  const auto r = run_cli({"verify", "--file", p3, "--sequence", "1"});
  EXPECT_EQ(r.code, kInvalid);
  EXPECT_NE(r.out.find("uncovered: {0,2}"), std::string::npos);

  const auto c5 = graph_file("c5.txt", "cycle:5");
  EXPECT_EQ(run_cli({"verify", "--file", c5, "--sequence", "0,0"}).code, kInputError);
}

TEST_F(CliTest, VerifyReportsDistanceFailure) {
  const auto p5 = graph_file("p5.txt", "path:5");
  const auto r = run_cli({"verify", "--file", p5, "--sequence", "2,4,3"});
  EXPECT_EQ(r.code, kInvalid);
  EXPECT_NE(r.out.find("distance: sources 1 (vertex 2) and 3 (vertex 3)"), std::string::npos);
}

TEST_F(CliTest, VerifyMalformedSequence) {
  const auto p5 = graph_file("p5.txt", "path:5");
  for (const char* s : {"", "1,,2", "a", "1,-2", "9"})
    EXPECT_EQ(run_cli({"verify", "--file", p5, "--sequence", s}).code, kInputError) << s;
}

TEST_F(CliTest, SweepCycle) {
  const auto out = ::testing::TempDir() + "cycle_report.tsv";
  const auto r = run_cli({"sweep", "--class", "cycle", "--max-n", "49", "--out", out});
  EXPECT_EQ(r.code, kOk);
  EXPECT_NE(r.out.find("47 rows, 0 mismatches"), std::string::npos);
  std::ifstream in(out);
  std::stringstream body;
  body << in.rdbuf();
  EXPECT_NE(body.str().find("cycle:49\t49"), std::string::npos);
}

TEST_F(CliTest, SweepWithErrataAndJobs) {
  const auto r = run_cli({"sweep", "--class", "uni2", "--max-n", "20", "--errata", BURNKIT_ERRATA_PATH, "--jobs",
                          "2"});
  EXPECT_EQ(r.code, kOk);
  EXPECT_NE(r.out.find("# unexplained 0"), std::string::npos);
}

TEST_F(CliTest, SweepInconclusive) {
  setenv("BURNKIT_NODE_BUDGET", "0", 1);
  EXPECT_EQ(run_cli({"sweep", "--class", "uni1", "--max-n", "12"}).code, kInconclusive);
  EXPECT_EQ(run_cli({"sweep", "--class", "uni1", "--max-n", "12", "--allow-inconclusive"}).code, kOk);
}

TEST_F(CliTest, SweepInputErrors) {
  EXPECT_EQ(run_cli({"sweep", "--class", "tree", "--max-n", "5"}).code, kInputError);
  EXPECT_EQ(run_cli({"sweep", "--class", "uni2", "--max-n", "4"}).code, kInputError);
  EXPECT_EQ(run_cli({"sweep", "--class", "cycle", "--max-n", "9", "--errata", "/nonexistent"}).code, kInputError);
}

}  // namespace
}  // namespace burnkit::cli
