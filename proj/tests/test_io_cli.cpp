// Copyright 2026 The intorder Authors
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

#include <gtest/gtest.h>

#include <filesystem>
#include <fstream>
#include <sstream>

#include "intorder/cli.hpp"
#include "intorder/io.hpp"

using namespace intorder;
namespace fs = std::filesystem;

namespace {

class TempDir {
 public:
  TempDir() : path_(fs::temp_directory_path() / ("intorder_test_" + std::to_string(::testing::UnitTest::GetInstance()->random_seed()) + "_" + ::testing::UnitTest::GetInstance()->current_test_info()->name())) {
    fs::create_directories(path_);
  }
  ~TempDir() { fs::remove_all(path_); }

  std::string write(const std::string& name, const std::string& content) const {
    const auto p = path_ / name;
    std::ofstream(p) << content;
    return p.string();
  }
  std::string file(const std::string& name) const { return (path_ / name).string(); }

 private:
  fs::path path_;
};

std::string read_all(const std::string& path) {
  std::ifstream in(path);
  std::stringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

const char* kExamplePair = R"({"pair": {"a": {"family": "schur_pair", "f": {"kind": "power", "gamma": 2}},
                                        "b": {"family": "schur_pair", "f": {"kind": "power", "gamma": 0.5}}}})";

}  // namespace

TEST(Io, GeneratorRoundTrip) {
  for (const auto& g : {Generator::power(2.5), Generator::exponential(-1.0), Generator::logit()}) {
    const Generator back = generator_from_json(to_json(g));
    EXPECT_EQ(back.kind(), g.kind());
    EXPECT_EQ(back.parameter(), g.parameter());
  }
}

TEST(Io, UnknownGeneratorListsSupportedKinds) {
  try {
    generator_from_json(Json{{"kind", "cosine"}});
    FAIL();
  } catch (const ConfigError& e) {
    EXPECT_NE(std::string(e.what()).find("logit"), std::string::npos);
  }
}

TEST(Io, AggregatorErrors) {
  EXPECT_THROW(aggregator_from_json(Json{{"family", "k"}}), ConfigError);
  EXPECT_THROW(aggregator_from_json(Json{{"family", "k"}, {"w", 2.0}}), ConfigError);
  EXPECT_THROW(aggregator_from_json(Json{{"family", "median"}}), ConfigError);
}

TEST(Io, CsvWithAndWithoutHeader) {
  std::istringstream with("lo,hi\n0.1,0.2\n\n0.3, 0.9\n");
  const auto a = read_intervals_csv(with);
  ASSERT_EQ(a.size(), 2u);
  EXPECT_EQ(a[1], Interval(0.3, 0.9));
  std::istringstream without("0.1,0.2\n");
  EXPECT_EQ(read_intervals_csv(without).size(), 1u);
  std::istringstream bad("0.1,0.2\n0.5,0.4\n");
  EXPECT_THROW(read_intervals_csv(bad), IoError);
  std::istringstream garbage("0.1,0.2\nx,y\n");
  EXPECT_THROW(read_intervals_csv(garbage), IoError);
}

TEST(Io, JsonIntervals) {
  std::istringstream in("[[0.1, 0.2], [0, 1]]");
  EXPECT_EQ(read_intervals_json(in).size(), 2u);
  std::istringstream bad("[[0.1]]");
  EXPECT_THROW(read_intervals_json(bad), IoError);
}

TEST(Io, RankedCsvFormat) {
  std::ostringstream os;
  write_ranked_csv(os, {{0.5, 0.6}, {0.1, 0.2}}, {1, 0});
  EXPECT_EQ(os.str(), "rank,index,lo,hi\n1,1,0.1,0.2\n2,0,0.5,0.6\n");
}

TEST(Io, VerdictJson) {
  const auto v = check_pair({AggregationFunction::wgm(0.5), AggregationFunction::wgm(0.5)});
  const Json j = to_json(v);
  EXPECT_EQ(j["outcome"], "NotAdmissible");
  EXPECT_TRUE(j["witness"].contains("residual_a"));
}

TEST(Cli, CheckPairReportsSchurRule) {
  TempDir dir;
  RunConfig c;
  c.command = Command::CheckPair;
  c.config_path = dir.write("pair.json", kExamplePair);
  std::ostringstream out, err;
  ASSERT_EQ(run(c, out, err), kExitOk) << err.str();
  const Json j = Json::parse(out.str());
  EXPECT_EQ(j["outcome"], "Admissible");
  EXPECT_EQ(j["rule"], "Thm 4.10");
}

TEST(Cli, RankIsDeterministic) {
  TempDir dir;
  RunConfig c;
  c.command = Command::Rank;
  c.config_path = dir.write("order.json", R"({"order": {"type": "lexicographic"}})");
  c.input_path = dir.write("in.csv", "lo,hi\n0.3,0.5\n0.1,0.9\n0.3,0.4\n");
  c.verify_triples = 100;
  std::ostringstream out1, out2, err;
  ASSERT_EQ(run(c, out1, err), kExitOk) << err.str();
  c.threads = 3;
  ASSERT_EQ(run(c, out2, err), kExitOk);
  EXPECT_EQ(out1.str(), "rank,index,lo,hi\n1,1,0.1,0.9\n2,2,0.3,0.4\n3,0,0.3,0.5\n");
  EXPECT_EQ(out1.str(), out2.str());
  EXPECT_NE(err.str().find("0 violations"), std::string::npos);
}

TEST(Cli, CoincideOutputIndependentOfThreads) {
  TempDir dir;
  RunConfig c;
  c.command = Command::Coincide;
  c.config_path = dir.write("c.json", R"({"first": {"type": "generated",
      "a": {"family": "schur_pair", "f": {"kind": "power", "gamma": 2}},
      "b": {"family": "schur_pair", "f": {"kind": "power", "gamma": 0.5}}},
      "second": {"type": "alpha_beta", "alpha": 0.7, "beta": 1}})");
  c.resolution = 50;
  c.output_path = dir.file("r1.json");
  c.dump_path = dir.file("d.csv");
  std::ostringstream out, err;
  ASSERT_EQ(run(c, out, err), kExitOk) << err.str();
  c.threads = 4;
  c.output_path = dir.file("r4.json");
  ASSERT_EQ(run(c, out, err), kExitOk);
  EXPECT_EQ(read_all(dir.file("r1.json")), read_all(dir.file("r4.json")));
  EXPECT_EQ(Json::parse(read_all(dir.file("r1.json")))["coincide"], false);
  EXPECT_EQ(read_all(dir.file("d.csv")).rfind("u_lo,u_hi,x_lo,x_hi,first,second\n", 0), 0u);
}

TEST(Cli, FindCounterexample) {
  TempDir dir;
  RunConfig c;
  c.command = Command::FindCounterexample;
  c.config_path = dir.write("p.json", R"({"pair": {"a": {"family": "k", "w": 0.5}, "b": {"family": "k", "w": 0.5}}})");
  c.resolution = 50;
  std::ostringstream out, err;
  ASSERT_EQ(run(c, out, err), kExitOk);
  EXPECT_FALSE(Json::parse(out.str())["witness"].is_null());

  c.config_path = dir.write("q.json", kExamplePair);
  std::ostringstream out2;
  ASSERT_EQ(run(c, out2, err), kExitOk);
  EXPECT_EQ(Json::parse(out2.str())["message"], "none at resolution 50");
}

TEST(Cli, ExitCodes) {
  TempDir dir;
  RunConfig c;
  c.command = Command::CheckPair;
  c.config_path = dir.file("missing.json");
  std::ostringstream out, err;
  EXPECT_EQ(run(c, out, err), kExitIo);

  c.config_path = dir.write("bad.json", "{not json");
  EXPECT_EQ(run(c, out, err), kExitConfig);

  c.config_path = dir.write("p.json", kExamplePair);
  c.resolution = 8;
  EXPECT_EQ(run(c, out, err), kExitConfig);
  c.resolution.reset();
  c.tol = -1.0;
  EXPECT_EQ(run(c, out, err), kExitConfig);

  RunConfig r;
  r.command = Command::Rank;
  r.config_path = dir.write("o.json", R"({"order": {"type": "xu_yager"}})");
  r.input_path = dir.file("nope.csv");
  EXPECT_EQ(run(r, out, err), kExitIo);

  r.config_path = dir.write("o2.json", R"({"order": {"type": "generated", "a": {"family": "k", "w": 0.5},
                                                                        "b": {"family": "k", "w": 0.5}}})");
  r.input_path = dir.write("in.csv", "0.1,0.2\n");
  EXPECT_EQ(run(r, out, err), kExitConfig);
}

TEST(Cli, ArgumentParsing) {
  std::ostringstream out, err;
  const char* argv[] = {"intorder", "frobnicate"};
  EXPECT_EQ(run_cli(2, const_cast<char**>(argv), out, err), kExitConfig);
}
