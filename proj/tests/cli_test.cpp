// Copyright 2026 The galab Authors.
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

#include "galab/cli.hpp"

namespace galab::cli {
namespace {

namespace fs = std::filesystem;

struct Result {
  int code;
  std::string out;
  std::string err;
};

Result call(std::vector<std::string> args) {
  args.insert(args.begin(), "galab");
  std::vector<const char*> argv;
  for (const auto& a : args) argv.push_back(a.c_str());
  std::ostringstream out, err;
  const int code = dispatch(static_cast<int>(argv.size()), argv.data(), out, err);
  return {code, out.str(), err.str()};
}

std::string slurp(const fs::path& p) {
  std::ifstream in(p, std::ios::binary);
  std::ostringstream s;
  s << in.rdbuf();
  return s.str();
}

class CliTest : public ::testing::Test {
 protected:
  void SetUp() override {
    dir_ = fs::temp_directory_path() /
           ("galab_cli_" + std::string(::testing::UnitTest::GetInstance()->current_test_info()->name()));
    fs::remove_all(dir_);
    fs::create_directories(dir_);
  }
  void TearDown() override { fs::remove_all(dir_); }
  std::string path(const std::string& name) const { return (dir_ / name).string(); }

  fs::path dir_;
};

TEST_F(CliTest, GenThenRunIsDeterministic) {
  ASSERT_EQ(call({"gen", "--n", "5", "--seed", "1", "--out", path("inst.txt")}).code, kOk);
  const std::vector<std::string> run{"run", "--instance", path("inst.txt"), "--selection", "RSIS", "--crossover",
                                     "PMX", "--pc", "0.6", "--pm", "0.02", "--seed", "7"};
  const Result a = call(run);
  ASSERT_EQ(a.code, kOk) << a.err;
  EXPECT_NE(a.out.find("offline="), std::string::npos);
  EXPECT_NE(a.out.find("online="), std::string::npos);
  EXPECT_NE(a.out.find("generations="), std::string::npos);
  EXPECT_EQ(call(run).out, a.out);
}

TEST_F(CliTest, GenIsByteReproducible) {
  ASSERT_EQ(call({"gen", "--n", "9", "--seed", "4", "--out", path("a.txt")}).code, kOk);
  ASSERT_EQ(call({"gen", "--n", "9", "--seed", "4", "--out", path("b.txt")}).code, kOk);
  EXPECT_EQ(slurp(path("a.txt")), slurp(path("b.txt")));
  ASSERT_EQ(call({"gen", "--worked-example", "--out", path("w.txt")}).code, kOk);
  EXPECT_EQ(load_instance(path("w.txt")), worked_example_instance());
}

TEST_F(CliTest, SweepThenAnovaGivesSmallPresetDf) {
  ASSERT_EQ(call({"gen", "--worked-example", "--out", path("inst.txt")}).code, kOk);
  const Result s = call({"sweep", "--preset", "table1-small", "--instance", path("inst.txt"), "--reps", "4", "--seed",
                         "99", "--out", path("runs.csv")});
  ASSERT_EQ(s.code, kOk) << s.err;
  EXPECT_EQ(load_runs(path("runs.csv")).size(), 400u);
  const Result a = call({"anova", "--runs", path("runs.csv"), "--csv", path("anova.csv")});
  ASSERT_EQ(a.code, kOk) << a.err;
  EXPECT_NE(a.out.find("Source of Variation"), std::string::npos);
  std::istringstream csv(slurp(path("anova.csv")));
  std::string line;
  std::getline(csv, line);
  EXPECT_EQ(line, "source,df,ss,ms,f,p");
  std::vector<int> df;
  while (std::getline(csv, line)) df.push_back(std::stoi(line.substr(line.find(',') + 1)));
  EXPECT_EQ(df, (std::vector<int>{3, 1, 1, 4, 4, 1, 4, 4, 4, 4, 16, 4, 4, 16, 16, 16, 297, 399}));
}

TEST_F(CliTest, PipelineIsByteReproducible) {
  ASSERT_EQ(call({"gen", "--n", "6", "--seed", "3", "--out", path("inst.txt")}).code, kOk);
  std::string first[3];
  for (int pass = 0; pass < 2; ++pass) {
    const std::string tag = std::to_string(pass);
    ASSERT_EQ(call({"sweep", "--pc-levels", "0.6,0.8", "--pm-levels", "0.02,0.06,0.1", "--instance",
                    path("inst.txt"), "--reps", "3", "--seed", "5", "--threads", pass ? "3" : "1", "--out",
                    path("runs" + tag + ".csv")})
                  .code,
              kOk);
    ASSERT_EQ(call({"anova", "--runs", path("runs" + tag + ".csv"), "--out", path("anova" + tag + ".txt"), "--csv",
                    path("anova" + tag + ".csv")})
                  .code,
              kOk);
    const Result d = call({"dmrt", "--runs", path("runs" + tag + ".csv"), "--factors", "selection,crossover",
                           "--csv", path("dmrt" + tag + ".csv")});
    ASSERT_EQ(d.code, kOk) << d.err;
    const std::string files[3] = {slurp(path("runs" + tag + ".csv")), slurp(path("anova" + tag + ".csv")),
                                  slurp(path("dmrt" + tag + ".csv"))};
    for (int i = 0; i < 3; ++i) {
      ASSERT_FALSE(files[i].empty());
      if (pass == 0) first[i] = files[i];
      else EXPECT_EQ(files[i], first[i]) << i;
    }
  }
  EXPECT_EQ(first[2].substr(0, 19), "label,mean,letters\n");
}

TEST_F(CliTest, NoveltyAndReportOutputs) {
  ASSERT_EQ(call({"gen", "--worked-example", "--out", path("inst.txt")}).code, kOk);
  ASSERT_EQ(call({"sweep", "--pc-levels", "0.6,0.7,0.8", "--pm-levels", "0.001,0.01,0.1", "--instance",
                  path("inst.txt"), "--reps", "2", "--seed", "1", "--max-gen", "20", "--out", path("runs.csv")})
                .code,
            kOk);
  const Result n = call({"novelty", "--runs", path("runs.csv"), "--csv", path("nov.csv")});
  ASSERT_EQ(n.code, kOk) << n.err;
  EXPECT_NE(n.out.find("PMX %"), std::string::npos);
  EXPECT_EQ(slurp(path("nov.csv")).substr(0, 12), "selection,pc");
  const Result r = call({"report", "--runs", path("runs.csv"), "--out", path("report.txt"), "--csv-prefix",
                         path("rep_")});
  ASSERT_EQ(r.code, kOk) << r.err;
  const std::string text = slurp(path("report.txt"));
  EXPECT_NE(text.find("Analysis of variance"), std::string::npos);
  EXPECT_NE(text.find("Trend contrasts for pm (log10 scale)"), std::string::npos);
  EXPECT_TRUE(fs::exists(path("rep_anova.csv")));
  EXPECT_TRUE(fs::exists(path("rep_trend.csv")));
  EXPECT_TRUE(fs::exists(path("rep_novelty.csv")));
}

TEST_F(CliTest, ExitCodesAreDistinct) {
  const Result unknown = call({"frobnicate"});
  EXPECT_EQ(unknown.code, kUsage);
  EXPECT_NE(unknown.err.find("Usage"), std::string::npos);
  EXPECT_EQ(call({}).code, kUsage);
  EXPECT_EQ(call({"--help"}).code, kOk);

  EXPECT_EQ(call({"gen", "--out", path("x.txt")}).code, kUsage);
  EXPECT_EQ(call({"gen", "--worked-example", "--n", "5", "--out", path("x.txt")}).code, kUsage);
  EXPECT_EQ(call({"run", "--instance", path("missing.txt")}).code, kFile);

  std::ofstream(path("bad.txt")) << "5 1 x\n";
  EXPECT_EQ(call({"run", "--instance", path("bad.txt")}).code, kParse);
  std::ofstream(path("bad.csv")) << "nope\n";
  EXPECT_EQ(call({"anova", "--runs", path("bad.csv")}).code, kParse);

  ASSERT_EQ(call({"gen", "--n", "5", "--seed", "2", "--out", path("inst.txt")}).code, kOk);
  EXPECT_EQ(call({"run", "--instance", path("inst.txt"), "--pc", "1.5"}).code, kInvalid);
  EXPECT_EQ(call({"run", "--instance", path("inst.txt"), "--selection", "ROULETTE"}).code, kUsage);
  EXPECT_EQ(call({"gen", "--n", "2", "--out", path("y.txt")}).code, kInvalid);
  EXPECT_EQ(call({"sweep", "--preset", "big", "--pc-levels", "0.6", "--instance", path("inst.txt"), "--out",
                  path("r.csv")})
                .code,
            kUsage);
  EXPECT_EQ(call({"sweep", "--instance", path("inst.txt"), "--out", path("r.csv")}).code, kUsage);
  EXPECT_EQ(call({"sweep", "--preset", "huge", "--instance", path("inst.txt"), "--out", path("r.csv")}).code,
            kInvalid);
  EXPECT_EQ(call({"gen", "--n", "5", "--out", (dir_ / "no" / "such" / "dir.txt").string()}).code, kFile);
}

TEST_F(CliTest, DmrtRejectsUnknownFactor) {
  ASSERT_EQ(call({"gen", "--worked-example", "--out", path("inst.txt")}).code, kOk);
  ASSERT_EQ(call({"sweep", "--pc-levels", "0.6", "--pm-levels", "0.1", "--instance", path("inst.txt"), "--out",
                  path("runs.csv")})
                .code,
            kOk);
  EXPECT_EQ(call({"dmrt", "--runs", path("runs.csv"), "--factors", "temperature"}).code, kInvalid);
}

}  // namespace
}  // namespace galab::cli
