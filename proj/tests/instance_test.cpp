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

#include <cstdio>
#include <filesystem>
#include <sstream>

#include "galab/error.hpp"
#include "galab/instance.hpp"
#include "oracles.hpp"

namespace galab {
namespace {

Tour one_based(std::initializer_list<City> cities) {
  std::vector<City> c;
  for (City x : cities) c.push_back(x - 1);
  return Tour(std::move(c));
}

TEST(WorkedExample, PlantedRouteScoresNTimesTopProfit) {
  // Five route edges at max + margin = 28 each.
  const TspInstance inst = worked_example_instance();
  EXPECT_EQ(inst.max_element(), 27);
  EXPECT_EQ(inst.optimum(), 5 * 28);
  EXPECT_EQ(fitness(inst.planted_tour(), inst), 140);
  EXPECT_EQ(fitness(one_based({4, 3, 5, 1, 2}), inst), 140);
  EXPECT_EQ(fitness(one_based({4, 2, 1, 5, 3}), inst), 140);
  EXPECT_EQ(fitness(one_based({2, 1, 5, 3, 4}), inst), 140);
  EXPECT_EQ(brute_force_optimum(inst).profit, 140);
}

TEST(WorkedExample, IdentityTourHandSum) {
  // 1-2 and 3-4 and 5-1 are route edges (28 each); 2-3 is 18 and 4-5 is 16.
  const TspInstance inst = worked_example_instance();
  EXPECT_EQ(fitness(one_based({1, 2, 3, 4, 5}), inst), 28 + 18 + 28 + 16 + 28);
}

TEST(WorkedExample, RouteEdgesRaisedSymmetrically) {
  const TspInstance inst = worked_example_instance();
  const auto& r = inst.planted_route();
  ASSERT_EQ(r.size(), 6u);
  EXPECT_EQ(r.front(), r.back());
  for (std::size_t y = 0; y < 5; ++y) {
    EXPECT_EQ(inst.profit()(r[y], r[y + 1]), 28);
    EXPECT_EQ(inst.profit()(r[y + 1], r[y]), 28);
  }
  EXPECT_EQ(inst.profit()(0, 2), 27);
}

TEST(Plant, UniqueOptimumAgainstFullEnumeration) {
  for (std::size_t n : {3u, 4u, 5u, 6u, 7u}) {
    for (std::uint64_t seed = 1; seed <= 4; ++seed) {
      const TspInstance inst = generate_instance(n, seed * 31 + n);
      const auto all = oracle::enumerate_all_tours(inst);
      EXPECT_EQ(all.best, inst.optimum());
      // One undirected cycle has 2n rotations and reflections (n = 3 has 6).
      EXPECT_EQ(all.maximizers.size(), 2 * n);
      for (const auto& m : all.maximizers) EXPECT_TRUE(same_cycle(Tour(m), inst.planted_tour()));
    }
  }
}

TEST(Plant, BruteForceMatchesEnumeration) {
  const TspInstance inst = generate_instance(7, 7);
  const auto bf = brute_force_optimum(inst);
  EXPECT_EQ(bf.profit, oracle::enumerate_all_tours(inst).best);
  EXPECT_TRUE(same_cycle(bf.tour, inst.planted_tour()));
}

TEST(Plant, MarginAddsToOptimum) {
  for (Profit margin : {1, 5, 100}) {
    const TspInstance inst = generate_instance(6, 3, margin);
    EXPECT_EQ(inst.optimum(), 6 * (inst.max_element() + margin));
    EXPECT_EQ(fitness(inst.planted_tour(), inst), inst.optimum());
  }
}

TEST(Plant, ZeroEntriesStillPlantUniquely) {
  GenerateOptions opt;
  opt.zero_fraction = 0.5;
  const TspInstance inst = generate_instance(6, 12, 1, opt);
  EXPECT_EQ(brute_force_optimum(inst).profit, inst.optimum());
}

TEST(Plant, RejectsBadInputs) {
  EXPECT_THROW(generate_instance(2, 1), std::invalid_argument);
  EXPECT_THROW(generate_instance(5, 1, 0), std::invalid_argument);
  ProfitMatrix asym{{0, 1, 2}, {3, 0, 1}, {2, 1, 0}};
  EXPECT_THROW(TspInstance::plant(asym, {0, 1, 2}, 1), std::invalid_argument);
  ProfitMatrix sym{{0, 1, 2}, {1, 0, 1}, {2, 1, 0}};
  EXPECT_THROW(TspInstance::plant(sym, {0, 1, 1}, 1), std::invalid_argument);
  EXPECT_NO_THROW(TspInstance::plant(sym, {0, 1, 2}, 1));
}

TEST(Generate, DeterministicAndSeedSensitive) {
  EXPECT_EQ(generate_instance(8, 99), generate_instance(8, 99));
  EXPECT_FALSE(generate_instance(8, 99) == generate_instance(8, 100));
}

TEST(Generate, EntriesWithinRange) {
  GenerateOptions opt;
  opt.min_value = 3;
  opt.max_value = 9;
  const TspInstance inst = generate_instance(12, 5, 1, opt);
  EXPECT_LE(inst.max_element(), 9);
  for (std::size_t i = 0; i < 12; ++i)
    for (std::size_t j = 0; j < 12; ++j) {
      EXPECT_EQ(inst.profit()(i, j), inst.profit()(j, i));
      if (inst.profit()(i, j) != inst.optimum() / 12) {
        EXPECT_GE(inst.profit()(i, j), 3);
        EXPECT_LE(inst.profit()(i, j), 9);
      }
    }
}

TEST(Fitness, RejectsMismatchedTour) {
  const TspInstance inst = worked_example_instance();
  EXPECT_THROW(fitness(Tour(std::vector<City>{0, 1, 2}), inst), std::invalid_argument);
  EXPECT_THROW(Tour(std::vector<City>{0, 0, 1}), std::invalid_argument);
}

TEST(SameCycle, RotationsAndReflections) {
  const Tour a = Tour({0, 1, 2, 3, 4});
  EXPECT_TRUE(same_cycle(a, Tour({2, 3, 4, 0, 1})));
  EXPECT_TRUE(same_cycle(a, Tour({0, 4, 3, 2, 1})));
  EXPECT_FALSE(same_cycle(a, Tour({0, 2, 1, 3, 4})));
}

TEST(InstanceFile, RoundTrip) {
  const TspInstance inst = generate_instance(9, 4, 3);
  std::stringstream ss;
  write_instance(ss, inst);
  EXPECT_EQ(read_instance(ss), inst);
}

TEST(InstanceFile, SaveLoadRoundTrip) {
  const auto path = (std::filesystem::temp_directory_path() / "galab_instance_test.txt").string();
  const TspInstance inst = worked_example_instance();
  save_instance(path, inst);
  EXPECT_EQ(load_instance(path), inst);
  std::filesystem::remove(path);
}

TEST(InstanceFile, ParseErrorsCarryLineNumbers) {
  auto line_of = [](const std::string& text) -> std::size_t {
    std::istringstream in(text);
    try {
      read_instance(in);
    } catch (const ParseError& e) {
      return e.line();
    }
    return 999;
  };
  EXPECT_EQ(line_of(""), 1u);
  EXPECT_EQ(line_of("3 1 x\n"), 1u);
  EXPECT_EQ(line_of("3 1 6\n0 2 2\n2 0\n"), 3u);
  EXPECT_EQ(line_of("3 1 6\n0 2 2\n2 0 2\n2 2 0\n1 2 3\n"), 5u);
  EXPECT_EQ(line_of("3 1 6\n0 2 2\n2 0 2\n2 2 0\n1 2 4 1\n"), 5u);
  // Structurally fine but the route edges are not the strict maximum.
  EXPECT_EQ(line_of("3 1 9\n0 2 2\n2 0 2\n2 2 0\n1 2 3 1\n"), 0u);
  EXPECT_EQ(line_of("3 1 6\n0 2 2\n2 0 2\n2 2 0\n1 2 3 1\n"), 999u);
}

TEST(InstanceFile, MissingFileIsFileError) {
  EXPECT_THROW(load_instance("/nonexistent/dir/instance.txt"), FileError);
}

}  // namespace
}  // namespace galab
