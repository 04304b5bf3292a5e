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

#ifndef GALAB_SWEEP_HPP
#define GALAB_SWEEP_HPP

#include <algorithm>
#include <atomic>
#include <cstddef>
#include <cstdint>
#include <exception>
#include <mutex>
#include <stdexcept>
#include <string>
#include <thread>
#include <vector>

#include <fmt/format.h>

#include "galab/design.hpp"
#include "galab/ga.hpp"
#include "galab/instance.hpp"
#include "galab/rng.hpp"
#include "galab/runs.hpp"

namespace galab {

// Seed derivation. The initial population depends only on the replicate,
// so a replicate acts as a block across every cell.
inline std::uint64_t population_seed_for(std::uint64_t master, std::size_t replicate) {
  return derive_seed(master, {1, replicate});
}

inline std::uint64_t run_seed_for(std::uint64_t master, const Cell& cell, std::size_t replicate) {
  return derive_seed(master, {2, cell.key(), replicate});
}

/// Runs every cell x replicate. Rows come out cell-major in design order,
/// replicates 1..r within a cell, whatever the thread count.
inline RunTable run_sweep(const Design& design, const TspInstance& instance, std::uint64_t master_seed,
                          unsigned threads = 1) {
  if (design.spec().problem_size != 0 && design.spec().problem_size != instance.n())
    throw std::invalid_argument(fmt::format("sweep: design is for n={} but instance has n={}",
                                            design.spec().problem_size, instance.n()));
  const std::size_t reps = design.replications();
  const std::size_t jobs = design.run_count();
  RunTable table(jobs);

  std::atomic<std::size_t> next_job{0};
  std::atomic<bool> failed{false};
  std::mutex error_mutex;
  std::exception_ptr first_error;
  std::size_t first_error_job = jobs;

  auto worker = [&] {
    for (;;) {
      const std::size_t job = next_job.fetch_add(1);
      if (job >= jobs || failed.load()) return;
      const Cell& cell = design.cells()[job / reps];
      const std::size_t rep = job % reps + 1;
      try {
        GaConfig cfg = design.config_for(cell);
        cfg.population_seed = population_seed_for(master_seed, rep);
        cfg.run_seed = run_seed_for(master_seed, cell, rep);
        const RunResult res = run_ga(cfg, instance);
        RunRecord& rec = table[job];
        rec.problem_size = instance.n();
        rec.selection = cell.selection;
        rec.crossover = cell.crossover;
        rec.pc = cell.pc;
        rec.pm = cell.pm;
        rec.replicate = rep;
        rec.population_seed = cfg.population_seed;
        rec.run_seed = cfg.run_seed;
        rec.offline = res.offline;
        rec.online = res.online;
        rec.generations = res.generations;
        rec.evaluations = res.evaluations;
        rec.reached_optimum = res.reached_optimum;
        rec.xover_attempted = res.novelty.expected;
        rec.xover_new = res.novelty.actual_new;
      } catch (...) {
        std::lock_guard lock(error_mutex);
        failed = true;
        if (job < first_error_job) {
          first_error_job = job;
          first_error = std::current_exception();
        }
      }
    }
  };

  const unsigned count = std::max(1u, std::min<unsigned>(threads, static_cast<unsigned>(jobs)));
  if (count == 1) {
    worker();
  } else {
    std::vector<std::thread> pool;
    for (unsigned t = 0; t < count; ++t) pool.emplace_back(worker);
    for (auto& t : pool) t.join();
  }

  if (first_error) {
    const Cell& cell = design.cells()[first_error_job / reps];
    std::string what = "unknown error";
    try {
      std::rethrow_exception(first_error);
    } catch (const std::exception& e) {
      what = e.what();
    } catch (...) {
    }
    throw std::runtime_error(fmt::format("sweep aborted at cell {} ({},{},pc={},pm={}) rep {}: {}",
                                         first_error_job / reps + 1, to_string(cell.selection),
                                         to_string(cell.crossover), cell.pc, cell.pm,
                                         first_error_job % reps + 1, what));
  }
  return table;
}

}  // namespace galab

#endif  // GALAB_SWEEP_HPP
