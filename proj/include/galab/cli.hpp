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

#ifndef GALAB_CLI_HPP
#define GALAB_CLI_HPP

#include <cstdint>
#include <exception>
#include <fstream>
#include <iostream>
#include <optional>
#include <ostream>
#include <sstream>
#include <stdexcept>
#include <string>
#include <vector>

#include <CLI11.hpp>
#include <fmt/format.h>

#include "galab/analysis.hpp"
#include "galab/design.hpp"
#include "galab/error.hpp"
#include "galab/ga.hpp"
#include "galab/instance.hpp"
#include "galab/runs.hpp"
#include "galab/sweep.hpp"

namespace galab::cli {

enum ExitCode : int {
  kOk = 0,
  kInternal = 1,
  kUsage = 2,
  kFile = 3,
  kParse = 4,
  kInvalid = 5,
};

namespace detail {

inline void emit(const std::string& text, const std::string& path, std::ostream& out) {
  if (path.empty() || path == "-") {
    out << text;
    return;
  }
  std::ofstream f(path, std::ios::binary);
  if (!f) throw FileError("cannot open '" + path + "' for writing");
  f << text;
  if (!f) throw FileError("failed writing '" + path + "'");
}

inline Selection parse_selection(const std::string& s) {
  if (s == "RSIS") return Selection::RSIS;
  if (s == "SUS") return Selection::SUS;
  throw CLI::ValidationError("--selection", "expected RSIS or SUS, got '" + s + "'");
}

inline Crossover parse_crossover(const std::string& s) {
  if (s == "PMX") return Crossover::PMX;
  if (s == "CX") return Crossover::CX;
  throw CLI::ValidationError("--crossover", "expected PMX or CX, got '" + s + "'");
}

class UsageError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

}  // namespace detail

/// Runs one CLI invocation. Output goes to `out` unless a file is named;
/// diagnostics to `err`.
inline int dispatch(int argc, const char* const* argv, std::ostream& out, std::ostream& err) {
  CLI::App app{"galab: permutation-GA factorial experiments on planted-optimum TSP instances", "galab"};
  app.require_subcommand(1);
  app.fallthrough(false);

  // gen
  auto* gen = app.add_subcommand("gen", "Generate a planted-optimum instance file");
  std::size_t gen_n = 0;
  std::uint64_t gen_seed = 0;
  Profit gen_margin = 1;
  double gen_zero = 0.0;
  Profit gen_min = 10, gen_max = 30;
  bool gen_example = false;
  std::string gen_out;
  gen->add_option("--n", gen_n, "Number of cities (>= 3)");
  gen->add_option("--seed", gen_seed, "RNG seed");
  gen->add_option("--margin", gen_margin, "Added to max(base) on planted edges")->capture_default_str();
  gen->add_option("--zero-fraction", gen_zero, "Fraction of zero off-diagonal base entries")->capture_default_str();
  gen->add_option("--min-value", gen_min, "Smallest base entry")->capture_default_str();
  gen->add_option("--max-value", gen_max, "Largest base entry")->capture_default_str();
  gen->add_flag("--worked-example", gen_example, "Write the built-in five-city example instead");
  gen->add_option("--out", gen_out, "Output instance file")->required();

  // run
  auto* run = app.add_subcommand("run", "Run one GA and print its result");
  std::string run_instance, run_sel = "RSIS", run_xo = "PMX";
  double run_pc = 0.6, run_pm = 0.02;
  std::uint64_t run_seed = 0;
  std::optional<std::uint64_t> run_pop_seed;
  std::size_t run_lambda = 30, run_max_gen = 0;
  bool run_no_stop = false;
  run->add_option("--instance", run_instance, "Instance file")->required();
  run->add_option("--selection", run_sel, "RSIS or SUS")->capture_default_str();
  run->add_option("--crossover", run_xo, "PMX or CX")->capture_default_str();
  run->add_option("--pc", run_pc, "Crossover probability")->capture_default_str();
  run->add_option("--pm", run_pm, "Mutation (inversion) rate")->capture_default_str();
  run->add_option("--seed", run_seed, "Seed for operator decisions");
  run->add_option("--pop-seed", run_pop_seed, "Seed for the initial population (default: derived from --seed)");
  run->add_option("--lambda", run_lambda, "Population size (even)")->capture_default_str();
  run->add_option("--max-gen", run_max_gen, "Generation cap (0 = 10 * n)")->capture_default_str();
  run->add_flag("--no-stop", run_no_stop, "Keep running after the optimum is found");

  // sweep
  auto* sweep = app.add_subcommand("sweep", "Run a factorial sweep and write the runs CSV");
  std::string sw_preset, sw_instance, sw_out;
  std::vector<std::string> sw_sel, sw_xo;
  std::vector<double> sw_pc, sw_pm;
  std::size_t sw_reps = 4, sw_lambda = 30, sw_max_gen = 0;
  std::uint64_t sw_seed = 0;
  unsigned sw_threads = 1;
  sweep->add_option("--preset", sw_preset, "table1-small, big or table3-novelty");
  sweep->add_option("--selection-levels", sw_sel, "Explicit selection levels")->delimiter(',');
  sweep->add_option("--crossover-levels", sw_xo, "Explicit crossover levels")->delimiter(',');
  sweep->add_option("--pc-levels", sw_pc, "Explicit crossover probabilities")->delimiter(',');
  sweep->add_option("--pm-levels", sw_pm, "Explicit mutation rates")->delimiter(',');
  sweep->add_option("--instance", sw_instance, "Instance file")->required();
  sweep->add_option("--reps", sw_reps, "Replications (>= 2)")->capture_default_str();
  sweep->add_option("--seed", sw_seed, "Master seed");
  sweep->add_option("--lambda", sw_lambda, "Population size (even)")->capture_default_str();
  sweep->add_option("--max-gen", sw_max_gen, "Generation cap (0 = preset default)")->capture_default_str();
  sweep->add_option("--threads", sw_threads, "Worker threads")->capture_default_str();
  sweep->add_option("--out", sw_out, "Output runs CSV")->required();

  // anova
  auto* an = app.add_subcommand("anova", "ANOVA of a runs CSV");
  std::string an_runs, an_out, an_csv, an_response = "offline";
  an->add_option("--runs", an_runs, "Runs CSV")->required();
  an->add_option("--response", an_response, "offline, online, generations or evaluations")->capture_default_str();
  an->add_option("--out", an_out, "Text table output (default stdout)");
  an->add_option("--csv", an_csv, "Machine CSV output");

  // dmrt
  auto* dm = app.add_subcommand("dmrt", "Duncan's multiple range test on factor-combination means");
  std::string dm_runs, dm_factors, dm_out, dm_csv, dm_response = "offline";
  double dm_alpha = 0.05;
  dm->add_option("--runs", dm_runs, "Runs CSV")->required();
  dm->add_option("--factors", dm_factors, "Comma-separated factors, e.g. selection,crossover")->required();
  dm->add_option("--alpha", dm_alpha, "Significance level")->capture_default_str();
  dm->add_option("--response", dm_response, "Response column")->capture_default_str();
  dm->add_option("--out", dm_out, "Text table output (default stdout)");
  dm->add_option("--csv", dm_csv, "Machine CSV output");

  // novelty
  auto* nv = app.add_subcommand("novelty", "PMX vs CX new-offspring counts");
  std::string nv_runs, nv_out, nv_csv;
  nv->add_option("--runs", nv_runs, "Runs CSV")->required();
  nv->add_option("--out", nv_out, "Text table output (default stdout)");
  nv->add_option("--csv", nv_csv, "Machine CSV output");

  // report
  auto* rp = app.add_subcommand("report", "All analyses of one sweep");
  std::string rp_runs, rp_out, rp_prefix, rp_response = "offline";
  double rp_alpha = 0.05;
  rp->add_option("--runs", rp_runs, "Runs CSV")->required();
  rp->add_option("--alpha", rp_alpha, "Significance level")->capture_default_str();
  rp->add_option("--response", rp_response, "Response column")->capture_default_str();
  rp->add_option("--out", rp_out, "Report text output (default stdout)");
  rp->add_option("--csv-prefix", rp_prefix, "Write <prefix>anova.csv, <prefix>trend.csv, ... alongside");

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    out << app.help();
    return kOk;
  } catch (const CLI::ParseError& e) {
    err << "error: " << e.what() << "\n\n" << app.help();
    return kUsage;
  }

  try {
    if (gen->parsed()) {
      if (!gen_example && gen->count("--n") == 0) throw detail::UsageError("gen: --n is required");
      if (gen_example && gen->count("--n") != 0)
        throw detail::UsageError("gen: --worked-example and --n are mutually exclusive");
      const TspInstance inst = gen_example ? worked_example_instance()
                                           : generate_instance(gen_n, gen_seed, gen_margin, {gen_min, gen_max, gen_zero});
      save_instance(gen_out, inst);
      out << fmt::format("wrote {} (n={}, optimum={})\n", gen_out, inst.n(), inst.optimum());
    } else if (run->parsed()) {
      const TspInstance inst = load_instance(run_instance);
      GaConfig cfg;
      cfg.selection = detail::parse_selection(run_sel);
      cfg.crossover = detail::parse_crossover(run_xo);
      cfg.crossover_prob = run_pc;
      cfg.mutation_rate = run_pm;
      cfg.population_size = run_lambda;
      cfg.max_generations = run_max_gen != 0 ? run_max_gen : 10 * inst.n();
      cfg.stop_at_optimum = !run_no_stop;
      cfg.run_seed = run_seed;
      cfg.population_seed = run_pop_seed ? *run_pop_seed : derive_seed(run_seed, {1});
      const RunResult r = run_ga(cfg, inst);
      out << fmt::format("offline={}\nonline={}\ngenerations={}\nevaluations={}\nreached_optimum={}\n"
                         "optimum={}\nbest={}\nxover_attempted={}\nxover_new={}\n",
                         r.offline, r.online, r.generations, r.evaluations, r.reached_optimum ? 1 : 0,
                         inst.optimum(), *std::max_element(r.best_history.begin(), r.best_history.end()),
                         r.novelty.expected, r.novelty.actual_new);
    } else if (sweep->parsed()) {
      const bool explicit_levels = !sw_sel.empty() || !sw_xo.empty() || !sw_pc.empty() || !sw_pm.empty();
      if (!sw_preset.empty() && explicit_levels)
        throw detail::UsageError("sweep: --preset cannot be combined with explicit --*-levels");
      if (sw_preset.empty() && (sw_pc.empty() || sw_pm.empty()))
        throw detail::UsageError("sweep: give --preset or both --pc-levels and --pm-levels");
      const TspInstance inst = load_instance(sw_instance);
      DesignSpec spec;
      if (!sw_preset.empty()) {
        spec = preset(sw_preset, inst.n(), sw_reps);
      } else {
        spec.problem_size = inst.n();
        spec.replications = sw_reps;
        spec.pc_levels = sw_pc;
        spec.pm_levels = sw_pm;
        if (!sw_sel.empty()) {
          spec.selection.clear();
          for (const auto& s : sw_sel) spec.selection.push_back(detail::parse_selection(s));
        }
        if (!sw_xo.empty()) {
          spec.crossover.clear();
          for (const auto& s : sw_xo) spec.crossover.push_back(detail::parse_crossover(s));
        }
      }
      spec.population_size = sw_lambda;
      if (sw_max_gen != 0) spec.max_generations = sw_max_gen;
      const Design design = build_design(spec);
      const RunTable table = run_sweep(design, inst, sw_seed, sw_threads);
      save_runs(sw_out, table);
      out << fmt::format("wrote {} ({} cells x {} replicates = {} runs)\n", sw_out, design.cells().size(),
                         design.replications(), table.size());
    } else if (an->parsed()) {
      const RunTable table = load_runs(an_runs);
      const auto result = stats::anova(to_factorial(table, parse_response(an_response)));
      std::ostringstream text;
      stats::write_anova_text(text, result);
      detail::emit(text.str(), an_out, out);
      if (!an_csv.empty()) {
        std::ostringstream csv;
        stats::write_anova_csv(csv, result);
        detail::emit(csv.str(), an_csv, out);
      }
    } else if (dm->parsed()) {
      const RunTable table = load_runs(dm_runs);
      const auto data = to_factorial(table, parse_response(dm_response));
      const auto result = stats::anova(data);
      const auto members = parse_factor_list(dm_factors);
      const auto grouping = dmrt_for(data, result, members, dm_alpha);
      std::ostringstream text;
      stats::write_dmrt_text(text, grouping, stats::effect_name(data.factors(), members));
      detail::emit(text.str(), dm_out, out);
      if (!dm_csv.empty()) {
        std::ostringstream csv;
        stats::write_dmrt_csv(csv, grouping);
        detail::emit(csv.str(), dm_csv, out);
      }
    } else if (nv->parsed()) {
      const RunTable table = load_runs(nv_runs);
      const auto rows = summarize_novelty(table);
      std::ostringstream text;
      write_novelty_text(text, rows);
      detail::emit(text.str(), nv_out, out);
      if (!nv_csv.empty()) {
        std::ostringstream csv;
        write_novelty_csv(csv, rows);
        detail::emit(csv.str(), nv_csv, out);
      }
    } else if (rp->parsed()) {
      const RunTable table = load_runs(rp_runs);
      const Report rep = build_report(table, rp_alpha, parse_response(rp_response));
      std::ostringstream text;
      write_report_text(text, rep, table.size(), table.front().problem_size);
      detail::emit(text.str(), rp_out, out);
      if (!rp_prefix.empty()) {
        std::ostringstream a, t, n;
        stats::write_anova_csv(a, rep.anova);
        detail::emit(a.str(), rp_prefix + "anova.csv", out);
        write_trend_csv(t, rep.trends);
        detail::emit(t.str(), rp_prefix + "trend.csv", out);
        write_novelty_csv(n, rep.novelty);
        detail::emit(n.str(), rp_prefix + "novelty.csv", out);
        for (const auto& [source, g] : rep.dmrt) {
          std::ostringstream d;
          stats::write_dmrt_csv(d, g);
          detail::emit(d.str(), rp_prefix + "dmrt_" + source_slug(source) + ".csv", out);
        }
      }
    }
  } catch (const detail::UsageError& e) {
    err << "error: " << e.what() << '\n';
    return kUsage;
  } catch (const CLI::Error& e) {
    err << "error: " << e.what() << '\n';
    return kUsage;
  } catch (const FileError& e) {
    err << "error: " << e.what() << '\n';
    return kFile;
  } catch (const ParseError& e) {
    err << "error: " << e.what() << '\n';
    return kParse;
  } catch (const std::invalid_argument& e) {
    err << "error: " << e.what() << '\n';
    return kInvalid;
  } catch (const std::out_of_range& e) {
    err << "error: " << e.what() << '\n';
    return kInvalid;
  } catch (const std::exception& e) {
    err << "error: " << e.what() << '\n';
    return kInternal;
  }
  return kOk;
}

}  // namespace galab::cli

#endif  // GALAB_CLI_HPP
