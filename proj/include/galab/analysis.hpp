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

#ifndef GALAB_ANALYSIS_HPP
#define GALAB_ANALYSIS_HPP

#include <algorithm>
#include <array>
#include <cmath>
#include <cstddef>
#include <map>
#include <optional>
#include <ostream>
#include <set>
#include <stdexcept>
#include <string>
#include <string_view>
#include <tuple>
#include <vector>

#include <fmt/format.h>

#include "galab/ga.hpp"
#include "galab/runs.hpp"
#include "galab/stats/anova.hpp"
#include "galab/stats/contrasts.hpp"
#include "galab/stats/dmrt.hpp"
#include "galab/stats/format.hpp"

namespace galab {

/// Factor order in every analysis of a run table.
inline constexpr std::array<std::string_view, 4> kFactorNames = {"selection", "crossover", "pc", "pm"};

enum class Response { Offline, Online, Generations, Evaluations };

inline Response parse_response(std::string_view name) {
  if (name == "offline") return Response::Offline;
  if (name == "online") return Response::Online;
  if (name == "generations") return Response::Generations;
  if (name == "evaluations") return Response::Evaluations;
  throw std::invalid_argument("unknown response column '" + std::string(name) + "'");
}

inline double response_value(const RunRecord& r, Response response) {
  switch (response) {
    case Response::Offline: return r.offline;
    case Response::Online: return r.online;
    case Response::Generations: return static_cast<double>(r.generations);
    case Response::Evaluations: return static_cast<double>(r.evaluations);
  }
  return r.offline;
}

/// Levels present in a run table, in analysis order.
struct TableLevels {
  std::vector<Selection> selection;
  std::vector<Crossover> crossover;
  std::vector<double> pc;
  std::vector<double> pm;
  std::size_t replications = 0;
  std::size_t problem_size = 0;
};

inline TableLevels table_levels(const RunTable& table) {
  if (table.empty()) throw std::invalid_argument("run table is empty");
  std::set<Selection> sel;
  std::set<Crossover> xo;
  std::set<double> pc, pm;
  std::set<std::size_t> reps, sizes;
  for (const auto& r : table) {
    sel.insert(r.selection);
    xo.insert(r.crossover);
    pc.insert(r.pc);
    pm.insert(r.pm);
    reps.insert(r.replicate);
    sizes.insert(r.problem_size);
  }
  if (sizes.size() != 1) throw std::invalid_argument("run table mixes problem sizes");
  if (*reps.rbegin() != reps.size()) throw std::invalid_argument("unbalanced data: replicates are not 1..r");
  return {{sel.begin(), sel.end()}, {xo.begin(), xo.end()}, {pc.begin(), pc.end()},
          {pm.begin(), pm.end()}, reps.size(), *sizes.begin()};
}

inline std::string level_label(double v) { return fmt::format("{}", v); }

/// Four-factor layout with replicates as blocks.
inline stats::FactorialData to_factorial(const RunTable& table, Response response = Response::Offline) {
  const TableLevels lv = table_levels(table);
  std::vector<stats::Factor> factors(4);
  for (std::size_t f = 0; f < 4; ++f) factors[f].name = std::string(kFactorNames[f]);
  for (auto s : lv.selection) factors[0].levels.emplace_back(to_string(s));
  for (auto c : lv.crossover) factors[1].levels.emplace_back(to_string(c));
  for (double v : lv.pc) factors[2].levels.push_back(level_label(v));
  for (double v : lv.pm) factors[3].levels.push_back(level_label(v));

  stats::FactorialData data(std::move(factors), lv.replications);
  auto index_of = [](const auto& levels, const auto& v) {
    return static_cast<std::size_t>(std::find(levels.begin(), levels.end(), v) - levels.begin());
  };
  for (const auto& r : table) {
    const std::array<std::size_t, 4> idx{index_of(lv.selection, r.selection), index_of(lv.crossover, r.crossover),
                                         index_of(lv.pc, r.pc), index_of(lv.pm, r.pm)};
    data.set(idx, r.replicate - 1, response_value(r, response));
  }
  if (!data.complete()) throw std::invalid_argument("unbalanced data: some cell is missing a replicate");
  return data;
}

/// Parses "selection,crossover" style factor lists into sorted indices.
inline std::vector<std::size_t> parse_factor_list(std::string_view list) {
  std::vector<std::size_t> out;
  std::size_t start = 0;
  while (start <= list.size()) {
    const std::size_t comma = list.find(',', start);
    const std::string_view name = list.substr(start, comma == std::string_view::npos ? std::string_view::npos : comma - start);
    const auto it = std::find(kFactorNames.begin(), kFactorNames.end(), name);
    if (it == kFactorNames.end()) throw std::invalid_argument("unknown factor '" + std::string(name) + "'");
    out.push_back(static_cast<std::size_t>(it - kFactorNames.begin()));
    if (comma == std::string_view::npos) break;
    start = comma + 1;
  }
  std::sort(out.begin(), out.end());
  if (std::adjacent_find(out.begin(), out.end()) != out.end())
    throw std::invalid_argument("factor listed twice");
  return out;
}

/// DMRT over the combinations of `members`, using the full model's error term.
inline stats::DmrtGrouping dmrt_for(const stats::FactorialData& data, const stats::AnovaTable& table,
                                    const std::vector<std::size_t>& members, double alpha) {
  const auto mm = stats::marginal_means(data, members);
  const auto& err = table.error();
  return stats::dmrt(mm.labels, mm.means, mm.per_mean, *err.ms, static_cast<double>(err.df), alpha);
}

struct FactorTrend {
  std::string factor;
  std::string scale;  // "linear" or "log10"
  std::vector<stats::TrendRow> rows;
};

/// Trend contrasts for a quantitative factor (pc or pm). Levels that are not
/// equally spaced but are equally spaced in log10 are analysed on that scale.
inline std::optional<FactorTrend> trend_for(const stats::FactorialData& data, const stats::AnovaTable& table,
                                            std::size_t factor) {
  const auto& f = data.factors()[factor];
  if (f.levels.size() < 3) return std::nullopt;
  std::vector<double> values;
  for (const auto& l : f.levels) values.push_back(std::stod(l));
  FactorTrend out{f.name, "linear", {}};
  if (!stats::equally_spaced(values)) {
    std::vector<double> logs;
    for (double v : values) {
      if (!(v > 0.0)) return std::nullopt;
      logs.push_back(std::log10(v));
    }
    if (!stats::equally_spaced(logs)) return std::nullopt;
    values = std::move(logs);
    out.scale = "log10";
  }
  const std::vector<std::size_t> members{factor};
  const auto mm = stats::marginal_means(data, members);
  const auto& err = table.error();
  out.rows = stats::trend_contrasts(mm.means, values, mm.per_mean, *err.ms, static_cast<double>(err.df));
  return out;
}

/// PMX/CX novelty per (selection, pc, pm), summed over replicates.
struct NoveltyRow {
  Selection selection = Selection::RSIS;
  double pc = 0.0;
  double pm = 0.0;
  NoveltyCounts pmx;
  NoveltyCounts cx;
};

inline std::vector<NoveltyRow> summarize_novelty(const RunTable& table) {
  std::map<std::tuple<Selection, double, double>, NoveltyRow> rows;
  for (const auto& r : table) {
    auto& row = rows[{r.selection, r.pc, r.pm}];
    row.selection = r.selection;
    row.pc = r.pc;
    row.pm = r.pm;
    NoveltyCounts c{r.xover_new, r.xover_attempted};
    (r.crossover == Crossover::PMX ? row.pmx : row.cx) += c;
  }
  std::vector<NoveltyRow> out;
  for (auto& [key, row] : rows) out.push_back(row);
  return out;
}

inline void write_novelty_text(std::ostream& out, const std::vector<NoveltyRow>& rows) {
  stats::detail::TextTable t;
  t.header = {"Selection", "pc", "pm", "PMX Actual", "PMX Expected", "PMX %", "CX Actual", "CX Expected", "CX %"};
  t.right = {false, true, true, true, true, true, true, true, true};
  auto pct = [](const NoveltyCounts& c) { return c.expected == 0 ? std::string("-") : fmt::format("{:.2f}", c.percent()); };
  for (const auto& r : rows) {
    t.rows.push_back({std::string(to_string(r.selection)), level_label(r.pc), level_label(r.pm),
                      std::to_string(r.pmx.actual_new), std::to_string(r.pmx.expected), pct(r.pmx),
                      std::to_string(r.cx.actual_new), std::to_string(r.cx.expected), pct(r.cx)});
  }
  t.write(out);
}

inline void write_novelty_csv(std::ostream& out, const std::vector<NoveltyRow>& rows) {
  out << "selection,pc,pm,pmx_new,pmx_attempted,cx_new,cx_attempted\n";
  for (const auto& r : rows)
    out << to_string(r.selection) << ',' << stats::csv_number(r.pc) << ',' << stats::csv_number(r.pm) << ','
        << r.pmx.actual_new << ',' << r.pmx.expected << ',' << r.cx.actual_new << ',' << r.cx.expected << '\n';
}

inline void write_trend_csv(std::ostream& out, const std::vector<FactorTrend>& trends) {
  out << "factor,scale,component,ss,f,p\n";
  for (const auto& t : trends)
    for (const auto& r : t.rows)
      out << t.factor << ',' << t.scale << ',' << r.name << ',' << stats::csv_number(r.ss) << ','
          << stats::csv_number(r.f) << ',' << stats::csv_number(stats::display_p(r.p)) << '\n';
}

/// Everything computed for one sweep.
struct Report {
  stats::AnovaTable anova;
  std::vector<FactorTrend> trends;
  /// (effect row, grouping) for every effect significant at alpha.
  std::vector<std::pair<std::string, stats::DmrtGrouping>> dmrt;
  std::vector<NoveltyRow> novelty;
  double alpha = 0.05;
  std::string response = "offline";
};

inline Report build_report(const RunTable& table, double alpha = 0.05, Response response = Response::Offline) {
  static constexpr const char* kResponseNames[] = {"offline", "online", "generations", "evaluations"};
  Report rep;
  rep.alpha = alpha;
  rep.response = kResponseNames[static_cast<int>(response)];
  const auto data = to_factorial(table, response);
  rep.anova = stats::anova(data);
  for (std::size_t f = 2; f < 4; ++f)
    if (auto t = trend_for(data, rep.anova, f)) rep.trends.push_back(std::move(*t));
  const auto& err = rep.anova.error();
  for (const auto& row : rep.anova.rows) {
    if (row.factors.empty() || !row.p || *row.p >= alpha) continue;
    if (!(err.ms && *err.ms > 0.0)) continue;
    rep.dmrt.emplace_back(row.source, dmrt_for(data, rep.anova, row.factors, alpha));
  }
  rep.novelty = summarize_novelty(table);
  return rep;
}

inline void write_report_text(std::ostream& out, const Report& rep, std::size_t runs, std::size_t n) {
  out << fmt::format("GA factorial sweep report: {} runs, n={}, alpha={}\n\n", runs, n, rep.alpha);
  out << "Analysis of variance of " << rep.response << " performance\n";
  stats::write_anova_text(out, rep.anova);
  for (const auto& t : rep.trends) {
    out << '\n';
    stats::write_trend_text(out, t.factor, t.scale, t.rows);
  }
  out << '\n';
  if (rep.dmrt.empty()) {
    out << "No effect is significant at alpha=" << rep.alpha << "; no mean comparisons.\n";
  }
  for (const auto& [source, g] : rep.dmrt) {
    out << "Mean comparison for " << source << '\n';
    stats::write_dmrt_text(out, g, source);
    out << '\n';
  }
  out << "\nCrossover novelty (children distinct from both parents)\n";
  write_novelty_text(out, rep.novelty);
}

/// File-name friendly form of an effect name: "selection x crossover" -> "selection_x_crossover".
inline std::string source_slug(const std::string& source) {
  std::string s;
  for (char c : source) s += (c == ' ') ? '_' : c;
  return s;
}

}  // namespace galab

#endif  // GALAB_ANALYSIS_HPP
