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

#ifndef GALAB_RUNS_HPP
#define GALAB_RUNS_HPP

#include <charconv>
#include <cstddef>
#include <cstdint>
#include <fstream>
#include <istream>
#include <ostream>
#include <string>
#include <string_view>
#include <system_error>
#include <vector>

#include <fmt/format.h>

#include "galab/crossover.hpp"
#include "galab/error.hpp"
#include "galab/selection.hpp"

namespace galab {

/// One replicate of one cell. `offline` is the response analysed downstream.
struct RunRecord {
  std::size_t problem_size = 0;
  Selection selection = Selection::RSIS;
  Crossover crossover = Crossover::PMX;
  double pc = 0.0;
  double pm = 0.0;
  std::size_t replicate = 1;  // 1-based
  std::uint64_t population_seed = 0;
  std::uint64_t run_seed = 0;
  double offline = 0.0;
  double online = 0.0;
  std::size_t generations = 0;
  std::uint64_t evaluations = 0;
  bool reached_optimum = false;
  std::uint64_t xover_attempted = 0;
  std::uint64_t xover_new = 0;

  friend bool operator==(const RunRecord&, const RunRecord&) = default;
};

using RunTable = std::vector<RunRecord>;

inline constexpr std::string_view kRunsHeader =
    "n,selection,crossover,pc,pm,rep,pop_seed,run_seed,offline,online,generations,evaluations,"
    "reached_optimum,xover_attempted,xover_new";
inline constexpr std::size_t kRunsColumns = 15;

// Reals are written in shortest round-trip form, so read(write(t)) == t.
inline void write_runs(std::ostream& out, const RunTable& table) {
  out << kRunsHeader << '\n';
  for (const RunRecord& r : table) {
    out << fmt::format("{},{},{},{},{},{},{},{},{},{},{},{},{},{},{}\n", r.problem_size,
                       to_string(r.selection), to_string(r.crossover), r.pc, r.pm, r.replicate,
                       r.population_seed, r.run_seed, r.offline, r.online, r.generations,
                       r.evaluations, r.reached_optimum ? 1 : 0, r.xover_attempted, r.xover_new);
  }
}

namespace detail {

template <typename T>
T parse_field(std::string_view field, std::string_view column, std::size_t lineno) {
  T value{};
  const auto [ptr, ec] = std::from_chars(field.data(), field.data() + field.size(), value);
  if (ec != std::errc() || ptr != field.data() + field.size() || field.empty())
    throw ParseError(fmt::format("column '{}': cannot parse '{}'", column, field), lineno);
  return value;
}

inline std::vector<std::string_view> split_commas(std::string_view line) {
  std::vector<std::string_view> out;
  std::size_t start = 0;
  for (;;) {
    const std::size_t comma = line.find(',', start);
    out.push_back(line.substr(start, comma == std::string_view::npos ? comma : comma - start));
    if (comma == std::string_view::npos) break;
    start = comma + 1;
  }
  return out;
}

}  // namespace detail

inline RunTable read_runs(std::istream& in) {
  std::string line;
  std::size_t lineno = 0;
  auto strip = [](std::string& s) {
    if (!s.empty() && s.back() == '\r') s.pop_back();
  };
  if (!std::getline(in, line)) throw ParseError("missing header", 1);
  ++lineno;
  strip(line);
  if (line != kRunsHeader) throw ParseError("malformed header", lineno);

  RunTable table;
  while (std::getline(in, line)) {
    ++lineno;
    strip(line);
    if (line.empty()) continue;
    const auto f = detail::split_commas(line);
    if (f.size() != kRunsColumns)
      throw ParseError(fmt::format("expected {} columns, found {}", kRunsColumns, f.size()), lineno);
    RunRecord r;
    r.problem_size = detail::parse_field<std::size_t>(f[0], "n", lineno);
    if (f[1] == "RSIS") r.selection = Selection::RSIS;
    else if (f[1] == "SUS") r.selection = Selection::SUS;
    else throw ParseError(fmt::format("column 'selection': unknown value '{}'", f[1]), lineno);
    if (f[2] == "PMX") r.crossover = Crossover::PMX;
    else if (f[2] == "CX") r.crossover = Crossover::CX;
    else throw ParseError(fmt::format("column 'crossover': unknown value '{}'", f[2]), lineno);
    r.pc = detail::parse_field<double>(f[3], "pc", lineno);
    r.pm = detail::parse_field<double>(f[4], "pm", lineno);
    r.replicate = detail::parse_field<std::size_t>(f[5], "rep", lineno);
    r.population_seed = detail::parse_field<std::uint64_t>(f[6], "pop_seed", lineno);
    r.run_seed = detail::parse_field<std::uint64_t>(f[7], "run_seed", lineno);
    r.offline = detail::parse_field<double>(f[8], "offline", lineno);
    r.online = detail::parse_field<double>(f[9], "online", lineno);
    r.generations = detail::parse_field<std::size_t>(f[10], "generations", lineno);
    r.evaluations = detail::parse_field<std::uint64_t>(f[11], "evaluations", lineno);
    const auto reached = detail::parse_field<int>(f[12], "reached_optimum", lineno);
    if (reached != 0 && reached != 1)
      throw ParseError("column 'reached_optimum': expected 0 or 1", lineno);
    r.reached_optimum = reached == 1;
    r.xover_attempted = detail::parse_field<std::uint64_t>(f[13], "xover_attempted", lineno);
    r.xover_new = detail::parse_field<std::uint64_t>(f[14], "xover_new", lineno);
    if (r.replicate < 1) throw ParseError("column 'rep': replicates are 1-based", lineno);
    if (r.xover_new > r.xover_attempted)
      throw ParseError("xover_new exceeds xover_attempted", lineno);
    table.push_back(r);
  }
  return table;
}

inline void save_runs(const std::string& path, const RunTable& table) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw FileError("cannot open '" + path + "' for writing");
  write_runs(out, table);
  if (!out) throw FileError("failed writing '" + path + "'");
}

inline RunTable load_runs(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw FileError("cannot open '" + path + "' for reading");
  try {
    return read_runs(in);
  } catch (const ParseError& e) {
    throw ParseError::in(path, e);
  }
}

}  // namespace galab

#endif  // GALAB_RUNS_HPP
