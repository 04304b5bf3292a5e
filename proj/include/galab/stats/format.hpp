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

#ifndef GALAB_STATS_FORMAT_HPP
#define GALAB_STATS_FORMAT_HPP

#include <algorithm>
#include <cmath>
#include <cstddef>
#include <optional>
#include <ostream>
#include <string>
#include <vector>

#include <fmt/format.h>
#include <fmt/ranges.h>

#include "galab/stats/anova.hpp"
#include "galab/stats/contrasts.hpp"
#include "galab/stats/dmrt.hpp"

namespace galab::stats {

/// p values are reported within [1e-16, 1].
inline double display_p(double p) { return std::clamp(p, 1e-16, 1.0); }

/// Four decimals, with "<0.0001" below the display floor.
inline std::string format_p_text(double p) {
  p = display_p(p);
  return p < 0.0001 ? std::string("<0.0001") : fmt::format("{:.4f}", p);
}

/// Shortest round-trip representation, for CSV output.
inline std::string csv_number(double v) { return fmt::format("{}", v); }

namespace detail {

struct TextTable {
  std::vector<std::string> header;
  std::vector<std::vector<std::string>> rows;
  /// true = right aligned
  std::vector<bool> right;

  void write(std::ostream& out) const {
    std::vector<std::size_t> width(header.size());
    for (std::size_t c = 0; c < header.size(); ++c) width[c] = header[c].size();
    for (const auto& r : rows)
      for (std::size_t c = 0; c < r.size(); ++c) width[c] = std::max(width[c], r[c].size());
    auto line = [&](const std::vector<std::string>& cells) {
      std::string s;
      for (std::size_t c = 0; c < header.size(); ++c) {
        const std::string cell = c < cells.size() ? cells[c] : "";
        if (c) s += "  ";
        s += right[c] ? fmt::format("{:>{}}", cell, width[c]) : fmt::format("{:<{}}", cell, width[c]);
      }
      while (!s.empty() && s.back() == ' ') s.pop_back();
      out << s << '\n';
    };
    std::size_t total = 0;
    for (std::size_t c = 0; c < header.size(); ++c) total += width[c] + (c ? 2 : 0);
    const std::string rule(total, '-');
    line(header);
    out << rule << '\n';
    for (const auto& r : rows) line(r);
    out << rule << '\n';
  }
};

}  // namespace detail

inline void write_anova_text(std::ostream& out, const AnovaTable& table) {
  detail::TextTable t;
  t.header = {"Source of Variation", "Degree of Freedom", "Sum of Squares", "Mean Square", "F-Value", "Pr>F"};
  t.right = {false, true, true, true, true, true};
  for (const auto& r : table.rows) {
    t.rows.push_back({r.source, std::to_string(r.df), fmt::format("{:.2f}", r.ss),
                      r.ms ? fmt::format("{:.2f}", *r.ms) : "", r.f ? fmt::format("{:.2f}", *r.f) : "",
                      r.p ? format_p_text(*r.p) : ""});
  }
  t.write(out);
  out << fmt::format("CV={:.2f}\n", table.cv);
}

inline void write_anova_csv(std::ostream& out, const AnovaTable& table) {
  out << "source,df,ss,ms,f,p\n";
  for (const auto& r : table.rows) {
    out << r.source << ',' << r.df << ',' << csv_number(r.ss) << ',' << (r.ms ? csv_number(*r.ms) : "") << ','
        << (r.f ? csv_number(*r.f) : "") << ',' << (r.p ? csv_number(display_p(*r.p)) : "") << '\n';
  }
}

/// Means with group letters appended, Table-style: "316.26a".
inline void write_dmrt_text(std::ostream& out, const DmrtGrouping& g, const std::string& title = "Treatment") {
  out << fmt::format("Duncan's multiple range test: alpha={}, error df={}, s_m={:.4f}\n", g.alpha, g.df_error,
                     g.std_error);
  detail::TextTable t;
  t.header = {title, "Mean"};
  t.right = {false, false};
  for (std::size_t i = 0; i < g.labels.size(); ++i)
    t.rows.push_back({g.labels[i], fmt::format("{:.2f}{}", g.means[i], g.letters[i])});
  t.write(out);
  std::string ranges;
  for (std::size_t p = 0; p < g.ranges.size(); ++p)
    ranges += fmt::format("{}R{}={:.4f}", p ? " " : "", p + 2, g.ranges[p]);
  out << "Least significant ranges: " << ranges << '\n';
}

inline void write_dmrt_csv(std::ostream& out, const DmrtGrouping& g) {
  out << "label,mean,letters\n";
  for (std::size_t i = 0; i < g.labels.size(); ++i)
    out << g.labels[i] << ',' << csv_number(g.means[i]) << ',' << g.letters[i] << '\n';
}

inline void write_trend_text(std::ostream& out, const std::string& factor, const std::string& scale,
                             const std::vector<TrendRow>& rows) {
  out << fmt::format("Trend contrasts for {} ({} scale)\n", factor, scale);
  detail::TextTable t;
  t.header = {"Component", "Coefficients", "DF", "Sum of Squares", "F-Value", "Pr>F"};
  t.right = {false, false, true, true, true, true};
  for (const auto& r : rows) {
    t.rows.push_back({r.name, fmt::format("({})", fmt::join(r.coefficients, ",")), "1", fmt::format("{:.2f}", r.ss),
                      fmt::format("{:.2f}", r.f), format_p_text(r.p)});
  }
  t.write(out);
}

}  // namespace galab::stats

#endif  // GALAB_STATS_FORMAT_HPP
