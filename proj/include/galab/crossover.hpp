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

#ifndef GALAB_CROSSOVER_HPP
#define GALAB_CROSSOVER_HPP

#include <cstddef>
#include <stdexcept>
#include <string_view>
#include <utility>
#include <vector>

#include "galab/tour.hpp"

namespace galab {

enum class Crossover { PMX, CX };

inline std::string_view to_string(Crossover c) { return c == Crossover::PMX ? "PMX" : "CX"; }

using Offspring = std::pair<Tour, Tour>;

namespace detail {

inline void check_parents(const Tour& a, const Tour& b) {
  if (a.size() != b.size()) throw std::invalid_argument("crossover: parents differ in length");
  if (!is_permutation_of_range(a.cities()) || !is_permutation_of_range(b.cities()))
    throw std::invalid_argument("crossover: parents must be permutations");
}

inline std::vector<std::size_t> positions_of(const Tour& t) {
  std::vector<std::size_t> pos(t.size());
  for (std::size_t i = 0; i < t.size(); ++i) pos[t[i]] = i;
  return pos;
}

// Child keeps `base` outside [cut1, cut2) and takes `donor` inside. A base
// value that collides with the donor segment is chased through the mapping
// donor[i] -> base[i] until it leaves the segment.
inline Tour pmx_child(const Tour& base, const Tour& donor, std::size_t cut1, std::size_t cut2) {
  const std::size_t n = base.size();
  std::vector<std::size_t> donor_pos = positions_of(donor);
  std::vector<City> child(base.begin(), base.end());
  for (std::size_t i = cut1; i < cut2; ++i) child[i] = donor[i];
  auto in_segment = [&](City v) { return donor_pos[v] >= cut1 && donor_pos[v] < cut2; };
  for (std::size_t i = 0; i < n; ++i) {
    if (i >= cut1 && i < cut2) continue;
    City v = base[i];
    while (in_segment(v)) v = base[donor_pos[v]];
    child[i] = v;
  }
  return Tour::unchecked(std::move(child));
}

}  // namespace detail

/// Partially matched crossover over the half-open segment [cut1, cut2).
inline Offspring pmx(const Tour& parent_a, const Tour& parent_b, std::size_t cut1,
                     std::size_t cut2) {
  detail::check_parents(parent_a, parent_b);
  if (cut1 > cut2 || cut2 > parent_a.size())
    throw std::out_of_range("pmx: need 0 <= cut1 <= cut2 <= n");
  return {detail::pmx_child(parent_a, parent_b, cut1, cut2),
          detail::pmx_child(parent_b, parent_a, cut1, cut2)};
}

/// Cycle crossover. Cycles are found from the leftmost unassigned position;
/// child_a takes the first cycle from parent_a, the second from parent_b,
/// and so on alternately.
inline Offspring cx(const Tour& parent_a, const Tour& parent_b) {
  detail::check_parents(parent_a, parent_b);
  const std::size_t n = parent_a.size();
  const std::vector<std::size_t> pos_a = detail::positions_of(parent_a);
  std::vector<City> child_a(n), child_b(n);
  std::vector<bool> assigned(n, false);
  bool from_a = true;
  for (std::size_t start = 0; start < n; ++start) {
    if (assigned[start]) continue;
    std::size_t i = start;
    while (!assigned[i]) {
      assigned[i] = true;
      child_a[i] = from_a ? parent_a[i] : parent_b[i];
      child_b[i] = from_a ? parent_b[i] : parent_a[i];
      i = pos_a[parent_b[i]];
    }
    from_a = !from_a;
  }
  return {Tour::unchecked(std::move(child_a)), Tour::unchecked(std::move(child_b))};
}

/// True iff at least one child differs from both parents.
inline bool produces_new(const Offspring& children, const Tour& a, const Tour& b) {
  auto fresh = [&](const Tour& c) { return c != a && c != b; };
  return fresh(children.first) || fresh(children.second);
}

}  // namespace galab

#endif  // GALAB_CROSSOVER_HPP
