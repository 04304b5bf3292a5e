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

#ifndef GALAB_TOUR_HPP
#define GALAB_TOUR_HPP

#include <cstddef>
#include <cstdint>
#include <span>
#include <stdexcept>
#include <utility>
#include <vector>

namespace galab {

/// City index, 0-based. File formats and printed output use 1-based indices.
using City = std::uint32_t;

/// True iff `cities` holds each of 0..size-1 exactly once.
inline bool is_permutation_of_range(std::span<const City> cities) {
  std::vector<bool> seen(cities.size(), false);
  for (City c : cities) {
    if (c >= cities.size() || seen[c]) return false;
    seen[c] = true;
  }
  return true;
}

/// A closed route as a permutation chromosome; the edge back to the first
/// city is implicit.
class Tour {
 public:
  Tour() = default;

  explicit Tour(std::vector<City> cities) : cities_(std::move(cities)) {
    if (!is_permutation_of_range(cities_))
      throw std::invalid_argument("Tour: cities are not a permutation of 0..n-1");
  }

  /// Skips validation; for operator outputs that are permutations by construction.
  static Tour unchecked(std::vector<City> cities) {
    Tour t;
    t.cities_ = std::move(cities);
    return t;
  }

  std::size_t size() const noexcept { return cities_.size(); }
  City operator[](std::size_t i) const { return cities_[i]; }
  std::span<const City> cities() const noexcept { return cities_; }
  auto begin() const noexcept { return cities_.begin(); }
  auto end() const noexcept { return cities_.end(); }

  friend bool operator==(const Tour&, const Tour&) = default;
  friend auto operator<=>(const Tour&, const Tour&) = default;

 private:
  std::vector<City> cities_;
};

}  // namespace galab

#endif  // GALAB_TOUR_HPP
