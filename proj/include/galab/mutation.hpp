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

#ifndef GALAB_MUTATION_HPP
#define GALAB_MUTATION_HPP

#include <algorithm>
#include <cstddef>
#include <stdexcept>
#include <vector>

#include "galab/tour.hpp"

namespace galab {

/// Reverses positions i..j inclusive.
inline Tour inversion_mutate(const Tour& tour, std::size_t i, std::size_t j) {
  if (i > j || j >= tour.size()) throw std::out_of_range("inversion_mutate: need 0 <= i <= j < n");
  std::vector<City> out(tour.begin(), tour.end());
  std::reverse(out.begin() + static_cast<std::ptrdiff_t>(i),
               out.begin() + static_cast<std::ptrdiff_t>(j) + 1);
  return Tour::unchecked(std::move(out));
}

}  // namespace galab

#endif  // GALAB_MUTATION_HPP
