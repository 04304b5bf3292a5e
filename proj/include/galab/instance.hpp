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

#ifndef GALAB_INSTANCE_HPP
#define GALAB_INSTANCE_HPP

#include <algorithm>
#include <cstddef>
#include <cstdint>
#include <fstream>
#include <istream>
#include <numeric>
#include <ostream>
#include <sstream>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "galab/error.hpp"
#include "galab/rng.hpp"
#include "galab/tour.hpp"

namespace galab {

using Profit = std::int64_t;

/// Dense square matrix of profits, row-major.
class ProfitMatrix {
 public:
  ProfitMatrix() = default;
  explicit ProfitMatrix(std::size_t n, Profit fill = 0) : n_(n), data_(n * n, fill) {}

  ProfitMatrix(std::initializer_list<std::initializer_list<Profit>> rows) : n_(rows.size()) {
    data_.reserve(n_ * n_);
    for (const auto& row : rows) {
      if (row.size() != n_) throw std::invalid_argument("ProfitMatrix: rows must be square");
      data_.insert(data_.end(), row.begin(), row.end());
    }
  }

  std::size_t size() const noexcept { return n_; }
  Profit& operator()(std::size_t i, std::size_t j) { return data_[i * n_ + j]; }
  Profit operator()(std::size_t i, std::size_t j) const { return data_[i * n_ + j]; }
  Profit max_element() const {
    return data_.empty() ? 0 : *std::max_element(data_.begin(), data_.end());
  }

  friend bool operator==(const ProfitMatrix&, const ProfitMatrix&) = default;

 private:
  std::size_t n_ = 0;
  std::vector<Profit> data_;
};

/// Maximization TSP whose optimum is planted: every edge of one closed route
/// (in both directions) is set to max(base) + margin, which exceeds every
/// other off-diagonal profit.
class TspInstance {
 public:
  /// Builds the profit matrix from a symmetric base matrix and a route.
  /// `route` lists the n cities once; the closing return is implied.
  static TspInstance plant(ProfitMatrix base, const std::vector<City>& route, Profit margin) {
    const std::size_t n = base.size();
    if (n < 3) throw std::invalid_argument("TspInstance: need at least 3 cities");
    if (margin < 1) throw std::invalid_argument("TspInstance: margin must be >= 1");
    if (route.size() != n || !is_permutation_of_range(route))
      throw std::invalid_argument("TspInstance: route must be a permutation of the cities");
    for (std::size_t i = 0; i < n; ++i)
      for (std::size_t j = i + 1; j < n; ++j)
        if (base(i, j) != base(j, i))
          throw std::invalid_argument("TspInstance: base matrix must be symmetric");

    TspInstance inst;
    inst.n_ = n;
    inst.max_element_ = base.max_element();
    inst.margin_ = margin;
    inst.optimum_ = static_cast<Profit>(n) * (inst.max_element_ + margin);
    inst.route_ = route;
    inst.route_.push_back(route.front());
    const Profit top = inst.max_element_ + margin;
    for (std::size_t y = 0; y < n; ++y) {
      const City a = inst.route_[y];
      const City b = inst.route_[y + 1];
      base(a, b) = top;
      base(b, a) = top;
    }
    inst.profit_ = std::move(base);
    return inst;
  }

  /// Reassembles a stored instance and checks every invariant.
  /// `closed_route` has n+1 entries with the last equal to the first.
  static TspInstance from_parts(ProfitMatrix profit, std::vector<City> closed_route,
                                Profit margin, Profit optimum) {
    const std::size_t n = profit.size();
    if (n < 3) throw std::invalid_argument("TspInstance: need at least 3 cities");
    if (margin < 1) throw std::invalid_argument("TspInstance: margin must be >= 1");
    if (closed_route.size() != n + 1 || closed_route.front() != closed_route.back())
      throw std::invalid_argument("TspInstance: route must be closed with n+1 entries");
    if (!is_permutation_of_range(std::span<const City>(closed_route).first(n)))
      throw std::invalid_argument("TspInstance: route must visit every city once");
    if (optimum % static_cast<Profit>(n) != 0)
      throw std::invalid_argument("TspInstance: optimum must equal n * (max + margin)");
    const Profit top = optimum / static_cast<Profit>(n);

    std::vector<bool> on_route(n * n, false);
    for (std::size_t y = 0; y < n; ++y) {
      const City a = closed_route[y];
      const City b = closed_route[y + 1];
      on_route[a * n + b] = on_route[b * n + a] = true;
    }
    for (std::size_t i = 0; i < n; ++i) {
      for (std::size_t j = 0; j < n; ++j) {
        if (i == j) continue;
        if (profit(i, j) != profit(j, i))
          throw std::invalid_argument("TspInstance: profit matrix must be symmetric");
        if (on_route[i * n + j] ? profit(i, j) != top : profit(i, j) >= top)
          throw std::invalid_argument("TspInstance: planted route edges are not the unique maximum");
      }
    }

    TspInstance inst;
    inst.n_ = n;
    inst.profit_ = std::move(profit);
    inst.route_ = std::move(closed_route);
    inst.margin_ = margin;
    inst.max_element_ = top - margin;
    inst.optimum_ = optimum;
    return inst;
  }

  std::size_t n() const noexcept { return n_; }
  const ProfitMatrix& profit() const noexcept { return profit_; }
  /// n+1 entries; last equals first.
  const std::vector<City>& planted_route() const noexcept { return route_; }
  Tour planted_tour() const {
    return Tour::unchecked(std::vector<City>(route_.begin(), route_.end() - 1));
  }
  Profit max_element() const noexcept { return max_element_; }
  Profit margin() const noexcept { return margin_; }
  Profit optimum() const noexcept { return optimum_; }

  friend bool operator==(const TspInstance&, const TspInstance&) = default;

 private:
  TspInstance() = default;

  std::size_t n_ = 0;
  ProfitMatrix profit_;
  std::vector<City> route_;
  Profit max_element_ = 0;
  Profit margin_ = 1;
  Profit optimum_ = 0;
};

struct GenerateOptions {
  Profit min_value = 10;
  Profit max_value = 30;
  /// Probability that an off-diagonal base entry is zero.
  double zero_fraction = 0.0;
};

/// Random base matrix (upper triangle mirrored, diagonal drawn but unused)
/// and random planted route. Draw order: base matrix row-major over j >= i,
/// then a Fisher-Yates shuffle of the route.
inline TspInstance generate_instance(std::size_t n, std::uint64_t seed, Profit margin = 1,
                                     const GenerateOptions& opt = {}) {
  if (n < 3) throw std::invalid_argument("generate_instance: n must be >= 3");
  if (margin < 1) throw std::invalid_argument("generate_instance: margin must be >= 1");
  if (opt.min_value < 1 || opt.max_value < opt.min_value)
    throw std::invalid_argument("generate_instance: need 1 <= min_value <= max_value");
  if (!(opt.zero_fraction >= 0.0 && opt.zero_fraction < 1.0))
    throw std::invalid_argument("generate_instance: zero_fraction must be in [0, 1)");

  Rng rng(seed);
  const auto span = static_cast<std::uint64_t>(opt.max_value - opt.min_value + 1);
  ProfitMatrix base(n);
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = i; j < n; ++j) {
      Profit v = opt.min_value + static_cast<Profit>(rng.below(span));
      if (i != j && opt.zero_fraction > 0.0 && rng.bernoulli(opt.zero_fraction)) v = 0;
      base(i, j) = base(j, i) = v;
    }
  }
  std::vector<City> route(n);
  std::iota(route.begin(), route.end(), City{0});
  for (std::size_t i = n - 1; i > 0; --i) std::swap(route[i], route[rng.below(i + 1)]);
  return TspInstance::plant(std::move(base), route, margin);
}

/// Sum of profits along the closed route, without validation.
inline Profit fitness_unchecked(std::span<const City> cities, const ProfitMatrix& pr) {
  Profit total = 0;
  const std::size_t n = cities.size();
  for (std::size_t y = 0; y + 1 < n; ++y) total += pr(cities[y], cities[y + 1]);
  return total + pr(cities[n - 1], cities[0]);
}

inline Profit fitness(const Tour& tour, const TspInstance& inst) {
  if (tour.size() != inst.n())
    throw std::invalid_argument("fitness: tour length does not match instance size");
  if (!is_permutation_of_range(tour.cities()))
    throw std::invalid_argument("fitness: tour repeats a city");
  return fitness_unchecked(tour.cities(), inst.profit());
}

struct BruteForceResult {
  Tour tour;
  Profit profit = 0;
};

/// Exhaustive search over all tours starting at city 0. Test oracle only.
inline BruteForceResult brute_force_optimum(const TspInstance& inst) {
  const std::size_t n = inst.n();
  if (n > 10) throw std::invalid_argument("brute_force_optimum: n > 10 is not enumerable");
  std::vector<City> perm(n);
  std::iota(perm.begin(), perm.end(), City{0});
  BruteForceResult best{Tour::unchecked(perm), fitness_unchecked(perm, inst.profit())};
  while (std::next_permutation(perm.begin() + 1, perm.end())) {
    const Profit f = fitness_unchecked(perm, inst.profit());
    if (f > best.profit) best = {Tour::unchecked(perm), f};
  }
  return best;
}

/// True iff both tours traverse the same undirected cycle.
inline bool same_cycle(const Tour& a, const Tour& b) {
  const std::size_t n = a.size();
  if (n != b.size()) return false;
  if (n == 0) return true;
  std::size_t start = 0;
  while (start < n && b[start] != a[0]) ++start;
  if (start == n) return false;
  bool forward = true;
  bool backward = true;
  for (std::size_t k = 0; k < n; ++k) {
    forward = forward && a[k] == b[(start + k) % n];
    backward = backward && a[k] == b[(start + n - k) % n];
  }
  return forward || backward;
}

// Instance file: "n margin optimum", n matrix rows, then the closed route as
// n+1 one-based indices.

inline void write_instance(std::ostream& out, const TspInstance& inst) {
  const std::size_t n = inst.n();
  out << n << ' ' << inst.margin() << ' ' << inst.optimum() << '\n';
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) out << (j ? " " : "") << inst.profit()(i, j);
    out << '\n';
  }
  const auto& r = inst.planted_route();
  for (std::size_t y = 0; y < r.size(); ++y) out << (y ? " " : "") << r[y] + 1;
  out << '\n';
}

namespace detail {

inline std::vector<std::int64_t> parse_int_line(const std::string& line, std::size_t lineno) {
  std::istringstream ss(line);
  std::vector<std::int64_t> out;
  std::string tok;
  while (ss >> tok) {
    std::size_t used = 0;
    std::int64_t v = 0;
    try {
      v = std::stoll(tok, &used);
    } catch (const std::exception&) {
      throw ParseError("expected an integer, got '" + tok + "'", lineno);
    }
    if (used != tok.size()) throw ParseError("expected an integer, got '" + tok + "'", lineno);
    out.push_back(v);
  }
  return out;
}

}  // namespace detail

inline TspInstance read_instance(std::istream& in) {
  std::string line;
  std::size_t lineno = 0;
  auto next = [&](const char* what) {
    if (!std::getline(in, line)) throw ParseError(std::string("unexpected end of file: missing ") + what, lineno + 1);
    ++lineno;
    return detail::parse_int_line(line, lineno);
  };

  const auto header = next("header");
  if (header.size() != 3) throw ParseError("header must be 'n margin optimum'", lineno);
  if (header[0] < 3) throw ParseError("n must be >= 3", lineno);
  const auto n = static_cast<std::size_t>(header[0]);
  ProfitMatrix profit(n);
  for (std::size_t i = 0; i < n; ++i) {
    const auto row = next("matrix row");
    if (row.size() != n)
      throw ParseError("matrix row has " + std::to_string(row.size()) + " entries, expected " +
                           std::to_string(n), lineno);
    for (std::size_t j = 0; j < n; ++j) profit(i, j) = row[j];
  }
  const auto route_line = next("route");
  if (route_line.size() != n + 1) throw ParseError("route must have n+1 entries", lineno);
  std::vector<City> route;
  for (auto v : route_line) {
    if (v < 1 || v > static_cast<std::int64_t>(n)) throw ParseError("route index out of range", lineno);
    route.push_back(static_cast<City>(v - 1));
  }
  try {
    return TspInstance::from_parts(std::move(profit), std::move(route), header[1], header[2]);
  } catch (const std::invalid_argument& e) {
    throw ParseError(e.what(), 0);
  }
}

inline void save_instance(const std::string& path, const TspInstance& inst) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw FileError("cannot open '" + path + "' for writing");
  write_instance(out, inst);
  if (!out) throw FileError("failed writing '" + path + "'");
}

inline TspInstance load_instance(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw FileError("cannot open '" + path + "' for reading");
  try {
    return read_instance(in);
  } catch (const ParseError& e) {
    throw ParseError::in(path, e);
  }
}

/// The five-city worked example: base matrix and route 4-3-5-1-2 (1-based), margin 1.
inline TspInstance worked_example_instance() {
  ProfitMatrix base{{17, 22, 27, 15, 17},
                    {22, 16, 18, 20, 15},
                    {27, 18, 18, 16, 17},
                    {15, 20, 16, 13, 16},
                    {17, 15, 17, 16, 10}};
  return TspInstance::plant(std::move(base), {3, 2, 4, 0, 1}, 1);
}

}  // namespace galab

#endif  // GALAB_INSTANCE_HPP
