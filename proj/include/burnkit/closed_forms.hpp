// Copyright 2026 The burnkit Authors
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

#ifndef BURNKIT_CLOSED_FORMS_HPP
#define BURNKIT_CLOSED_FORMS_HPP

#include <array>
#include <cstddef>
#include <optional>
#include <span>
#include <utility>

#include "burnkit/graph.hpp"

namespace burnkit {

/// ceil(sqrt(n)) for n >= 1.
std::size_t b_path(std::size_t n);
/// ceil(sqrt(n)) for n >= 3.
std::size_t b_cycle(std::size_t n);

/// P_a1 + P_a2. Arguments are normalized to a1 >= a2.
std::size_t b_two_paths(std::size_t a1, std::size_t a2);
/// P_a1 + P_a2 + P_a3. Arguments are normalized to a1 >= a2 >= a3.
std::size_t b_three_paths(std::size_t a1, std::size_t a2, std::size_t a3);

/// 1 for the single vertex, 2 when n >= 2 and n-2 <= max degree, otherwise
/// undetermined.
std::optional<std::size_t> b2_by_degree(const Graph& g);

struct Bounds {
  std::size_t lower = 0;
  std::size_t upper = 0;
  friend bool operator==(const Bounds&, const Bounds&) = default;
};

/// Bounds for any t-unicyclic graph of order n:
///   ceil(sqrt(n + (t^2 + 4t)/4) - t/2) <= b <= ceil(sqrt(n)).
/// Evaluated in integers: the lower bound is the least L with
/// (2L + t)^2 >= 4n + t^2 + 4t.
Bounds t_unicyclic_bounds(std::size_t n, std::size_t t);

/// ceil(sqrt(1 + sum(arms))). An upper bound only.
std::size_t b_generalized_star_upper(std::span<const std::size_t> arms);

// Exception sets for linear forests with two and three components. Pairs and
// triples are in descending order.
namespace forest_exceptions {

using Pair = std::pair<std::size_t, std::size_t>;
using Triple = std::array<std::size_t, 3>;

extern const std::array<Pair, 1> kD1;
extern const std::array<Pair, 1> kD2;
extern const std::array<Pair, 4> kD3;
extern const std::array<Pair, 12> kD4;
extern const std::array<Triple, 23> kJ5;

/// (a1, a2) = (t^2 - 2, 2) for some t >= 2.
bool in_j_pair(std::size_t a1, std::size_t a2);
bool in_j1(const Triple& a);
bool in_j2(const Triple& a);
bool in_j3(const Triple& a);
bool in_j4(const Triple& a);
bool in_j5(const Triple& a);

}  // namespace forest_exceptions

}  // namespace burnkit

#endif  // BURNKIT_CLOSED_FORMS_HPP
