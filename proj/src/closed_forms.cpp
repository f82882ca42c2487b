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

#include "burnkit/closed_forms.hpp"

#include <algorithm>
#include <functional>
#include <numeric>

#include "burnkit/arith.hpp"

namespace burnkit {

namespace forest_exceptions {

const std::array<Pair, 1> kD1 = {{{2, 2}}};
const std::array<Pair, 1> kD2 = {{{3, 2}}};
const std::array<Pair, 4> kD3 = {{{1, 1}, {3, 3}, {4, 2}, {5, 5}}};
const std::array<Pair, 12> kD4 = {{{2, 1}, {4, 1}, {4, 3}, {4, 4}, {6, 1}, {6, 4},
                                   {6, 5}, {6, 6}, {7, 7}, {8, 4}, {8, 6}, {10, 4}}};

const std::array<Triple, 23> kJ5 = {{
    {13, 11, 1}, {11, 11, 3}, {22, 13, 1}, {19, 13, 4}, {17, 13, 6}, {15, 13, 8},
    {13, 13, 10}, {17, 15, 4}, {15, 15, 6}, {30, 15, 4}, {28, 15, 6}, {26, 15, 8},
    {19, 15, 15}, {28, 17, 4}, {26, 17, 6}, {17, 17, 15}, {26, 19, 4}, {43, 17, 4},
    {41, 17, 6}, {30, 17, 17}, {41, 19, 4}, {30, 30, 4}, {58, 19, 4},
}};

namespace {

template <std::size_t N>
bool contains(const std::array<Pair, N>& set, std::size_t a, std::size_t b) {
  return std::find(set.begin(), set.end(), Pair{a, b}) != set.end();
}

// (a2, a3) in D1 u ... u D_upto.
bool tail_in_d(const Triple& a, int upto) {
  const std::size_t x = a[1];
  const std::size_t y = a[2];
  if (contains(kD1, x, y)) return true;
  if (upto >= 2 && contains(kD2, x, y)) return true;
  if (upto >= 3 && contains(kD3, x, y)) return true;
  if (upto >= 4 && contains(kD4, x, y)) return true;
  return false;
}

std::size_t total(const Triple& a) { return a[0] + a[1] + a[2]; }

}  // namespace

bool in_j_pair(std::size_t a1, std::size_t a2) {
  return a2 == 2 && a1 >= 2 && is_perfect_square(a1 + 2);
}

bool in_j1(const Triple& a) { return tail_in_d(a, 1) && is_perfect_square(total(a) + 3); }
bool in_j2(const Triple& a) { return tail_in_d(a, 2) && is_perfect_square(total(a) + 2); }
bool in_j3(const Triple& a) {
  if (a == Triple{11, 11, 2}) return true;
  return tail_in_d(a, 3) && is_perfect_square(total(a) + 1);
}
bool in_j4(const Triple& a) {
  return (a[2] == 2 || tail_in_d(a, 4)) && is_perfect_square(total(a));
}
bool in_j5(const Triple& a) { return std::find(kJ5.begin(), kJ5.end(), a) != kJ5.end(); }

}  // namespace forest_exceptions

std::size_t b_path(std::size_t n) {
  if (n < 1) throw InvalidInput("path order must be >= 1");
  return isqrt_ceil(n);
}

std::size_t b_cycle(std::size_t n) {
  if (n < 3) throw InvalidInput("cycle order must be >= 3");
  return isqrt_ceil(n);
}

std::size_t b_two_paths(std::size_t a1, std::size_t a2) {
  if (a1 < 1 || a2 < 1) throw InvalidInput("path orders must be >= 1");
  if (a1 < a2) std::swap(a1, a2);
  const std::size_t base = isqrt_ceil(a1 + a2);
  return forest_exceptions::in_j_pair(a1, a2) ? base + 1 : base;
}

std::size_t b_three_paths(std::size_t a1, std::size_t a2, std::size_t a3) {
  if (a1 < 1 || a2 < 1 || a3 < 1) throw InvalidInput("path orders must be >= 1");
  forest_exceptions::Triple a{a1, a2, a3};
  std::sort(a.begin(), a.end(), std::greater<>());
  namespace fe = forest_exceptions;
  const std::size_t base = isqrt_ceil(a[0] + a[1] + a[2]);
  const bool exceptional = fe::in_j1(a) || fe::in_j2(a) || fe::in_j3(a) || fe::in_j4(a) || fe::in_j5(a);
  return exceptional ? base + 1 : base;
}

std::optional<std::size_t> b2_by_degree(const Graph& g) {
  const std::size_t n = g.vertex_count();
  if (n == 1) return 1;
  if (n >= 2 && g.max_degree() + 2 >= n) return 2;
  return std::nullopt;
}

Bounds t_unicyclic_bounds(std::size_t n, std::size_t t) {
  if (n < 3 + t) throw InvalidInput("t-unicyclic graphs need n >= 3 + t");
  const std::size_t s = isqrt_ceil(4 * n + t * t + 4 * t);
  // Least L >= 0 with 2L + t >= s.
  const std::size_t lower = s > t ? (s - t + 1) / 2 : 0;
  return {lower, isqrt_ceil(n)};
}

std::size_t b_generalized_star_upper(std::span<const std::size_t> arms) {
  if (arms.size() < 3) throw InvalidInput("generalized star needs >= 3 arms");
  if (std::any_of(arms.begin(), arms.end(), [](std::size_t a) { return a < 1; }))
    throw InvalidInput("star arms must be >= 1");
  return isqrt_ceil(1 + std::accumulate(arms.begin(), arms.end(), std::size_t{0}));
}

}  // namespace burnkit
