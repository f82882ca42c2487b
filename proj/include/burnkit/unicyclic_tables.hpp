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

#ifndef BURNKIT_UNICYCLIC_TABLES_HPP
#define BURNKIT_UNICYCLIC_TABLES_HPP

#include <array>
#include <cstddef>
#include <utility>
#include <vector>

#include "burnkit/exact_solver.hpp"

namespace burnkit {

// Constant-time burning numbers of U_g^{a} and U_g^{a1,a2}: a cycle C_g with
// one or two pendant paths glued at the same cycle vertex. With
// n = q^2 + r (1 <= r <= 2q+1) the value is always q or q+1; the tables below
// decide which.

/// Burning number of the 1-unicyclic graph with girth g and one arm of
/// length a. Throws InvalidInput for g < 3 or a < 1.
BurnResult b_unicyclic_t1(std::size_t g, std::size_t a);

/// Burning number of the 2-unicyclic graph with girth g and arms a1, a2
/// (normalized so a1 >= a2). Throws InvalidInput for g < 3 or an arm < 1.
BurnResult b_unicyclic_t2(std::size_t g, std::size_t a1, std::size_t a2);

/// Which table rows fire for an instance. A well-formed table fires exactly
/// one of the two.
struct RowMatch {
  bool q_row = false;
  bool q_plus_one_row = false;
};

/// Only meaningful past the small-order cases (n >= 6 for t = 1, n >= 7 for
/// t = 2), where the degree criterion settles the value instead.
RowMatch t1_rows(std::size_t g, std::size_t a);
RowMatch t2_rows(std::size_t g, std::size_t a1, std::size_t a2);

namespace unicyclic_exceptions {

/// (g, a) for t = 1.
using Pair = std::pair<std::size_t, std::size_t>;
/// (g, a1, a2) for t = 2.
using Triple = std::array<std::size_t, 3>;

// Parametric sets are materialized for one q (and r where the set depends on
// it). Tuples with a coordinate below 1 are dropped.
std::vector<Pair> set_a(std::size_t q);
std::vector<Triple> set_b(std::size_t q);
std::vector<Triple> set_c1(std::size_t q, std::size_t r);
std::vector<Triple> set_c2(std::size_t q);
/// Parametric part plus the two literal triples.
std::vector<Triple> set_c3(std::size_t q);
std::vector<Triple> family_b1(std::size_t q);
std::vector<Triple> family_b2(std::size_t q);
std::vector<Triple> family_b3(std::size_t q);

inline constexpr std::size_t kB1Size = 15;
inline constexpr std::size_t kB2Size = 15;
inline constexpr std::size_t kB3Size = 9;

extern const std::array<Triple, 23> kB4;
extern const std::array<Triple, 23> kB5;
extern const std::array<Triple, 23> kB6;
extern const std::array<Triple, 2> kC3Literals;

bool in_a(std::size_t q, std::size_t g, std::size_t a);
bool in_b(std::size_t q, const Triple& x);
bool in_c1(std::size_t q, std::size_t r, const Triple& x);
bool in_c2(std::size_t q, const Triple& x);
bool in_c3(std::size_t q, const Triple& x);
/// Chain condition (only when n = q^2 + 2q - 2) or B1 or B4.
bool in_c4(std::size_t q, const Triple& x);
/// Chain condition or B2 or B5.
bool in_c5(std::size_t q, const Triple& x);
/// Chain condition or B3 or B6.
bool in_c6(std::size_t q, const Triple& x);
bool in_any_c(std::size_t q, std::size_t r, const Triple& x);

}  // namespace unicyclic_exceptions

}  // namespace burnkit

#endif  // BURNKIT_UNICYCLIC_TABLES_HPP
