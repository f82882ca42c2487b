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

#include "burnkit/unicyclic_tables.hpp"

#include <algorithm>
#include <initializer_list>

#include "burnkit/closed_forms.hpp"
#include "burnkit/families.hpp"
#include "burnkit/family.hpp"

namespace burnkit {

namespace unicyclic_exceptions {

const std::array<Triple, 23> kB4 = {{
    {24, 16, 6}, {22, 16, 8}, {35, 19, 7}, {32, 19, 10}, {30, 19, 12}, {28, 19, 14},
    {26, 19, 16}, {30, 21, 10}, {28, 21, 12}, {45, 22, 11}, {43, 22, 13}, {41, 22, 15},
    {34, 22, 22}, {43, 24, 11}, {41, 24, 13}, {32, 24, 22}, {41, 26, 11}, {60, 25, 12},
    {58, 25, 14}, {47, 25, 25}, {58, 27, 12}, {47, 38, 12}, {77, 28, 13},
}};

const std::array<Triple, 23> kB5 = {{
    {22, 18, 6}, {22, 16, 8}, {26, 28, 7}, {26, 25, 10}, {26, 23, 12}, {26, 21, 14},
    {26, 19, 16}, {28, 23, 10}, {28, 21, 12}, {30, 37, 11}, {30, 35, 13}, {30, 33, 15},
    {30, 26, 22}, {32, 35, 11}, {32, 33, 13}, {32, 24, 22}, {34, 33, 11}, {34, 51, 12},
    {34, 49, 14}, {34, 38, 25}, {36, 49, 12}, {47, 38, 12}, {38, 67, 13},
}};

const std::array<Triple, 23> kB6 = {{
    {12, 18, 16}, {14, 16, 16}, {14, 28, 19}, {17, 25, 19}, {19, 23, 19}, {21, 21, 19},
    {23, 19, 19}, {17, 23, 21}, {19, 21, 21}, {19, 37, 22}, {21, 35, 22}, {23, 33, 22},
    {30, 26, 22}, {19, 35, 24}, {21, 33, 24}, {30, 24, 24}, {19, 33, 26}, {21, 51, 25},
    {23, 49, 25}, {34, 38, 25}, {21, 49, 27}, {21, 38, 38}, {23, 67, 28},
}};

const std::array<Triple, 2> kC3Literals = {{{22, 16, 7}, {13, 16, 16}}};

namespace {

using Signed = long long;
using SignedTriple = std::array<Signed, 3>;

std::vector<Triple> keep_positive(std::initializer_list<SignedTriple> raw) {
  std::vector<Triple> out;
  for (const auto& t : raw) {
    if (t[0] >= 1 && t[1] >= 1 && t[2] >= 1)
      out.push_back({static_cast<std::size_t>(t[0]), static_cast<std::size_t>(t[1]),
                     static_cast<std::size_t>(t[2])});
  }
  return out;
}

template <typename Range>
bool contains(const Range& set, const Triple& x) {
  return std::find(std::begin(set), std::end(set), x) != std::end(set);
}

std::size_t order(const Triple& x) { return x[0] + x[1] + x[2]; }

Signed sq(Signed q) { return q * q; }

}  // namespace

std::vector<Pair> set_a(std::size_t q_) {
  const Signed q = static_cast<Signed>(q_);
  std::vector<Pair> out;
  for (auto [g, a] : {std::pair<Signed, Signed>{2 * q + 1, sq(q) - q - 2},
                      std::pair<Signed, Signed>{sq(q) - 2, q + 1}}) {
    if (g >= 1 && a >= 1) out.emplace_back(static_cast<std::size_t>(g), static_cast<std::size_t>(a));
  }
  return out;
}

std::vector<Triple> set_b(std::size_t q_) {
  const Signed q = static_cast<Signed>(q_);
  return keep_positive({{2 * q - 2, sq(q) - q - 2, q + 1}, {2 * q - 1, sq(q) - q - 2, q + 1}});
}

std::vector<Triple> set_c1(std::size_t q_, std::size_t r_) {
  const Signed q = static_cast<Signed>(q_);
  const Signed r = static_cast<Signed>(r_);
  return keep_positive({{2 * q + 1, sq(q) - q - 2, r - q + 1}, {sq(q) - 2, q + 1, r - q + 1}});
}

std::vector<Triple> set_c2(std::size_t q_) {
  const Signed q = static_cast<Signed>(q_);
  const Signed s = sq(q);
  return keep_positive({{s - 7, q + 2, q + 1}, {2 * q + 1, s - q - 6, q + 1}, {2 * q + 1, s - q - 7, q + 2}});
}

std::vector<Triple> set_c3(std::size_t q_) {
  const Signed q = static_cast<Signed>(q_);
  const Signed s = sq(q);
  auto out = keep_positive({
      {s - 3, q, q},
      {s - 5, q + 1, q + 1},
      {s - 6, q + 2, q + 1},
      {s - 7, q + 2, q + 2},
      {s - 7, q + 3, q + 1},
      {s - 11, q + 4, q + 4},
      {2 * q + 4, s - q - 11, q + 4},
      {2 * q + 1, s - q - 5, q + 1},
      {2 * q + 1, s - q - 6, q + 2},
      {2 * q + 1, s - q - 7, q + 3},
      {2 * q + 2, s - q - 6, q + 1},
      {2 * q + 2, s - q - 7, q + 2},
      {2 * q + 3, s - q - 7, q + 1},
      {2 * q, s - q - 3, q},
  });
  out.insert(out.end(), kC3Literals.begin(), kC3Literals.end());
  return out;
}

std::vector<Triple> family_b1(std::size_t q_) {
  const Signed q = static_cast<Signed>(q_);
  const Signed s = sq(q);
  return keep_positive({
      {s - 2, q, q},
      {s - 6, q + 2, q + 2},
      {s - 10, q + 4, q + 4},
      {s - 3, q + 1, q},
      {s - 5, q + 3, q},
      {s - 7, q + 3, q + 2},
      {s - 8, q + 3, q + 3},
      {s - 7, q + 5, q},
      {s - 10, q + 5, q + 3},
      {s - 11, q + 5, q + 4},
      {s - 12, q + 5, q + 5},
      {s - 14, q + 6, q + 6},
      {s - 12, q + 7, q + 3},
      {s - 14, q + 7, q + 5},
      {s - 14, q + 9, q + 3},
  });
}

std::vector<Triple> family_b2(std::size_t q_) {
  const Signed q = static_cast<Signed>(q_);
  const Signed s = sq(q);
  return keep_positive({
      {2 * q, s - q - 2, q},
      {2 * q + 2, s - q - 6, q + 2},
      {2 * q + 4, s - q - 10, q + 4},
      {2 * q + 1, s - q - 3, q},
      {2 * q + 3, s - q - 5, q},
      {2 * q + 3, s - q - 7, q + 2},
      {2 * q + 3, s - q - 8, q + 3},
      {2 * q + 5, s - q - 7, q},
      {2 * q + 5, s - q - 10, q + 3},
      {2 * q + 5, s - q - 11, q + 4},
      {2 * q + 5, s - q - 12, q + 5},
      {2 * q + 6, s - q - 14, q + 6},
      {2 * q + 7, s - q - 12, q + 3},
      {2 * q + 7, s - q - 14, q + 5},
      {2 * q + 9, s - q - 14, q + 3},
  });
}

std::vector<Triple> family_b3(std::size_t q_) {
  const Signed q = static_cast<Signed>(q_);
  const Signed s = sq(q);
  return keep_positive({
      {2 * q, s - q - 3, q + 1},
      {2 * q, s - q - 5, q + 3},
      {2 * q + 2, s - q - 7, q + 3},
      {2 * q, s - q - 7, q + 5},
      {2 * q + 3, s - q - 10, q + 5},
      {2 * q + 4, s - q - 11, q + 5},
      {2 * q + 3, s - q - 12, q + 7},
      {2 * q + 5, s - q - 14, q + 7},
      {2 * q + 3, s - q - 14, q + 9},
  });
}

bool in_a(std::size_t q, std::size_t g, std::size_t a) {
  const auto set = set_a(q);
  return std::find(set.begin(), set.end(), Pair{g, a}) != set.end();
}

bool in_b(std::size_t q, const Triple& x) { return contains(set_b(q), x); }
bool in_c1(std::size_t q, std::size_t r, const Triple& x) { return contains(set_c1(q, r), x); }
bool in_c2(std::size_t q, const Triple& x) { return contains(set_c2(q), x); }
bool in_c3(std::size_t q, const Triple& x) { return contains(set_c3(q), x); }

namespace {

// n = q^2 + 2q - 2 and a2 = q + 1; returns g - q (signed) through `gq`.
bool chain_prefix(std::size_t q, const Triple& x, Signed& gq) {
  const Signed sq_ = static_cast<Signed>(q);
  if (static_cast<Signed>(order(x)) != sq_ * sq_ + 2 * sq_ - 2) return false;
  if (x[2] != q + 1) return false;
  gq = static_cast<Signed>(x[0]) - sq_;
  return true;
}

}  // namespace

bool in_c4(std::size_t q, const Triple& x) {
  Signed gq = 0;
  const Signed a1 = static_cast<Signed>(x[1]);
  const Signed a2 = static_cast<Signed>(x[2]);
  if (chain_prefix(q, x, gq) && gq >= a1 && a1 >= a2) return true;
  return contains(family_b1(q), x) || contains(kB4, x);
}

bool in_c5(std::size_t q, const Triple& x) {
  Signed gq = 0;
  const Signed a1 = static_cast<Signed>(x[1]);
  const Signed a2 = static_cast<Signed>(x[2]);
  if (chain_prefix(q, x, gq) && a1 >= gq && gq >= a2) return true;
  return contains(family_b2(q), x) || contains(kB5, x);
}

bool in_c6(std::size_t q, const Triple& x) {
  const Signed sq_ = static_cast<Signed>(q);
  const Signed a1 = static_cast<Signed>(x[1]);
  const Signed a2 = static_cast<Signed>(x[2]);
  const Signed gq = static_cast<Signed>(x[0]) - sq_;
  if (static_cast<Signed>(order(x)) == sq_ * sq_ + 2 * sq_ - 2 && a1 >= a2 && a2 >= gq &&
      gq == sq_ + 1)
    return true;
  return contains(family_b3(q), x) || contains(kB6, x);
}

bool in_any_c(std::size_t q, std::size_t r, const Triple& x) {
  return in_c1(q, r, x) || in_c2(q, x) || in_c3(q, x) || in_c4(q, x) || in_c5(q, x) || in_c6(q, x);
}

}  // namespace unicyclic_exceptions

namespace {

namespace ue = unicyclic_exceptions;
using Signed = long long;

BurnResult fallback(const UnicyclicFamily& desc) {
  BurnResult r;
  const Graph g = build_family(desc);
  r.value = burning_number(g);
  r.method = Method::kFallbackExact;
  r.table_warning = true;
  const auto bounds = t_unicyclic_bounds(g.vertex_count(), desc.t());
  r.lower_bound = bounds.lower;
  r.upper_bound = bounds.upper;
  return r;
}

BurnResult from_rows(const RowMatch& rows, std::size_t q, const UnicyclicFamily& desc, Method table) {
  if (rows.q_row == rows.q_plus_one_row) return fallback(desc);
  BurnResult r;
  r.value = rows.q_row ? q : q + 1;
  r.method = table;
  const auto bounds = t_unicyclic_bounds(family_order(desc), desc.t());
  r.lower_bound = bounds.lower;
  r.upper_bound = bounds.upper;
  return r;
}

BurnResult small_order(const UnicyclicFamily& desc) {
  const Graph g = build_family(desc);
  const auto b = b2_by_degree(g);
  if (!b) return fallback(desc);
  BurnResult r;
  r.value = *b;
  r.method = Method::kDegreeB2;
  const auto bounds = t_unicyclic_bounds(g.vertex_count(), desc.t());
  r.lower_bound = bounds.lower;
  r.upper_bound = bounds.upper;
  return r;
}

}  // namespace

RowMatch t1_rows(std::size_t g, std::size_t a) {
  const auto [n, q, r] = qr_decompose(g + a);
  const bool in_a = ue::in_a(q, g, a);
  RowMatch m;
  m.q_plus_one_row = (q <= r) || g >= q * q + 1 || g <= 2 * r || in_a;
  m.q_row = r >= 1 && r + 1 <= q && 2 * r + 1 <= g && g <= q * q && !in_a;
  return m;
}

RowMatch t2_rows(std::size_t g, std::size_t a1, std::size_t a2) {
  if (a1 < a2) std::swap(a1, a2);
  const auto [n, q, r] = qr_decompose(g + a1 + a2);
  const ue::Triple x{g, a1, a2};
  const bool in_b = ue::in_b(q, x);
  const bool in_c = ue::in_any_c(q, r, x);
  const Signed sg = static_cast<Signed>(g);
  const Signed sa1 = static_cast<Signed>(a1);
  const Signed sa2 = static_cast<Signed>(a2);
  const Signed sq = static_cast<Signed>(q);
  const Signed sr = static_cast<Signed>(r);
  const Signed half = sg / 2;
  const bool wide_g = 2 * sq <= sg && sg <= sq * sq;

  RowMatch m;
  m.q_plus_one_row = sr >= 2 * sq - 1 || (3 <= sg && sg <= sr) || sg >= sq * sq + 1 ||
                     sa1 >= sq * sq - half || (wide_g && sa2 <= sr - sq) || in_b || in_c;
  const bool narrow_q = sr + 1 <= sg && sg <= 2 * sq - 1 && sa1 <= sq * sq - half - 1 && !in_b;
  const bool wide_q = wide_g && sa2 >= sr - sq + 1 && !in_c;
  m.q_row = sr >= 1 && sr <= 2 * sq - 2 && (narrow_q || wide_q);
  return m;
}

BurnResult b_unicyclic_t1(std::size_t g, std::size_t a) {
  if (g < 3) throw InvalidInput("girth must be >= 3");
  if (a < 1) throw InvalidInput("arm length must be >= 1");
  const UnicyclicFamily desc{g, {a}};
  if (g + a <= 5) return small_order(desc);
  return from_rows(t1_rows(g, a), qr_decompose(g + a).q, desc, Method::kTableT1);
}

BurnResult b_unicyclic_t2(std::size_t g, std::size_t a1, std::size_t a2) {
  if (g < 3) throw InvalidInput("girth must be >= 3");
  if (a1 < 1 || a2 < 1) throw InvalidInput("arm lengths must be >= 1");
  if (a1 < a2) std::swap(a1, a2);
  const UnicyclicFamily desc{g, {a1, a2}};
  if (g + a1 + a2 <= 6) return small_order(desc);
  return from_rows(t2_rows(g, a1, a2), qr_decompose(g + a1 + a2).q, desc, Method::kTableT2);
}

}  // namespace burnkit
