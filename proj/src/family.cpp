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

#include "burnkit/family.hpp"

#include <algorithm>
#include <functional>
#include <numeric>

#include "burnkit/arith.hpp"

namespace burnkit {

namespace {

std::size_t sum(const std::vector<std::size_t>& xs) {
  return std::accumulate(xs.begin(), xs.end(), std::size_t{0});
}

void sort_descending(std::vector<std::size_t>& xs) {
  std::sort(xs.begin(), xs.end(), std::greater<>());
}

// Walks a pendant path starting at `hub` through `first`, counting vertices
// until a leaf. Every vertex after the hub must have degree <= 2.
std::size_t arm_length(const Graph& g, VertexId hub, VertexId first) {
  std::size_t len = 1;
  VertexId prev = hub;
  VertexId cur = first;
  while (g.degree(cur) == 2) {
    auto nb = g.neighbors(cur);
    VertexId next = nb[0] == prev ? nb[1] : nb[0];
    prev = cur;
    cur = next;
    ++len;
  }
  return len;
}

}  // namespace

std::size_t family_order(const FamilyDescriptor& desc) {
  return std::visit(
      [](const auto& f) -> std::size_t {
        using T = std::decay_t<decltype(f)>;
        if constexpr (std::is_same_v<T, PathFamily>) return f.order;
        else if constexpr (std::is_same_v<T, CycleFamily>) return f.girth;
        else if constexpr (std::is_same_v<T, LinearForestFamily>) return sum(f.parts);
        else if constexpr (std::is_same_v<T, StarFamily>) return 1 + sum(f.arms);
        else if constexpr (std::is_same_v<T, UnicyclicFamily>) return f.girth + sum(f.arms);
        else return 0;
      },
      desc);
}

FamilyDescriptor recognize_family(const Graph& g) {
  const std::size_t n = g.vertex_count();
  if (n == 0) return OtherFamily{};

  // Degree census.
  std::size_t high = 0;  // vertices of degree >= 3
  VertexId hub = 0;
  for (VertexId v = 0; v < n; ++v) {
    if (g.degree(v) >= 3) {
      ++high;
      hub = v;
    }
  }
  const std::size_t m = g.edge_count();
  const auto labels = g.component_labels();
  const std::size_t components = *std::max_element(labels.begin(), labels.end()) + 1;

  if (components > 1) {
    // A component is a path iff it is a tree with max degree <= 2.
    if (high > 0 || m + components != n) return OtherFamily{};
    std::vector<std::size_t> parts(components, 0);
    for (std::size_t label : labels) ++parts[label];
    sort_descending(parts);
    return LinearForestFamily{std::move(parts)};
  }

  if (m + 1 == n) {
    if (high == 0) return PathFamily{n};
    if (high > 1) return OtherFamily{};
    std::vector<std::size_t> arms;
    for (VertexId w : g.neighbors(hub)) arms.push_back(arm_length(g, hub, w));
    sort_descending(arms);
    return StarFamily{std::move(arms)};
  }

  if (m == n) {
    if (high == 0) return CycleFamily{n};
    if (high > 1) return OtherFamily{};
    // Peel the pendant paths; what remains is the cycle through the hub.
    std::vector<std::size_t> arms;
    for (VertexId w : g.neighbors(hub)) {
      // A neighbour leads to a leaf iff following degree-2 vertices away from
      // the hub ends at a degree-1 vertex instead of returning to the hub.
      VertexId prev = hub;
      VertexId cur = w;
      std::size_t len = 1;
      bool back_to_hub = false;
      while (g.degree(cur) == 2) {
        auto nb = g.neighbors(cur);
        VertexId next = nb[0] == prev ? nb[1] : nb[0];
        if (next == hub) {
          back_to_hub = true;
          break;
        }
        prev = cur;
        cur = next;
        ++len;
      }
      if (!back_to_hub) arms.push_back(len);
    }
    sort_descending(arms);
    const std::size_t t = arms.size();
    if (t + 2 != g.degree(hub)) return OtherFamily{};
    const std::size_t girth = n - sum(arms);
    return UnicyclicFamily{girth, std::move(arms)};
  }

  return OtherFamily{};
}

QRDecomposition qr_decompose(std::size_t n) {
  if (n < 2) throw InvalidInput("q,r decomposition needs n >= 2, got " + std::to_string(n));
  const std::size_t q = isqrt_ceil(n) - 1;
  return {n, q, n - q * q};
}

}  // namespace burnkit
