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

// Reference implementations used only by tests. They are deliberately naive
// and share no code with the library beyond the Graph type.

#ifndef BURNKIT_TESTS_TEST_SUPPORT_HPP
#define BURNKIT_TESTS_TEST_SUPPORT_HPP

#include <algorithm>
#include <cstdint>
#include <deque>
#include <random>
#include <string>
#include <vector>

#include "burnkit/exact_solver.hpp"
#include "burnkit/graph.hpp"

namespace burnkit::testing {

inline std::vector<std::vector<std::size_t>> naive_distances(const Graph& g) {
  const std::size_t n = g.vertex_count();
  constexpr std::size_t kInf = DistanceTable::kUnreachable;
  std::vector<std::vector<std::size_t>> d(n, std::vector<std::size_t>(n, kInf));
  for (std::size_t s = 0; s < n; ++s) {
    d[s][s] = 0;
    std::deque<std::size_t> queue{s};
    while (!queue.empty()) {
      const auto u = queue.front();
      queue.pop_front();
      for (std::size_t v = 0; v < n; ++v) {
        if (g.has_edge(u, v) && d[s][v] == kInf) {
          d[s][v] = d[s][u] + 1;
          queue.push_back(v);
        }
      }
    }
  }
  return d;
}

// Plays the burning process round by round. In round t a vertex that was
// still unburned at the end of round t - 1 is lit, and fire spreads from every
// vertex burned before round t. Returns whether every vertex can be burned by
// the end of round `k`.
class BurningSimulator {
 public:
  explicit BurningSimulator(const Graph& g) : g_(g) {
    for (std::size_t v = 0; v < g.vertex_count(); ++v) {
      std::uint64_t m = std::uint64_t{1} << v;
      for (auto w : g.neighbors(v)) m |= std::uint64_t{1} << w;
      closed_nbhd_.push_back(m);
    }
    all_ = g.vertex_count() == 64 ? ~std::uint64_t{0} : (std::uint64_t{1} << g.vertex_count()) - 1;
  }

  bool burns_within(std::size_t k) const { return search(0, 0, k); }

  std::size_t burning_number() const {
    for (std::size_t k = 1;; ++k)
      if (burns_within(k)) return k;
  }

 private:
  std::uint64_t spread(std::uint64_t burned) const {
    std::uint64_t out = burned;
    for (std::size_t v = 0; v < g_.vertex_count(); ++v)
      if ((burned >> v) & 1U) out |= closed_nbhd_[v];
    return out;
  }

  bool search(std::uint64_t burned, std::size_t round, std::size_t k) const {
    if (burned == all_) return true;
    if (round == k) return false;
    const std::uint64_t next = spread(burned);
    for (std::size_t v = 0; v < g_.vertex_count(); ++v) {
      if ((burned >> v) & 1U) continue;
      if (search(next | (std::uint64_t{1} << v), round + 1, k)) return true;
    }
    return false;
  }

  const Graph& g_;
  std::vector<std::uint64_t> closed_nbhd_;
  std::uint64_t all_ = 0;
};

inline std::size_t simulated_burning_number(const Graph& g) { return BurningSimulator(g).burning_number(); }

// Sequence validity straight from the process above: each source must be
// unburned at the end of the previous round, and everything must be burned
// after the last round.
inline bool simulate_sequence(const Graph& g, const std::vector<VertexId>& seq) {
  const std::size_t n = g.vertex_count();
  std::vector<bool> burned(n, false);
  for (std::size_t round = 0; round < seq.size(); ++round) {
    if (burned[seq[round]]) return false;
    auto next = burned;
    for (std::size_t v = 0; v < n; ++v)
      if (burned[v])
        for (auto w : g.neighbors(v)) next[w] = true;
    burned = next;
    burned[seq[round]] = true;
  }
  for (bool b : burned)
    if (!b) return false;
  return true;
}

// Checks the rooted tree partition conditions for sequence `seq`: parts cover
// V disjointly, part i is a tree of g rooted at x_i with height at most
// k - 1 - i, and d(x_i, x_j) >= j - i. Returns an empty string on success.
inline std::string partition_problem(const Graph& g, const BurningSequence& seq,
                                     const RootedTreePartition& partition) {
  const std::size_t n = g.vertex_count();
  const std::size_t k = seq.length();
  if (partition.parts.size() != k) return "wrong number of parts";
  const auto d = naive_distances(g);
  std::vector<int> owner(n, -1);
  for (std::size_t i = 0; i < k; ++i) {
    const auto& p = partition.parts[i];
    if (p.root != seq.sources[i]) return "part " + std::to_string(i) + " has the wrong root";
    if (p.vertices.size() != p.parent.size()) return "parent list size mismatch";
    for (auto v : p.vertices) {
      if (v >= n || owner[v] != -1) return "vertex " + std::to_string(v) + " assigned twice";
      owner[v] = static_cast<int>(i);
    }
  }
  for (auto o : owner)
    if (o == -1) return "partition misses a vertex";

  for (std::size_t i = 0; i < k; ++i) {
    const auto& p = partition.parts[i];
    std::vector<VertexId> parent_of(n, n);
    for (std::size_t j = 0; j < p.vertices.size(); ++j) {
      const auto v = p.vertices[j];
      const auto par = p.parent[j];
      if (v == p.root) {
        if (par != v) return "root is not its own parent";
        continue;
      }
      if (owner[par] != static_cast<int>(i) || !g.has_edge(v, par)) return "tree edge missing in part";
      parent_of[v] = par;
    }
    // Walk every vertex to the root; the walk length is its depth.
    std::size_t height = 0;
    for (auto v : p.vertices) {
      std::size_t depth = 0;
      for (auto u = v; u != p.root; u = parent_of[u]) {
        if (++depth > p.vertices.size()) return "cycle in parent pointers";
      }
      height = std::max(height, depth);
    }
    if (height != p.height) return "reported height is wrong";
    if (height > k - 1 - i) return "part " + std::to_string(i) + " is too tall";
  }
  for (std::size_t i = 0; i < k; ++i)
    for (std::size_t j = i + 1; j < k; ++j)
      if (d[seq.sources[i]][seq.sources[j]] < j - i) return "sources too close";
  return {};
}

inline Graph random_graph(std::size_t n, double p, std::mt19937& rng) {
  std::bernoulli_distribution coin(p);
  std::vector<Edge> edges;
  for (std::size_t u = 0; u < n; ++u)
    for (std::size_t v = u + 1; v < n; ++v)
      if (coin(rng)) edges.emplace_back(u, v);
  return Graph::from_edges(n, edges);
}

// Every labelled graph on n vertices, n <= 6.
inline std::vector<Graph> all_graphs(std::size_t n) {
  std::vector<Edge> slots;
  for (std::size_t u = 0; u < n; ++u)
    for (std::size_t v = u + 1; v < n; ++v) slots.emplace_back(u, v);
  std::vector<Graph> out;
  for (std::uint64_t mask = 0; mask < (std::uint64_t{1} << slots.size()); ++mask) {
    std::vector<Edge> edges;
    for (std::size_t i = 0; i < slots.size(); ++i)
      if ((mask >> i) & 1U) edges.push_back(slots[i]);
    out.push_back(Graph::from_edges(n, edges));
  }
  return out;
}

}  // namespace burnkit::testing

#endif  // BURNKIT_TESTS_TEST_SUPPORT_HPP
