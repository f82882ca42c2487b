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

#ifndef BURNKIT_GRAPH_HPP
#define BURNKIT_GRAPH_HPP

#include <cstddef>
#include <cstdint>
#include <iosfwd>
#include <limits>
#include <span>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "burnkit/vertex_set.hpp"

namespace burnkit {

using VertexId = std::size_t;
using Edge = std::pair<VertexId, VertexId>;

/// Raised for caller mistakes: bad vertex ids, illegal family parameters,
/// duplicate sources. Never used to signal "the answer is no".
class InvalidInput : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

class ParseError : public InvalidInput {
 public:
  using InvalidInput::InvalidInput;
};

/// Undirected simple graph on vertices 0..vertex_count()-1.
///
/// Adjacency lists are sorted and symmetric. Instances are immutable once
/// built; every algorithm in the library takes them by const reference.
class Graph {
 public:
  Graph() = default;
  /// Edgeless graph on `vertex_count` vertices.
  explicit Graph(std::size_t vertex_count) : adjacency_(vertex_count) {}

  /// Throws InvalidInput on out-of-range ids, self-loops or repeated edges.
  static Graph from_edges(std::size_t vertex_count, std::span<const Edge> edges);

  std::size_t vertex_count() const { return adjacency_.size(); }
  std::size_t edge_count() const { return edge_count_; }
  std::span<const VertexId> neighbors(VertexId v) const { return adjacency_.at(v); }
  std::size_t degree(VertexId v) const { return adjacency_.at(v).size(); }
  std::size_t max_degree() const;
  bool has_edge(VertexId u, VertexId v) const;

  /// Edges as (u, v) with u < v, in lexicographic order.
  std::vector<Edge> edges() const;

  /// Copy of this graph with edge {u, v} removed. Throws if absent.
  Graph without_edge(VertexId u, VertexId v) const;

  /// Component label per vertex, labels 0.. in order of smallest member.
  std::vector<std::size_t> component_labels() const;
  std::size_t component_count() const;
  bool is_connected() const;

  friend bool operator==(const Graph&, const Graph&) = default;

 private:
  std::vector<std::vector<VertexId>> adjacency_;
  std::size_t edge_count_ = 0;
};

/// Hop distances from a single source.
struct DistanceTable {
  static constexpr std::size_t kUnreachable = std::numeric_limits<std::size_t>::max();

  VertexId source = 0;
  std::vector<std::size_t> dist;

  bool reachable(VertexId v) const { return dist.at(v) != kUnreachable; }
  /// Largest finite distance.
  std::size_t eccentricity() const;
};

DistanceTable bfs_distances(const Graph& g, VertexId source);

/// N_radius[center]: every vertex within `radius` hops of `center`.
VertexSet closed_ball(const Graph& g, VertexId center, std::size_t radius);

/// Dense all-pairs hop distances, built from one BFS per vertex.
class DistanceMatrix {
 public:
  static constexpr std::size_t kUnreachable = DistanceTable::kUnreachable;

  explicit DistanceMatrix(const Graph& g);

  std::size_t size() const { return n_; }
  std::size_t operator()(VertexId u, VertexId v) const { return d_[u * n_ + v]; }
  /// Eccentricity within the vertex's own component.
  std::size_t eccentricity(VertexId v) const { return ecc_[v]; }

 private:
  std::size_t n_ = 0;
  std::vector<std::size_t> d_;
  std::vector<std::size_t> ecc_;
};

// Text format: first non-comment line "n m", then m lines "u v".
// Blank lines and lines starting with '#' are skipped.
Graph read_graph(std::istream& in);
Graph read_graph_file(const std::string& path);
void write_graph(std::ostream& out, const Graph& g);

}  // namespace burnkit

#endif  // BURNKIT_GRAPH_HPP
