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

#include "burnkit/graph.hpp"

#include <algorithm>
#include <deque>
#include <fstream>
#include <istream>
#include <ostream>
#include <sstream>

namespace burnkit {

Graph Graph::from_edges(std::size_t vertex_count, std::span<const Edge> edges) {
  Graph g(vertex_count);
  for (const auto& [u, v] : edges) {
    if (u >= vertex_count || v >= vertex_count) {
      throw InvalidInput("edge (" + std::to_string(u) + "," + std::to_string(v) +
                         ") references a vertex outside 0.." +
                         std::to_string(vertex_count == 0 ? 0 : vertex_count - 1));
    }
    if (u == v) throw InvalidInput("self-loop at vertex " + std::to_string(u));
    g.adjacency_[u].push_back(v);
    g.adjacency_[v].push_back(u);
  }
  for (std::size_t v = 0; v < vertex_count; ++v) {
    auto& nb = g.adjacency_[v];
    std::sort(nb.begin(), nb.end());
    if (std::adjacent_find(nb.begin(), nb.end()) != nb.end())
      throw InvalidInput("duplicate edge at vertex " + std::to_string(v));
  }
  g.edge_count_ = edges.size();
  return g;
}

std::size_t Graph::max_degree() const {
  std::size_t best = 0;
  for (const auto& nb : adjacency_) best = std::max(best, nb.size());
  return best;
}

bool Graph::has_edge(VertexId u, VertexId v) const {
  const auto& nb = adjacency_.at(u);
  return std::binary_search(nb.begin(), nb.end(), v);
}

std::vector<Edge> Graph::edges() const {
  std::vector<Edge> out;
  out.reserve(edge_count_);
  for (VertexId u = 0; u < adjacency_.size(); ++u)
    for (VertexId v : adjacency_[u])
      if (u < v) out.emplace_back(u, v);
  return out;
}

Graph Graph::without_edge(VertexId u, VertexId v) const {
  if (u >= vertex_count() || v >= vertex_count() || !has_edge(u, v))
    throw InvalidInput("edge (" + std::to_string(u) + "," + std::to_string(v) + ") not present");
  Graph h = *this;
  auto drop = [](std::vector<VertexId>& nb, VertexId x) {
    nb.erase(std::lower_bound(nb.begin(), nb.end(), x));
  };
  drop(h.adjacency_[u], v);
  drop(h.adjacency_[v], u);
  --h.edge_count_;
  return h;
}

std::vector<std::size_t> Graph::component_labels() const {
  constexpr std::size_t kUnset = DistanceTable::kUnreachable;
  std::vector<std::size_t> label(vertex_count(), kUnset);
  std::size_t next = 0;
  std::vector<VertexId> stack;
  for (VertexId s = 0; s < vertex_count(); ++s) {
    if (label[s] != kUnset) continue;
    label[s] = next;
    stack.push_back(s);
    while (!stack.empty()) {
      VertexId u = stack.back();
      stack.pop_back();
      for (VertexId w : adjacency_[u]) {
        if (label[w] == kUnset) {
          label[w] = next;
          stack.push_back(w);
        }
      }
    }
    ++next;
  }
  return label;
}

std::size_t Graph::component_count() const {
  auto labels = component_labels();
  return labels.empty() ? 0 : *std::max_element(labels.begin(), labels.end()) + 1;
}

bool Graph::is_connected() const { return component_count() <= 1; }

std::size_t DistanceTable::eccentricity() const {
  std::size_t best = 0;
  for (std::size_t d : dist)
    if (d != kUnreachable) best = std::max(best, d);
  return best;
}

DistanceTable bfs_distances(const Graph& g, VertexId source) {
  if (source >= g.vertex_count())
    throw InvalidInput("source " + std::to_string(source) + " is not a vertex");
  DistanceTable t;
  t.source = source;
  t.dist.assign(g.vertex_count(), DistanceTable::kUnreachable);
  t.dist[source] = 0;
  std::deque<VertexId> queue{source};
  while (!queue.empty()) {
    VertexId u = queue.front();
    queue.pop_front();
    for (VertexId w : g.neighbors(u)) {
      if (t.dist[w] == DistanceTable::kUnreachable) {
        t.dist[w] = t.dist[u] + 1;
        queue.push_back(w);
      }
    }
  }
  return t;
}

VertexSet closed_ball(const Graph& g, VertexId center, std::size_t radius) {
  if (center >= g.vertex_count())
    throw InvalidInput("center " + std::to_string(center) + " is not a vertex");
  VertexSet ball(g.vertex_count());
  const auto t = bfs_distances(g, center);
  for (VertexId v = 0; v < g.vertex_count(); ++v)
    if (t.dist[v] <= radius) ball.insert(v);
  return ball;
}

DistanceMatrix::DistanceMatrix(const Graph& g)
    : n_(g.vertex_count()), d_(n_ * n_, kUnreachable), ecc_(n_, 0) {
  std::vector<VertexId> queue(n_);
  for (VertexId s = 0; s < n_; ++s) {
    std::size_t* row = d_.data() + s * n_;
    row[s] = 0;
    std::size_t head = 0;
    std::size_t tail = 0;
    queue[tail++] = s;
    while (head < tail) {
      VertexId u = queue[head++];
      for (VertexId w : g.neighbors(u)) {
        if (row[w] == kUnreachable) {
          row[w] = row[u] + 1;
          queue[tail++] = w;
        }
      }
    }
    ecc_[s] = row[queue[tail - 1]];
  }
}

namespace {

// Next line that is neither blank nor a comment; false at EOF.
bool next_content_line(std::istream& in, std::string& line, std::size_t& line_no) {
  while (std::getline(in, line)) {
    ++line_no;
    auto first = line.find_first_not_of(" \t\r");
    if (first == std::string::npos || line[first] == '#') continue;
    return true;
  }
  return false;
}

}  // namespace

Graph read_graph(std::istream& in) {
  std::string line;
  std::size_t line_no = 0;
  if (!next_content_line(in, line, line_no)) throw ParseError("graph input is empty");

  long long n = -1;
  long long m = -1;
  {
    std::istringstream header(line);
    std::string extra;
    if (!(header >> n >> m) || (header >> extra) || n < 0 || m < 0)
      throw ParseError("line " + std::to_string(line_no) + ": expected header \"n m\"");
  }

  std::vector<Edge> edges;
  edges.reserve(static_cast<std::size_t>(m));
  for (long long i = 0; i < m; ++i) {
    if (!next_content_line(in, line, line_no))
      throw ParseError("expected " + std::to_string(m) + " edges, found " + std::to_string(i));
    std::istringstream row(line);
    long long u = -1;
    long long v = -1;
    std::string extra;
    if (!(row >> u >> v) || (row >> extra) || u < 0 || v < 0)
      throw ParseError("line " + std::to_string(line_no) + ": expected edge \"u v\"");
    edges.emplace_back(static_cast<VertexId>(u), static_cast<VertexId>(v));
  }
  if (next_content_line(in, line, line_no))
    throw ParseError("line " + std::to_string(line_no) + ": unexpected content after edge list");

  try {
    return Graph::from_edges(static_cast<std::size_t>(n), edges);
  } catch (const InvalidInput& e) {
    throw ParseError(e.what());
  }
}

Graph read_graph_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw ParseError("cannot open graph file '" + path + "'");
  return read_graph(in);
}

void write_graph(std::ostream& out, const Graph& g) {
  out << g.vertex_count() << ' ' << g.edge_count() << '\n';
  for (const auto& [u, v] : g.edges()) out << u << ' ' << v << '\n';
}

}  // namespace burnkit
