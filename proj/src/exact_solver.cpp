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

#include "burnkit/exact_solver.hpp"

#include <algorithm>
#include <array>
#include <bit>
#include <functional>
#include <limits>
#include <unordered_set>

#include "burnkit/arith.hpp"

namespace burnkit {

std::string_view method_name(Method m) {
  switch (m) {
    case Method::kExact: return "exact";
    case Method::kFormulaPath: return "formula-path";
    case Method::kFormulaCycle: return "formula-cycle";
    case Method::kFormulaForest2: return "formula-forest2";
    case Method::kFormulaForest3: return "formula-forest3";
    case Method::kTableT1: return "table-t1";
    case Method::kTableT2: return "table-t2";
    case Method::kDegreeB2: return "degree-b2";
    case Method::kFallbackExact: return "fallback-exact";
  }
  return "?";
}

// ---------------------------------------------------------------------------
// Sequence checking
// ---------------------------------------------------------------------------

SequenceCheck check_sequence(const Graph& g, const BurningSequence& seq) {
  const std::size_t n = g.vertex_count();
  const std::size_t k = seq.length();
  if (k == 0) throw InvalidInput("burning sequence is empty");
  std::vector<bool> seen(n, false);
  for (VertexId x : seq.sources) {
    if (x >= n) throw InvalidInput("source " + std::to_string(x) + " is not a vertex");
    if (seen[x]) throw InvalidInput("source " + std::to_string(x) + " repeated");
    seen[x] = true;
  }

  SequenceCheck check;
  std::vector<DistanceTable> tables;
  tables.reserve(k);
  for (VertexId x : seq.sources) tables.push_back(bfs_distances(g, x));

  for (std::size_t i = 0; i < k && !check.distance_violation; ++i) {
    for (std::size_t j = i + 1; j < k; ++j) {
      // Unreachable pairs satisfy the constraint vacuously.
      if (tables[i].dist[seq.sources[j]] < j - i) {
        check.distance_violation = std::make_pair(i, j);
        break;
      }
    }
  }
  for (VertexId v = 0; v < n; ++v) {
    bool covered = false;
    for (std::size_t i = 0; i < k && !covered; ++i) covered = tables[i].dist[v] <= k - 1 - i;
    if (!covered) check.uncovered.push_back(v);
  }
  check.valid = !check.distance_violation && check.uncovered.empty();
  return check;
}

bool verify_sequence(const Graph& g, const BurningSequence& seq) {
  return check_sequence(g, seq).valid;
}

// ---------------------------------------------------------------------------
// Covering search
//
// b(G) <= k iff V(G) is covered by balls of radii k-1, k-2, ..., 0 around
// arbitrary (not necessarily distinct or spread-out) centres: igniting the
// centres in radius order, and substituting any still-unburned vertex for a
// centre that is already on fire, yields a valid sequence whose fire covers
// the same balls. The search therefore works on the relaxed covering problem,
// where dominance between candidate balls is sound, and converts the cover
// into a burning sequence afterwards.
// ---------------------------------------------------------------------------

namespace {

constexpr std::size_t kMaxRounds = 64;
constexpr std::size_t kMaxExactVertices = 2048;
constexpr VertexId kNoCenter = std::numeric_limits<VertexId>::max();
constexpr std::size_t kMemoLimit = 1U << 22;

template <std::size_t W>
struct Bits {
  std::array<std::uint64_t, W> w{};

  bool test(std::size_t v) const { return (w[v / 64] >> (v % 64)) & 1U; }
  void set(std::size_t v) { w[v / 64] |= std::uint64_t{1} << (v % 64); }
  bool none() const {
    for (auto x : w)
      if (x) return false;
    return true;
  }
  std::size_t count() const {
    std::size_t c = 0;
    for (auto x : w) c += static_cast<std::size_t>(std::popcount(x));
    return c;
  }
  std::size_t and_count(const Bits& o) const {
    std::size_t c = 0;
    for (std::size_t i = 0; i < W; ++i) c += static_cast<std::size_t>(std::popcount(w[i] & o.w[i]));
    return c;
  }
  Bits operator&(const Bits& o) const {
    Bits r;
    for (std::size_t i = 0; i < W; ++i) r.w[i] = w[i] & o.w[i];
    return r;
  }
  Bits minus(const Bits& o) const {
    Bits r;
    for (std::size_t i = 0; i < W; ++i) r.w[i] = w[i] & ~o.w[i];
    return r;
  }
  bool subset_of(const Bits& o) const {
    for (std::size_t i = 0; i < W; ++i)
      if (w[i] & ~o.w[i]) return false;
    return true;
  }
  bool operator==(const Bits&) const = default;

  template <typename F>
  void for_each(F&& f) const {
    for (std::size_t i = 0; i < W; ++i) {
      auto x = w[i];
      while (x) {
        f(i * 64 + static_cast<std::size_t>(std::countr_zero(x)));
        x &= x - 1;
      }
    }
  }
};

template <std::size_t W>
struct MemoKey {
  Bits<W> uncovered;
  std::uint64_t free_radii = 0;
  bool operator==(const MemoKey&) const = default;
};

template <std::size_t W>
struct MemoHash {
  std::size_t operator()(const MemoKey<W>& k) const {
    std::uint64_t h = k.free_radii * 0x9e3779b97f4a7c15ULL;
    for (auto x : k.uncovered.w) {
      h ^= x + 0x9e3779b97f4a7c15ULL + (h << 6) + (h >> 2);
      h *= 0xff51afd7ed558ccdULL;
    }
    return static_cast<std::size_t>(h ^ (h >> 33));
  }
};

struct BudgetHit {};

/// Shared state for all passes of one solve: balls by radius, node counter.
template <std::size_t W>
class CoverSearch {
 public:
  CoverSearch(const Graph& g, const DistanceMatrix& dist, std::optional<std::uint64_t> budget)
      : g_(g), dist_(dist), n_(g.vertex_count()), budget_(budget) {}

  std::uint64_t nodes() const { return nodes_; }

  void ensure_radius(std::size_t r) {
    while (balls_.size() <= r) {
      const std::size_t radius = balls_.size();
      std::vector<Bits<W>> layer(n_);
      std::size_t best = 0;
      for (VertexId c = 0; c < n_; ++c) {
        for (VertexId v = 0; v < n_; ++v)
          if (dist_(c, v) <= radius) layer[c].set(v);
        best = std::max(best, layer[c].count());
      }
      balls_.push_back(std::move(layer));
      max_ball_.push_back(best);
    }
  }

  std::size_t max_ball(std::size_t r) {
    ensure_radius(r);
    return max_ball_[r];
  }

  Bits<W> all() const {
    Bits<W> u;
    for (VertexId v = 0; v < n_; ++v) u.set(v);
    return u;
  }

  /// Greedy cover with radii k-1..0; fills centres by radius on success.
  bool greedy(std::size_t k, std::vector<VertexId>& center_by_radius) {
    ensure_radius(k - 1);
    center_by_radius.assign(k, kNoCenter);
    Bits<W> u = all();
    for (std::size_t step = 0; step < k && !u.none(); ++step) {
      const std::size_t r = k - 1 - step;
      VertexId best = 0;
      std::size_t gain = 0;
      for (VertexId c = 0; c < n_; ++c) {
        const std::size_t cov = balls_[r][c].and_count(u);
        if (cov > gain) {
          gain = cov;
          best = c;
        }
      }
      center_by_radius[r] = best;
      u = u.minus(balls_[r][best]);
    }
    return u.none();
  }

  /// Exhaustive decision for k rounds. Throws BudgetHit.
  bool decide(std::size_t k, std::vector<VertexId>& center_by_radius) {
    ensure_radius(k - 1);
    failed_.clear();
    assigned_.assign(k, kNoCenter);
    scratch_.resize(k + 1);
    const std::uint64_t free = k == 64 ? ~std::uint64_t{0} : (std::uint64_t{1} << k) - 1;
    const bool ok = recurse(all(), free, 0);
    if (ok) center_by_radius = assigned_;
    return ok;
  }

 private:
  struct Option {
    std::size_t radius;
    VertexId center;
    std::size_t gain;
    Bits<W> cover;
  };

  bool recurse(const Bits<W>& uncovered, std::uint64_t free, std::size_t depth) {
    if (uncovered.none()) return true;
    if (free == 0) return false;
    if (budget_ && nodes_ >= *budget_) throw BudgetHit{};
    ++nodes_;

    MemoKey<W> key{uncovered, free};
    if (failed_.count(key)) return false;

    // Capacity: each free ball covers at most the best any centre can do.
    const std::size_t need = uncovered.count();
    std::size_t capacity = 0;
    for (std::uint64_t f = free; f && capacity < need; f &= f - 1) {
      const std::size_t r = static_cast<std::size_t>(std::countr_zero(f));
      std::size_t best = 0;
      for (VertexId c = 0; c < n_ && best < need; ++c)
        best = std::max(best, balls_[r][c].and_count(uncovered));
      capacity += best;
    }
    if (capacity < need) return remember_failure(key);

    // Branch on the uncovered vertex whose largest free ball meets the fewest
    // other uncovered vertices; ties prefer peripheral vertices.
    const std::size_t rmax = 63 - static_cast<std::size_t>(std::countl_zero(free));
    VertexId pivot = kNoCenter;
    std::size_t pivot_score = std::numeric_limits<std::size_t>::max();
    uncovered.for_each([&](std::size_t v) {
      const std::size_t score = balls_[rmax][v].and_count(uncovered);
      if (score < pivot_score ||
          (score == pivot_score && dist_.eccentricity(v) > dist_.eccentricity(pivot))) {
        pivot_score = score;
        pivot = v;
      }
    });

    auto& options = scratch_[depth];
    options.clear();
    for (std::uint64_t f = free; f; f &= f - 1) {
      const std::size_t r = static_cast<std::size_t>(std::countr_zero(f));
      const std::size_t first = options.size();
      balls_[r][pivot].for_each([&](std::size_t c) {
        Bits<W> cover = balls_[r][c] & uncovered;
        // Drop c if an earlier candidate of this radius covers a superset;
        // evict earlier candidates that c strictly dominates.
        for (std::size_t i = first; i < options.size(); ++i) {
          if (cover.subset_of(options[i].cover)) return;
        }
        std::size_t keep = first;
        for (std::size_t i = first; i < options.size(); ++i)
          if (!options[i].cover.subset_of(cover)) options[keep++] = options[i];
        options.resize(keep);
        options.push_back(Option{r, c, cover.count(), cover});
      });
    }
    std::sort(options.begin(), options.end(), [](const Option& a, const Option& b) {
      if (a.gain != b.gain) return a.gain > b.gain;
      if (a.radius != b.radius) return a.radius > b.radius;
      return a.center < b.center;
    });

    // Children may reuse deeper scratch levels, so iterate over a copy-free
    // index range on this level only.
    for (std::size_t i = 0; i < scratch_[depth].size(); ++i) {
      const Option opt = scratch_[depth][i];
      assigned_[opt.radius] = opt.center;
      if (recurse(uncovered.minus(opt.cover), free & ~(std::uint64_t{1} << opt.radius), depth + 1))
        return true;
      assigned_[opt.radius] = kNoCenter;
    }
    return remember_failure(key);
  }

  bool remember_failure(const MemoKey<W>& key) {
    if (failed_.size() >= kMemoLimit) failed_.clear();
    failed_.insert(key);
    return false;
  }

  const Graph& g_;
  const DistanceMatrix& dist_;
  std::size_t n_;
  std::optional<std::uint64_t> budget_;
  std::uint64_t nodes_ = 0;
  std::vector<std::vector<Bits<W>>> balls_;
  std::vector<std::size_t> max_ball_;
  std::vector<VertexId> assigned_;
  std::vector<std::vector<Option>> scratch_;
  std::unordered_set<MemoKey<W>, MemoHash<W>> failed_;
};

// Ignites the cover's centres in radius order (largest first). A centre
// already on fire when its round comes is swapped for the smallest unburned
// vertex; its ball was inside an earlier ball anyway.
BurningSequence cover_to_sequence(const DistanceMatrix& dist, std::size_t n,
                                  const std::vector<VertexId>& center_by_radius) {
  const std::size_t k = center_by_radius.size();
  BurningSequence seq;
  auto burned = [&](VertexId v, std::size_t round) {
    for (std::size_t j = 0; j < round; ++j)
      if (dist(seq.sources[j], v) <= round - 1 - j) return true;
    return false;
  };
  for (std::size_t i = 0; i < k; ++i) {
    VertexId c = center_by_radius[k - 1 - i];
    if (c == kNoCenter || burned(c, i)) {
      c = kNoCenter;
      for (VertexId v = 0; v < n; ++v) {
        if (!burned(v, i)) {
          c = v;
          break;
        }
      }
      if (c == kNoCenter) break;
    }
    seq.sources.push_back(c);
  }
  return seq;
}

// Lower bound from three independent arguments: ball capacity, an isometric
// (shortest) path per component, and one source per component.
std::size_t a_priori_lower(const Graph& g, const DistanceMatrix& dist,
                           const std::function<std::size_t(std::size_t)>& max_ball) {
  const std::size_t n = g.vertex_count();
  std::size_t lb = std::max<std::size_t>(1, g.component_count());
  for (VertexId v = 0; v < n; ++v)
    lb = std::max<std::size_t>(lb, isqrt_ceil(dist.eccentricity(v) + 1));
  std::size_t capacity = 0;
  std::size_t k = 0;
  while (capacity < n && k < kMaxRounds) {
    capacity += max_ball(k);
    ++k;
  }
  return std::max(lb, k);
}

template <std::size_t W>
ExactOutcome solve_with(const Graph& g, const SolverOptions& opts) {
  const std::size_t n = g.vertex_count();
  const DistanceMatrix dist(g);
  CoverSearch<W> search(g, dist, opts.node_budget);

  const std::size_t lb =
      a_priori_lower(g, dist, [&](std::size_t r) { return search.max_ball(r); });
  if (lb > kMaxRounds)
    throw InvalidInput("burning numbers above " + std::to_string(kMaxRounds) + " are not supported");

  std::vector<VertexId> greedy_centers;
  std::size_t ub = lb;
  while (!search.greedy(ub, greedy_centers)) ++ub;

  std::vector<VertexId> centers;
  bool refuted_below = false;
  std::size_t k = lb > 1 ? lb - 1 : 1;
  for (;; ++k) {
    if (k > kMaxRounds)
      throw InvalidInput("burning numbers above " + std::to_string(kMaxRounds) + " are not supported");
    if (k == ub) {
      // Greedy already witnessed k; only the search can still find a cover
      // below it, and that was refuted by the previous pass.
      centers = greedy_centers;
      break;
    }
    bool feasible = false;
    try {
      feasible = search.decide(k, centers);
    } catch (const BudgetHit&) {
      return Inconclusive{std::max(lb, k), ub, search.nodes()};
    }
    if (feasible) break;
    refuted_below = true;
  }

  BurnResult result;
  result.certificate = cover_to_sequence(dist, n, centers);
  result.value = result.certificate->length();
  result.method = Method::kExact;
  result.lower_bound = std::min(lb, result.value);
  result.upper_bound = ub;
  result.optimality_proven = result.value == 1 || refuted_below;
  result.nodes = search.nodes();
  return result;
}

template <std::size_t W>
DecisionResult decide_with(const Graph& g, std::size_t k, const SolverOptions& opts) {
  const DistanceMatrix dist(g);
  CoverSearch<W> search(g, dist, opts.node_budget);
  DecisionResult out;
  std::vector<VertexId> centers;
  try {
    const bool ok = search.greedy(k, centers) || search.decide(k, centers);
    out.status = ok ? Feasibility::kFeasible : Feasibility::kInfeasible;
    if (ok) out.sequence = cover_to_sequence(dist, g.vertex_count(), centers);
  } catch (const BudgetHit&) {
    out.status = Feasibility::kUnknown;
  }
  out.nodes = search.nodes();
  return out;
}

template <template <std::size_t> class Fn, typename... Args>
auto dispatch_width(std::size_t n, Args&&... args) {
  if (n > kMaxExactVertices)
    throw InvalidInput("exact search supports at most " + std::to_string(kMaxExactVertices) +
                       " vertices");
  if (n <= 64) return Fn<1>::run(std::forward<Args>(args)...);
  if (n <= 128) return Fn<2>::run(std::forward<Args>(args)...);
  if (n <= 256) return Fn<4>::run(std::forward<Args>(args)...);
  if (n <= 512) return Fn<8>::run(std::forward<Args>(args)...);
  if (n <= 1024) return Fn<16>::run(std::forward<Args>(args)...);
  return Fn<32>::run(std::forward<Args>(args)...);
}

template <std::size_t W>
struct SolveFn {
  static ExactOutcome run(const Graph& g, const SolverOptions& o) { return solve_with<W>(g, o); }
};

template <std::size_t W>
struct DecideFn {
  static DecisionResult run(const Graph& g, std::size_t k, const SolverOptions& o) {
    return decide_with<W>(g, k, o);
  }
};

}  // namespace

DecisionResult find_burning_sequence(const Graph& g, std::size_t k, const SolverOptions& opts) {
  if (g.vertex_count() == 0) throw InvalidInput("graph has no vertices");
  if (k == 0) return {Feasibility::kInfeasible, std::nullopt, 0};
  if (k > kMaxRounds)
    throw InvalidInput("burning numbers above " + std::to_string(kMaxRounds) + " are not supported");
  return dispatch_width<DecideFn>(g.vertex_count(), g, k, opts);
}

ExactOutcome burning_number_exact(const Graph& g, const SolverOptions& opts) {
  if (g.vertex_count() == 0) throw InvalidInput("graph has no vertices");
  return dispatch_width<SolveFn>(g.vertex_count(), g, opts);
}

std::size_t burning_number(const Graph& g, const SolverOptions& opts) {
  auto outcome = burning_number_exact(g, opts);
  if (auto* r = std::get_if<BurnResult>(&outcome)) return r->value;
  throw BudgetExhausted(std::get<Inconclusive>(outcome));
}

// ---------------------------------------------------------------------------
// Partition and oracles
// ---------------------------------------------------------------------------

RootedTreePartition extract_partition(const Graph& g, const BurningSequence& seq) {
  if (!verify_sequence(g, seq)) throw InvalidInput("sequence is not a burning sequence");
  const std::size_t n = g.vertex_count();
  const std::size_t k = seq.length();

  std::vector<DistanceTable> tables;
  for (VertexId x : seq.sources) tables.push_back(bfs_distances(g, x));

  // Owner minimizes (arrival time, -index).
  std::vector<std::size_t> owner(n, 0);
  for (VertexId v = 0; v < n; ++v) {
    std::size_t best_time = std::numeric_limits<std::size_t>::max();
    for (std::size_t i = 0; i < k; ++i) {
      if (!tables[i].reachable(v)) continue;
      const std::size_t arrival = i + tables[i].dist[v];
      if (arrival <= best_time) {
        best_time = arrival;
        owner[v] = i;
      }
    }
  }

  RootedTreePartition partition;
  partition.parts.resize(k);
  std::vector<std::size_t> depth(n, DistanceTable::kUnreachable);
  for (std::size_t i = 0; i < k; ++i) {
    TreePart& part = partition.parts[i];
    part.root = seq.sources[i];
    depth[part.root] = 0;
    part.vertices.push_back(part.root);
    part.parent.push_back(part.root);
    for (std::size_t head = 0; head < part.vertices.size(); ++head) {
      const VertexId u = part.vertices[head];
      for (VertexId w : g.neighbors(u)) {
        if (owner[w] == i && depth[w] == DistanceTable::kUnreachable) {
          depth[w] = depth[u] + 1;
          part.height = std::max(part.height, depth[w]);
          part.vertices.push_back(w);
          part.parent.push_back(u);
        }
      }
    }
  }
  return partition;
}

std::size_t unicyclic_spanning_upper(const Graph& g, const SolverOptions& opts) {
  const std::size_t n = g.vertex_count();
  if (n < 3 || g.edge_count() != n || !g.is_connected())
    throw InvalidInput("graph is not unicyclic");

  // Peel leaves; the survivors are exactly the cycle vertices.
  std::vector<std::size_t> deg(n);
  std::vector<bool> removed(n, false);
  std::vector<VertexId> leaves;
  for (VertexId v = 0; v < n; ++v) {
    deg[v] = g.degree(v);
    if (deg[v] == 1) leaves.push_back(v);
  }
  while (!leaves.empty()) {
    const VertexId v = leaves.back();
    leaves.pop_back();
    removed[v] = true;
    for (VertexId w : g.neighbors(v))
      if (!removed[w] && --deg[w] == 1) leaves.push_back(w);
  }

  std::size_t best = std::numeric_limits<std::size_t>::max();
  for (const auto& [u, v] : g.edges()) {
    if (removed[u] || removed[v]) continue;
    best = std::min(best, burning_number(g.without_edge(u, v), opts));
  }
  return best;
}

std::size_t isometric_path_lower(const UnicyclicFamily& desc) {
  if (desc.arms.empty())
    throw InvalidInput("isometric path bound needs t >= 1; use the cycle formula for t = 0");
  std::size_t longest = desc.arms[0] + desc.girth / 2 + 1;
  if (desc.arms.size() >= 2) longest = std::max(longest, desc.arms[0] + desc.arms[1] + 1);
  return isqrt_ceil(longest);
}

}  // namespace burnkit
