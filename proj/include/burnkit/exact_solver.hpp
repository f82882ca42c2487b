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

#ifndef BURNKIT_EXACT_SOLVER_HPP
#define BURNKIT_EXACT_SOLVER_HPP

#include <cstddef>
#include <cstdint>
#include <optional>
#include <stdexcept>
#include <string_view>
#include <variant>
#include <vector>

#include "burnkit/family.hpp"
#include "burnkit/graph.hpp"

namespace burnkit {

/// Sources (x_1, ..., x_k) in the order they are ignited.
struct BurningSequence {
  std::vector<VertexId> sources;

  std::size_t length() const { return sources.size(); }
  friend bool operator==(const BurningSequence&, const BurningSequence&) = default;
};

/// One rooted tree of a partition. `parent[i]` is the tree parent of
/// `vertices[i]`; the root is its own parent.
struct TreePart {
  VertexId root = 0;
  std::vector<VertexId> vertices;
  std::vector<VertexId> parent;
  std::size_t height = 0;
};

/// One part per source, in sequence order.
struct RootedTreePartition {
  std::vector<TreePart> parts;
};

enum class Method {
  kExact,
  kFormulaPath,
  kFormulaCycle,
  kFormulaForest2,
  kFormulaForest3,
  kTableT1,
  kTableT2,
  kDegreeB2,
  kFallbackExact,
};

/// Stable tag, e.g. "formula-cycle", "table-t2".
std::string_view method_name(Method m);

struct BurnResult {
  std::size_t value = 0;
  Method method = Method::kExact;
  std::optional<BurningSequence> certificate;
  std::size_t lower_bound = 0;
  std::size_t upper_bound = 0;
  /// Exact mode: the search at value - 1 ran to exhaustion without a cover.
  bool optimality_proven = false;
  /// Table lookup matched no row and fell back to the exact solver.
  bool table_warning = false;
  std::uint64_t nodes = 0;
};

/// Node budget ran out. Bounds are still valid: every k below lower_bound was
/// refuted and upper_bound is witnessed by a cover.
struct Inconclusive {
  std::size_t lower_bound = 0;
  std::size_t upper_bound = 0;
  std::uint64_t nodes = 0;
};

using ExactOutcome = std::variant<BurnResult, Inconclusive>;

inline bool is_conclusive(const ExactOutcome& o) { return std::holds_alternative<BurnResult>(o); }

class BudgetExhausted : public std::runtime_error {
 public:
  explicit BudgetExhausted(Inconclusive info)
      : std::runtime_error("search node budget exhausted"), info_(info) {}
  const Inconclusive& info() const { return info_; }

 private:
  Inconclusive info_;
};

struct SolverOptions {
  /// Search nodes across all passes of one solve; nullopt means unlimited.
  std::optional<std::uint64_t> node_budget;
};

/// Outcome of checking a sequence against the burning conditions.
struct SequenceCheck {
  bool valid = false;
  /// First pair (i, j), 0-based, i < j, with d(x_i, x_j) < j - i.
  std::optional<std::pair<std::size_t, std::size_t>> distance_violation;
  /// Vertices outside every N_{k-1-i}[x_i].
  std::vector<VertexId> uncovered;
};

/// Throws InvalidInput for an empty sequence, out-of-range or repeated ids.
SequenceCheck check_sequence(const Graph& g, const BurningSequence& seq);

/// True iff seq is a burning sequence of g: sources pairwise far enough apart
/// and the dilated balls cover every vertex.
bool verify_sequence(const Graph& g, const BurningSequence& seq);

enum class Feasibility { kFeasible, kInfeasible, kUnknown };

struct DecisionResult {
  Feasibility status = Feasibility::kUnknown;
  std::optional<BurningSequence> sequence;
  std::uint64_t nodes = 0;
};

/// Decides whether g can be burned in k rounds. A feasible answer carries a
/// verified burning sequence of length exactly k when k equals b(g); for
/// larger k it may be shorter if the graph burns out early.
DecisionResult find_burning_sequence(const Graph& g, std::size_t k, const SolverOptions& opts = {});

/// Burning number by iterative deepening over k with a covering search.
/// Passes start one below the a-priori lower bound, so a conclusive result
/// always includes an exhausted refutation of value - 1 (when value > 1).
ExactOutcome burning_number_exact(const Graph& g, const SolverOptions& opts = {});

/// Convenience: the value, or BudgetExhausted.
std::size_t burning_number(const Graph& g, const SolverOptions& opts = {});

/// Rooted tree partition induced by a valid sequence. Each vertex joins the
/// source whose fire reaches it first; on equal arrival times the later source
/// wins, which keeps every source inside its own part.
RootedTreePartition extract_partition(const Graph& g, const BurningSequence& seq);

/// min over cycle edges e of b(g - e). Requires g connected with |E| = |V|.
std::size_t unicyclic_spanning_upper(const Graph& g, const SolverOptions& opts = {});

/// ceil(sqrt(L)) for the longest of the isometric paths through the hub:
/// a1 + a2 + 1 (t >= 2) and a1 + floor(g/2) + 1.
std::size_t isometric_path_lower(const UnicyclicFamily& desc);

}  // namespace burnkit

#endif  // BURNKIT_EXACT_SOLVER_HPP
