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

#ifndef BURNKIT_COMPUTE_HPP
#define BURNKIT_COMPUTE_HPP

#include <optional>
#include <string_view>

#include "burnkit/exact_solver.hpp"
#include "burnkit/family.hpp"
#include "burnkit/graph.hpp"

namespace burnkit {

enum class ComputeMode { kAuto, kExact, kFormula };

ComputeMode parse_compute_mode(std::string_view name);

/// No closed form or table covers the graph's family.
class NoFormula : public InvalidInput {
 public:
  using InvalidInput::InvalidInput;
};

struct ComputeOutcome {
  FamilyDescriptor family;
  std::optional<QRDecomposition> qr;
  ExactOutcome result;
};

/// Closed form, table or degree criterion for the recognized family, if any.
std::optional<BurnResult> formula_burning_number(const Graph& g, const FamilyDescriptor& family);

/// kAuto: formula when one applies, else the exact solver (with any
/// family-specific bounds folded into lower/upper). kFormula throws NoFormula
/// when nothing applies.
ComputeOutcome compute_burning_number(const Graph& g, ComputeMode mode,
                                      const SolverOptions& opts = {});

}  // namespace burnkit

#endif  // BURNKIT_COMPUTE_HPP
