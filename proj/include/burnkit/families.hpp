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

#ifndef BURNKIT_FAMILIES_HPP
#define BURNKIT_FAMILIES_HPP

#include <cstddef>
#include <string>
#include <string_view>
#include <vector>

#include "burnkit/family.hpp"
#include "burnkit/graph.hpp"

namespace burnkit {

// Family spec grammar:
//
//   path:n | cycle:g | forest:a1,a2,... | star:l1,l2,... | uni:g;a1,a2,...
//
// Multisets are sorted descending on parse, so the parsed value is always
// canonical. A forest with a single part parses as path:n.
FamilyDescriptor parse_family_spec(std::string_view text);

/// Canonical text form; "other" for OtherFamily.
std::string format_family_spec(const FamilyDescriptor& desc);

/// Throws InvalidInput unless the parameters describe a legal instance.
void validate_family(const FamilyDescriptor& desc);

/// Builds the graph for a family.
///
/// Numbering is frozen so certificates compare across runs:
///   path:n   vertices 0..n-1 along the path.
///   cycle:g  vertices 0..g-1 around the cycle.
///   forest   part 1 first (ids 0..a1-1 along the path), then part 2, ...
///   star     centre 0, then arm 1 from the centre outwards, then arm 2, ...
///   uni      cycle 0..g-1 (hub = g-1), then each arm from the hub outwards.
Graph build_family(const FamilyDescriptor& desc);

enum class SweepClass { kPath, kCycle, kForest2, kForest3, kUni1, kUni2 };

SweepClass parse_sweep_class(std::string_view name);
std::string_view sweep_class_name(SweepClass c);

/// Every canonical instance of `c` with order <= max_n, ordered
/// lexicographically by (n, g, a1, a2, ...).
std::vector<FamilyDescriptor> enumerate_sweep(SweepClass c, std::size_t max_n);

}  // namespace burnkit

#endif  // BURNKIT_FAMILIES_HPP
