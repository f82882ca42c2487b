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

#ifndef BURNKIT_FAMILY_HPP
#define BURNKIT_FAMILY_HPP

#include <cstddef>
#include <string>
#include <variant>
#include <vector>

#include "burnkit/graph.hpp"

namespace burnkit {

// Structural classes with closed-form or tabulated burning numbers.
// Multisets (parts, arms) are always stored in descending order.

struct PathFamily {
  std::size_t order = 1;
  friend bool operator==(const PathFamily&, const PathFamily&) = default;
};

struct CycleFamily {
  std::size_t girth = 3;
  friend bool operator==(const CycleFamily&, const CycleFamily&) = default;
};

/// Disjoint union of at least two paths.
struct LinearForestFamily {
  std::vector<std::size_t> parts;
  friend bool operator==(const LinearForestFamily&, const LinearForestFamily&) = default;
};

/// Tree with exactly one vertex of degree >= 3; arms are the pendant paths.
struct StarFamily {
  std::vector<std::size_t> arms;
  friend bool operator==(const StarFamily&, const StarFamily&) = default;
};

/// Cycle of length `girth` with `arms.size()` pendant paths glued at one
/// cycle vertex, which is the unique vertex of degree arms.size() + 2.
struct UnicyclicFamily {
  std::size_t girth = 3;
  std::vector<std::size_t> arms;
  std::size_t t() const { return arms.size(); }
  friend bool operator==(const UnicyclicFamily&, const UnicyclicFamily&) = default;
};

struct OtherFamily {
  friend bool operator==(const OtherFamily&, const OtherFamily&) = default;
};

using FamilyDescriptor =
    std::variant<PathFamily, CycleFamily, LinearForestFamily, StarFamily, UnicyclicFamily, OtherFamily>;

/// Vertex count implied by the parameters (0 for OtherFamily).
std::size_t family_order(const FamilyDescriptor& desc);

/// Most specific matching family; a bare cycle is CycleFamily, a connected
/// linear forest is PathFamily, and disconnected graphs are recognized only
/// when every component is a path.
FamilyDescriptor recognize_family(const Graph& g);

/// n = q^2 + r with 1 <= r <= 2q + 1, q = ceil(sqrt(n)) - 1.
struct QRDecomposition {
  std::size_t n = 0;
  std::size_t q = 0;
  std::size_t r = 0;
  friend bool operator==(const QRDecomposition&, const QRDecomposition&) = default;
};

/// Throws InvalidInput for n < 2.
QRDecomposition qr_decompose(std::size_t n);

}  // namespace burnkit

#endif  // BURNKIT_FAMILY_HPP
