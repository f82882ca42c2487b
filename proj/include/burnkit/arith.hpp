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

#ifndef BURNKIT_ARITH_HPP
#define BURNKIT_ARITH_HPP

#include <cstdint>

namespace burnkit {

/// floor(sqrt(n)) by integer Newton iteration; no floating point.
constexpr std::uint64_t isqrt_floor(std::uint64_t n) {
  if (n < 2) return n;
  std::uint64_t x = n;
  std::uint64_t y = n / 2 + (n & 1);
  while (y < x) {
    x = y;
    y = (x + n / x) / 2;
  }
  return x;
}

/// ceil(sqrt(n)).
constexpr std::uint64_t isqrt_ceil(std::uint64_t n) {
  const std::uint64_t f = isqrt_floor(n);
  return f * f == n ? f : f + 1;
}

constexpr bool is_perfect_square(std::uint64_t n) {
  const std::uint64_t f = isqrt_floor(n);
  return f * f == n;
}

static_assert(isqrt_floor(0) == 0 && isqrt_floor(15) == 3 && isqrt_floor(16) == 4);
static_assert(isqrt_ceil(1) == 1 && isqrt_ceil(10) == 4 && isqrt_ceil(16) == 4 && isqrt_ceil(17) == 5);

}  // namespace burnkit

#endif  // BURNKIT_ARITH_HPP
