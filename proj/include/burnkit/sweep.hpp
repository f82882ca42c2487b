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

#ifndef BURNKIT_SWEEP_HPP
#define BURNKIT_SWEEP_HPP

#include <cstddef>
#include <cstdint>
#include <iosfwd>
#include <optional>
#include <string>
#include <vector>

#include "burnkit/exact_solver.hpp"
#include "burnkit/families.hpp"

namespace burnkit {

/// One accepted table/oracle discrepancy: "t g a1 [a2] table exact note".
struct ErrataEntry {
  std::size_t t = 0;
  std::size_t g = 0;
  std::size_t a1 = 0;
  std::optional<std::size_t> a2;
  std::size_t table_value = 0;
  std::size_t exact_value = 0;
  std::string note;
};

/// Blank lines and lines starting with '#' are ignored. Throws ParseError.
std::vector<ErrataEntry> read_errata(std::istream& in);
std::vector<ErrataEntry> read_errata_file(const std::string& path);

struct SweepRow {
  FamilyDescriptor family;
  std::string spec;
  std::size_t n = 0;
  std::optional<QRDecomposition> qr;  // absent for n = 1
  std::size_t formula_value = 0;
  Method method = Method::kExact;
  std::optional<std::size_t> exact_value;     // absent when inconclusive
  std::optional<std::size_t> spanning_value;  // unicyclic classes, when requested
  bool agree = false;
  bool inconclusive = false;
  std::optional<std::string> errata_note;  // set when a mismatch is listed
};

struct SweepSummary {
  std::size_t rows = 0;
  std::size_t mismatches = 0;
  std::size_t unexplained = 0;
  std::size_t inconclusive = 0;
  double seconds = 0.0;
};

struct SweepReport {
  SweepClass cls = SweepClass::kPath;
  std::size_t max_n = 0;
  std::vector<SweepRow> rows;  // enumeration order
  SweepSummary summary;
};

struct SweepOptions {
  unsigned jobs = 1;
  SolverOptions solver;
  std::vector<ErrataEntry> errata;
  /// Also compute the min over cycle edges of b(G - e) for unicyclic rows;
  /// the row agrees only if that value matches too.
  bool spanning_oracle = false;
};

/// Compares the closed form or table of every instance against the exact
/// solver. Rows come back in enumeration order regardless of `jobs`.
SweepReport run_sweep(SweepClass cls, std::size_t max_n, const SweepOptions& opts = {});

/// Closed form or table value for an instance of a sweep class.
BurnResult sweep_formula(const FamilyDescriptor& desc);

/// Errata entry matching a row's instance and both values, if any.
const ErrataEntry* find_errata(const std::vector<ErrataEntry>& errata, const SweepRow& row);

/// Tab-separated rows followed by '#' summary lines. Runtime is omitted so
/// the output is byte-identical across runs.
void write_report(std::ostream& out, const SweepReport& report);

}  // namespace burnkit

#endif  // BURNKIT_SWEEP_HPP
