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

#include "burnkit/compute.hpp"

#include <algorithm>
#include <string>

#include "burnkit/arith.hpp"
#include "burnkit/closed_forms.hpp"
#include "burnkit/families.hpp"
#include "burnkit/unicyclic_tables.hpp"

namespace burnkit {

ComputeMode parse_compute_mode(std::string_view name) {
  if (name == "auto") return ComputeMode::kAuto;
  if (name == "exact") return ComputeMode::kExact;
  if (name == "formula") return ComputeMode::kFormula;
  throw InvalidInput("unknown method '" + std::string(name) + "'");
}

namespace {

BurnResult exact_point(std::size_t value, Method method) {
  BurnResult r;
  r.value = value;
  r.method = method;
  r.lower_bound = value;
  r.upper_bound = value;
  return r;
}

BurnResult forest_result(std::size_t value, std::size_t n, Method method) {
  BurnResult r = exact_point(value, method);
  r.lower_bound = isqrt_ceil(n);
  r.upper_bound = isqrt_ceil(n) + 1;
  return r;
}

}  // namespace

std::optional<BurnResult> formula_burning_number(const Graph& g, const FamilyDescriptor& family) {
  if (const auto* p = std::get_if<PathFamily>(&family))
    return exact_point(b_path(p->order), Method::kFormulaPath);
  if (const auto* c = std::get_if<CycleFamily>(&family))
    return exact_point(b_cycle(c->girth), Method::kFormulaCycle);
  if (const auto* f = std::get_if<LinearForestFamily>(&family)) {
    const std::size_t n = family_order(family);
    if (f->parts.size() == 2)
      return forest_result(b_two_paths(f->parts[0], f->parts[1]), n, Method::kFormulaForest2);
    if (f->parts.size() == 3)
      return forest_result(b_three_paths(f->parts[0], f->parts[1], f->parts[2]), n,
                           Method::kFormulaForest3);
  }
  if (const auto* u = std::get_if<UnicyclicFamily>(&family)) {
    if (u->t() == 1) return b_unicyclic_t1(u->girth, u->arms[0]);
    if (u->t() == 2) return b_unicyclic_t2(u->girth, u->arms[0], u->arms[1]);
  }
  if (g.vertex_count() >= 1) {
    if (auto b = b2_by_degree(g)) return exact_point(*b, Method::kDegreeB2);
  }
  return std::nullopt;
}

ComputeOutcome compute_burning_number(const Graph& g, ComputeMode mode, const SolverOptions& opts) {
  if (g.vertex_count() == 0) throw InvalidInput("graph has no vertices");
  ComputeOutcome out{recognize_family(g), std::nullopt, Inconclusive{}};
  if (g.vertex_count() >= 2) out.qr = qr_decompose(g.vertex_count());

  if (mode != ComputeMode::kExact) {
    if (auto formula = formula_burning_number(g, out.family)) {
      out.result = *formula;
      return out;
    }
    if (mode == ComputeMode::kFormula)
      throw NoFormula("no closed form or table for family '" + format_family_spec(out.family) + "'");
  }

  out.result = burning_number_exact(g, opts);
  if (auto* r = std::get_if<BurnResult>(&out.result)) {
    // Tighten reported bounds with family knowledge; the value is untouched.
    if (const auto* s = std::get_if<StarFamily>(&out.family))
      r->upper_bound = std::max(r->value, std::min(r->upper_bound, b_generalized_star_upper(s->arms)));
    if (const auto* u = std::get_if<UnicyclicFamily>(&out.family)) {
      const auto b = t_unicyclic_bounds(g.vertex_count(), u->t());
      r->lower_bound = std::min(r->value, std::max(r->lower_bound, b.lower));
      r->upper_bound = std::max(r->value, std::min(r->upper_bound, b.upper));
    }
  }
  return out;
}

}  // namespace burnkit
