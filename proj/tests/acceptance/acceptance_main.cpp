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

// End-to-end acceptance checks. Prints one PASS/FAIL line per criterion and
// exits non-zero if any criterion fails.

#include <chrono>
#include <cstdio>
#include <functional>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include "burnkit/arith.hpp"
#include "burnkit/closed_forms.hpp"
#include "burnkit/exact_solver.hpp"
#include "burnkit/families.hpp"
#include "burnkit/sweep.hpp"
#include "burnkit/unicyclic_tables.hpp"
#include "test_support.hpp"

namespace burnkit {
namespace {

struct Outcome {
  bool pass = true;
  std::ostringstream detail;

  void fail(const std::string& why) {
    if (pass) detail << "first failure: " << why << "; ";
    pass = false;
  }
  void require(bool ok, const std::string& why) {
    if (!ok) fail(why);
  }
};

// Sweeps are shared between criteria so each instance is solved once.
struct Sweeps {
  SweepReport path, cycle, forest2, forest3, uni1, uni2;
};

Sweeps g_sweeps;

void check_sweep(Outcome& o, const SweepReport& r, bool allow_errata) {
  const auto& s = r.summary;
  o.require(s.inconclusive == 0, std::string(sweep_class_name(r.cls)) + " has inconclusive rows");
  const auto bad = allow_errata ? s.unexplained : s.mismatches;
  if (bad > 0) {
    for (const auto& row : r.rows) {
      if (row.agree || row.inconclusive || (allow_errata && row.errata_note)) continue;
      o.fail(row.spec + " formula " + std::to_string(row.formula_value) + " exact " +
             (row.exact_value ? std::to_string(*row.exact_value) : "?") +
             (row.spanning_value ? " spanning " + std::to_string(*row.spanning_value) : ""));
      break;
    }
  }
  o.detail << sweep_class_name(r.cls) << " " << s.rows << " rows, " << s.mismatches << " mismatches";
  if (allow_errata) o.detail << " (" << s.unexplained << " unexplained)";
  o.detail << "; ";
}

std::size_t exact_of(const SweepReport& r, const std::string& spec) {
  for (const auto& row : r.rows)
    if (row.spec == spec && row.exact_value) return *row.exact_value;
  return 0;
}

std::size_t solve(const char* spec) { return burning_number(build_family(parse_family_spec(spec))); }

void spot(Outcome& o, const char* spec, std::size_t expected, std::size_t formula) {
  const auto exact = solve(spec);
  o.require(exact == expected && formula == expected,
            std::string(spec) + " expected " + std::to_string(expected) + ", exact " + std::to_string(exact) +
                ", formula " + std::to_string(formula));
}

void criterion1(Outcome& o) {
  g_sweeps.path = run_sweep(SweepClass::kPath, 49);
  g_sweeps.cycle = run_sweep(SweepClass::kCycle, 49);
  check_sweep(o, g_sweeps.path, false);
  check_sweep(o, g_sweeps.cycle, false);
  o.require(g_sweeps.path.rows.size() == 49 && g_sweeps.cycle.rows.size() == 47, "wrong row counts");
}

void criterion2(Outcome& o) {
  g_sweeps.forest2 = run_sweep(SweepClass::kForest2, 36);
  check_sweep(o, g_sweeps.forest2, false);
  // The exceptional pairs are exactly the rows one above ceil(sqrt(n)).
  std::vector<std::string> raised;
  for (const auto& row : g_sweeps.forest2.rows)
    if (row.exact_value && *row.exact_value == isqrt_ceil(row.n) + 1) raised.push_back(row.spec);
  const std::vector<std::string> expected = {"forest:2,2", "forest:7,2", "forest:14,2", "forest:23,2",
                                             "forest:34,2"};
  o.require(raised == expected, "exceptional pair set differs");
  o.detail << raised.size() << " exceptional pairs at ceil(sqrt(n)) + 1; ";
}

void criterion3(Outcome& o) {
  namespace fe = forest_exceptions;
  g_sweeps.forest3 = run_sweep(SweepClass::kForest3, 30);
  check_sweep(o, g_sweeps.forest3, false);
  std::size_t j[6] = {0, 0, 0, 0, 0, 0};
  for (const auto& row : g_sweeps.forest3.rows) {
    const auto& p = std::get<LinearForestFamily>(row.family).parts;
    const fe::Triple t{p[0], p[1], p[2]};
    j[1] += fe::in_j1(t);
    j[2] += fe::in_j2(t);
    j[3] += fe::in_j3(t);
    j[4] += fe::in_j4(t);
    j[5] += fe::in_j5(t);
  }
  for (int i = 1; i <= 4; ++i) o.require(j[i] > 0, "no J" + std::to_string(i) + " member in range");
  o.require(exact_of(g_sweeps.forest3, "forest:11,11,2") == 6, "(11,11,2) is not 6");
  o.require(exact_of(g_sweeps.forest3, "forest:2,2,2") == 4, "(2,2,2) is not 4");
  o.detail << "J1-J5 members in range " << j[1] << "," << j[2] << "," << j[3] << "," << j[4]
           << "," << j[5] << "; ";
}

void check_qr(Outcome& o, const SweepReport& r) {
  for (const auto& row : r.rows) {
    if (!row.qr || !row.exact_value) continue;
    const auto q = row.qr->q;
    if (row.formula_value != q && row.formula_value != q + 1) o.fail(row.spec + " table value outside {q, q+1}");
    if (*row.exact_value != q && *row.exact_value != q + 1) o.fail(row.spec + " exact value outside {q, q+1}");
  }
}

void criterion4(Outcome& o) {
  SweepOptions opts;
  opts.spanning_oracle = true;
  g_sweeps.uni1 = run_sweep(SweepClass::kUni1, 50, opts);
  check_sweep(o, g_sweeps.uni1, false);
  check_qr(o, g_sweeps.uni1);
  spot(o, "uni:7;3", 3, b_unicyclic_t1(7, 3).value);
  spot(o, "uni:7;4", 4, b_unicyclic_t1(7, 4).value);
  o.detail << "spanning-tree oracle on every row; ";
}

void criterion5(Outcome& o) {
  SweepOptions opts;
  opts.errata = read_errata_file(BURNKIT_ERRATA_PATH);
  g_sweeps.uni2 = run_sweep(SweepClass::kUni2, 42, opts);
  check_sweep(o, g_sweeps.uni2, true);
  check_qr(o, g_sweeps.uni2);
  spot(o, "uni:4;4,4", 4, b_unicyclic_t2(4, 4, 4).value);
  spot(o, "uni:9;10,2", 5, b_unicyclic_t2(9, 10, 2).value);
  spot(o, "uni:8;5,4", 4, b_unicyclic_t2(8, 5, 4).value);
  o.detail << opts.errata.size() << " errata entries; ";
}

void criterion6(Outcome& o) {
  std::size_t checked = 0;
  for (const auto* r : {&g_sweeps.uni1, &g_sweeps.uni2}) {
    for (const auto& row : r->rows) {
      if (!row.exact_value) {
        o.fail(row.spec + " has no exact value");
        continue;
      }
      const auto& u = std::get<UnicyclicFamily>(row.family);
      const auto b = t_unicyclic_bounds(row.n, u.t());
      const auto e = *row.exact_value;
      o.require(b.lower <= e && e <= b.upper && b.upper == isqrt_ceil(row.n), row.spec + " outside bound sandwich");
      o.require(isometric_path_lower(u) <= e, row.spec + " below isometric path bound");
      ++checked;
    }
  }
  o.detail << checked << " instances; ";
}

void criterion7(Outcome& o) {
  std::size_t checked = 0;
  for (auto c : {SweepClass::kPath, SweepClass::kCycle, SweepClass::kForest2, SweepClass::kForest3,
                 SweepClass::kUni1, SweepClass::kUni2}) {
    const std::size_t max_n = c == SweepClass::kForest2   ? 36
                              : c == SweepClass::kForest3 ? 30
                              : c == SweepClass::kUni2    ? 42
                              : c == SweepClass::kUni1    ? 50
                                                          : 49;
    for (const auto& d : enumerate_sweep(c, max_n)) {
      const Graph g = build_family(d);
      const auto out = burning_number_exact(g);
      const auto spec = format_family_spec(d);
      if (!is_conclusive(out)) {
        o.fail(spec + " inconclusive");
        continue;
      }
      const auto& r = std::get<BurnResult>(out);
      if (!r.certificate || r.certificate->length() != r.value || !verify_sequence(g, *r.certificate)) {
        o.fail(spec + " certificate does not verify");
        continue;
      }
      if (r.value > 1 && !r.optimality_proven) o.fail(spec + " value - 1 pass did not exhaust");
      const auto problem = testing::partition_problem(g, *r.certificate, extract_partition(g, *r.certificate));
      if (!problem.empty()) o.fail(spec + " partition: " + problem);
      ++checked;
    }
  }
  o.detail << checked << " optimal sequences verified with partitions; ";
}

void criterion8(Outcome& o) {
  std::size_t checked = 0;
  std::size_t twos = 0;
  for (const auto* r : {&g_sweeps.path, &g_sweeps.cycle, &g_sweeps.forest2, &g_sweeps.forest3, &g_sweeps.uni1,
                        &g_sweeps.uni2}) {
    for (const auto& row : r->rows) {
      if (row.n > 12 || !row.exact_value) continue;
      const auto crit = b2_by_degree(build_family(row.family));
      const auto e = *row.exact_value;
      if (row.n == 1) {
        o.require(crit == 1u && e == 1, row.spec + " single vertex");
      } else {
        o.require(crit.has_value() == (e == 2), row.spec + " degree criterion disagrees");
        if (crit) o.require(*crit == 2, row.spec + " degree criterion value");
      }
      twos += e == 2;
      ++checked;
    }
  }
  o.detail << checked << " graphs, " << twos << " with b = 2; ";
}

struct Criterion {
  int id;
  const char* title;
  double limit_seconds;
  std::function<void(Outcome&)> body;
};

}  // namespace
}  // namespace burnkit

int main() {
  using burnkit::Criterion;
  using burnkit::Outcome;
  const std::vector<Criterion> criteria = {
      {1, "paths and cycles, n <= 49", 60, burnkit::criterion1},
      {2, "two-path forests, sum <= 36", 300, burnkit::criterion2},
      {3, "three-path forests, sum <= 30", 900, burnkit::criterion3},
      {4, "1-unicyclic table, n <= 50", 1200, burnkit::criterion4},
      {5, "2-unicyclic table, n <= 42", 2700, burnkit::criterion5},
      {6, "bound sandwich on unicyclic sweeps", 0, burnkit::criterion6},
      {7, "certificates, optimality and partitions", 0, burnkit::criterion7},
      {8, "b = 2 degree criterion, n <= 12", 0, burnkit::criterion8},
  };
  bool all = true;
  for (const auto& c : criteria) {
    Outcome o;
    const auto start = std::chrono::steady_clock::now();
    try {
      c.body(o);
    } catch (const std::exception& e) {
      o.fail(std::string("exception: ") + e.what());
    }
    const double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    if (c.limit_seconds > 0 && secs > c.limit_seconds) o.fail("over time limit");
    all = all && o.pass;
    std::printf("criterion %d %s: %s (%s%.1fs)\n", c.id, o.pass ? "PASS" : "FAIL", c.title, o.detail.str().c_str(),
                secs);
    std::fflush(stdout);
  }
  return all ? 0 : 1;
}
