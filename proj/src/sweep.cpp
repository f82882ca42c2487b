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

#include "burnkit/sweep.hpp"

#include <algorithm>
#include <atomic>
#include <chrono>
#include <fstream>
#include <istream>
#include <ostream>
#include <sstream>
#include <thread>

#include "burnkit/closed_forms.hpp"
#include "burnkit/compute.hpp"
#include "burnkit/unicyclic_tables.hpp"

namespace burnkit {

namespace {

std::size_t parse_count(const std::string& tok, std::size_t line_no) {
  if (tok.empty() || !std::all_of(tok.begin(), tok.end(), [](char c) { return c >= '0' && c <= '9'; }))
    throw ParseError("errata line " + std::to_string(line_no) + ": expected a number, got '" + tok + "'");
  return std::stoul(tok);
}

bool is_number(const std::string& tok) {
  return !tok.empty() && std::all_of(tok.begin(), tok.end(), [](char c) { return c >= '0' && c <= '9'; });
}

}  // namespace

std::vector<ErrataEntry> read_errata(std::istream& in) {
  std::vector<ErrataEntry> out;
  std::string line;
  std::size_t line_no = 0;
  while (std::getline(in, line)) {
    ++line_no;
    const auto first = line.find_first_not_of(" \t\r");
    if (first == std::string::npos || line[first] == '#') continue;
    std::istringstream ls(line);
    std::vector<std::string> toks;
    for (std::string tok; ls >> tok;) toks.push_back(tok);

    ErrataEntry e;
    e.t = parse_count(toks[0], line_no);
    if (e.t != 1 && e.t != 2)
      throw ParseError("errata line " + std::to_string(line_no) + ": t must be 1 or 2");
    const std::size_t numbers = e.t == 1 ? 5 : 6;
    if (toks.size() < numbers)
      throw ParseError("errata line " + std::to_string(line_no) + ": too few fields");
    std::vector<std::size_t> v;
    for (std::size_t i = 1; i < numbers; ++i) v.push_back(parse_count(toks[i], line_no));
    e.g = v[0];
    e.a1 = v[1];
    std::size_t next = 2;
    if (e.t == 2) e.a2 = v[next++];
    e.table_value = v[next++];
    e.exact_value = v[next];
    if (toks.size() > numbers && is_number(toks[numbers]))
      throw ParseError("errata line " + std::to_string(line_no) + ": too many numeric fields");
    for (std::size_t i = numbers; i < toks.size(); ++i) e.note += (e.note.empty() ? "" : " ") + toks[i];
    if (e.t == 2 && *e.a2 > e.a1) std::swap(e.a1, *e.a2);
    out.push_back(std::move(e));
  }
  return out;
}

std::vector<ErrataEntry> read_errata_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw InvalidInput("cannot open errata file '" + path + "'");
  return read_errata(in);
}

BurnResult sweep_formula(const FamilyDescriptor& desc) {
  auto r = formula_burning_number(build_family(desc), desc);
  if (!r) throw InvalidInput("no closed form for '" + format_family_spec(desc) + "'");
  return *r;
}

const ErrataEntry* find_errata(const std::vector<ErrataEntry>& errata, const SweepRow& row) {
  const auto* u = std::get_if<UnicyclicFamily>(&row.family);
  if (u == nullptr || !row.exact_value) return nullptr;
  for (const auto& e : errata) {
    if (e.t != u->t() || e.g != u->girth || e.a1 != u->arms[0]) continue;
    if (e.t == 2 && *e.a2 != u->arms[1]) continue;
    if (e.table_value == row.formula_value && e.exact_value == *row.exact_value) return &e;
  }
  return nullptr;
}

namespace {

SweepRow solve_row(const FamilyDescriptor& desc, const SweepOptions& opts) {
  SweepRow row;
  row.family = desc;
  row.spec = format_family_spec(desc);
  row.n = family_order(desc);
  if (row.n >= 2) row.qr = qr_decompose(row.n);
  const Graph g = build_family(desc);
  const auto formula = formula_burning_number(g, desc);
  row.formula_value = formula->value;
  row.method = formula->method;

  const auto exact = burning_number_exact(g, opts.solver);
  if (const auto* r = std::get_if<BurnResult>(&exact)) {
    row.exact_value = r->value;
  } else {
    row.inconclusive = true;
    return row;
  }
  row.agree = row.formula_value == *row.exact_value;
  if (opts.spanning_oracle && std::holds_alternative<UnicyclicFamily>(desc)) {
    try {
      row.spanning_value = unicyclic_spanning_upper(g, opts.solver);
      row.agree = row.agree && *row.spanning_value == *row.exact_value;
    } catch (const BudgetExhausted&) {
      row.inconclusive = true;
    }
  }
  if (!row.agree && !row.inconclusive) {
    if (const auto* e = find_errata(opts.errata, row)) row.errata_note = e->note;
  }
  return row;
}

}  // namespace

SweepReport run_sweep(SweepClass cls, std::size_t max_n, const SweepOptions& opts) {
  const auto start = std::chrono::steady_clock::now();
  const auto instances = enumerate_sweep(cls, max_n);
  SweepReport report;
  report.cls = cls;
  report.max_n = max_n;
  report.rows.resize(instances.size());

  std::atomic<std::size_t> next{0};
  auto worker = [&] {
    for (std::size_t i = next++; i < instances.size(); i = next++) report.rows[i] = solve_row(instances[i], opts);
  };
  const unsigned jobs = std::max(1u, opts.jobs);
  if (jobs == 1) {
    worker();
  } else {
    std::vector<std::jthread> pool;
    for (unsigned j = 0; j < jobs; ++j) pool.emplace_back(worker);
  }

  auto& s = report.summary;
  s.rows = report.rows.size();
  for (const auto& row : report.rows) {
    if (row.inconclusive) {
      ++s.inconclusive;
      continue;
    }
    if (!row.agree) {
      ++s.mismatches;
      if (!row.errata_note) ++s.unexplained;
    }
  }
  s.seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
  return report;
}

void write_report(std::ostream& out, const SweepReport& report) {
  out << "# class " << sweep_class_name(report.cls) << " max-n " << report.max_n << '\n';
  out << "spec\tn\tq\tr\tformula\texact\tspanning\tmethod\tagree\tnote\n";
  for (const auto& row : report.rows) {
    out << row.spec << '\t' << row.n << '\t';
    if (row.qr)
      out << row.qr->q << '\t' << row.qr->r;
    else
      out << "-\t-";
    out << '\t' << row.formula_value << '\t';
    if (row.exact_value)
      out << *row.exact_value;
    else
      out << "inconclusive";
    out << '\t';
    if (row.spanning_value)
      out << *row.spanning_value;
    else
      out << '-';
    out << '\t' << method_name(row.method) << '\t' << (row.agree ? "yes" : "no") << '\t'
        << row.errata_note.value_or("-") << '\n';
  }
  const auto& s = report.summary;
  out << "# rows " << s.rows << '\n'
      << "# mismatches " << s.mismatches << '\n'
      << "# unexplained " << s.unexplained << '\n'
      << "# inconclusive " << s.inconclusive << '\n';
}

}  // namespace burnkit
