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

#include "cli.hpp"

#include <algorithm>
#include <charconv>
#include <cstdlib>
#include <fstream>
#include <optional>
#include <ostream>
#include <sstream>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "json.hpp"

#include "burnkit/compute.hpp"
#include "burnkit/families.hpp"
#include "burnkit/sweep.hpp"

namespace burnkit::cli {

namespace {

using nlohmann::json;

struct InputError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

std::optional<std::uint64_t> budget_from_env() {
  const char* raw = std::getenv("BURNKIT_NODE_BUDGET");
  if (raw == nullptr || *raw == '\0') return std::nullopt;
  std::uint64_t v = 0;
  const char* end = raw + std::char_traits<char>::length(raw);
  auto [ptr, ec] = std::from_chars(raw, end, v);
  if (ec != std::errc{} || ptr != end) throw InputError(std::string("BURNKIT_NODE_BUDGET: not a count: ") + raw);
  return v;
}

struct GraphInput {
  std::string file;
  std::string family;

  Graph load() const {
    if (file.empty() == family.empty()) throw InputError("give exactly one of --file or --family");
    if (!file.empty()) return read_graph_file(file);
    const auto desc = parse_family_spec(family);
    validate_family(desc);
    return build_family(desc);
  }
};

std::string join(const std::vector<VertexId>& v, std::string_view sep) {
  std::string s;
  for (std::size_t i = 0; i < v.size(); ++i) {
    if (i > 0) s += sep;
    s += std::to_string(v[i]);
  }
  return s;
}

BurningSequence parse_sequence(const std::string& text) {
  BurningSequence seq;
  std::string_view rest = text;
  while (true) {
    const auto comma = rest.find(',');
    std::string_view tok = rest.substr(0, comma);
    while (!tok.empty() && tok.front() == ' ') tok.remove_prefix(1);
    while (!tok.empty() && tok.back() == ' ') tok.remove_suffix(1);
    VertexId v = 0;
    auto [ptr, ec] = std::from_chars(tok.data(), tok.data() + tok.size(), v);
    if (tok.empty() || ec != std::errc{} || ptr != tok.data() + tok.size())
      throw InputError("malformed sequence '" + text + "'");
    seq.sources.push_back(v);
    if (comma == std::string_view::npos) break;
    rest.remove_prefix(comma + 1);
  }
  return seq;
}

struct ComputeArgs {
  GraphInput input;
  std::string method = "auto";
  bool certificate = false;
  bool json = false;
};

int cmd_compute(const ComputeArgs& a, std::ostream& out) {
  const Graph g = a.input.load();
  const auto mode = parse_compute_mode(a.method);
  SolverOptions opts;
  opts.node_budget = budget_from_env();
  auto outcome = compute_burning_number(g, mode, opts);
  const std::string family = format_family_spec(outcome.family);

  if (const auto* inc = std::get_if<Inconclusive>(&outcome.result)) {
    if (a.json) {
      json doc = {{"n", g.vertex_count()}, {"family", family}, {"status", "inconclusive"},
                  {"lower", inc->lower_bound}, {"upper", inc->upper_bound}, {"nodes", inc->nodes}};
      out << doc.dump(2) << '\n';
    } else {
      out << "inconclusive: search budget exhausted after " << inc->nodes << " nodes\n"
          << "bounds: " << inc->lower_bound << " <= b <= " << inc->upper_bound << '\n';
    }
    return kInconclusive;
  }

  auto& r = std::get<BurnResult>(outcome.result);
  if ((a.certificate || a.json) && !r.certificate) {
    const auto d = find_burning_sequence(g, r.value, opts);
    if (d.status == Feasibility::kUnknown) {
      out << "inconclusive: no certificate found within the search budget\n";
      return kInconclusive;
    }
    r.certificate = d.sequence;
  }

  if (a.json) {
    json doc = {{"n", g.vertex_count()},
                {"family", family},
                {"q", outcome.qr ? json(outcome.qr->q) : json(nullptr)},
                {"r", outcome.qr ? json(outcome.qr->r) : json(nullptr)},
                {"value", r.value},
                {"method", std::string(method_name(r.method))},
                {"lower", r.lower_bound},
                {"upper", r.upper_bound},
                {"certificate", r.certificate->sources}};
    if (r.table_warning) doc["warning"] = "no table row matched; value computed exactly";
    out << doc.dump(2) << '\n';
    return kOk;
  }

  out << "family: " << family << '\n' << "n: " << g.vertex_count();
  if (outcome.qr) out << " (q = " << outcome.qr->q << ", r = " << outcome.qr->r << ")";
  out << '\n'
      << "value: " << r.value << '\n'
      << "method: " << method_name(r.method) << '\n'
      << "bounds: " << r.lower_bound << " <= b <= " << r.upper_bound << '\n';
  if (r.table_warning) out << "warning: no table row matched; value computed exactly\n";
  if (a.certificate) {
    out << "sequence: " << join(r.certificate->sources, ",") << '\n';
    const auto partition = extract_partition(g, *r.certificate);
    for (std::size_t i = 0; i < partition.parts.size(); ++i) {
      const auto& p = partition.parts[i];
      out << "  tree " << i + 1 << ": root " << p.root << ", height " << p.height << ", vertices "
          << join(p.vertices, " ") << '\n';
    }
  }
  return kOk;
}

struct VerifyArgs {
  GraphInput input;
  std::string sequence;
};

int cmd_verify(const VerifyArgs& a, std::ostream& out) {
  const Graph g = a.input.load();
  const auto seq = parse_sequence(a.sequence);
  const auto check = check_sequence(g, seq);
  if (check.valid) {
    out << "valid burning sequence of length " << seq.length() << '\n';
    return kOk;
  }
  out << "not a burning sequence\n";
  if (check.distance_violation) {
    const auto [i, j] = *check.distance_violation;
    const auto d = bfs_distances(g, seq.sources[i]).dist[seq.sources[j]];
    out << "distance: sources " << i + 1 << " (vertex " << seq.sources[i] << ") and " << j + 1 << " (vertex "
        << seq.sources[j] << ") are at distance " << d << " < " << j - i << '\n';
  }
  if (!check.uncovered.empty()) out << "uncovered: {" << join(check.uncovered, ",") << "}\n";
  return kInvalid;
}

struct SweepArgs {
  std::string cls;
  std::size_t max_n = 0;
  std::string errata;
  unsigned jobs = 1;
  std::string out;
  bool allow_inconclusive = false;
  bool spanning = false;
};

int cmd_sweep(const SweepArgs& a, std::ostream& out) {
  const auto cls = parse_sweep_class(a.cls);
  if (a.max_n > 2048) throw InputError("--max-n above the solver limit of 2048");
  SweepOptions opts;
  opts.jobs = a.jobs;
  opts.solver.node_budget = budget_from_env();
  opts.spanning_oracle = a.spanning;
  if (!a.errata.empty()) opts.errata = read_errata_file(a.errata);

  const auto report = run_sweep(cls, a.max_n, opts);
  if (!a.out.empty()) {
    std::ofstream f(a.out);
    if (!f) throw InputError("cannot write '" + a.out + "'");
    write_report(f, report);
  } else {
    write_report(out, report);
  }

  const auto& s = report.summary;
  std::ostringstream line;
  line << sweep_class_name(cls) << ": " << s.rows << " rows, " << s.mismatches << " mismatches ("
       << s.unexplained << " unexplained), " << s.inconclusive << " inconclusive";
  if (!a.out.empty()) out << line.str() << '\n';
  for (const auto& row : report.rows) {
    if (!row.agree && !row.inconclusive && !row.errata_note)
      out << "unexplained mismatch: " << row.spec << " formula " << row.formula_value << " exact "
          << *row.exact_value << '\n';
  }
  if (s.inconclusive > 0 && !a.allow_inconclusive) return kInconclusive;
  return s.unexplained == 0 ? kOk : kInvalid;
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Burning numbers of graphs"};
  app.require_subcommand(1);

  ComputeArgs compute;
  auto* c = app.add_subcommand("compute", "Burning number of one graph");
  auto* c_file = c->add_option("--file", compute.input.file, "Graph file");
  auto* c_family = c->add_option("--family", compute.input.family, "Family spec, e.g. uni:7;4");
  c_file->excludes(c_family);
  c->add_option("--method", compute.method, "auto, exact or formula")
      ->check(CLI::IsMember({"auto", "exact", "formula"}));
  c->add_flag("--certificate", compute.certificate, "Print a burning sequence and its tree partition");
  c->add_flag("--json", compute.json, "Structured output");

  VerifyArgs verify;
  auto* v = app.add_subcommand("verify", "Check a burning sequence");
  auto* v_file = v->add_option("--file", verify.input.file, "Graph file");
  auto* v_family = v->add_option("--family", verify.input.family, "Family spec");
  v_file->excludes(v_family);
  v->add_option("--sequence", verify.sequence, "Comma-separated vertex ids")->required();

  SweepArgs sweep;
  auto* s = app.add_subcommand("sweep", "Compare closed forms against the exact solver");
  s->add_option("--class", sweep.cls, "path, cycle, forest2, forest3, uni1 or uni2")
      ->required()
      ->check(CLI::IsMember({"path", "cycle", "forest2", "forest3", "uni1", "uni2"}));
  s->add_option("--max-n", sweep.max_n, "Largest order")->required();
  s->add_option("--errata", sweep.errata, "Accepted discrepancies");
  s->add_option("--jobs", sweep.jobs, "Worker threads")->check(CLI::Range(1u, 1024u));
  s->add_option("--out", sweep.out, "Report file (default: stdout)");
  s->add_flag("--allow-inconclusive", sweep.allow_inconclusive, "Exit 0 despite budget exhaustion");
  s->add_flag("--spanning", sweep.spanning, "Also check unicyclic rows against spanning trees");

  std::vector<std::string> reversed(args.rbegin(), args.rend());
  try {
    app.parse(reversed);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? kOk : kInputError;
  }

  try {
    if (c->parsed()) return cmd_compute(compute, out);
    if (v->parsed()) return cmd_verify(verify, out);
    return cmd_sweep(sweep, out);
  } catch (const NoFormula& e) {
    err << "error: " << e.what() << '\n';
    return kInputError;
  } catch (const InvalidInput& e) {
    err << "error: " << e.what() << '\n';
    return kInputError;
  } catch (const InputError& e) {
    err << "error: " << e.what() << '\n';
    return kInputError;
  } catch (const BudgetExhausted& e) {
    err << "inconclusive: bounds " << e.info().lower_bound << " <= b <= " << e.info().upper_bound << '\n';
    return kInconclusive;
  }
}

}  // namespace burnkit::cli
