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

#include "burnkit/families.hpp"

#include <algorithm>
#include <charconv>
#include <functional>

namespace burnkit {

namespace {

std::size_t parse_positive(std::string_view token, std::string_view context) {
  std::size_t value = 0;
  const char* begin = token.data();
  const char* end = token.data() + token.size();
  auto [ptr, ec] = std::from_chars(begin, end, value);
  if (token.empty() || ec != std::errc{} || ptr != end)
    throw ParseError("bad number '" + std::string(token) + "' in " + std::string(context));
  return value;
}

std::vector<std::size_t> parse_list(std::string_view body, std::string_view context) {
  std::vector<std::size_t> out;
  if (body.empty()) throw ParseError("empty parameter list in " + std::string(context));
  std::size_t start = 0;
  while (true) {
    auto comma = body.find(',', start);
    auto token = body.substr(start, comma == std::string_view::npos ? std::string_view::npos
                                                                    : comma - start);
    out.push_back(parse_positive(token, context));
    if (comma == std::string_view::npos) break;
    start = comma + 1;
  }
  std::sort(out.begin(), out.end(), std::greater<>());
  return out;
}

std::string join(const std::vector<std::size_t>& xs) {
  std::string s;
  for (std::size_t i = 0; i < xs.size(); ++i) {
    if (i) s += ',';
    s += std::to_string(xs[i]);
  }
  return s;
}

bool all_positive(const std::vector<std::size_t>& xs) {
  return std::all_of(xs.begin(), xs.end(), [](std::size_t x) { return x >= 1; });
}

void path_edges(std::vector<Edge>& edges, VertexId first, std::size_t order) {
  for (std::size_t i = 1; i < order; ++i) edges.emplace_back(first + i - 1, first + i);
}

}  // namespace

void validate_family(const FamilyDescriptor& desc) {
  std::visit(
      [](const auto& f) {
        using T = std::decay_t<decltype(f)>;
        if constexpr (std::is_same_v<T, PathFamily>) {
          if (f.order < 1) throw InvalidInput("path needs at least one vertex");
        } else if constexpr (std::is_same_v<T, CycleFamily>) {
          if (f.girth < 3) throw InvalidInput("cycle length must be >= 3");
        } else if constexpr (std::is_same_v<T, LinearForestFamily>) {
          if (f.parts.empty() || !all_positive(f.parts))
            throw InvalidInput("forest parts must be >= 1");
        } else if constexpr (std::is_same_v<T, StarFamily>) {
          if (f.arms.size() < 3) throw InvalidInput("generalized star needs >= 3 arms");
          if (!all_positive(f.arms)) throw InvalidInput("star arms must be >= 1");
        } else if constexpr (std::is_same_v<T, UnicyclicFamily>) {
          if (f.girth < 3) throw InvalidInput("cycle length must be >= 3");
          if (f.arms.empty()) throw InvalidInput("unicyclic family needs >= 1 arm");
          if (!all_positive(f.arms)) throw InvalidInput("unicyclic arms must be >= 1");
        } else {
          throw InvalidInput("'other' is not a buildable family");
        }
      },
      desc);
}

FamilyDescriptor parse_family_spec(std::string_view text) {
  const auto colon = text.find(':');
  if (colon == std::string_view::npos)
    throw ParseError("family spec '" + std::string(text) + "' lacks ':'");
  const auto kind = text.substr(0, colon);
  const auto body = text.substr(colon + 1);
  const std::string ctx(text);

  FamilyDescriptor desc;
  if (kind == "path") {
    desc = PathFamily{parse_positive(body, ctx)};
  } else if (kind == "cycle") {
    desc = CycleFamily{parse_positive(body, ctx)};
  } else if (kind == "forest") {
    auto parts = parse_list(body, ctx);
    if (parts.size() == 1)
      desc = PathFamily{parts[0]};
    else
      desc = LinearForestFamily{std::move(parts)};
  } else if (kind == "star") {
    desc = StarFamily{parse_list(body, ctx)};
  } else if (kind == "uni") {
    const auto semi = body.find(';');
    if (semi == std::string_view::npos) throw ParseError("uni spec needs 'g;a1,...': " + ctx);
    desc = UnicyclicFamily{parse_positive(body.substr(0, semi), ctx),
                           parse_list(body.substr(semi + 1), ctx)};
  } else {
    throw ParseError("unknown family kind '" + std::string(kind) + "'");
  }
  try {
    validate_family(desc);
  } catch (const InvalidInput& e) {
    throw ParseError(std::string(e.what()) + " in '" + ctx + "'");
  }
  return desc;
}

std::string format_family_spec(const FamilyDescriptor& desc) {
  return std::visit(
      [](const auto& f) -> std::string {
        using T = std::decay_t<decltype(f)>;
        if constexpr (std::is_same_v<T, PathFamily>) return "path:" + std::to_string(f.order);
        else if constexpr (std::is_same_v<T, CycleFamily>) return "cycle:" + std::to_string(f.girth);
        else if constexpr (std::is_same_v<T, LinearForestFamily>) return "forest:" + join(f.parts);
        else if constexpr (std::is_same_v<T, StarFamily>) return "star:" + join(f.arms);
        else if constexpr (std::is_same_v<T, UnicyclicFamily>)
          return "uni:" + std::to_string(f.girth) + ";" + join(f.arms);
        else return "other";
      },
      desc);
}

Graph build_family(const FamilyDescriptor& desc) {
  validate_family(desc);
  std::vector<Edge> edges;
  const std::size_t n = family_order(desc);
  std::visit(
      [&](const auto& f) {
        using T = std::decay_t<decltype(f)>;
        if constexpr (std::is_same_v<T, PathFamily>) {
          path_edges(edges, 0, f.order);
        } else if constexpr (std::is_same_v<T, CycleFamily>) {
          path_edges(edges, 0, f.girth);
          edges.emplace_back(f.girth - 1, 0);
        } else if constexpr (std::is_same_v<T, LinearForestFamily>) {
          VertexId next = 0;
          for (std::size_t part : f.parts) {
            path_edges(edges, next, part);
            next += part;
          }
        } else if constexpr (std::is_same_v<T, StarFamily>) {
          VertexId next = 1;
          for (std::size_t arm : f.arms) {
            edges.emplace_back(0, next);
            path_edges(edges, next, arm);
            next += arm;
          }
        } else if constexpr (std::is_same_v<T, UnicyclicFamily>) {
          path_edges(edges, 0, f.girth);
          edges.emplace_back(f.girth - 1, 0);
          const VertexId hub = f.girth - 1;
          VertexId next = f.girth;
          for (std::size_t arm : f.arms) {
            edges.emplace_back(hub, next);
            path_edges(edges, next, arm);
            next += arm;
          }
        }
      },
      desc);
  return Graph::from_edges(n, edges);
}

SweepClass parse_sweep_class(std::string_view name) {
  if (name == "path") return SweepClass::kPath;
  if (name == "cycle") return SweepClass::kCycle;
  if (name == "forest2") return SweepClass::kForest2;
  if (name == "forest3") return SweepClass::kForest3;
  if (name == "uni1") return SweepClass::kUni1;
  if (name == "uni2") return SweepClass::kUni2;
  throw InvalidInput("unknown sweep class '" + std::string(name) + "'");
}

std::string_view sweep_class_name(SweepClass c) {
  switch (c) {
    case SweepClass::kPath: return "path";
    case SweepClass::kCycle: return "cycle";
    case SweepClass::kForest2: return "forest2";
    case SweepClass::kForest3: return "forest3";
    case SweepClass::kUni1: return "uni1";
    case SweepClass::kUni2: return "uni2";
  }
  return "?";
}

std::vector<FamilyDescriptor> enumerate_sweep(SweepClass c, std::size_t max_n) {
  static constexpr std::size_t kSmallest[] = {1, 3, 2, 3, 4, 5};
  const std::size_t smallest = kSmallest[static_cast<int>(c)];
  if (max_n < smallest)
    throw InvalidInput("max_n " + std::to_string(max_n) + " is below the smallest " +
                       std::string(sweep_class_name(c)) + " instance (" +
                       std::to_string(smallest) + ")");

  std::vector<FamilyDescriptor> out;
  for (std::size_t n = smallest; n <= max_n; ++n) {
    switch (c) {
      case SweepClass::kPath:
        out.emplace_back(PathFamily{n});
        break;
      case SweepClass::kCycle:
        out.emplace_back(CycleFamily{n});
        break;
      case SweepClass::kForest2:
        for (std::size_t a1 = (n + 1) / 2; a1 + 1 <= n; ++a1)
          out.emplace_back(LinearForestFamily{{a1, n - a1}});
        break;
      case SweepClass::kForest3:
        for (std::size_t a1 = (n + 2) / 3; a1 + 2 <= n; ++a1)
          for (std::size_t a2 = 1; a2 <= a1 && a1 + a2 + 1 <= n; ++a2) {
            const std::size_t a3 = n - a1 - a2;
            if (a3 <= a2) out.emplace_back(LinearForestFamily{{a1, a2, a3}});
          }
        break;
      case SweepClass::kUni1:
        for (std::size_t g = 3; g + 1 <= n; ++g) out.emplace_back(UnicyclicFamily{g, {n - g}});
        break;
      case SweepClass::kUni2:
        for (std::size_t g = 3; g + 2 <= n; ++g) {
          const std::size_t rest = n - g;
          for (std::size_t a1 = (rest + 1) / 2; a1 + 1 <= rest; ++a1)
            out.emplace_back(UnicyclicFamily{g, {a1, rest - a1}});
        }
        break;
    }
  }
  return out;
}

}  // namespace burnkit
