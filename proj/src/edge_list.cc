// Copyright 2026 The sdgen Authors. All Rights Reserved.
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

#include "sdgen/edge_list.h"

#include <algorithm>
#include <charconv>
#include <fstream>
#include <istream>
#include <limits>
#include <optional>
#include <ostream>
#include <string_view>
#include <unordered_map>
#include <unordered_set>

#include "sdgen/errors.h"

namespace sdgen {
namespace {

constexpr std::string_view kNodesHeader = "#nodes=";

std::string_view trim(std::string_view s) {
  const auto first = s.find_first_not_of(" \t\r");
  if (first == std::string_view::npos) return {};
  const auto last = s.find_last_not_of(" \t\r");
  return s.substr(first, last - first + 1);
}

// Splits on runs of blanks.
std::vector<std::string_view> fields(std::string_view s) {
  std::vector<std::string_view> out;
  std::size_t pos = 0;
  while (pos < s.size()) {
    const auto start = s.find_first_not_of(" \t\r", pos);
    if (start == std::string_view::npos) break;
    auto end = s.find_first_of(" \t\r", start);
    if (end == std::string_view::npos) end = s.size();
    out.push_back(s.substr(start, end - start));
    pos = end;
  }
  return out;
}

std::optional<NodeId> parse_id(std::string_view s) {
  NodeId value = 0;
  const auto [ptr, ec] = std::from_chars(s.data(), s.data() + s.size(), value);
  if (ec != std::errc() || ptr != s.data() + s.size()) return std::nullopt;
  return value;
}

std::ifstream open_in(const std::filesystem::path& path) {
  std::ifstream in(path);
  if (!in) throw ValidationError("cannot open " + path.string());
  return in;
}

std::ofstream open_out(const std::filesystem::path& path) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw ValidationError("cannot write " + path.string());
  return out;
}

}  // namespace

Digraph read_edge_list(std::istream& in) {
  struct Pending {
    Edge edge;
    std::size_t line;
  };
  std::optional<NodeId> declared;
  std::size_t header_line = 0;
  std::vector<Pending> pending;
  NodeId max_endpoint = 0;

  std::string raw;
  std::size_t line_no = 0;
  while (std::getline(in, raw)) {
    ++line_no;
    const std::string_view line = trim(raw);
    if (line.empty()) continue;
    if (line.front() == '#') {
      if (line.starts_with(kNodesHeader)) {
        if (declared) throw ParseError(line_no, "repeated #nodes header");
        declared = parse_id(trim(line.substr(kNodesHeader.size())));
        if (!declared) throw ParseError(line_no, "bad #nodes header");
        header_line = line_no;
      }
      continue;
    }
    const auto parts = fields(line);
    if (parts.size() != 2) {
      throw ParseError(line_no, "expected \"src dst\", got \"" +
                                    std::string(line) + "\"");
    }
    const auto src = parse_id(parts[0]);
    const auto dst = parse_id(parts[1]);
    if (!src || !dst) {
      throw ParseError(line_no, "node ids must be non-negative integers");
    }
    if (*src == std::numeric_limits<NodeId>::max() ||
        *dst == std::numeric_limits<NodeId>::max()) {
      throw ParseError(line_no, "node id too large");
    }
    max_endpoint = std::max({max_endpoint, *src, *dst});
    pending.push_back({{*src, *dst}, line_no});
  }

  const NodeId node_count =
      declared ? *declared : (pending.empty() ? 0 : max_endpoint + 1);
  Digraph g(node_count);
  for (const auto& [edge, line] : pending) {
    if (edge.src >= node_count || edge.dst >= node_count) {
      throw ParseError(line, "endpoint exceeds #nodes=" +
                                 std::to_string(node_count) + " (line " +
                                 std::to_string(header_line) + ")");
    }
    switch (g.add_edge(edge.src, edge.dst)) {
      case AddResult::kSelfLoop:
        throw ParseError(line, "self-loop on node " + std::to_string(edge.src));
      case AddResult::kDuplicate:
        throw ParseError(line, "duplicate edge " + std::to_string(edge.src) +
                                   " " + std::to_string(edge.dst));
      case AddResult::kAdded:
        break;
    }
  }
  return g;
}

Digraph read_edge_list(const std::filesystem::path& path) {
  auto in = open_in(path);
  try {
    return read_edge_list(in);
  } catch (const ParseError& e) {
    throw ParseError(e.line(), path.string() + ": " + e.detail());
  }
}

void write_edge_list(const Digraph& g, std::ostream& out) {
  out << kNodesHeader << g.node_count() << '\n';
  for (const Edge& e : g.sorted_edges()) out << e.src << ' ' << e.dst << '\n';
}

void write_edge_list(const Digraph& g, const std::filesystem::path& path) {
  auto out = open_out(path);
  write_edge_list(g, out);
}

std::vector<NodeId> read_node_list(std::istream& in) {
  std::vector<NodeId> ids;
  std::string raw;
  std::size_t line_no = 0;
  while (std::getline(in, raw)) {
    ++line_no;
    const std::string_view line = trim(raw);
    if (line.empty() || line.front() == '#') continue;
    const auto id = parse_id(line);
    if (!id) throw ParseError(line_no, "expected a node id");
    ids.push_back(*id);
  }
  return ids;
}

std::vector<NodeId> read_node_list(const std::filesystem::path& path) {
  auto in = open_in(path);
  try {
    return read_node_list(in);
  } catch (const ParseError& e) {
    throw ParseError(e.line(), path.string() + ": " + e.detail());
  }
}

void write_node_list(const std::vector<NodeId>& ids, std::ostream& out) {
  for (NodeId id : ids) out << id << '\n';
}

void write_node_list(const std::vector<NodeId>& ids,
                     const std::filesystem::path& path) {
  auto out = open_out(path);
  write_node_list(ids, out);
}

NamedGraph read_named_edge_list(std::istream& in) {
  NamedGraph result;
  std::unordered_map<std::string, NodeId> index;
  std::vector<Edge> edges;
  auto intern = [&](std::string_view name) {
    auto [it, inserted] =
        index.try_emplace(std::string(name), static_cast<NodeId>(index.size()));
    if (inserted) result.names.emplace_back(name);
    return it->second;
  };

  std::string raw;
  std::size_t line_no = 0;
  while (std::getline(in, raw)) {
    ++line_no;
    const std::string_view line = trim(raw);
    if (line.empty() || line.front() == '#') continue;
    const auto parts = fields(line);
    if (parts.size() != 2) throw ParseError(line_no, "expected \"src dst\"");
    const NodeId src = intern(parts[0]);
    const NodeId dst = intern(parts[1]);
    edges.push_back({src, dst});
  }

  result.graph = Digraph(static_cast<NodeId>(result.names.size()));
  for (const Edge& e : edges) {
    switch (result.graph.add_edge(e.src, e.dst)) {
      case AddResult::kSelfLoop:
        ++result.dropped_self_loops;
        break;
      case AddResult::kDuplicate:
        ++result.dropped_duplicates;
        break;
      case AddResult::kAdded:
        break;
    }
  }
  return result;
}

NamedGraph read_named_edge_list(const std::filesystem::path& path) {
  auto in = open_in(path);
  return read_named_edge_list(in);
}

std::vector<NodeId> new_node_ids(const std::vector<std::string>& first,
                                 const std::vector<std::string>& second) {
  const std::unordered_set<std::string> known(first.begin(), first.end());
  std::vector<NodeId> ids;
  for (NodeId i = 0; i < second.size(); ++i) {
    if (!known.contains(second[i])) ids.push_back(i);
  }
  return ids;
}

}  // namespace sdgen
