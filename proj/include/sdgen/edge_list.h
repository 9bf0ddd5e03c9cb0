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

// Text formats for graphs and node lists.
//
// Edge list: '#'-prefixed lines are comments, except "#nodes=N" which fixes
// the node count (needed to keep isolated nodes). Every other non-blank line
// is "src dst" with decimal ids. Without a header the node count is one more
// than the largest endpoint.
//
// Node list: one decimal id per line, '#' comments allowed.

#pragma once

#include <cstddef>
#include <filesystem>
#include <iosfwd>
#include <string>
#include <vector>

#include "sdgen/digraph.h"

namespace sdgen {

/// Throws ParseError (with the offending line) on malformed lines,
/// self-loops, duplicate edges and endpoints beyond "#nodes=N".
Digraph read_edge_list(std::istream& in);
Digraph read_edge_list(const std::filesystem::path& path);

/// Writes the "#nodes=N" header followed by edges in (src, dst) order, so
/// equal graphs serialize to identical bytes.
void write_edge_list(const Digraph& g, std::ostream& out);
void write_edge_list(const Digraph& g, const std::filesystem::path& path);

std::vector<NodeId> read_node_list(std::istream& in);
std::vector<NodeId> read_node_list(const std::filesystem::path& path);
void write_node_list(const std::vector<NodeId>& ids, std::ostream& out);
void write_node_list(const std::vector<NodeId>& ids,
                     const std::filesystem::path& path);

/// A graph ingested from "srcName dstName" lines, with the sidecar name table
/// mapping dense ids back to names (ids follow first appearance).
struct NamedGraph {
  Digraph graph;
  std::vector<std::string> names;
  std::size_t dropped_self_loops = 0;
  std::size_t dropped_duplicates = 0;
};

/// Real dependency graphs contain self-references and repeated edges; they
/// are dropped and counted rather than rejected.
NamedGraph read_named_edge_list(std::istream& in);
NamedGraph read_named_edge_list(const std::filesystem::path& path);

/// Ids (in `second`'s numbering) of names that do not occur in `first`,
/// ascending.
std::vector<NodeId> new_node_ids(const std::vector<std::string>& first,
                                 const std::vector<std::string>& second);

}  // namespace sdgen
