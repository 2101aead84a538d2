// Copyright 2026 The sachs-lab Authors.
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

#ifndef SACHS_GRAPH_IO_HPP_
#define SACHS_GRAPH_IO_HPP_

#include <iosfwd>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "sachs/graph.hpp"

namespace sachs {

// graph6: optional ">>graph6<<" header, N(n) in 1, 4 or 8 bytes, then the
// upper triangle column by column (j = 1..n-1, i = 0..j-1) packed six bits
// per byte, most significant first, each byte offset by 63. Trailing
// whitespace is ignored. Throws MalformedGraph6.
Graph parse_graph6(std::string_view text);

// Encodes under the graph's own labeling (not an isomorphism-canonical form).
std::string emit_graph6(const Graph& g);

// "n m" followed by m lines "u v" with 0-indexed endpoints.
// Throws ParseError, LoopEdge, DuplicateEdge or VertexOutOfRange.
Graph parse_edge_list(std::string_view text);
std::string emit_edge_list(const Graph& g);

// Reads one graph6 graph per line; blank lines are skipped and a header is
// tolerated on any line. Failures are rethrown as StreamParseError naming
// the 1-based line number.
class Graph6Reader {
 public:
  explicit Graph6Reader(std::istream& in) : in_(in) {}

  std::optional<Graph> next();
  int line_number() const noexcept { return line_; }

 private:
  std::istream& in_;
  int line_ = 0;
};

std::vector<Graph> read_graph6_stream(std::istream& in);

}  // namespace sachs

#endif  // SACHS_GRAPH_IO_HPP_
