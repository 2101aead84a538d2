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

#include "sachs/graph_io.hpp"

#include <charconv>
#include <istream>
#include <sstream>

#include "sachs/error.hpp"

namespace sachs {

namespace {

constexpr std::string_view kGraph6Header = ">>graph6<<";
constexpr int kBias = 63;
constexpr int kMaxByte = 126;

std::string_view trim(std::string_view s) {
  while (!s.empty() && (s.back() == '\n' || s.back() == '\r' || s.back() == ' ' ||
                        s.back() == '\t')) {
    s.remove_suffix(1);
  }
  while (!s.empty() && (s.front() == ' ' || s.front() == '\t')) s.remove_prefix(1);
  return s;
}

[[noreturn]] void malformed(const std::string& what) {
  throw Error(ErrorCode::kMalformedGraph6, what);
}

int sextet(char c) {
  const int value = static_cast<unsigned char>(c);
  if (value < kBias || value > kMaxByte) {
    malformed("byte " + std::to_string(value) + " outside [63,126]");
  }
  return value - kBias;
}

void append_size(std::string& out, long long n) {
  if (n <= 62) {
    out.push_back(static_cast<char>(n + kBias));
  } else if (n <= 258047) {
    out.push_back(static_cast<char>(kMaxByte));
    for (int shift = 12; shift >= 0; shift -= 6) {
      out.push_back(static_cast<char>(((n >> shift) & 0x3f) + kBias));
    }
  } else {
    out.push_back(static_cast<char>(kMaxByte));
    out.push_back(static_cast<char>(kMaxByte));
    for (int shift = 30; shift >= 0; shift -= 6) {
      out.push_back(static_cast<char>(((n >> shift) & 0x3f) + kBias));
    }
  }
}

}  // namespace

Graph parse_graph6(std::string_view text) {
  text = trim(text);
  if (text.substr(0, kGraph6Header.size()) == kGraph6Header) {
    text.remove_prefix(kGraph6Header.size());
  }
  if (text.empty()) malformed("empty input");

  std::size_t pos = 0;
  long long n = 0;
  if (static_cast<unsigned char>(text[0]) != kMaxByte) {
    n = sextet(text[0]);
    pos = 1;
  } else if (text.size() >= 2 && static_cast<unsigned char>(text[1]) == kMaxByte) {
    if (text.size() < 8) malformed("truncated 8-byte size field");
    for (std::size_t i = 2; i < 8; ++i) n = (n << 6) | sextet(text[i]);
    pos = 8;
  } else {
    if (text.size() < 4) malformed("truncated 4-byte size field");
    for (std::size_t i = 1; i < 4; ++i) n = (n << 6) | sextet(text[i]);
    pos = 4;
  }
  if (n > 100000) {
    throw Error(ErrorCode::kSizeLimitExceeded, "graph6 order " + std::to_string(n));
  }

  const long long bits = n * (n - 1) / 2;
  const long long need = (bits + 5) / 6;
  const std::string_view body = text.substr(pos);
  if (static_cast<long long>(body.size()) != need) {
    malformed("expected " + std::to_string(need) + " data bytes for n=" + std::to_string(n) +
              ", got " + std::to_string(body.size()));
  }

  Graph g(static_cast<int>(n));
  long long k = 0;
  for (int j = 1; j < n; ++j) {
    for (int i = 0; i < j; ++i, ++k) {
      const int byte = sextet(body[static_cast<std::size_t>(k / 6)]);
      if ((byte >> (5 - k % 6)) & 1) g.add_edge(i, j);
    }
  }
  if (need > 0) {
    const int last = sextet(body.back());
    const int used = static_cast<int>(bits - (need - 1) * 6);
    if ((last & ((1 << (6 - used)) - 1)) != 0) malformed("nonzero padding bits");
  }
  return g;
}

std::string emit_graph6(const Graph& g) {
  const int n = g.order();
  std::string out;
  append_size(out, n);
  int acc = 0;
  int filled = 0;
  for (int j = 1; j < n; ++j) {
    for (int i = 0; i < j; ++i) {
      acc = (acc << 1) | (g.adjacent(i, j) ? 1 : 0);
      if (++filled == 6) {
        out.push_back(static_cast<char>(acc + kBias));
        acc = 0;
        filled = 0;
      }
    }
  }
  if (filled > 0) out.push_back(static_cast<char>((acc << (6 - filled)) + kBias));
  return out;
}

Graph parse_edge_list(std::string_view text) {
  std::istringstream in{std::string(text)};
  auto read_int = [&](const char* what) {
    std::string token;
    if (!(in >> token)) {
      throw Error(ErrorCode::kParseError, std::string("missing ") + what);
    }
    long long value = 0;
    const auto [ptr, ec] = std::from_chars(token.data(), token.data() + token.size(), value);
    if (ec != std::errc() || ptr != token.data() + token.size()) {
      throw Error(ErrorCode::kParseError, std::string("bad ") + what + " '" + token + "'");
    }
    return value;
  };
  const long long n = read_int("vertex count");
  const long long m = read_int("edge count");
  if (n < 0 || m < 0) throw Error(ErrorCode::kParseError, "negative header value");
  if (n > 100000) throw Error(ErrorCode::kSizeLimitExceeded, "edge-list order");
  Graph g(static_cast<int>(n));
  for (long long i = 0; i < m; ++i) {
    const long long u = read_int("endpoint");
    const long long v = read_int("endpoint");
    if (u < 0 || v < 0 || u >= n || v >= n) {
      throw Error(ErrorCode::kVertexOutOfRange,
                  "edge " + std::to_string(u) + " " + std::to_string(v));
    }
    g.add_edge(static_cast<int>(u), static_cast<int>(v));
  }
  std::string extra;
  if (in >> extra) {
    throw Error(ErrorCode::kParseError, "trailing data '" + extra + "'");
  }
  return g;
}

std::string emit_edge_list(const Graph& g) {
  std::ostringstream out;
  out << g.order() << ' ' << g.size() << '\n';
  for (const EdgeRef& e : g.edges()) out << e.u << ' ' << e.v << '\n';
  return out.str();
}

std::optional<Graph> Graph6Reader::next() {
  std::string line;
  while (std::getline(in_, line)) {
    ++line_;
    std::string_view view = trim(line);
    if (view.substr(0, kGraph6Header.size()) == kGraph6Header) {
      view.remove_prefix(kGraph6Header.size());
    }
    if (view.empty()) continue;
    try {
      return parse_graph6(view);
    } catch (const Error& e) {
      throw Error(ErrorCode::kStreamParseError,
                  "line " + std::to_string(line_) + ": " + e.what());
    }
  }
  return std::nullopt;
}

std::vector<Graph> read_graph6_stream(std::istream& in) {
  Graph6Reader reader(in);
  std::vector<Graph> out;
  while (auto g = reader.next()) out.push_back(std::move(*g));
  return out;
}

}  // namespace sachs
