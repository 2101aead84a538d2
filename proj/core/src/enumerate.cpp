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

#include "sachs/enumerate.hpp"

#include <algorithm>
#include <array>
#include <cstdint>
#include <mutex>
#include <unordered_set>

#include "sachs/error.hpp"
#include "sachs/graph_io.hpp"

namespace sachs {

namespace {

using Rows = std::array<std::uint64_t, kMaxCanonicalOrder>;

// Branch-and-bound over partial labelings. Fixing position j determines
// graph6 column j, so a partial labeling whose columns already exceed the
// best complete string is abandoned. Candidates that are twins (same
// neighborhood apart from each other) generate identical subtrees.
class CanonicalSearch {
 public:
  CanonicalSearch(const Rows& rows, int n) : rows_(rows), n_(n) {}

  void run() { search(0, 0); }

  const std::array<int, kMaxCanonicalOrder>& best_perm() const { return best_perm_; }
  const std::array<std::uint32_t, kMaxCanonicalOrder>& best_columns() const { return best_; }

 private:
  void search(int depth, std::uint64_t used) {
    if (depth == n_) {
      if (!have_best_ || prefix_compare(depth) < 0) {
        best_ = cur_;
        best_perm_ = perm_;
        have_best_ = true;
      }
      return;
    }
    std::array<std::uint32_t, kMaxCanonicalOrder> col{};
    std::uint32_t min_col = UINT32_MAX;
    for (int v = 0; v < n_; ++v) {
      if (used >> v & 1U) continue;
      std::uint32_t c = 0;
      for (int i = 0; i < depth; ++i) {
        c = (c << 1) | static_cast<std::uint32_t>(rows_[static_cast<std::size_t>(perm_[static_cast<std::size_t>(i)])] >> v & 1U);
      }
      col[static_cast<std::size_t>(v)] = c;
      min_col = std::min(min_col, c);
    }
    cur_[static_cast<std::size_t>(depth)] = min_col;
    if (have_best_ && prefix_compare(depth + 1) > 0) return;

    std::uint64_t explored = 0;
    for (int v = 0; v < n_; ++v) {
      if ((used >> v & 1U) || col[static_cast<std::size_t>(v)] != min_col) continue;
      bool twin = false;
      for (std::uint64_t rest = explored; rest != 0; rest &= rest - 1) {
        const int u = __builtin_ctzll(rest);
        const std::uint64_t ru = rows_[static_cast<std::size_t>(u)] & ~(std::uint64_t{1} << v);
        const std::uint64_t rv = rows_[static_cast<std::size_t>(v)] & ~(std::uint64_t{1} << u);
        if (ru == rv) {
          twin = true;
          break;
        }
      }
      if (twin) continue;
      explored |= std::uint64_t{1} << v;
      perm_[static_cast<std::size_t>(depth)] = v;
      cur_[static_cast<std::size_t>(depth)] = min_col;
      search(depth + 1, used | (std::uint64_t{1} << v));
    }
  }

  // Sign of cur_[0..len) versus best_[0..len).
  int prefix_compare(int len) const {
    for (int i = 0; i < len; ++i) {
      if (cur_[static_cast<std::size_t>(i)] != best_[static_cast<std::size_t>(i)]) {
        return cur_[static_cast<std::size_t>(i)] < best_[static_cast<std::size_t>(i)] ? -1 : 1;
      }
    }
    return 0;
  }

  const Rows& rows_;
  int n_;
  bool have_best_ = false;
  std::array<int, kMaxCanonicalOrder> perm_{};
  std::array<int, kMaxCanonicalOrder> best_perm_{};
  std::array<std::uint32_t, kMaxCanonicalOrder> cur_{};
  std::array<std::uint32_t, kMaxCanonicalOrder> best_{};
};

Rows rows_of(const Graph& g) {
  if (g.order() > kMaxCanonicalOrder) {
    throw Error(ErrorCode::kSizeLimitExceeded,
                "canonical form is defined for n <= " + std::to_string(kMaxCanonicalOrder));
  }
  Rows rows{};
  for (int v = 0; v < g.order(); ++v) rows[static_cast<std::size_t>(v)] = g.row_mask(v);
  return rows;
}

// Packs the column sequence into one integer; same-order codes compare like
// the bit strings they encode.
std::uint64_t pack_code(const std::array<std::uint32_t, kMaxCanonicalOrder>& cols, int n) {
  std::uint64_t code = 0;
  for (int j = 1; j < n; ++j) code = (code << j) | cols[static_cast<std::size_t>(j)];
  return code;
}

Graph unpack_code(std::uint64_t code, int n) {
  Graph g(n);
  int bit = n * (n - 1) / 2;
  for (int j = 1; j < n; ++j) {
    for (int i = 0; i < j; ++i) {
      --bit;
      if (code >> bit & 1U) g.add_edge(i, j);
    }
  }
  return g;
}

std::uint64_t canonical_code_of_rows(const Rows& rows, int n) {
  CanonicalSearch search(rows, n);
  search.run();
  return pack_code(search.best_columns(), n);
}

std::vector<Graph> extend_level(const std::vector<Graph>& previous, int n) {
  std::unordered_set<std::uint64_t> seen;
  const int old_n = n - 1;
  for (const Graph& g : previous) {
    Rows base = rows_of(g);
    for (std::uint64_t attach = 0; attach < (std::uint64_t{1} << old_n); ++attach) {
      Rows rows = base;
      rows[static_cast<std::size_t>(old_n)] = attach;
      for (int v = 0; v < old_n; ++v) {
        if (attach >> v & 1U) rows[static_cast<std::size_t>(v)] |= std::uint64_t{1} << old_n;
      }
      seen.insert(canonical_code_of_rows(rows, n));
    }
  }
  std::vector<std::uint64_t> codes(seen.begin(), seen.end());
  std::sort(codes.begin(), codes.end());
  std::vector<Graph> out;
  out.reserve(codes.size());
  for (std::uint64_t code : codes) out.push_back(unpack_code(code, n));
  return out;
}

}  // namespace

std::vector<int> canonical_labeling(const Graph& g) {
  const Rows rows = rows_of(g);
  CanonicalSearch search(rows, g.order());
  search.run();
  const auto& best = search.best_perm();
  return {best.begin(), best.begin() + g.order()};
}

Graph canonical_graph(const Graph& g) {
  const auto perm = canonical_labeling(g);
  return permute(g, perm);
}

std::string canonical_form(const Graph& g) { return emit_graph6(canonical_graph(g)); }

const std::vector<Graph>& enumerate_graphs(int n) {
  if (n < 0 || n > kMaxEnumerationOrder) {
    throw Error(ErrorCode::kSizeLimitExceeded,
                "built-in enumeration covers 0 <= n <= " + std::to_string(kMaxEnumerationOrder));
  }
  static std::mutex mu;
  static std::array<std::vector<Graph>, kMaxEnumerationOrder + 1> levels;
  static std::array<bool, kMaxEnumerationOrder + 1> ready{};
  std::lock_guard<std::mutex> lock(mu);
  if (!ready[0]) {
    levels[0] = {Graph(0)};
    ready[0] = true;
  }
  for (int k = 1; k <= n; ++k) {
    if (ready[static_cast<std::size_t>(k)]) continue;
    levels[static_cast<std::size_t>(k)] = extend_level(levels[static_cast<std::size_t>(k - 1)], k);
    ready[static_cast<std::size_t>(k)] = true;
  }
  return levels[static_cast<std::size_t>(n)];
}

std::vector<Graph> enumerate_graphs_up_to(int max_n, int min_n) {
  std::vector<Graph> out;
  for (int n = std::max(0, min_n); n <= max_n; ++n) {
    const auto& level = enumerate_graphs(n);
    out.insert(out.end(), level.begin(), level.end());
  }
  return out;
}

}  // namespace sachs
