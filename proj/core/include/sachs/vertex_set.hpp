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

#ifndef SACHS_VERTEX_SET_HPP_
#define SACHS_VERTEX_SET_HPP_

#include <array>
#include <cstdint>
#include <initializer_list>
#include <span>
#include <string>
#include <vector>

namespace sachs {

// A subset of [0, universe) stored as a multi-word bitset.
class VertexSet {
 public:
  VertexSet() = default;
  explicit VertexSet(int universe);

  static VertexSet from_mask(int universe, std::uint64_t mask);
  static VertexSet of(int universe, std::initializer_list<int> members);
  static VertexSet from_members(int universe, std::span<const int> members);
  static VertexSet full(int universe);

  int universe() const noexcept { return universe_; }
  int size() const noexcept;
  bool empty() const noexcept;
  bool contains(int v) const;

  void insert(int v);
  void erase(int v);

  // Ascending member list.
  std::vector<int> members() const;
  // Lowest word; only meaningful as the whole set when universe() <= 64.
  std::uint64_t mask() const noexcept { return words_.empty() ? 0 : words_[0]; }
  std::span<const std::uint64_t> words() const noexcept { return words_; }

  bool is_subset_of(const VertexSet& other) const;
  bool intersects(const VertexSet& other) const;

  VertexSet& operator|=(const VertexSet& other);
  VertexSet& operator&=(const VertexSet& other);
  VertexSet& operator-=(const VertexSet& other);

  friend VertexSet operator|(VertexSet a, const VertexSet& b) { return a |= b; }
  friend VertexSet operator&(VertexSet a, const VertexSet& b) { return a &= b; }
  friend VertexSet operator-(VertexSet a, const VertexSet& b) { return a -= b; }

  bool operator==(const VertexSet& other) const = default;

  // "{0,2,4}"
  std::string to_string() const;

 private:
  void check_vertex(int v) const;
  void check_universe(const VertexSet& other) const;

  int universe_ = 0;
  std::vector<std::uint64_t> words_;
};

// Order on sets used for every tie-break in the library: compare ascending
// member lists lexicographically, so {0,3} precedes {1,2}.
bool lex_less(const VertexSet& a, const VertexSet& b);

// Calls f(mask) for every k-subset of [0, n) in lexicographic order of the
// ascending member lists. Requires n <= 64. Stops early and returns false
// as soon as f returns false.
template <class F>
bool for_each_combination(int n, int k, F&& f) {
  if (k < 0 || k > n) return true;
  std::array<int, 64> idx{};
  std::uint64_t mask = 0;
  for (int i = 0; i < k; ++i) {
    idx[i] = i;
    mask |= std::uint64_t{1} << i;
  }
  while (true) {
    if (!f(mask)) return false;
    int i = k - 1;
    while (i >= 0 && idx[i] == n - k + i) --i;
    if (i < 0) return true;
    mask &= ~(std::uint64_t{1} << idx[i]);
    ++idx[i];
    mask |= std::uint64_t{1} << idx[i];
    for (int j = i + 1; j < k; ++j) {
      mask &= ~(std::uint64_t{1} << idx[j]);
      idx[j] = idx[j - 1] + 1;
      mask |= std::uint64_t{1} << idx[j];
    }
  }
}

// Every subset of [0, n) by increasing size, lexicographic within a size.
template <class F>
bool for_each_subset_by_size(int n, int min_size, F&& f) {
  for (int k = min_size < 0 ? 0 : min_size; k <= n; ++k) {
    if (!for_each_combination(n, k, f)) return false;
  }
  return true;
}

}  // namespace sachs

#endif  // SACHS_VERTEX_SET_HPP_
