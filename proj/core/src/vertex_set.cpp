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

#include "sachs/vertex_set.hpp"

#include <algorithm>
#include <bit>
#include <string>

#include "sachs/error.hpp"

namespace sachs {

namespace {

std::size_t word_count(int universe) {
  return static_cast<std::size_t>((universe + 63) / 64);
}

}  // namespace

VertexSet::VertexSet(int universe) : universe_(universe) {
  if (universe < 0) {
    throw Error(ErrorCode::kInvalidArgument, "negative universe");
  }
  words_.assign(word_count(universe), 0);
}

VertexSet VertexSet::from_mask(int universe, std::uint64_t mask) {
  VertexSet s(universe);
  if (universe < 64 && (mask >> universe) != 0) {
    throw Error(ErrorCode::kVertexOutOfRange, "mask exceeds universe");
  }
  if (!s.words_.empty()) s.words_[0] = mask;
  return s;
}

VertexSet VertexSet::of(int universe, std::initializer_list<int> members) {
  VertexSet s(universe);
  for (int v : members) s.insert(v);
  return s;
}

VertexSet VertexSet::from_members(int universe, std::span<const int> members) {
  VertexSet s(universe);
  for (int v : members) s.insert(v);
  return s;
}

VertexSet VertexSet::full(int universe) {
  VertexSet s(universe);
  for (int v = 0; v < universe; ++v) s.insert(v);
  return s;
}

int VertexSet::size() const noexcept {
  int total = 0;
  for (std::uint64_t w : words_) total += std::popcount(w);
  return total;
}

bool VertexSet::empty() const noexcept {
  return std::all_of(words_.begin(), words_.end(),
                     [](std::uint64_t w) { return w == 0; });
}

bool VertexSet::contains(int v) const {
  if (v < 0 || v >= universe_) return false;
  return (words_[static_cast<std::size_t>(v / 64)] >> (v % 64)) & 1U;
}

void VertexSet::insert(int v) {
  check_vertex(v);
  words_[static_cast<std::size_t>(v / 64)] |= std::uint64_t{1} << (v % 64);
}

void VertexSet::erase(int v) {
  check_vertex(v);
  words_[static_cast<std::size_t>(v / 64)] &= ~(std::uint64_t{1} << (v % 64));
}

std::vector<int> VertexSet::members() const {
  std::vector<int> out;
  for (std::size_t w = 0; w < words_.size(); ++w) {
    std::uint64_t bits = words_[w];
    while (bits != 0) {
      const int b = std::countr_zero(bits);
      out.push_back(static_cast<int>(w) * 64 + b);
      bits &= bits - 1;
    }
  }
  return out;
}

bool VertexSet::is_subset_of(const VertexSet& other) const {
  check_universe(other);
  for (std::size_t i = 0; i < words_.size(); ++i) {
    if ((words_[i] & ~other.words_[i]) != 0) return false;
  }
  return true;
}

bool VertexSet::intersects(const VertexSet& other) const {
  check_universe(other);
  for (std::size_t i = 0; i < words_.size(); ++i) {
    if ((words_[i] & other.words_[i]) != 0) return true;
  }
  return false;
}

VertexSet& VertexSet::operator|=(const VertexSet& other) {
  check_universe(other);
  for (std::size_t i = 0; i < words_.size(); ++i) words_[i] |= other.words_[i];
  return *this;
}

VertexSet& VertexSet::operator&=(const VertexSet& other) {
  check_universe(other);
  for (std::size_t i = 0; i < words_.size(); ++i) words_[i] &= other.words_[i];
  return *this;
}

VertexSet& VertexSet::operator-=(const VertexSet& other) {
  check_universe(other);
  for (std::size_t i = 0; i < words_.size(); ++i) words_[i] &= ~other.words_[i];
  return *this;
}

std::string VertexSet::to_string() const {
  std::string out = "{";
  bool first = true;
  for (int v : members()) {
    if (!first) out += ',';
    out += std::to_string(v);
    first = false;
  }
  out += '}';
  return out;
}

void VertexSet::check_vertex(int v) const {
  if (v < 0 || v >= universe_) {
    throw Error(ErrorCode::kVertexOutOfRange,
                "vertex " + std::to_string(v) + " outside [0, " +
                    std::to_string(universe_) + ")");
  }
}

void VertexSet::check_universe(const VertexSet& other) const {
  if (other.universe_ != universe_) {
    throw Error(ErrorCode::kInvalidArgument, "vertex sets over different universes");
  }
}

bool lex_less(const VertexSet& a, const VertexSet& b) {
  const auto am = a.members();
  const auto bm = b.members();
  return std::lexicographical_compare(am.begin(), am.end(), bm.begin(), bm.end());
}

}  // namespace sachs
