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

#ifndef SACHS_SRC_JSON_SUPPORT_HPP_
#define SACHS_SRC_JSON_SUPPORT_HPP_

#include <cstdint>
#include <string_view>

#include "json.hpp"
#include "sachs/vertex_set.hpp"

namespace sachs {

inline nlohmann::json set_json(const VertexSet& s) { return s.members(); }

inline VertexSet parse_set(int n, const nlohmann::json& j) {
  VertexSet s(n);
  for (const auto& v : j) s.insert(v.get<int>());
  return s;
}

// 64-bit FNV-1a.
inline std::uint64_t fnv1a(std::string_view bytes, std::uint64_t h = 14695981039346656037ULL) {
  for (unsigned char c : bytes) {
    h ^= c;
    h *= 1099511628211ULL;
  }
  return h;
}

}  // namespace sachs

#endif  // SACHS_SRC_JSON_SUPPORT_HPP_
