// Copyright 2026 The gsp Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#pragma once

#include <cstddef>
#include <cstdint>
#include <functional>
#include <vector>

#include "gsp/subgroup.h"
#include "gsp/vector.h"

namespace gsp {

/// Default ceiling on p^n for anything that walks the whole group.
inline constexpr std::uint64_t kDefaultEnumerationCap = 1ull << 20;

/// p^n, or ResourceError if it exceeds cap.
std::uint64_t checked_group_order(std::uint32_t p, std::size_t n, std::uint64_t cap);

/// Visits every element of Z_p^n in index (lexicographic) order.
void for_each_vector(Modulus m, std::size_t n, const std::function<void(const VectorP&)>& visit,
                     std::uint64_t cap = kDefaultEnumerationCap);

/// Streams every rank-k subgroup of Z_p^n exactly once by walking RREF shapes:
/// pivot sets in lexicographic order, then free entries as an odometer.
/// `visit` returns false to stop early.
void for_each_subgroup(Modulus m, std::size_t n, std::size_t k,
                       const std::function<bool(const Subgroup&)>& visit,
                       std::uint64_t cap = kDefaultEnumerationCap);

std::vector<Subgroup> enumerate_subgroups(Modulus m, std::size_t n, std::size_t k,
                                          std::uint64_t cap = kDefaultEnumerationCap);

/// Uniformly random rank-k subgroup: k independent vectors drawn by rejection.
Subgroup random_subgroup(Modulus m, std::size_t n, std::size_t k, std::uint64_t seed);

}  // namespace gsp
