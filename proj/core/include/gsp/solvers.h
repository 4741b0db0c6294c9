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
#include <optional>
#include <vector>

#include "gsp/enumerate.h"
#include "gsp/oracle.h"
#include "gsp/subgroup.h"

namespace gsp {

struct SolverResult {
  Subgroup recovered;
  std::uint64_t queries = 0;
  std::size_t d_used = 0;
  std::vector<TraceEntry> trace;
};

/// floor((n - k - log_p k) / 2) when p^(n-k) >= k, else 0. Integer-only:
/// the largest d in [0, n-k] with p^(n-k-2d) >= k.
std::size_t choose_d(std::uint32_t p, std::size_t n, std::size_t k);

/// p^(n-k-d) + (k+1) p^d, the deterministic solver's query ceiling.
std::uint64_t det_query_bound(std::uint32_t p, std::size_t n, std::size_t k, std::size_t d);

struct FoundGroup {
  Subgroup group;  ///< B: rank d, A ∩ B and (A + B) ∩ S trivial, fully queried
  Subgroup found;  ///< S2: S1 <= S2 <= S
};

/// Recursive subgroup search. Grows a rank-d group B one generator at a
/// time; every collision seen on the way contributes a new element of the
/// hidden subgroup. Requires every element of `a` to be queried already.
FoundGroup find_group(QueryLog& log, const Subgroup& a, const Subgroup& s1, std::size_t d);

/// Deterministic exact solver. Queries at most det_query_bound(p, n, k, d).
SolverResult find_s(QueryLog& log, std::size_t d);
SolverResult find_s(QueryLog& log);

/// Queries all of Z_p^n and returns the span of the colliders of 0^n.
SolverResult brute_force_solve(QueryLog& log, std::uint64_t cap = kDefaultEnumerationCap);

struct BirthdayResult {
  bool success = false;
  SolverResult run;
};

/// Queries ceil(multiplier * sqrt(k p^(n-k))) uniform random elements and
/// spans their collision differences. Succeeds iff the span has rank k.
BirthdayResult birthday_solve(QueryLog& log, std::uint64_t seed, double multiplier);

}  // namespace gsp
