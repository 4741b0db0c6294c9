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

// Brute-force reference implementations for tests. Nothing here touches the
// RREF machinery: subgroups are plain sets of element indices built by
// additive closure.
#pragma once

#include <cstdint>
#include <set>
#include <span>
#include <vector>

#include "gsp/vector.h"

namespace gsp::testing {

using IndexSet = std::set<std::uint64_t>;

inline std::uint64_t group_order(std::uint32_t p, std::size_t n) {
  std::uint64_t r = 1;
  for (std::size_t i = 0; i < n; ++i) r *= p;
  return r;
}

inline std::vector<VectorP> all_vectors(Modulus m, std::size_t n) {
  std::vector<VectorP> out;
  const auto order = group_order(m.value(), n);
  for (std::uint64_t i = 0; i < order; ++i) out.push_back(VectorP::from_index(m, n, i));
  return out;
}

/// Closure of {0} ∪ gens under addition.
inline IndexSet brute_span(Modulus m, std::size_t n, std::span<const VectorP> gens) {
  IndexSet seen{0};
  std::vector<VectorP> frontier{VectorP(m, n)};
  while (!frontier.empty()) {
    std::vector<VectorP> next;
    for (const auto& v : frontier) {
      for (const auto& g : gens) {
        VectorP w = vec_add(v, g);
        if (seen.insert(w.index()).second) next.push_back(std::move(w));
      }
    }
    frontier = std::move(next);
  }
  return seen;
}

inline IndexSet brute_orthogonal(Modulus m, std::size_t n, const IndexSet& h) {
  IndexSet out;
  for (const auto& g : all_vectors(m, n)) {
    bool ok = true;
    for (auto idx : h) {
      if (dot(g, VectorP::from_index(m, n, idx)) != 0) {
        ok = false;
        break;
      }
    }
    if (ok) out.insert(g.index());
  }
  return out;
}

inline IndexSet set_intersection(const IndexSet& a, const IndexSet& b) {
  IndexSet out;
  for (auto x : a) {
    if (b.contains(x)) out.insert(x);
  }
  return out;
}

/// All subgroups of order p^k, built by extending every subgroup of order
/// p^(k-1) by every vector outside it.
inline std::set<IndexSet> brute_subgroups(Modulus m, std::size_t n, std::size_t k) {
  std::set<IndexSet> level{IndexSet{0}};
  const auto vectors = all_vectors(m, n);
  for (std::size_t r = 0; r < k; ++r) {
    std::set<IndexSet> next;
    for (const auto& h : level) {
      std::vector<VectorP> gens;
      for (auto idx : h) gens.push_back(VectorP::from_index(m, n, idx));
      for (const auto& v : vectors) {
        if (h.contains(v.index())) continue;
        gens.push_back(v);
        next.insert(brute_span(m, n, gens));
        gens.pop_back();
      }
    }
    level = std::move(next);
  }
  return level;
}

/// log_p |H|, by counting.
inline std::size_t brute_rank(std::uint32_t p, const IndexSet& h) {
  std::size_t r = 0;
  std::uint64_t size = 1;
  while (size < h.size()) {
    size *= p;
    ++r;
  }
  return r;
}

}  // namespace gsp::testing
