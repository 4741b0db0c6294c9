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

#include "gsp/enumerate.h"

#include <string>

#include "gsp/error.h"
#include "gsp/rng.h"

namespace gsp {

std::uint64_t checked_group_order(std::uint32_t p, std::size_t n, std::uint64_t cap) {
  const auto order = checked_pow(p, n);
  if (!order || *order > cap) {
    throw ResourceError(std::to_string(p) + "^" + std::to_string(n) +
                        " exceeds the enumeration cap of " + std::to_string(cap));
  }
  return *order;
}

void for_each_vector(Modulus m, std::size_t n, const std::function<void(const VectorP&)>& visit,
                     std::uint64_t cap) {
  const std::uint64_t order = checked_group_order(m.value(), n, cap);
  VectorP v(m, n);
  for (std::uint64_t idx = 0; idx < order; ++idx) {
    visit(v);
    for (std::size_t i = n; i-- > 0;) {
      if (v[i] + 1 < m.value()) {
        v.set(i, v[i] + 1);
        break;
      }
      v.set(i, 0);
    }
  }
}

namespace {

// Advances a strictly increasing k-subset of [0, n). False once exhausted.
bool next_combination(std::vector<std::size_t>& c, std::size_t n) {
  const std::size_t k = c.size();
  for (std::size_t i = k; i-- > 0;) {
    if (c[i] < n - k + i) {
      ++c[i];
      for (std::size_t j = i + 1; j < k; ++j) c[j] = c[j - 1] + 1;
      return true;
    }
  }
  return false;
}

}  // namespace

void for_each_subgroup(Modulus m, std::size_t n, std::size_t k,
                       const std::function<bool(const Subgroup&)>& visit, std::uint64_t cap) {
  checked_group_order(m.value(), n, cap);
  if (k > n) throw ParameterError("k must not exceed n");

  std::vector<std::size_t> pivots(k);
  for (std::size_t i = 0; i < k; ++i) pivots[i] = i;
  do {
    // Free slots: (row, column) with column right of the row's pivot and not a pivot itself.
    std::vector<std::pair<std::size_t, std::size_t>> slots;
    std::vector<bool> is_pivot(n, false);
    for (std::size_t c : pivots) is_pivot[c] = true;
    for (std::size_t r = 0; r < k; ++r) {
      for (std::size_t c = pivots[r] + 1; c < n; ++c) {
        if (!is_pivot[c]) slots.emplace_back(r, c);
      }
    }
    std::vector<Residue> values(slots.size(), 0);
    while (true) {
      std::vector<VectorP> rows;
      rows.reserve(k);
      for (std::size_t r = 0; r < k; ++r) rows.push_back(VectorP::unit(m, n, pivots[r]));
      for (std::size_t s = 0; s < slots.size(); ++s) {
        rows[slots[s].first].set(slots[s].second, values[s]);
      }
      if (!visit(canonicalize(m, n, rows))) return;
      std::size_t s = slots.size();
      while (s-- > 0) {
        if (++values[s] < m.value()) break;
        values[s] = 0;
      }
      if (s == static_cast<std::size_t>(-1)) break;
    }
  } while (next_combination(pivots, n));
}

std::vector<Subgroup> enumerate_subgroups(Modulus m, std::size_t n, std::size_t k,
                                          std::uint64_t cap) {
  std::vector<Subgroup> out;
  for_each_subgroup(
      m, n, k,
      [&](const Subgroup& h) {
        out.push_back(h);
        return true;
      },
      cap);
  return out;
}

Subgroup random_subgroup(Modulus m, std::size_t n, std::size_t k, std::uint64_t seed) {
  if (k > n) throw ParameterError("k must not exceed n");
  Rng rng(seed);
  Subgroup h(m, n);
  while (h.rank() < k) {
    std::vector<Residue> coords(n);
    for (auto& c : coords) c = static_cast<Residue>(rng.uniform(m.value()));
    h = extend(h, VectorP(m, std::move(coords)));
  }
  return h;
}

}  // namespace gsp
