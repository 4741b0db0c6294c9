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
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "gsp/vector.h"

namespace gsp {

/// A subgroup of Z_p^n held by the reduced row echelon form of its basis:
/// every pivot is 1, pivot columns are zero in all other rows, and rows are
/// ordered by ascending pivot column. Equal subgroups have identical bases.
class Subgroup {
 public:
  /// The trivial subgroup {0^n}.
  Subgroup(Modulus m, std::size_t n);

  static Subgroup full(Modulus m, std::size_t n);
  /// Parses `p=<p> n=<n> rows=<row;row;...>`; rows need not be canonical.
  static Subgroup parse(std::string_view text);

  Modulus modulus() const { return m_; }
  std::uint32_t p() const { return m_.value(); }
  std::size_t dim() const { return n_; }
  std::size_t rank() const { return basis_.size(); }
  bool is_trivial() const { return basis_.empty(); }
  bool is_full() const { return basis_.size() == n_; }

  const std::vector<VectorP>& basis() const { return basis_; }
  const std::vector<std::size_t>& pivots() const { return pivots_; }
  /// Columns that carry no pivot, ascending.
  std::vector<std::size_t> free_columns() const;

  /// p^rank; throws ResourceError on overflow.
  std::uint64_t order() const;
  /// All elements, ordered by their coefficient vectors over the basis.
  std::vector<VectorP> elements() const;

  /// The smallest (lexicographic) vector of Z_p^n outside this subgroup:
  /// the unit vector at the last non-pivot column. Requires !is_full().
  VectorP smallest_outside() const;

  /// `p=<p> n=<n> rows=<row;...>` with rows in canonical order.
  std::string serialize() const;

  friend bool operator==(const Subgroup&, const Subgroup&) = default;

 private:
  friend Subgroup extend(const Subgroup& h, const VectorP& v);

  Modulus m_;
  std::size_t n_;
  std::vector<VectorP> basis_;
  std::vector<std::size_t> pivots_;
};

/// The subgroup generated by `rows`; zero and dependent rows are dropped.
Subgroup canonicalize(Modulus m, std::size_t n, std::span<const VectorP> rows);
/// Same, taking (p, n) from the first row. rows must be nonempty.
Subgroup canonicalize(std::span<const VectorP> rows);

/// <H ∪ {v}>.
Subgroup extend(const Subgroup& h, const VectorP& v);

bool contains(const Subgroup& h, const VectorP& x);

/// The representative of x + H whose pivot coordinates are all zero.
VectorP coset_reduce(const Subgroup& h, const VectorP& x);

Subgroup sum(const Subgroup& h, const Subgroup& k);
Subgroup intersect(const Subgroup& h, const Subgroup& k);
/// Standard basis vectors at the non-pivot columns of H.
Subgroup complement(const Subgroup& h);
/// {g : g·h = 0 for all h in H}.
Subgroup orthogonal(const Subgroup& h);

bool is_subgroup_of(const Subgroup& h, const Subgroup& k);

void check_compatible(const Subgroup& h, const Subgroup& k);
void check_compatible(const Subgroup& h, const VectorP& x);

}  // namespace gsp
