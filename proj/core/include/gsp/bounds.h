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
#include <span>

#include <boost/multiprecision/cpp_int.hpp>

#include "gsp/enumerate.h"
#include "gsp/subgroup.h"
#include "gsp/vector.h"

namespace gsp {

using BigInt = boost::multiprecision::cpp_int;

/// Number of rank-k subgroups of Z_p^n.
BigInt t1_count(std::uint32_t p, std::size_t n, std::size_t k);

/// Number of rank-k subgroups of Z_p^n containing a fixed nonzero element.
BigInt t2_count(std::uint32_t p, std::size_t n, std::size_t k);

/// A rank-k subgroup H with |H ∩ D| < d, by exhaustive scan; nullopt if none.
/// D must not contain 0^n.
std::optional<Subgroup> evading_subgroup(Modulus m, std::size_t n, std::span<const VectorP> d_set,
                                         std::size_t k, std::size_t d,
                                         std::uint64_t cap = kDefaultEnumerationCap);

/// ceil(d (p^n - 1) / (p^k - 1)): any D with |D| below this admits a witness.
BigInt evasion_threshold(std::uint32_t p, std::size_t n, std::size_t k, std::size_t d);

struct BoundReport {
  std::uint32_t p = 0;
  std::size_t n = 0;
  std::size_t k = 0;
  BigInt t1;
  BigInt t2;
  double lower_adaptive = 0;     ///< max{k, sqrt(p^(n-k))}
  double lower_nonadaptive = 0;  ///< max{k, sqrt(k p^(n-k))}
  BigInt upper_det;              ///< min over d of p^(n-k-d) + (k+1) p^d
  std::size_t best_d = 0;        ///< smallest argmin of upper_det
};

BoundReport bound_report(std::uint32_t p, std::size_t n, std::size_t k);

}  // namespace gsp
