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

#include "gsp/bounds.h"

#include <algorithm>
#include <cmath>

#include "gsp/error.h"

namespace gsp {

namespace {

BigInt big_pow(std::uint32_t p, std::size_t e) {
  BigInt r = 1;
  for (std::size_t i = 0; i < e; ++i) r *= p;
  return r;
}

// prod_{j=1}^{r} (p^(top-r+j) - 1) / (p^j - 1). Each partial product is a
// Gaussian binomial coefficient, so every division is exact.
BigInt gaussian_binomial(std::uint32_t p, std::size_t top, std::size_t r) {
  BigInt acc = 1;
  for (std::size_t j = 1; j <= r; ++j) {
    acc *= big_pow(p, top - r + j) - 1;
    const BigInt den = big_pow(p, j) - 1;
    if (acc % den != 0) throw Error("internal: inexact division in subgroup count");
    acc /= den;
  }
  return acc;
}

}  // namespace

// (p^n - p^i) / (p^k - p^i) = (p^(n-i) - 1) / (p^(k-i) - 1).
BigInt t1_count(std::uint32_t p, std::size_t n, std::size_t k) {
  static_cast<void>(Modulus(p));
  if (k > n) throw ParameterError("t1_count needs 0 <= k <= n");
  return gaussian_binomial(p, n, k);
}

BigInt t2_count(std::uint32_t p, std::size_t n, std::size_t k) {
  static_cast<void>(Modulus(p));
  if (k < 1 || k > n) throw ParameterError("t2_count needs 1 <= k <= n");
  return gaussian_binomial(p, n - 1, k - 1);
}

BigInt evasion_threshold(std::uint32_t p, std::size_t n, std::size_t k, std::size_t d) {
  if (k < 1 || k > n) throw ParameterError("evasion_threshold needs 1 <= k <= n");
  const BigInt num = d * (big_pow(p, n) - 1);
  const BigInt den = big_pow(p, k) - 1;
  // Strict "below" threshold: |D| < num / den  <=>  |D| * den < num.
  return num / den + (num % den != 0 ? 1 : 0);
}

std::optional<Subgroup> evading_subgroup(Modulus m, std::size_t n, std::span<const VectorP> d_set,
                                         std::size_t k, std::size_t d, std::uint64_t cap) {
  for (const auto& x : d_set) {
    if (x.p() != m.value() || x.size() != n) throw DimensionError("D is not a subset of Z_p^n");
    if (x.is_zero()) throw ParameterError("D must not contain 0^n");
  }
  std::optional<Subgroup> witness;
  for_each_subgroup(
      m, n, k,
      [&](const Subgroup& h) {
        std::size_t hits = 0;
        for (const auto& x : d_set) {
          if (contains(h, x) && ++hits >= d) return true;
        }
        witness = h;
        return false;
      },
      cap);
  return witness;
}

BoundReport bound_report(std::uint32_t p, std::size_t n, std::size_t k) {
  static_cast<void>(Modulus(p));
  if (k < 1 || k >= n) throw ParameterError("bound_report needs 1 <= k < n");
  BoundReport r;
  r.p = p;
  r.n = n;
  r.k = k;
  r.t1 = t1_count(p, n, k);
  r.t2 = t2_count(p, n, k);
  const double spread = std::pow(static_cast<double>(p), static_cast<double>(n - k));
  const double kd = static_cast<double>(k);
  r.lower_adaptive = std::max(kd, std::sqrt(spread));
  r.lower_nonadaptive = std::max(kd, std::sqrt(kd * spread));
  for (std::size_t d = 0; d <= n - k; ++d) {
    const BigInt tq = big_pow(p, n - k - d) + (k + 1) * big_pow(p, d);
    if (d == 0 || tq < r.upper_det) {
      r.upper_det = tq;
      r.best_d = d;
    }
  }
  return r;
}

}  // namespace gsp
