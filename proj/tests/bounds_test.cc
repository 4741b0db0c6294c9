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

#include <gtest/gtest.h>

#include <vector>

#include "gsp/bounds.h"
#include "gsp/error.h"
#include "gsp/rng.h"
#include "oracles.h"

using namespace gsp;

namespace {

BigInt power(std::uint32_t p, std::size_t e) {
  BigInt r = 1;
  for (std::size_t i = 0; i < e; ++i) r *= p;
  return r;
}

// Full products, divided once at the end.
BigInt t1_by_products(std::uint32_t p, std::size_t n, std::size_t k) {
  BigInt num = 1, den = 1;
  for (std::size_t i = 0; i < k; ++i) {
    num *= power(p, n) - power(p, i);
    den *= power(p, k) - power(p, i);
  }
  EXPECT_EQ(num % den, 0);
  return num / den;
}

BigInt t2_by_products(std::uint32_t p, std::size_t n, std::size_t k) {
  BigInt num = 1, den = 1;
  for (std::size_t i = 1; i < k; ++i) {
    num *= power(p, n) - power(p, i);
    den *= power(p, k) - power(p, i);
  }
  EXPECT_EQ(num % den, 0);
  return num / den;
}

}  // namespace

TEST(Counts, Examples) {
  EXPECT_EQ(t1_count(2, 4, 2), 35);
  EXPECT_EQ(t1_count(2, 2, 1), 3);
  EXPECT_EQ(t1_count(5, 6, 6), 1);
  EXPECT_EQ(t1_count(3, 4, 0), 1);
  EXPECT_EQ(t2_count(2, 4, 2), 7);
  EXPECT_EQ(t2_count(7, 9, 1), 1);
  EXPECT_THROW(t1_count(4, 3, 1), ParameterError);
  EXPECT_THROW(t2_count(2, 3, 0), ParameterError);
}

TEST(Counts, MatchEnumeration) {
  for (std::uint32_t p : {2u, 3u}) {
    const Modulus m(p);
    for (std::size_t n = 1; n <= 4; ++n) {
      for (std::size_t k = 0; k <= n; ++k) {
        const auto groups = gsp::testing::brute_subgroups(m, n, k);
        EXPECT_EQ(t1_count(p, n, k), groups.size()) << p << " " << n << " " << k;
        if (k == 0) continue;
        // Subgroups through e = 0...01.
        std::size_t through = 0;
        for (const auto& h : groups) through += h.contains(1);
        EXPECT_EQ(t2_count(p, n, k), through) << p << " " << n << " " << k;
      }
    }
  }
}

TEST(Counts, MatchProductFormulas) {
  for (std::uint32_t p : {2u, 3u, 5u, 7u}) {
    for (std::size_t n = 1; n <= 12; ++n) {
      for (std::size_t k = 1; k <= n; ++k) {
        EXPECT_EQ(t1_count(p, n, k), t1_by_products(p, n, k));
        EXPECT_EQ(t2_count(p, n, k), t2_by_products(p, n, k));
      }
    }
  }
}

TEST(Counts, DoubleCountingIdentity) {
  for (std::uint32_t p : {2u, 3u, 5u, 7u}) {
    for (std::size_t n = 1; n <= 12; ++n) {
      for (std::size_t k = 1; k <= n; ++k) {
        EXPECT_EQ(t1_count(p, n, k) * (power(p, k) - 1), t2_count(p, n, k) * (power(p, n) - 1));
      }
    }
  }
}

TEST(Counts, LargeParametersStayExact) {
  const BigInt a = t1_count(65521, 20, 10);
  EXPECT_EQ(a * (power(65521, 10) - 1), t2_count(65521, 20, 10) * (power(65521, 20) - 1));
}

TEST(Evasion, Threshold) {
  EXPECT_EQ(evasion_threshold(2, 4, 2, 2), 10);
  EXPECT_EQ(evasion_threshold(2, 4, 1, 1), 15);
  EXPECT_EQ(evasion_threshold(3, 3, 2, 1), 4);  // 26/8 = 3.25
}

TEST(Evasion, EmptySetAlwaysEvaded) {
  const auto w = evading_subgroup(Modulus(2), 4, {}, 2, 1);
  ASSERT_TRUE(w.has_value());
  EXPECT_EQ(w->rank(), 2u);
}

TEST(Evasion, NoneWhenEverythingIsHit) {
  std::vector<VectorP> d;
  for (std::uint64_t i = 1; i < 16; ++i) d.push_back(VectorP::from_index(Modulus(2), 4, i));
  EXPECT_FALSE(evading_subgroup(Modulus(2), 4, d, 2, 3).has_value());
  EXPECT_TRUE(evading_subgroup(Modulus(2), 4, d, 2, 4).has_value());
}

TEST(Evasion, RejectsOrigin) {
  std::vector<VectorP> d{VectorP(Modulus(2), 4)};
  EXPECT_THROW(evading_subgroup(Modulus(2), 4, d, 2, 1), ParameterError);
}

TEST(Evasion, WitnessBelowThreshold) {
  const Modulus m(2);
  for (std::size_t k : {1u, 2u}) {
    for (std::size_t d : {1u, 2u}) {
      const auto limit = static_cast<std::uint64_t>(evasion_threshold(2, 4, k, d));
      Rng rng(k * 10 + d);
      for (int trial = 0; trial < 100; ++trial) {
        // A random subset of nonzero elements with |D| < threshold.
        std::vector<std::uint64_t> pool;
        for (std::uint64_t i = 1; i < 16; ++i) pool.push_back(i);
        for (std::size_t i = pool.size(); i > 1; --i) std::swap(pool[i - 1], pool[rng.uniform(i)]);
        const auto size = std::min<std::uint64_t>(pool.size(), rng.uniform(limit));
        std::vector<VectorP> dset;
        for (std::uint64_t i = 0; i < size; ++i) dset.push_back(VectorP::from_index(m, 4, pool[i]));
        const auto w = evading_subgroup(m, 4, dset, k, d);
        ASSERT_TRUE(w.has_value());
        std::size_t hits = 0;
        const auto members = gsp::testing::brute_span(m, 4, w->basis());
        for (const auto& x : dset) hits += members.contains(x.index());
        EXPECT_LT(hits, d);
      }
    }
  }
}

TEST(BoundReport, Example) {
  const auto r = bound_report(2, 4, 2);
  EXPECT_EQ(r.upper_det, 7);
  EXPECT_EQ(r.best_d, 0u);
  EXPECT_EQ(r.t1, 35);
  EXPECT_EQ(r.t2, 7);
  EXPECT_DOUBLE_EQ(r.lower_adaptive, 2.0);
  EXPECT_DOUBLE_EQ(r.lower_nonadaptive, std::sqrt(8.0));
}

TEST(BoundReport, CurvesAreOrdered) {
  for (std::uint32_t p : {2u, 3u, 5u}) {
    for (std::size_t n = 2; n <= 14; ++n) {
      for (std::size_t k = 1; k < n; ++k) {
        const auto r = bound_report(p, n, k);
        EXPECT_LE(r.lower_adaptive, r.lower_nonadaptive);
        EXPECT_LE(r.lower_nonadaptive, static_cast<double>(r.upper_det));
      }
    }
  }
}

TEST(BoundReport, SimonCaseRatioIsBounded) {
  for (std::size_t n = 2; n <= 20; ++n) {
    const auto r = bound_report(2, n, 1);
    const double ratio = static_cast<double>(r.upper_det) / std::sqrt(std::pow(2.0, n));
    EXPECT_LE(ratio, 4.0) << n;
    EXPECT_GE(ratio, 1.0) << n;
  }
}
