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

#include <cmath>
#include <numbers>
#include <sstream>

#include "gsp/error.h"
#include "gsp/qsim/algorithms.h"
#include "gsp/qsim/kernels.h"
#include "gsp/solvers.h"
#include "oracles.h"

using namespace gsp;
using namespace gsp::qsim;

namespace {

const Modulus F2(2);

VectorP v2(std::string_view s) { return VectorP::parse(F2, s.size(), s); }

HiddenInstance fixture(bool obfuscate = false) {
  return HiddenInstance(canonicalize(std::vector{v2("0011"), v2("0110")}), 17, obfuscate);
}

RegisterLayout single_qudit(std::uint32_t p, std::size_t digits = 1) {
  RegisterLayout l;
  l.add({Role::kMain, p, digits});
  return l;
}

// Main-register values with nonzero amplitude.
std::set<std::uint64_t> main_support(const SparseState& s) {
  std::set<std::uint64_t> out;
  for (const auto& [idx, a] : s.amplitudes()) out.insert(s.layout().value(idx, 0));
  return out;
}

gsp::testing::IndexSet index_set(const Subgroup& h) {
  return gsp::testing::brute_span(h.modulus(), h.dim(), h.basis());
}

}  // namespace

TEST(Fourier, HadamardCase) {
  SparseState s(single_qudit(2));
  fourier(s, 0);
  EXPECT_NEAR(s.amplitude(0).real(), 1 / std::sqrt(2.0), 1e-12);
  EXPECT_NEAR(s.amplitude(1).real(), 1 / std::sqrt(2.0), 1e-12);
  EXPECT_NEAR(s.norm_squared(), 1.0, 1e-12);
}

TEST(Fourier, MatchesDenseDft) {
  for (std::uint32_t p : {3u, 5u, 7u}) {
    for (std::uint64_t h = 0; h < p; ++h) {
      for (bool inverse : {false, true}) {
        SparseState s(single_qudit(p), h);
        fourier(s, 0, inverse);
        const double sign = inverse ? -1.0 : 1.0;
        for (std::uint64_t g = 0; g < p; ++g) {
          const Amplitude expect =
              std::polar(1 / std::sqrt(double(p)), sign * 2 * std::numbers::pi * double(g * h) / p);
          EXPECT_LT(std::abs(s.amplitude(g) - expect), 1e-12) << p << " " << g << " " << h;
        }
      }
    }
  }
}

TEST(Fourier, P3OneHasPhases) {
  SparseState s(single_qudit(3), 1);
  fourier(s, 0);
  const Amplitude w = std::polar(1.0, 2 * std::numbers::pi / 3);
  EXPECT_LT(std::abs(s.amplitude(0) - 1 / std::sqrt(3.0)), 1e-12);
  EXPECT_LT(std::abs(s.amplitude(1) - w / std::sqrt(3.0)), 1e-12);
  EXPECT_LT(std::abs(s.amplitude(2) - w * w / std::sqrt(3.0)), 1e-12);
}

TEST(Fourier, MultiDigitUsesDotProduct) {
  // F over Z_3^2 on |h> gives amplitude w^(g.h) / 3.
  const Modulus m(3);
  for (std::uint64_t h = 0; h < 9; ++h) {
    SparseState s(single_qudit(3, 2), h);
    fourier(s, 0);
    for (std::uint64_t g = 0; g < 9; ++g) {
      const auto e = dot(VectorP::from_index(m, 2, g), VectorP::from_index(m, 2, h));
      const Amplitude expect = std::polar(1.0 / 3, 2 * std::numbers::pi * e / 3);
      EXPECT_LT(std::abs(s.amplitude(g) - expect), 1e-12);
    }
  }
}

TEST(Fourier, InverseRestores) {
  const Modulus m(3);
  SparseState s(RegisterLayout::simon(3, 3), 5 * 27 + 4);
  const SparseState before = s;
  fourier(s, 0);
  fourier(s, 1);
  fourier(s, 1, true);
  fourier(s, 0, true);
  EXPECT_LT(s.max_deviation(before), 1e-10);
  EXPECT_EQ(s.support_size(), 1u);
}

TEST(Oracle, BasisStateAndInverse) {
  const auto inst = fixture(true);
  QCounter counter;
  for (const auto& g : gsp::testing::all_vectors(F2, 4)) {
    SparseState s(RegisterLayout::simon(2, 4), g.index() * 16);
    apply_oracle(s, inst, counter);
    ASSERT_EQ(s.support_size(), 1u);
    const auto idx = s.amplitudes().begin()->first;
    EXPECT_EQ(s.layout().value(idx, 1), inst.evaluate(g).index());
  }
  EXPECT_EQ(counter.oracle_calls, 16u);

  const auto inst3 = HiddenInstance::generate(Modulus(3), 3, 1, 4, 4, true);
  SparseState s(RegisterLayout::simon(3, 3), 7 * 27 + 11);
  fourier(s, 0);
  const SparseState before = s;
  QCounter c3;
  apply_oracle(s, inst3, c3);
  EXPECT_GT(s.max_deviation(before), 0.1);
  apply_oracle(s, inst3, c3, true);
  EXPECT_LT(s.max_deviation(before), 1e-12);
  EXPECT_EQ(c3.oracle_calls, 2u);
}

TEST(Oracle, CosetsOnUniformMain) {
  const auto inst = fixture(true);
  SparseState s(RegisterLayout::simon(2, 4));
  fourier(s, 0);
  QCounter counter;
  apply_oracle(s, inst, counter);
  std::map<std::uint64_t, std::set<std::uint64_t>> by_label;
  for (const auto& [idx, a] : s.amplitudes()) {
    by_label[s.layout().value(idx, 1)].insert(s.layout().value(idx, 0));
  }
  ASSERT_EQ(by_label.size(), 4u);
  const auto secret = index_set(inst.secret());
  for (const auto& [label, members] : by_label) {
    ASSERT_EQ(members.size(), 4u);
    const auto base = VectorP::from_index(F2, 4, *members.begin());
    for (auto x : members) EXPECT_TRUE(secret.contains(vec_sub(VectorP::from_index(F2, 4, x), base).index()));
  }
}

TEST(Simon, FixtureSupport) {
  QCounter counter;
  const auto s = simon_subroutine(fixture(true), counter);
  EXPECT_EQ(counter.oracle_calls, 1u);
  EXPECT_EQ(main_support(s), (std::set<std::uint64_t>{0b0000, 0b1000, 0b0111, 0b1111}));
  for (const auto& [value, prob] : s.marginal(0)) EXPECT_NEAR(prob, 0.25, 1e-10) << value;
  EXPECT_NEAR(s.norm_squared(), 1.0, 1e-10);
}

TEST(Simon, SupportIsOrthogonalGroup) {
  for (std::uint32_t p : {2u, 3u}) {
    const Modulus m(p);
    for (std::size_t n = 2; n <= 4; ++n) {
      for (std::size_t k = 1; k < n; ++k) {
        for (std::uint64_t seed = 0; seed < 3; ++seed) {
          const auto inst = HiddenInstance::generate(m, n, k, seed, seed, true);
          QCounter counter;
          const auto s = simon_subroutine(inst, counter);
          const auto perp = gsp::testing::brute_orthogonal(m, n, index_set(inst.secret()));
          const auto marg = s.marginal(0);
          ASSERT_EQ(marg.size(), perp.size());
          for (const auto& [value, prob] : marg) {
            EXPECT_TRUE(perp.contains(value));
            EXPECT_NEAR(prob, 1.0 / perp.size(), 1e-10);
          }
          if (k == n - 1) EXPECT_EQ(marg.size(), p);
        }
      }
    }
  }
}

TEST(Shrink, FixtureExample) {
  QCounter counter;
  auto s = simon_subroutine(fixture(), counter);
  shrink_subgroup(s, v2("1000"), 0);
  EXPECT_EQ(main_support(s), (std::set<std::uint64_t>{0b0000, 0b0111}));
  EXPECT_NEAR(s.norm_squared(), 1.0, 1e-10);
  EXPECT_EQ(counter.oracle_calls, 1u);
  EXPECT_THROW(shrink_subgroup(s, v2("0111"), 0), ParameterError);
}

TEST(Shrink, SupportLawAndFlagIsBasisStatePerBranch) {
  for (std::uint32_t p : {2u, 3u, 5u}) {
    const Modulus m(p);
    for (std::size_t n = 2; gsp::testing::group_order(p, n) <= 81; ++n) {
      for (std::size_t k = 1; k + 1 < n; ++k) {
        for (std::uint64_t seed = 0; seed < 3; ++seed) {
          const auto inst = HiddenInstance::generate(m, n, k, seed, seed + 9, true);
          const Subgroup perp = orthogonal(inst.secret());
          // A non-unit multiple of a basis row exercises the flag rescaling.
          const VectorP y = vec_scale(perp.basis().back(), p == 2 ? 1 : p - 1);
          const std::size_t j = perp.pivots().back();
          QCounter counter;
          auto s = simon_subroutine(inst, counter);
          shrink_subgroup(s, y, j);
          EXPECT_NEAR(s.norm_squared(), 1.0, 1e-10);

          std::set<std::uint64_t> expect;
          for (const auto& h : perp.elements()) {
            if (h[j] == 0) expect.insert(h.index());
          }
          EXPECT_EQ(main_support(s), expect);
          for (const auto& [value, prob] : s.marginal(0)) {
            EXPECT_NEAR(prob, 1.0 / expect.size(), 1e-10);
          }
          const std::size_t flag = s.layout().find(Role::kFlag);
          std::map<std::uint64_t, std::set<std::uint64_t>> flag_by_label;
          for (const auto& [idx, a] : s.amplitudes()) {
            flag_by_label[s.layout().value(idx, 1)].insert(s.layout().value(idx, flag));
          }
          for (const auto& [label, flags] : flag_by_label) EXPECT_EQ(flags.size(), 1u);
        }
      }
    }
  }
}

TEST(Amplify, SingleElementCase) {
  for (std::uint64_t seed = 0; seed < 5; ++seed) {
    const auto inst = HiddenInstance::generate(F2, 2, 1, seed, seed, true);
    QCounter counter;
    const auto r = exact_amplify(inst, {}, counter);
    EXPECT_DOUBLE_EQ(r.success_probability, 0.5);
    EXPECT_EQ(r.iterations, 1u);
    EXPECT_LT(r.bad_amplitude, 1e-9);
    EXPECT_EQ(r.element, orthogonal(inst.secret()).basis()[0]);
  }
}

TEST(Amplify, ElementIsNewAndOrthogonal) {
  for (std::uint32_t p : {2u, 3u}) {
    const Modulus m(p);
    for (std::size_t n = 2; n <= 4; ++n) {
      for (std::size_t k = 1; k < n; ++k) {
        const auto inst = HiddenInstance::generate(m, n, k, n * 10 + k, 3, true);
        const auto perp = index_set(orthogonal(inst.secret()));
        std::vector<VectorP> known;
        for (std::size_t i = 0; i < n - k; ++i) {
          QCounter counter;
          const auto r = exact_amplify(inst, known, counter, {i, kDefaultMaxSupport, nullptr});
          EXPECT_LT(r.bad_amplitude, 1e-9);
          EXPECT_LT(r.norm_error, 1e-9);
          EXPECT_LE(r.iterations, 1u);
          EXPECT_EQ(r.oracle_calls, 1 + 2 * r.iterations);
          EXPECT_TRUE(perp.contains(r.element.index()));
          EXPECT_FALSE(contains(canonicalize(m, n, known), r.element));
          known.push_back(r.element);
        }
        QCounter counter;
        EXPECT_THROW(exact_amplify(inst, known, counter), ParameterError);
      }
    }
  }
}

TEST(Amplify, RejectsDependentKnown) {
  const auto inst = HiddenInstance::generate(Modulus(3), 4, 1, 1, 1, false);
  const auto y = orthogonal(inst.secret()).basis()[0];
  QCounter counter;
  const std::vector<VectorP> known{y, vec_scale(y, 2)};
  EXPECT_THROW(exact_amplify(inst, known, counter), ParameterError);
}

TEST(QuantumFindS, Fixture) {
  for (bool obf : {false, true}) {
    QCounter counter;
    const auto r = quantum_find_s(fixture(obf), counter);
    EXPECT_EQ(r.solve.recovered.serialize(), "p=2 n=4 rows=0101;0011");
    EXPECT_EQ(r.rounds.size(), 2u);
    EXPECT_EQ(r.solve.queries, counter.oracle_calls);
    EXPECT_LE(r.solve.queries, 16u);
  }
}

TEST(QuantumFindS, AgreesWithBruteForce) {
  for (std::uint32_t p : {2u, 3u}) {
    const Modulus m(p);
    for (std::size_t n = 2; gsp::testing::group_order(p, n) <= 81; ++n) {
      for (std::size_t k = 1; k < n; ++k) {
        for (std::uint64_t seed = 0; seed < 4; ++seed) {
          const auto inst = HiddenInstance::generate(m, n, k, seed, seed * 3, true);
          QCounter counter;
          const auto r = quantum_find_s(inst, counter, {seed, kDefaultMaxSupport, 1u << 12, nullptr});
          QueryLog log(inst);
          EXPECT_EQ(r.solve.recovered, brute_force_solve(log).recovered);
          EXPECT_LE(r.solve.queries, 8 * (n - k));
          for (const auto& round : r.rounds) EXPECT_LT(round.bad_amplitude, 1e-9);
        }
      }
    }
  }
}

TEST(QuantumFindS, ThreeCallsPerRound) {
  // One amplification step per round: A, A^-1, A.
  for (std::size_t n = 3; n <= 6; ++n) {
    const auto inst = HiddenInstance::generate(F2, n, 1, n, n, true);
    QCounter counter;
    EXPECT_EQ(quantum_find_s(inst, counter).solve.queries, 3 * (n - 1));
  }
}

TEST(QuantumFindS, FewerCallsThanClassical) {
  // At p=2, k=1 the deterministic solver can stay at or below 3(n-1) calls
  // up to n=7; from n=8 on the quantum count is strictly smaller every time.
  for (std::size_t n : {8u}) {
    for (std::uint64_t seed = 0; seed < 3; ++seed) {
      const auto inst = HiddenInstance::generate(F2, n, 1, seed, seed, true);
      QCounter counter;
      const auto q = quantum_find_s(inst, counter);
      QueryLog log(inst);
      const auto c = find_s(log);
      EXPECT_EQ(q.solve.recovered, c.recovered);
      EXPECT_LT(q.solve.queries, c.queries) << "n=" << n << " seed=" << seed;
    }
  }
}

TEST(QuantumFindS, DumpAndLimits) {
  std::ostringstream dump;
  QCounter counter;
  quantum_find_s(fixture(), counter, {0, kDefaultMaxSupport, 1u << 12, &dump});
  const std::string text = dump.str();
  EXPECT_NE(text.find("# round 0\n"), std::string::npos);
  EXPECT_NE(text.find("# round 1\n"), std::string::npos);

  const auto big = HiddenInstance::generate(F2, 13, 2, 0, 0, false);
  EXPECT_THROW(quantum_find_s(big, counter), ResourceError);
  const auto mid = HiddenInstance::generate(F2, 6, 2, 0, 0, false);
  EXPECT_THROW(quantum_find_s(mid, counter, {0, 8, 1u << 12, nullptr}), ResourceError);
}

TEST(SparseState, DumpFormat) {
  SparseState s(single_qudit(2));
  fourier(s, 0);
  std::ostringstream os;
  s.dump(os);
  std::istringstream in(os.str());
  std::uint64_t idx;
  double re, im;
  ASSERT_TRUE(in >> idx >> re >> im);
  EXPECT_EQ(idx, 0u);
  EXPECT_NEAR(re, 1 / std::sqrt(2.0), 1e-15);
  ASSERT_TRUE(in >> idx >> re >> im);
  EXPECT_EQ(idx, 1u);
  EXPECT_FALSE(in >> idx);
}
