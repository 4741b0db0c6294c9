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
#include <iosfwd>
#include <span>
#include <vector>

#include "gsp/oracle.h"
#include "gsp/qsim/state.h"
#include "gsp/solvers.h"

namespace gsp::qsim {

/// F on the main register after O_f after F^-1: from |0^n⟩|0⟩ produces
/// |T0|^(-1/2) Σ_t |φ_t S^⊥⟩|f(t)⟩. One oracle call.
SparseState simon_subroutine(const HiddenInstance& inst, QCounter& counter,
                             std::size_t max_support = kDefaultMaxSupport);

/// Coherently shrinks the main-register support group H to
/// K = {h ∈ H : h_j = 0}, leaving |g·y⟩ on a freshly appended flag qudit.
/// y must be a nonzero element of H with y_j != 0. No oracle calls.
void shrink_subgroup(SparseState& state, const VectorP& y, std::size_t j);

struct AmplifyReport {
  VectorP element;                  ///< measured nonzero element of K_m
  double success_probability = 0;   ///< 1 - p^-(n-k-m)
  double calibrated_probability = 0;///< after the auxiliary rotation
  std::size_t iterations = 0;
  std::uint64_t oracle_calls = 0;
  double bad_amplitude = 0;         ///< norm of the unsuccessful component before measurement
  double norm_error = 0;            ///< | ||state||^2 - 1 |
};

struct AmplifyOptions {
  std::uint64_t measure_seed = 0;
  std::size_t max_support = kDefaultMaxSupport;
  /// Receives the pre-measurement state when non-null.
  std::ostream* dump = nullptr;
};

/// Given independent y_1..y_m in S^⊥ (m < n-k), returns a nonzero element of
/// K_m, the part of S^⊥ with zeros at the RREF pivots of <Y>, with certainty.
/// Runs one round of amplitude amplification on the preparation
/// A'_m ⊗ R, where R lowers the success probability to the value from which
/// an integral number of iterations lands exactly on the good subspace.
AmplifyReport exact_amplify(const HiddenInstance& inst, std::span<const VectorP> known,
                            QCounter& counter, const AmplifyOptions& options = {});

struct QuantumOptions {
  std::uint64_t measure_seed = 0;
  std::size_t max_support = kDefaultMaxSupport;
  /// Largest p^n accepted before any state is built.
  std::uint64_t max_group_order = 1ull << 12;
  std::ostream* dump = nullptr;
};

struct QuantumResult {
  SolverResult solve;
  std::vector<AmplifyReport> rounds;
};

/// Exact quantum solver: n-k rounds of exact_amplify build a basis Y of
/// S^⊥, and the answer is <Y>^⊥. solve.queries counts oracle calls.
QuantumResult quantum_find_s(const HiddenInstance& inst, QCounter& counter,
                             const QuantumOptions& options = {});

}  // namespace gsp::qsim
