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
#include <functional>

#include "gsp/oracle.h"
#include "gsp/qsim/state.h"
#include "gsp/vector.h"

namespace gsp::qsim {

/// Quantum Fourier transform over Z_p^digits on one register:
/// F|h⟩ = p^(-digits/2) Σ_g e^{2πi g·h / p} |g⟩, applied qudit by qudit.
/// `inverse` uses the conjugate kernel.
void fourier(SparseState& state, std::size_t reg, bool inverse = false);

/// O_f|g⟩|y⟩ = |g⟩|y + f(g)⟩ on the main and label registers; the inverse
/// subtracts f(g). Either direction counts one oracle call.
void apply_oracle(SparseState& state, const HiddenInstance& inst, QCounter& counter,
                  bool inverse = false);

/// |x⟩|z⟩ -> |x⟩|z + x_j⟩ with x a coordinate of `source` and z a single qudit.
void add_coordinate(SparseState& state, std::size_t source, std::size_t digit,
                    std::size_t target, bool inverse = false);

/// |x⟩|i⟩ -> |x - i y⟩|i⟩ with x in `target`, i a single qudit in `control`.
void subtract_multiple(SparseState& state, std::size_t target, std::size_t control,
                       const VectorP& y, bool inverse = false);

/// |i⟩ -> |c i⟩ on a single-qudit register; c must be a nonzero residue.
void scale_qudit(SparseState& state, std::size_t reg, Residue c, bool inverse = false);

/// Real rotation on a qubit register: |0⟩ -> cos t|0⟩ + sin t|1⟩,
/// |1⟩ -> -sin t|0⟩ + cos t|1⟩.
void rotate_qubit(SparseState& state, std::size_t reg, double angle, bool inverse = false);

/// Negates every amplitude whose basis index satisfies `marked`.
void reflect(SparseState& state, const std::function<bool(std::uint64_t)>& marked);

}  // namespace gsp::qsim
