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

#include <complex>
#include <cstddef>
#include <cstdint>
#include <iosfwd>
#include <map>
#include <unordered_map>
#include <vector>

namespace gsp::qsim {

using Amplitude = std::complex<double>;

inline constexpr double kPruneThreshold = 1e-12;
inline constexpr std::size_t kDefaultMaxSupport = std::size_t{1} << 24;

enum class Role { kMain, kLabel, kFlag, kAux };

/// A register of `digits` qudits of dimension `base` each.
struct Register {
  Role role;
  std::uint32_t base;
  std::size_t digits;

  std::uint64_t dim() const;
};

/// Mixed-radix composite basis: the first register is the most significant,
/// and within a register digit 0 is the most significant qudit.
class RegisterLayout {
 public:
  RegisterLayout() = default;

  /// main (p^n) followed by label (p^n).
  static RegisterLayout simon(std::uint32_t p, std::size_t n);

  /// Appends a register as the new least significant one; returns its index.
  std::size_t add(Register r);

  std::size_t size() const { return regs_.size(); }
  const Register& operator[](std::size_t i) const { return regs_[i]; }
  /// Index of the `occurrence`-th register with this role.
  std::size_t find(Role role, std::size_t occurrence = 0) const;

  /// Product of register dimensions; throws ResourceError past 2^64.
  std::uint64_t total_dim() const;
  std::uint64_t stride(std::size_t reg) const { return strides_[reg]; }
  std::uint64_t value(std::uint64_t index, std::size_t reg) const {
    return (index / strides_[reg]) % dims_[reg];
  }
  std::uint64_t with_value(std::uint64_t index, std::size_t reg, std::uint64_t v) const {
    return index - value(index, reg) * strides_[reg] + v * strides_[reg];
  }

 private:
  std::vector<Register> regs_;
  std::vector<std::uint64_t> dims_;
  std::vector<std::uint64_t> strides_;
};

/// Amplitude map over composite basis indices. Entries below kPruneThreshold
/// are dropped after every operation; the norm is never renormalized.
class SparseState {
 public:
  using Map = std::unordered_map<std::uint64_t, Amplitude>;

  /// |index⟩ in the given layout.
  SparseState(RegisterLayout layout, std::uint64_t index = 0,
              std::size_t max_support = kDefaultMaxSupport);

  const RegisterLayout& layout() const { return layout_; }
  const Map& amplitudes() const { return amps_; }
  std::size_t support_size() const { return amps_.size(); }
  std::size_t max_support() const { return max_support_; }

  Amplitude amplitude(std::uint64_t index) const;
  double norm_squared() const;

  /// Installs new amplitudes (pruned); throws ResourceError past max_support.
  void assign(Map amps);
  /// Appends a register in |0⟩ as the least significant one.
  std::size_t append_register(Register r);

  /// Probability of each value of one register.
  std::map<std::uint64_t, double> marginal(std::size_t reg) const;
  /// max |a_i - b_i| over the union of supports.
  double max_deviation(const SparseState& other) const;

  /// `index amplitude_re amplitude_im` lines in index order.
  void dump(std::ostream& os) const;

 private:
  RegisterLayout layout_;
  Map amps_;
  std::size_t max_support_;
};

/// Counts applications of O_f and of its inverse.
struct QCounter {
  std::uint64_t oracle_calls = 0;
};

}  // namespace gsp::qsim
