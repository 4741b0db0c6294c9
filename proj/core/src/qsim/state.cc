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

#include "gsp/qsim/state.h"

#include <algorithm>
#include <cmath>
#include <iomanip>
#include <ostream>

#include "gsp/error.h"
#include "gsp/vector.h"

namespace gsp::qsim {

std::uint64_t Register::dim() const { return pow_or_throw(base, digits); }

RegisterLayout RegisterLayout::simon(std::uint32_t p, std::size_t n) {
  RegisterLayout l;
  l.add({Role::kMain, p, n});
  l.add({Role::kLabel, p, n});
  return l;
}

std::size_t RegisterLayout::add(Register r) {
  const std::uint64_t d = r.dim();
  for (auto& s : strides_) {
    if (s > UINT64_MAX / d) throw ResourceError("register layout exceeds 64-bit indexing");
    s *= d;
  }
  regs_.push_back(r);
  dims_.push_back(d);
  strides_.push_back(1);
  total_dim();
  return regs_.size() - 1;
}

std::size_t RegisterLayout::find(Role role, std::size_t occurrence) const {
  for (std::size_t i = 0; i < regs_.size(); ++i) {
    if (regs_[i].role == role && occurrence-- == 0) return i;
  }
  throw ParameterError("register layout has no such register");
}

std::uint64_t RegisterLayout::total_dim() const {
  std::uint64_t t = 1;
  for (auto d : dims_) {
    if (t > UINT64_MAX / d) throw ResourceError("register layout exceeds 64-bit indexing");
    t *= d;
  }
  return t;
}

SparseState::SparseState(RegisterLayout layout, std::uint64_t index, std::size_t max_support)
    : layout_(std::move(layout)), max_support_(max_support) {
  if (index >= layout_.total_dim()) throw ParameterError("basis index out of range");
  amps_.emplace(index, Amplitude(1.0, 0.0));
}

Amplitude SparseState::amplitude(std::uint64_t index) const {
  auto it = amps_.find(index);
  return it == amps_.end() ? Amplitude{} : it->second;
}

double SparseState::norm_squared() const {
  double s = 0;
  for (const auto& [idx, a] : amps_) s += std::norm(a);
  return s;
}

void SparseState::assign(Map amps) {
  std::erase_if(amps, [](const auto& kv) { return std::abs(kv.second) < kPruneThreshold; });
  if (amps.size() > max_support_) {
    throw ResourceError("state support " + std::to_string(amps.size()) + " exceeds the budget of " +
                        std::to_string(max_support_));
  }
  amps_ = std::move(amps);
}

std::size_t SparseState::append_register(Register r) {
  const std::uint64_t d = r.dim();
  const std::size_t reg = layout_.add(r);
  Map next;
  next.reserve(amps_.size());
  for (const auto& [idx, a] : amps_) next.emplace(idx * d, a);
  amps_ = std::move(next);
  return reg;
}

std::map<std::uint64_t, double> SparseState::marginal(std::size_t reg) const {
  std::map<std::uint64_t, double> out;
  for (const auto& [idx, a] : amps_) out[layout_.value(idx, reg)] += std::norm(a);
  return out;
}

double SparseState::max_deviation(const SparseState& other) const {
  double dev = 0;
  for (const auto& [idx, a] : amps_) dev = std::max(dev, std::abs(a - other.amplitude(idx)));
  for (const auto& [idx, b] : other.amps_) dev = std::max(dev, std::abs(b - amplitude(idx)));
  return dev;
}

void SparseState::dump(std::ostream& os) const {
  std::vector<std::pair<std::uint64_t, Amplitude>> sorted(amps_.begin(), amps_.end());
  std::sort(sorted.begin(), sorted.end(),
            [](const auto& a, const auto& b) { return a.first < b.first; });
  const auto flags = os.flags();
  const auto prec = os.precision();
  os << std::setprecision(17);
  for (const auto& [idx, a] : sorted) os << idx << ' ' << a.real() << ' ' << a.imag() << '\n';
  os.flags(flags);
  os.precision(prec);
}

}  // namespace gsp::qsim
