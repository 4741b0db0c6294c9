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

#include "gsp/qsim/kernels.h"

#include <cmath>
#include <numbers>
#include <vector>

#include "gsp/error.h"

namespace gsp::qsim {

namespace {

template <typename Fn>
void permute(SparseState& state, Fn&& map_index) {
  SparseState::Map next;
  next.reserve(state.support_size());
  for (const auto& [idx, a] : state.amplitudes()) next.emplace(map_index(idx), a);
  state.assign(std::move(next));
}

std::uint64_t digit_stride(const Register& r, std::size_t digit) {
  return pow_or_throw(r.base, r.digits - 1 - digit);
}

void check_reg(const SparseState& state, std::size_t reg) {
  if (reg >= state.layout().size()) throw ParameterError("register index out of range");
}

}  // namespace

void fourier(SparseState& state, std::size_t reg, bool inverse) {
  check_reg(state, reg);
  const Register r = state.layout()[reg];
  const std::uint32_t p = r.base;
  std::vector<Amplitude> root(p);
  const double sign = inverse ? -1.0 : 1.0;
  for (std::uint32_t t = 0; t < p; ++t) {
    root[t] = std::polar(1.0 / std::sqrt(static_cast<double>(p)),
                         sign * 2.0 * std::numbers::pi * t / p);
  }
  for (std::size_t digit = 0; digit < r.digits; ++digit) {
    const std::uint64_t stride = state.layout().stride(reg) * digit_stride(r, digit);
    SparseState::Map next;
    next.reserve(state.support_size() * p);
    for (const auto& [idx, a] : state.amplitudes()) {
      const std::uint64_t h = (idx / stride) % p;
      const std::uint64_t base = idx - h * stride;
      for (std::uint32_t g = 0; g < p; ++g) {
        next[base + g * stride] += a * root[(g * h) % p];
      }
    }
    state.assign(std::move(next));
  }
}

void apply_oracle(SparseState& state, const HiddenInstance& inst, QCounter& counter,
                  bool inverse) {
  const auto& layout = state.layout();
  const std::size_t main = layout.find(Role::kMain);
  const std::size_t label = layout.find(Role::kLabel);
  const Modulus m = inst.modulus();
  const std::size_t n = inst.n();
  if (layout[main].base != m.value() || layout[main].digits != n ||
      layout[label].base != m.value() || layout[label].digits != n) {
    throw DimensionError("state registers do not match the instance");
  }
  const std::uint64_t order = layout[main].dim();
  std::vector<VectorP> table;
  table.reserve(order);
  for (std::uint64_t g = 0; g < order; ++g) {
    table.push_back(inst.evaluate(VectorP::from_index(m, n, g)));
  }
  permute(state, [&](std::uint64_t idx) {
    const VectorP current = VectorP::from_index(m, n, layout.value(idx, label));
    const VectorP& f = table[layout.value(idx, main)];
    const VectorP next = inverse ? vec_sub(current, f) : vec_add(current, f);
    return layout.with_value(idx, label, next.index());
  });
  ++counter.oracle_calls;
}

void add_coordinate(SparseState& state, std::size_t source, std::size_t digit,
                    std::size_t target, bool inverse) {
  check_reg(state, source);
  check_reg(state, target);
  const auto& layout = state.layout();
  const Register& src = layout[source];
  if (digit >= src.digits || layout[target].digits != 1 || layout[target].base != src.base) {
    throw ParameterError("add_coordinate needs a single-qudit target of the same base");
  }
  const std::uint64_t p = src.base;
  const std::uint64_t stride = digit_stride(src, digit);
  permute(state, [&](std::uint64_t idx) {
    const std::uint64_t x = (layout.value(idx, source) / stride) % p;
    const std::uint64_t z = layout.value(idx, target);
    const std::uint64_t next = inverse ? (z + p - x) % p : (z + x) % p;
    return layout.with_value(idx, target, next);
  });
}

void subtract_multiple(SparseState& state, std::size_t target, std::size_t control,
                       const VectorP& y, bool inverse) {
  check_reg(state, target);
  check_reg(state, control);
  const auto& layout = state.layout();
  const Register& tgt = layout[target];
  if (tgt.base != y.p() || tgt.digits != y.size() || layout[control].digits != 1) {
    throw ParameterError("subtract_multiple register shapes do not match");
  }
  const Modulus m = y.modulus();
  permute(state, [&](std::uint64_t idx) {
    const auto i = static_cast<Residue>(layout.value(idx, control));
    VectorP x = VectorP::from_index(m, y.size(), layout.value(idx, target));
    x.add_scaled(y, inverse ? i : m.neg(i));
    return layout.with_value(idx, target, x.index());
  });
}

void scale_qudit(SparseState& state, std::size_t reg, Residue c, bool inverse) {
  check_reg(state, reg);
  const auto& layout = state.layout();
  if (layout[reg].digits != 1) throw ParameterError("scale_qudit needs a single-qudit register");
  const Modulus m(layout[reg].base);
  if (c % m.value() == 0) throw ParameterError("scale factor must be invertible");
  const Residue factor = inverse ? m.inv(c % m.value()) : c % m.value();
  permute(state, [&](std::uint64_t idx) {
    const auto v = static_cast<Residue>(layout.value(idx, reg));
    return layout.with_value(idx, reg, m.mul(v, factor));
  });
}

void rotate_qubit(SparseState& state, std::size_t reg, double angle, bool inverse) {
  check_reg(state, reg);
  const auto& layout = state.layout();
  if (layout[reg].dim() != 2) throw ParameterError("rotate_qubit needs a qubit register");
  const double t = inverse ? -angle : angle;
  const double c = std::cos(t);
  const double s = std::sin(t);
  SparseState::Map next;
  next.reserve(state.support_size() * 2);
  for (const auto& [idx, a] : state.amplitudes()) {
    const std::uint64_t zero = layout.with_value(idx, reg, 0);
    const std::uint64_t one = layout.with_value(idx, reg, 1);
    if (layout.value(idx, reg) == 0) {
      next[zero] += c * a;
      next[one] += s * a;
    } else {
      next[zero] -= s * a;
      next[one] += c * a;
    }
  }
  state.assign(std::move(next));
}

void reflect(SparseState& state, const std::function<bool(std::uint64_t)>& marked) {
  SparseState::Map next = state.amplitudes();
  for (auto& [idx, a] : next) {
    if (marked(idx)) a = -a;
  }
  state.assign(std::move(next));
}

}  // namespace gsp::qsim
