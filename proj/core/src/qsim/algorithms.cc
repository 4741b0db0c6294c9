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

#include "gsp/qsim/algorithms.h"

#include <cmath>
#include <numbers>
#include <ostream>

#include "gsp/error.h"
#include "gsp/qsim/kernels.h"
#include "gsp/rng.h"

namespace gsp::qsim {

namespace {

// A'_m ⊗ R on registers [main, label, flag_1..flag_m, aux].
class Preparation {
 public:
  Preparation(const HiddenInstance& inst, const Subgroup& known, double aux_angle)
      : inst_(inst), known_(known), aux_angle_(aux_angle) {
    layout_ = RegisterLayout::simon(inst.p(), inst.n());
    for (std::size_t i = 0; i < known.rank(); ++i) layout_.add({Role::kFlag, inst.p(), 1});
    aux_ = layout_.add({Role::kAux, 2, 1});
  }

  const RegisterLayout& layout() const { return layout_; }
  std::size_t aux() const { return aux_; }

  void apply(SparseState& s, QCounter& counter) const {
    fourier(s, kMain, true);
    apply_oracle(s, inst_, counter);
    fourier(s, kMain);
    for (std::size_t i = 0; i < known_.rank(); ++i) {
      const std::size_t flag = kFirstFlag + i;
      // RREF rows have a unit pivot, so no rescaling of the flag is needed.
      add_coordinate(s, kMain, known_.pivots()[i], flag);
      subtract_multiple(s, kMain, flag, known_.basis()[i]);
      fourier(s, flag, true);
    }
    rotate_qubit(s, aux_, aux_angle_);
  }

  void apply_inverse(SparseState& s, QCounter& counter) const {
    rotate_qubit(s, aux_, aux_angle_, true);
    for (std::size_t i = known_.rank(); i-- > 0;) {
      const std::size_t flag = kFirstFlag + i;
      fourier(s, flag);
      subtract_multiple(s, kMain, flag, known_.basis()[i], true);
      add_coordinate(s, kMain, known_.pivots()[i], flag, true);
    }
    fourier(s, kMain, true);
    apply_oracle(s, inst_, counter, true);
    fourier(s, kMain);
  }

 private:
  static constexpr std::size_t kMain = 0;
  static constexpr std::size_t kFirstFlag = 2;

  const HiddenInstance& inst_;
  Subgroup known_;
  double aux_angle_;
  RegisterLayout layout_;
  std::size_t aux_ = 0;
};

}  // namespace

SparseState simon_subroutine(const HiddenInstance& inst, QCounter& counter,
                             std::size_t max_support) {
  SparseState s(RegisterLayout::simon(inst.p(), inst.n()), 0, max_support);
  const std::size_t main = s.layout().find(Role::kMain);
  fourier(s, main, true);
  apply_oracle(s, inst, counter);
  fourier(s, main);
  return s;
}

void shrink_subgroup(SparseState& state, const VectorP& y, std::size_t j) {
  if (j >= y.size() || y[j] == 0) {
    throw ParameterError("shrink_subgroup needs y_j != 0 (j=" + std::to_string(j) + ", y=" +
                         y.to_string() + ")");
  }
  const Modulus m = y.modulus();
  const std::size_t main = state.layout().find(Role::kMain);
  const std::size_t flag = state.append_register({Role::kFlag, m.value(), 1});
  const VectorP unit_y = vec_scale(y, m.inv(y[j]));
  add_coordinate(state, main, j, flag);
  subtract_multiple(state, main, flag, unit_y);
  fourier(state, flag, true);
  if (y[j] != 1) scale_qudit(state, flag, y[j]);
}

AmplifyReport exact_amplify(const HiddenInstance& inst, std::span<const VectorP> known,
                            QCounter& counter, const AmplifyOptions& options) {
  const Modulus m = inst.modulus();
  const std::size_t n = inst.n();
  const std::size_t span = n - inst.k();
  const Subgroup y_span = canonicalize(m, n, known);
  if (y_span.rank() != known.size()) throw ParameterError("known elements are not independent");
  if (known.size() >= span) throw ParameterError("need fewer than n-k known elements");

  const std::uint64_t calls_before = counter.oracle_calls;
  AmplifyReport report{VectorP(m, n)};
  report.success_probability =
      1.0 - std::pow(static_cast<double>(m.value()), -static_cast<double>(span - known.size()));
  const double theta = std::asin(std::sqrt(report.success_probability));
  const double turns = std::numbers::pi / (4.0 * theta) - 0.5;
  report.iterations = turns <= 0 ? 0 : static_cast<std::size_t>(std::ceil(turns));
  const double calibrated = std::numbers::pi / (2.0 * (2.0 * report.iterations + 1.0));
  report.calibrated_probability = std::pow(std::sin(calibrated), 2);
  const double ratio = std::min(1.0, report.calibrated_probability / report.success_probability);
  const Preparation prep(inst, y_span, std::asin(std::sqrt(ratio)));

  const auto& layout = prep.layout();
  const std::size_t aux = prep.aux();
  const auto good = [&](std::uint64_t idx) {
    return layout.value(idx, 0) != 0 && layout.value(idx, aux) == 1;
  };

  SparseState s(layout, 0, options.max_support);
  prep.apply(s, counter);
  for (std::size_t it = 0; it < report.iterations; ++it) {
    reflect(s, good);
    prep.apply_inverse(s, counter);
    reflect(s, [](std::uint64_t idx) { return idx == 0; });
    prep.apply(s, counter);
    reflect(s, [](std::uint64_t) { return true; });
  }

  double bad = 0;
  double good_total = 0;
  std::map<std::uint64_t, double> outcomes;
  for (const auto& [idx, a] : s.amplitudes()) {
    if (good(idx)) {
      outcomes[layout.value(idx, 0)] += std::norm(a);
      good_total += std::norm(a);
    } else {
      bad += std::norm(a);
    }
  }
  report.bad_amplitude = std::sqrt(bad);
  report.norm_error = std::abs(s.norm_squared() - 1.0);
  report.oracle_calls = counter.oracle_calls - calls_before;
  if (options.dump != nullptr) s.dump(*options.dump);
  if (outcomes.empty()) throw Error("amplification left no amplitude on the good subspace");

  Rng rng(options.measure_seed);
  double target = rng.unit() * good_total;
  std::uint64_t picked = outcomes.rbegin()->first;
  for (const auto& [value, prob] : outcomes) {
    if (target < prob) {
      picked = value;
      break;
    }
    target -= prob;
  }
  report.element = VectorP::from_index(m, n, picked);
  if (report.element.is_zero() || coset_reduce(y_span, report.element) != report.element) {
    throw Error("measured element " + report.element.to_string() + " is outside K_m");
  }
  return report;
}

QuantumResult quantum_find_s(const HiddenInstance& inst, QCounter& counter,
                             const QuantumOptions& options) {
  const auto order = checked_pow(inst.p(), inst.n());
  if (!order || *order > options.max_group_order) {
    throw ResourceError("p^n exceeds the simulation budget of " +
                        std::to_string(options.max_group_order));
  }
  const std::uint64_t calls_before = counter.oracle_calls;
  QuantumResult out{SolverResult{Subgroup(inst.modulus(), inst.n()), 0, 0, {}}, {}};
  std::vector<VectorP> ys;
  const std::size_t rounds = inst.n() - inst.k();
  for (std::size_t i = 0; i < rounds; ++i) {
    AmplifyOptions opts{mix_seed(options.measure_seed ^ i), options.max_support, options.dump};
    if (options.dump != nullptr) *options.dump << "# round " << i << '\n';
    out.rounds.push_back(exact_amplify(inst, ys, counter, opts));
    ys.push_back(out.rounds.back().element);
  }
  out.solve.recovered = orthogonal(canonicalize(inst.modulus(), inst.n(), ys));
  out.solve.queries = counter.oracle_calls - calls_before;
  return out;
}

}  // namespace gsp::qsim
