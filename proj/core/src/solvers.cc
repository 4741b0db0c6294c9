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

#include "gsp/solvers.h"

#include <cassert>
#include <cmath>
#include <unordered_map>

#include "gsp/error.h"
#include "gsp/rng.h"

namespace gsp {

namespace {

// Solvers never re-ask the oracle for a label they already hold, so dedup
// and strict accounting agree on every solver run.
VectorP ask(QueryLog& log, const VectorP& x) {
  if (auto label = log.cached(x)) return *std::move(label);
  return log.query(x);
}

// label -> first element seen with that label
class LabelIndex {
 public:
  void add(const VectorP& element, const VectorP& label) { map_.emplace(label, element); }

  const VectorP* find(const VectorP& label) const {
    auto it = map_.find(label);
    return it == map_.end() ? nullptr : &it->second;
  }

 private:
  std::unordered_map<VectorP, VectorP, VectorHash> map_;
};

LabelIndex index_group(QueryLog& log, const Subgroup& g) {
  LabelIndex idx;
  for (const auto& e : g.elements()) idx.add(e, ask(log, e));
  return idx;
}

// Adds a collision difference to the known part of the hidden subgroup.
Subgroup grow(const Subgroup& known, const VectorP& diff, std::size_t k) {
  Subgroup next = extend(known, diff);
  if (next.rank() == known.rank()) {
    throw PromiseViolation("collision difference " + diff.to_string() +
                           " is already in the known subgroup");
  }
  if (next.rank() > k) {
    throw PromiseViolation("collisions span more than rank k = " + std::to_string(k));
  }
  return next;
}

SolverResult finish(const QueryLog& log, Subgroup recovered, std::size_t d) {
  return SolverResult{std::move(recovered), log.count(), d, log.trace()};
}

}  // namespace

std::size_t choose_d(std::uint32_t p, std::size_t n, std::size_t k) {
  if (k < 1 || k >= n) throw ParameterError("choose_d needs 1 <= k < n");
  const std::size_t span = n - k;
  // p^e >= k, saturating at 64 bits (k is far smaller than 2^64).
  auto reaches_k = [&](std::size_t e) {
    auto v = checked_pow(p, e);
    return !v || *v >= k;
  };
  if (!reaches_k(span)) return 0;
  std::size_t d = 0;
  while (2 * (d + 1) <= span && reaches_k(span - 2 * (d + 1))) ++d;
  return d;
}

std::uint64_t det_query_bound(std::uint32_t p, std::size_t n, std::size_t k, std::size_t d) {
  if (k < 1 || k >= n || d > n - k) throw ParameterError("det_query_bound needs 1 <= k < n, d <= n-k");
  return pow_or_throw(p, n - k - d) + (k + 1) * pow_or_throw(p, d);
}

FoundGroup find_group(QueryLog& log, const Subgroup& a, const Subgroup& s1, std::size_t d) {
  const Modulus m = log.modulus();
  const std::size_t n = log.n();
  const std::size_t k = log.k();
  if (d == 0) return {Subgroup(m, n), s1};

  auto [prev, known] = find_group(log, a, s1, d - 1);
  const LabelIndex a_labels = index_group(log, a);
  const LabelIndex prev_labels = index_group(log, prev);

  while (true) {
    VectorP u(m, n);
    while (true) {
      const Subgroup blocked = sum(sum(known, a), prev);
      if (blocked.is_full()) {
        throw PromiseViolation("no element left outside S' + A + B'");
      }
      u = blocked.smallest_outside();
      const VectorP label = ask(log, u);
      const VectorP* hit = prev_labels.find(label);
      if (hit == nullptr) break;
      known = grow(known, vec_sub(*hit, u), k);
    }

    Subgroup grown = extend(prev, u);
    const auto elements = grown.elements();
    std::vector<VectorP> labels;
    labels.reserve(elements.size());
    for (const auto& e : elements) labels.push_back(ask(log, e));

    const VectorP* partner = nullptr;
    std::size_t at = 0;
    for (; at < elements.size(); ++at) {
      if (elements[at].is_zero()) continue;
      if ((partner = a_labels.find(labels[at]))) break;
    }
    if (partner != nullptr) {
      known = grow(known, vec_sub(*partner, elements[at]), k);
      continue;
    }

#ifndef NDEBUG
    assert(grown.rank() == d);
    assert(intersect(a, grown).is_trivial());
    assert(is_subgroup_of(s1, known));
    for (const auto& e : elements) assert(log.was_queried(e));
#endif
    return {std::move(grown), std::move(known)};
  }
}

SolverResult find_s(QueryLog& log, std::size_t d) {
  const Modulus m = log.modulus();
  const std::size_t n = log.n();
  const std::size_t k = log.k();
  if (d > n - k) throw ParameterError("d must lie in [0, n-k]");
  const Subgroup trivial(m, n);

  // The rank-(n-k-d) group is built first, against a trivial partner, so its
  // construction never pays for abandoned generators. The rank-d group is
  // built second; its abandoned generators and the coset scans below both
  // cost at most p^d each.
  auto [large, s1] = find_group(log, trivial, trivial, n - k - d);
  auto [small, s2] = find_group(log, large, s1, d);

  const Subgroup v = sum(large, small);
  const Subgroup w = complement(sum(v, s2));
  const LabelIndex large_labels = index_group(log, large);
  const auto small_elements = small.elements();

  Subgroup known = s2;
  for (const auto& wi : w.basis()) {
    std::vector<VectorP> coset;
    std::vector<VectorP> labels;
    coset.reserve(small_elements.size());
    for (const auto& b : small_elements) {
      coset.push_back(vec_add(b, wi));
      labels.push_back(ask(log, coset.back()));
    }
    const VectorP* partner = nullptr;
    std::size_t at = 0;
    for (; at < coset.size(); ++at) {
      if ((partner = large_labels.find(labels[at]))) break;
    }
    if (partner == nullptr) {
      throw PromiseViolation("coset of " + wi.to_string() + " has no collision with the large group");
    }
    known = grow(known, vec_sub(coset[at], *partner), k);
  }
  if (known.rank() != k) {
    throw PromiseViolation("recovered rank " + std::to_string(known.rank()) + " differs from k");
  }
  return finish(log, std::move(known), d);
}

SolverResult find_s(QueryLog& log) { return find_s(log, choose_d(log.p(), log.n(), log.k())); }

SolverResult brute_force_solve(QueryLog& log, std::uint64_t cap) {
  const Modulus m = log.modulus();
  const std::size_t n = log.n();
  const VectorP zero(m, n);
  const VectorP zero_label = ask(log, zero);
  std::vector<VectorP> colliders;
  for_each_vector(
      m, n,
      [&](const VectorP& x) {
        if (ask(log, x) == zero_label) colliders.push_back(x);
      },
      cap);
  Subgroup s = canonicalize(m, n, colliders);
  if (s.rank() != log.k() || s.order() != colliders.size()) {
    throw PromiseViolation("colliders of 0^n do not form a rank-k subgroup");
  }
  return finish(log, std::move(s), 0);
}

BirthdayResult birthday_solve(QueryLog& log, std::uint64_t seed, double multiplier) {
  const Modulus m = log.modulus();
  const std::size_t n = log.n();
  const std::size_t k = log.k();
  const double work = static_cast<double>(k) * std::pow(static_cast<double>(log.p()),
                                                        static_cast<double>(n - k));
  const auto budget = static_cast<std::uint64_t>(std::ceil(multiplier * std::sqrt(work)));

  Rng rng(seed);
  LabelIndex seen;
  Subgroup known(m, n);
  for (std::uint64_t i = 0; i < budget; ++i) {
    std::vector<Residue> coords(n);
    for (auto& c : coords) c = static_cast<Residue>(rng.uniform(m.value()));
    VectorP x(m, std::move(coords));
    const VectorP label = ask(log, x);
    if (const VectorP* first = seen.find(label); first != nullptr && *first != x) {
      known = extend(known, vec_sub(x, *first));
      if (known.rank() > k) throw PromiseViolation("collisions span more than rank k");
    } else {
      seen.add(x, label);
    }
  }
  const bool ok = known.rank() == k;
  return BirthdayResult{ok, finish(log, std::move(known), 0)};
}

}  // namespace gsp
