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
#include <optional>
#include <string>
#include <unordered_map>
#include <unordered_set>
#include <vector>

#include "gsp/subgroup.h"
#include "gsp/vector.h"

namespace gsp {

/// A hidden-subgroup instance f: Z_p^n -> Z_p^n, constant exactly on the
/// cosets of `secret`. The label of x is coset_reduce(secret, x), optionally
/// pushed through a seeded bijection (invertible affine map, then a
/// coordinate permutation).
class HiddenInstance {
 public:
  /// Requires 1 <= rank(secret) < n.
  HiddenInstance(Subgroup secret, std::uint64_t label_seed, bool obfuscate);

  /// secret = random_subgroup(p, n, k, subgroup_seed).
  static HiddenInstance generate(Modulus m, std::size_t n, std::size_t k,
                                 std::uint64_t subgroup_seed, std::uint64_t label_seed,
                                 bool obfuscate);

  Modulus modulus() const { return secret_.modulus(); }
  std::uint32_t p() const { return secret_.p(); }
  std::size_t n() const { return secret_.dim(); }
  std::size_t k() const { return secret_.rank(); }
  const Subgroup& secret() const { return secret_; }
  std::uint64_t label_seed() const { return label_seed_; }
  bool obfuscated() const { return obfuscate_; }

  VectorP evaluate(const VectorP& x) const;

  /// The `gsp-instance v1` text form.
  std::string to_text() const;
  static HiddenInstance from_text(std::string_view text);

  friend bool operator==(const HiddenInstance& a, const HiddenInstance& b) {
    return a.secret_ == b.secret_ && a.label_seed_ == b.label_seed_ &&
           a.obfuscate_ == b.obfuscate_;
  }

 private:
  Subgroup secret_;
  std::uint64_t label_seed_;
  bool obfuscate_;
  // Obfuscation: label = permute(matrix * reduced + offset).
  std::vector<VectorP> matrix_;
  VectorP offset_;
  std::vector<std::size_t> permutation_;
};

void write_instance(std::ostream& os, const HiddenInstance& inst);
HiddenInstance read_instance(std::istream& is);

enum class CountMode {
  kDedup,   ///< count distinct queried elements
  kStrict,  ///< count every call
};

struct TraceEntry {
  VectorP element;
  VectorP label;
};

/// Counting and caching wrapper around an instance. Solvers see only the
/// public parameters and query(); the secret stays inside.
class QueryLog {
 public:
  explicit QueryLog(HiddenInstance inst, CountMode mode = CountMode::kDedup,
                    bool record_trace = false);

  Modulus modulus() const { return inst_.modulus(); }
  std::uint32_t p() const { return inst_.p(); }
  std::size_t n() const { return inst_.n(); }
  std::size_t k() const { return inst_.k(); }
  CountMode mode() const { return mode_; }

  VectorP query(const VectorP& x);
  /// The label of x if it was already queried; never counts.
  std::optional<VectorP> cached(const VectorP& x) const;
  bool was_queried(const VectorP& x) const { return cache_.contains(x); }

  std::uint64_t count() const { return count_; }
  std::size_t distinct() const { return cache_.size(); }
  /// Counted queries in order; empty unless tracing was requested.
  const std::vector<TraceEntry>& trace() const { return trace_; }

 private:
  HiddenInstance inst_;
  CountMode mode_;
  bool record_trace_;
  std::uint64_t count_ = 0;
  std::unordered_map<VectorP, VectorP, VectorHash> cache_;
  std::vector<TraceEntry> trace_;
};

/// `<element> <label>` per line, in query order.
void write_trace(std::ostream& os, const std::vector<TraceEntry>& trace);
std::vector<TraceEntry> read_trace(std::istream& is, Modulus m, std::size_t n);

}  // namespace gsp
