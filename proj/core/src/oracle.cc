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

#include "gsp/oracle.h"

#include <charconv>
#include <istream>
#include <numeric>
#include <ostream>
#include <sstream>

#include "gsp/enumerate.h"
#include "gsp/error.h"
#include "gsp/rng.h"

namespace gsp {

namespace {

constexpr std::string_view kInstanceHeader = "gsp-instance v1";

std::string_view expect_field(std::string_view line, std::string_view key) {
  if (!line.starts_with(key) || line.size() <= key.size() || line[key.size()] != '=') {
    throw FormatError("expected '" + std::string(key) + "=...', got '" + std::string(line) + "'");
  }
  return line.substr(key.size() + 1);
}

std::uint64_t parse_u64(std::string_view s) {
  std::uint64_t v = 0;
  auto [ptr, ec] = std::from_chars(s.data(), s.data() + s.size(), v);
  if (s.empty() || ec != std::errc() || ptr != s.data() + s.size()) {
    throw FormatError("bad integer '" + std::string(s) + "'");
  }
  return v;
}

}  // namespace

HiddenInstance::HiddenInstance(Subgroup secret, std::uint64_t label_seed, bool obfuscate)
    : secret_(std::move(secret)),
      label_seed_(label_seed),
      obfuscate_(obfuscate),
      offset_(secret_.modulus(), secret_.dim()) {
  if (secret_.rank() < 1 || secret_.rank() >= secret_.dim()) {
    throw ParameterError("the hidden subgroup must satisfy 1 <= k < n, got k=" +
                         std::to_string(secret_.rank()) + " n=" + std::to_string(secret_.dim()));
  }
  if (!obfuscate_) return;

  const Modulus m = secret_.modulus();
  const std::size_t n = secret_.dim();
  Rng rng(mix_seed(label_seed));
  auto draw = [&] {
    std::vector<Residue> c(n);
    for (auto& r : c) r = static_cast<Residue>(rng.uniform(m.value()));
    return VectorP(m, std::move(c));
  };
  Subgroup row_span(m, n);
  while (matrix_.size() < n) {
    VectorP row = draw();
    Subgroup grown = extend(row_span, row);
    if (grown.rank() == row_span.rank()) continue;
    row_span = std::move(grown);
    matrix_.push_back(std::move(row));
  }
  offset_ = draw();
  permutation_.resize(n);
  std::iota(permutation_.begin(), permutation_.end(), std::size_t{0});
  for (std::size_t i = n; i > 1; --i) {
    std::swap(permutation_[i - 1], permutation_[rng.uniform(i)]);
  }
}

HiddenInstance HiddenInstance::generate(Modulus m, std::size_t n, std::size_t k,
                                        std::uint64_t subgroup_seed, std::uint64_t label_seed,
                                        bool obfuscate) {
  if (k < 1 || k >= n) {
    throw ParameterError("k must satisfy 1 <= k < n, got k=" + std::to_string(k) +
                         " n=" + std::to_string(n));
  }
  return HiddenInstance(random_subgroup(m, n, k, subgroup_seed), label_seed, obfuscate);
}

VectorP HiddenInstance::evaluate(const VectorP& x) const {
  VectorP reduced = coset_reduce(secret_, x);
  if (!obfuscate_) return reduced;
  const Modulus m = modulus();
  VectorP out(m, n());
  for (std::size_t i = 0; i < n(); ++i) {
    out.set(permutation_[i], m.add(dot(matrix_[i], reduced), offset_[i]));
  }
  return out;
}

std::string HiddenInstance::to_text() const {
  std::ostringstream os;
  os << kInstanceHeader << '\n'
     << "p=" << p() << '\n'
     << "n=" << n() << '\n'
     << "k=" << k() << '\n'
     << "secret=" << secret_.serialize() << '\n'
     << "label_seed=" << label_seed_ << '\n'
     << "obfuscate=" << (obfuscate_ ? 1 : 0) << '\n';
  return os.str();
}

HiddenInstance HiddenInstance::from_text(std::string_view text) {
  std::vector<std::string_view> lines;
  std::size_t pos = 0;
  while (pos < text.size()) {
    std::size_t end = text.find('\n', pos);
    if (end == std::string_view::npos) end = text.size();
    std::string_view line = text.substr(pos, end - pos);
    if (line.ends_with('\r')) line.remove_suffix(1);
    lines.push_back(line);
    pos = end + 1;
  }
  if (lines.size() != 7 || lines[0] != kInstanceHeader) {
    throw FormatError("not a gsp-instance v1 file");
  }
  const auto p = parse_u64(expect_field(lines[1], "p"));
  const auto n = parse_u64(expect_field(lines[2], "n"));
  const auto k = parse_u64(expect_field(lines[3], "k"));
  Subgroup secret = Subgroup::parse(expect_field(lines[4], "secret"));
  const auto label_seed = parse_u64(expect_field(lines[5], "label_seed"));
  const auto obf = expect_field(lines[6], "obfuscate");
  if (obf != "0" && obf != "1") throw FormatError("obfuscate must be 0 or 1");
  if (secret.p() != p || secret.dim() != n || secret.rank() != k) {
    throw FormatError("secret does not match the declared p, n, k");
  }
  return HiddenInstance(std::move(secret), label_seed, obf == "1");
}

void write_instance(std::ostream& os, const HiddenInstance& inst) { os << inst.to_text(); }

HiddenInstance read_instance(std::istream& is) {
  std::ostringstream buf;
  buf << is.rdbuf();
  return HiddenInstance::from_text(buf.str());
}

QueryLog::QueryLog(HiddenInstance inst, CountMode mode, bool record_trace)
    : inst_(std::move(inst)), mode_(mode), record_trace_(record_trace) {}

VectorP QueryLog::query(const VectorP& x) {
  if (x.p() != inst_.p() || x.size() != inst_.n()) {
    throw DimensionError("query " + x.to_string() + " is not an element of Z_" +
                         std::to_string(inst_.p()) + "^" + std::to_string(inst_.n()));
  }
  auto it = cache_.find(x);
  const bool fresh = it == cache_.end();
  if (fresh) it = cache_.emplace(x, inst_.evaluate(x)).first;
  if (fresh || mode_ == CountMode::kStrict) {
    ++count_;
    if (record_trace_) trace_.push_back({x, it->second});
  }
  return it->second;
}

std::optional<VectorP> QueryLog::cached(const VectorP& x) const {
  auto it = cache_.find(x);
  if (it == cache_.end()) return std::nullopt;
  return it->second;
}

void write_trace(std::ostream& os, const std::vector<TraceEntry>& trace) {
  for (const auto& e : trace) os << e.element.to_string() << ' ' << e.label.to_string() << '\n';
}

std::vector<TraceEntry> read_trace(std::istream& is, Modulus m, std::size_t n) {
  std::vector<TraceEntry> out;
  std::string line;
  while (std::getline(is, line)) {
    if (line.empty()) continue;
    const auto sp = line.find(' ');
    if (sp == std::string::npos) throw FormatError("bad trace line '" + line + "'");
    std::string_view view(line);
    out.push_back({VectorP::parse(m, n, view.substr(0, sp)), VectorP::parse(m, n, view.substr(sp + 1))});
  }
  return out;
}

}  // namespace gsp
