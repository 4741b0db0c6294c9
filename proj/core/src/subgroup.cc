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

#include "gsp/subgroup.h"

#include <algorithm>
#include <charconv>

#include "gsp/error.h"

namespace gsp {

namespace {

using Rows = std::vector<std::vector<Residue>>;

// In-place reduced row echelon form over F_p. Zero rows are removed; the
// returned pivots are ascending and match the surviving rows.
std::vector<std::size_t> row_reduce(Modulus m, Rows& rows, std::size_t cols) {
  std::vector<std::size_t> pivots;
  std::size_t r = 0;
  for (std::size_t c = 0; c < cols && r < rows.size(); ++c) {
    std::size_t sel = r;
    while (sel < rows.size() && rows[sel][c] == 0) ++sel;
    if (sel == rows.size()) continue;
    std::swap(rows[r], rows[sel]);
    const Residue inv = m.inv(rows[r][c]);
    for (Residue& x : rows[r]) x = m.mul(x, inv);
    for (std::size_t i = 0; i < rows.size(); ++i) {
      if (i == r || rows[i][c] == 0) continue;
      const Residue f = m.neg(rows[i][c]);
      for (std::size_t j = 0; j < cols; ++j) {
        rows[i][j] = m.add(rows[i][j], m.mul(f, rows[r][j]));
      }
    }
    pivots.push_back(c);
    ++r;
  }
  rows.resize(r);
  return pivots;
}

std::vector<std::string_view> split(std::string_view s, char sep) {
  std::vector<std::string_view> out;
  std::size_t pos = 0;
  while (true) {
    const std::size_t end = s.find(sep, pos);
    out.push_back(s.substr(pos, end == std::string_view::npos ? s.size() - pos : end - pos));
    if (end == std::string_view::npos) break;
    pos = end + 1;
  }
  return out;
}

std::uint64_t parse_uint(std::string_view s, std::string_view what) {
  std::uint64_t v = 0;
  auto [ptr, ec] = std::from_chars(s.data(), s.data() + s.size(), v);
  if (ec != std::errc() || ptr != s.data() + s.size() || s.empty()) {
    throw FormatError("bad " + std::string(what) + " value '" + std::string(s) + "'");
  }
  return v;
}

}  // namespace

Subgroup::Subgroup(Modulus m, std::size_t n) : m_(m), n_(n) {
  if (n > kMaxDimension) throw ParameterError("n must be at most 64");
}

Subgroup Subgroup::full(Modulus m, std::size_t n) {
  Subgroup s(m, n);
  for (std::size_t i = 0; i < n; ++i) {
    s.basis_.push_back(VectorP::unit(m, n, i));
    s.pivots_.push_back(i);
  }
  return s;
}

std::vector<std::size_t> Subgroup::free_columns() const {
  std::vector<std::size_t> out;
  std::size_t next = 0;
  for (std::size_t c = 0; c < n_; ++c) {
    if (next < pivots_.size() && pivots_[next] == c) {
      ++next;
    } else {
      out.push_back(c);
    }
  }
  return out;
}

std::uint64_t Subgroup::order() const { return pow_or_throw(p(), rank()); }

std::vector<VectorP> Subgroup::elements() const {
  const std::uint64_t count = order();
  std::vector<VectorP> out;
  out.reserve(count);
  std::vector<Residue> coeff(rank(), 0);
  for (std::uint64_t idx = 0; idx < count; ++idx) {
    VectorP v(m_, n_);
    for (std::size_t i = 0; i < rank(); ++i) v.add_scaled(basis_[i], coeff[i]);
    out.push_back(std::move(v));
    for (std::size_t i = rank(); i-- > 0;) {
      if (++coeff[i] < p()) break;
      coeff[i] = 0;
    }
  }
  return out;
}

VectorP Subgroup::smallest_outside() const {
  const auto free = free_columns();
  if (free.empty()) throw ParameterError("the full group has no element outside it");
  return VectorP::unit(m_, n_, free.back());
}

std::string Subgroup::serialize() const {
  std::string out = "p=" + std::to_string(p()) + " n=" + std::to_string(n_) + " rows=";
  for (std::size_t i = 0; i < basis_.size(); ++i) {
    if (i) out.push_back(';');
    out += basis_[i].to_string();
  }
  return out;
}

Subgroup Subgroup::parse(std::string_view text) {
  const auto fields = split(text, ' ');
  if (fields.size() != 3 || !fields[0].starts_with("p=") || !fields[1].starts_with("n=") ||
      !fields[2].starts_with("rows=")) {
    throw FormatError("expected 'p=<p> n=<n> rows=<...>', got '" + std::string(text) + "'");
  }
  const auto p = parse_uint(fields[0].substr(2), "p");
  const auto n = parse_uint(fields[1].substr(2), "n");
  if (p >= kMaxPrime || n > kMaxDimension) throw FormatError("p or n out of range");
  const Modulus m(static_cast<std::uint32_t>(p));
  std::vector<VectorP> rows;
  const auto body = fields[2].substr(5);
  if (!body.empty()) {
    for (auto row : split(body, ';')) rows.push_back(VectorP::parse(m, n, row));
  }
  return canonicalize(m, n, rows);
}

Subgroup canonicalize(Modulus m, std::size_t n, std::span<const VectorP> rows) {
  Subgroup h(m, n);
  for (const auto& r : rows) h = extend(h, r);
  return h;
}

Subgroup canonicalize(std::span<const VectorP> rows) {
  if (rows.empty()) throw ParameterError("canonicalize needs (p, n) for an empty row set");
  return canonicalize(rows.front().modulus(), rows.front().size(), rows);
}

Subgroup extend(const Subgroup& h, const VectorP& v) {
  VectorP r = coset_reduce(h, v);
  if (r.is_zero()) return h;
  const Modulus m = h.m_;
  const std::size_t lead = r.leading();
  r.scale(m.inv(r[lead]));
  Subgroup out = h;
  for (auto& row : out.basis_) {
    if (row[lead] != 0) row.add_scaled(r, m.neg(row[lead]));
  }
  const auto pos = std::lower_bound(out.pivots_.begin(), out.pivots_.end(), lead);
  const auto offset = pos - out.pivots_.begin();
  out.pivots_.insert(pos, lead);
  out.basis_.insert(out.basis_.begin() + offset, std::move(r));
  return out;
}

bool contains(const Subgroup& h, const VectorP& x) { return coset_reduce(h, x).is_zero(); }

VectorP coset_reduce(const Subgroup& h, const VectorP& x) {
  check_compatible(h, x);
  const Modulus m = h.modulus();
  VectorP r = x;
  for (std::size_t i = 0; i < h.rank(); ++i) {
    const Residue c = r[h.pivots()[i]];
    if (c != 0) r.add_scaled(h.basis()[i], m.neg(c));
  }
  return r;
}

Subgroup sum(const Subgroup& h, const Subgroup& k) {
  check_compatible(h, k);
  Subgroup out = h;
  for (const auto& row : k.basis()) out = extend(out, row);
  return out;
}

Subgroup intersect(const Subgroup& h, const Subgroup& k) {
  check_compatible(h, k);
  const Modulus m = h.modulus();
  const std::size_t n = h.dim();
  const std::size_t r = h.rank();
  // Row i is [coset_reduce(K, h_i) | e_i]; combinations of H's basis that land
  // in K are the rows whose left block reduces to zero.
  Rows rows(r, std::vector<Residue>(n + r, 0));
  for (std::size_t i = 0; i < r; ++i) {
    const VectorP img = coset_reduce(k, h.basis()[i]);
    std::copy(img.coords().begin(), img.coords().end(), rows[i].begin());
    rows[i][n + i] = 1;
  }
  const auto pivots = row_reduce(m, rows, n + r);
  Subgroup out(m, n);
  for (std::size_t i = 0; i < rows.size(); ++i) {
    if (pivots[i] < n) continue;
    VectorP v(m, n);
    for (std::size_t j = 0; j < r; ++j) v.add_scaled(h.basis()[j], rows[i][n + j]);
    out = extend(out, v);
  }
  return out;
}

Subgroup complement(const Subgroup& h) {
  std::vector<VectorP> rows;
  for (std::size_t c : h.free_columns()) rows.push_back(VectorP::unit(h.modulus(), h.dim(), c));
  return canonicalize(h.modulus(), h.dim(), rows);
}

Subgroup orthogonal(const Subgroup& h) {
  const Modulus m = h.modulus();
  std::vector<VectorP> rows;
  for (std::size_t f : h.free_columns()) {
    VectorP x = VectorP::unit(m, h.dim(), f);
    for (std::size_t i = 0; i < h.rank(); ++i) x.set(h.pivots()[i], m.neg(h.basis()[i][f]));
    rows.push_back(std::move(x));
  }
  return canonicalize(m, h.dim(), rows);
}

bool is_subgroup_of(const Subgroup& h, const Subgroup& k) {
  check_compatible(h, k);
  return std::all_of(h.basis().begin(), h.basis().end(),
                     [&](const VectorP& v) { return contains(k, v); });
}

void check_compatible(const Subgroup& h, const Subgroup& k) {
  if (h.p() != k.p() || h.dim() != k.dim()) {
    throw DimensionError("subgroups live in different groups");
  }
}

void check_compatible(const Subgroup& h, const VectorP& x) {
  if (h.p() != x.p() || h.dim() != x.size()) {
    throw DimensionError("vector " + x.to_string() + " is not in the ambient group of " +
                         h.serialize());
  }
}

}  // namespace gsp
