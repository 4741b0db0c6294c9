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

#include "gsp/vector.h"

#include <charconv>

#include "gsp/error.h"

namespace gsp {

bool is_prime(std::uint32_t p) {
  if (p < 2) return false;
  for (std::uint32_t d = 2; d * d <= p; ++d) {
    if (p % d == 0) return false;
  }
  return true;
}

Modulus::Modulus(std::uint32_t p) : p_(p) {
  if (p >= kMaxPrime || !is_prime(p)) {
    throw ParameterError("p must be prime and below 65536, got " + std::to_string(p));
  }
}

Residue Modulus::pow(Residue a, std::uint64_t e) const {
  Residue result = 1 % p_;
  Residue base = a % p_;
  while (e > 0) {
    if (e & 1) result = mul(result, base);
    base = mul(base, base);
    e >>= 1;
  }
  return result;
}

std::optional<std::uint64_t> checked_pow(std::uint64_t p, std::size_t e) {
  std::uint64_t r = 1;
  for (std::size_t i = 0; i < e; ++i) {
    if (p != 0 && r > UINT64_MAX / p) return std::nullopt;
    r *= p;
  }
  return r;
}

std::uint64_t pow_or_throw(std::uint64_t p, std::size_t e) {
  auto r = checked_pow(p, e);
  if (!r) {
    throw ResourceError(std::to_string(p) + "^" + std::to_string(e) + " overflows 64 bits");
  }
  return *r;
}

namespace {

void check_dimension(std::size_t n) {
  if (n > kMaxDimension) {
    throw ParameterError("n must be at most 64, got " + std::to_string(n));
  }
}

int digit_value(char c) {
  if (c >= '0' && c <= '9') return c - '0';
  if (c >= 'a' && c <= 'z') return c - 'a' + 10;
  return -1;
}

}  // namespace

VectorP::VectorP(Modulus m, std::size_t n) : m_(m), coords_(n, 0) { check_dimension(n); }

VectorP::VectorP(Modulus m, std::vector<Residue> coords) : m_(m), coords_(std::move(coords)) {
  check_dimension(coords_.size());
  for (Residue r : coords_) {
    if (r >= m_.value()) {
      throw ParameterError("coordinate " + std::to_string(r) + " not below p=" +
                           std::to_string(m_.value()));
    }
  }
}

VectorP VectorP::unit(Modulus m, std::size_t n, std::size_t col) {
  VectorP v(m, n);
  v.set(col, 1);
  return v;
}

VectorP VectorP::from_index(Modulus m, std::size_t n, std::uint64_t index) {
  VectorP v(m, n);
  const std::uint64_t p = m.value();
  for (std::size_t i = n; i-- > 0;) {
    v.coords_[i] = static_cast<Residue>(index % p);
    index /= p;
  }
  if (index != 0) throw ParameterError("index out of range for Z_p^n");
  return v;
}

VectorP VectorP::parse(Modulus m, std::size_t n, std::string_view text) {
  std::vector<Residue> coords;
  coords.reserve(n);
  if (m.value() <= 36) {
    for (char c : text) {
      const int d = digit_value(c);
      if (d < 0 || static_cast<std::uint32_t>(d) >= m.value()) {
        throw FormatError("bad digit '" + std::string(1, c) + "' in vector '" +
                          std::string(text) + "'");
      }
      coords.push_back(static_cast<Residue>(d));
    }
  } else if (!text.empty()) {
    std::size_t pos = 0;
    while (pos <= text.size()) {
      const std::size_t end = std::min(text.find(',', pos), text.size());
      Residue r = 0;
      auto [ptr, ec] = std::from_chars(text.data() + pos, text.data() + end, r);
      if (ec != std::errc() || ptr != text.data() + end || r >= m.value()) {
        throw FormatError("bad coordinate in vector '" + std::string(text) + "'");
      }
      coords.push_back(r);
      pos = end + 1;
    }
  }
  if (coords.size() != n) {
    throw FormatError("vector '" + std::string(text) + "' does not have " + std::to_string(n) +
                      " coordinates");
  }
  return VectorP(m, std::move(coords));
}

bool VectorP::is_zero() const {
  for (Residue r : coords_) {
    if (r != 0) return false;
  }
  return true;
}

std::size_t VectorP::leading() const {
  for (std::size_t i = 0; i < coords_.size(); ++i) {
    if (coords_[i] != 0) return i;
  }
  return coords_.size();
}

std::uint64_t VectorP::index() const {
  const std::uint64_t p = m_.value();
  std::uint64_t idx = 0;
  for (Residue r : coords_) {
    if (idx > (UINT64_MAX - r) / p) throw ResourceError("vector index overflows 64 bits");
    idx = idx * p + r;
  }
  return idx;
}

std::string VectorP::to_string() const {
  static constexpr char kDigits[] = "0123456789abcdefghijklmnopqrstuvwxyz";
  std::string out;
  if (m_.value() <= 36) {
    out.reserve(coords_.size());
    for (Residue r : coords_) out.push_back(kDigits[r]);
  } else {
    for (std::size_t i = 0; i < coords_.size(); ++i) {
      if (i) out.push_back(',');
      out += std::to_string(coords_[i]);
    }
  }
  return out;
}

void VectorP::set(std::size_t i, Residue r) {
  if (r >= m_.value()) throw ParameterError("coordinate not below p");
  coords_.at(i) = r;
}

VectorP& VectorP::operator+=(const VectorP& o) {
  check_compatible(*this, o);
  for (std::size_t i = 0; i < coords_.size(); ++i) coords_[i] = m_.add(coords_[i], o.coords_[i]);
  return *this;
}

VectorP& VectorP::operator-=(const VectorP& o) {
  check_compatible(*this, o);
  for (std::size_t i = 0; i < coords_.size(); ++i) coords_[i] = m_.sub(coords_[i], o.coords_[i]);
  return *this;
}

VectorP& VectorP::add_scaled(const VectorP& o, Residue c) {
  check_compatible(*this, o);
  if (c == 0) return *this;
  for (std::size_t i = 0; i < coords_.size(); ++i) {
    coords_[i] = m_.add(coords_[i], m_.mul(c, o.coords_[i]));
  }
  return *this;
}

VectorP& VectorP::scale(Residue c) {
  for (Residue& r : coords_) r = m_.mul(r, c);
  return *this;
}

std::strong_ordering operator<=>(const VectorP& a, const VectorP& b) {
  check_compatible(a, b);
  for (std::size_t i = 0; i < a.coords_.size(); ++i) {
    if (auto c = a.coords_[i] <=> b.coords_[i]; c != 0) return c;
  }
  return std::strong_ordering::equal;
}

void check_compatible(const VectorP& a, const VectorP& b) {
  if (a.p() != b.p() || a.size() != b.size()) {
    throw DimensionError("vectors over Z_" + std::to_string(a.p()) + "^" +
                         std::to_string(a.size()) + " and Z_" + std::to_string(b.p()) + "^" +
                         std::to_string(b.size()) + " are not compatible");
  }
}

VectorP vec_add(const VectorP& a, const VectorP& b) {
  VectorP r = a;
  r += b;
  return r;
}

VectorP vec_sub(const VectorP& a, const VectorP& b) {
  VectorP r = a;
  r -= b;
  return r;
}

VectorP vec_neg(const VectorP& a) { return vec_sub(VectorP(a.modulus(), a.size()), a); }

VectorP vec_scale(const VectorP& a, Residue c) {
  VectorP r = a;
  r.scale(c % a.p());
  return r;
}

Residue dot(const VectorP& a, const VectorP& b) {
  check_compatible(a, b);
  const Modulus m = a.modulus();
  Residue s = 0;
  for (std::size_t i = 0; i < a.size(); ++i) s = m.add(s, m.mul(a[i], b[i]));
  return s;
}

std::size_t VectorHash::operator()(const VectorP& v) const noexcept {
  std::size_t h = 0xcbf29ce484222325ULL ^ v.p();
  for (Residue r : v.coords()) {
    h ^= r + 0x9e3779b97f4a7c15ULL + (h << 6) + (h >> 2);
  }
  return h;
}

}  // namespace gsp
