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

#include <compare>
#include <cstddef>
#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

namespace gsp {

using Residue = std::uint32_t;

inline constexpr std::uint32_t kMaxPrime = 1u << 16;
inline constexpr std::size_t kMaxDimension = 64;

bool is_prime(std::uint32_t p);

/// A validated prime modulus p < 2^16 with field arithmetic on residues.
class Modulus {
 public:
  /// Throws ParameterError unless p is a prime below 2^16.
  explicit Modulus(std::uint32_t p);

  std::uint32_t value() const { return p_; }

  Residue add(Residue a, Residue b) const {
    const Residue s = a + b;
    return s >= p_ ? s - p_ : s;
  }
  Residue sub(Residue a, Residue b) const { return a >= b ? a - b : a + p_ - b; }
  Residue neg(Residue a) const { return a == 0 ? 0 : p_ - a; }
  Residue mul(Residue a, Residue b) const {
    return static_cast<Residue>((static_cast<std::uint64_t>(a) * b) % p_);
  }
  Residue pow(Residue a, std::uint64_t e) const;
  /// a^(p-2); a must be nonzero.
  Residue inv(Residue a) const { return pow(a, p_ - 2); }

  friend bool operator==(Modulus, Modulus) = default;

 private:
  std::uint32_t p_;
};

/// p^e, or nullopt on 64-bit overflow.
std::optional<std::uint64_t> checked_pow(std::uint64_t p, std::size_t e);

/// p^e, throws ResourceError on 64-bit overflow.
std::uint64_t pow_or_throw(std::uint64_t p, std::size_t e);

/// An element of Z_p^n. Coordinate 0 is the most significant one: it is
/// printed first and carries weight p^(n-1) in index().
class VectorP {
 public:
  /// The zero vector.
  VectorP(Modulus m, std::size_t n);
  /// Throws ParameterError if a coordinate is >= p or n > kMaxDimension.
  VectorP(Modulus m, std::vector<Residue> coords);

  static VectorP unit(Modulus m, std::size_t n, std::size_t col);
  /// Inverse of index(); throws ParameterError if index >= p^n.
  static VectorP from_index(Modulus m, std::size_t n, std::uint64_t index);
  /// Parses the digit form produced by to_string().
  static VectorP parse(Modulus m, std::size_t n, std::string_view text);

  Modulus modulus() const { return m_; }
  std::uint32_t p() const { return m_.value(); }
  std::size_t size() const { return coords_.size(); }
  std::span<const Residue> coords() const { return coords_; }
  Residue operator[](std::size_t i) const { return coords_[i]; }

  bool is_zero() const;
  /// Index of the first nonzero coordinate, or size() for the zero vector.
  std::size_t leading() const;
  /// Base-p value, most significant coordinate first. Requires p^n < 2^64.
  std::uint64_t index() const;

  /// Base-p digits (0-9a-z) for p <= 36, comma separated decimals above.
  std::string to_string() const;

  void set(std::size_t i, Residue r);
  VectorP& operator+=(const VectorP& o);
  VectorP& operator-=(const VectorP& o);
  /// this += c * o
  VectorP& add_scaled(const VectorP& o, Residue c);
  VectorP& scale(Residue c);

  friend bool operator==(const VectorP&, const VectorP&) = default;
  /// Lexicographic on coordinates; throws DimensionError on (p, n) mismatch.
  friend std::strong_ordering operator<=>(const VectorP& a, const VectorP& b);

 private:
  Modulus m_;
  std::vector<Residue> coords_;
};

void check_compatible(const VectorP& a, const VectorP& b);

VectorP vec_add(const VectorP& a, const VectorP& b);
VectorP vec_sub(const VectorP& a, const VectorP& b);
VectorP vec_neg(const VectorP& a);
VectorP vec_scale(const VectorP& a, Residue c);
Residue dot(const VectorP& a, const VectorP& b);

inline VectorP operator+(const VectorP& a, const VectorP& b) { return vec_add(a, b); }
inline VectorP operator-(const VectorP& a, const VectorP& b) { return vec_sub(a, b); }

struct VectorHash {
  std::size_t operator()(const VectorP& v) const noexcept;
};

}  // namespace gsp
