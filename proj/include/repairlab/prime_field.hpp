// SPDX-License-Identifier: Apache-2.0

#pragma once

#include <cstdint>
#include <span>
#include <string>
#include <vector>

#include <json.hpp>

#include "repairlab/rng.hpp"

namespace repairlab {

/// Largest modulus accepted for a prime field. Products of two residues then
/// fit in 32 bits, which lets every reduction use a multiply-high instead of
/// a hardware divide.
inline constexpr std::uint32_t kMaxPrime = 65521;

/// Wide unsigned type used for field cardinalities (|GF(11^19)| > 2^64).
using FieldSize = unsigned __int128;

/// Residue in [0, p-1].
struct Fp {
  std::uint32_t v = 0;
  friend bool operator==(Fp, Fp) = default;
};

class PrimeField {
 public:
  using Elem = Fp;

  /// Throws NotPrime for composite p and FieldTooLarge above kMaxPrime.
  explicit PrimeField(std::uint32_t p);

  std::uint32_t characteristic() const noexcept { return p_; }
  int degree() const noexcept { return 1; }
  FieldSize size() const noexcept { return p_; }

  Elem zero() const noexcept { return {0}; }
  Elem one() const noexcept { return {1}; }
  Elem from_int(std::int64_t x) const noexcept;

  Elem add(Elem a, Elem b) const noexcept {
    std::uint32_t s = a.v + b.v;
    return {s >= p_ ? s - p_ : s};
  }
  Elem sub(Elem a, Elem b) const noexcept { return {a.v >= b.v ? a.v - b.v : a.v + p_ - b.v}; }
  Elem neg(Elem a) const noexcept { return {a.v == 0 ? 0 : p_ - a.v}; }
  Elem mul(Elem a, Elem b) const noexcept { return {reduce(a.v * b.v)}; }
  /// a + b*c
  Elem mul_add(Elem a, Elem b, Elem c) const noexcept { return {reduce(a.v + b.v * c.v)}; }
  Elem inv(Elem a) const;
  Elem div(Elem a, Elem b) const { return mul(a, inv(b)); }
  Elem pow(Elem a, std::uint64_t e) const noexcept;
  bool is_zero(Elem a) const noexcept { return a.v == 0; }

  /// Element number `index` of the canonical enumeration 0, 1, ..., p-1.
  Elem element_at(std::uint64_t index) const noexcept { return {static_cast<std::uint32_t>(index % p_)}; }
  std::uint64_t index_of(Elem a) const noexcept { return a.v; }

  Elem random(SplitMix64& rng) const { return {static_cast<std::uint32_t>(rng.below(p_))}; }

  std::vector<std::uint32_t> coefficients(Elem a) const { return {a.v}; }
  Elem from_coefficients(std::span<const std::uint32_t> coeffs) const;

  std::string to_string(Elem a) const { return std::to_string(a.v); }
  /// {"p": p, "tower": [1, [0, 1]]}: a prime field is its own degree-1 tower.
  nlohmann::json descriptor() const;

  /// Reduction of any 32-bit value modulo p (Lemire's fastmod).
  std::uint32_t reduce(std::uint32_t x) const noexcept {
    std::uint64_t low = magic_ * x;
    return static_cast<std::uint32_t>((static_cast<FieldSize>(low) * p_) >> 64);
  }

  friend bool operator==(const PrimeField& a, const PrimeField& b) noexcept { return a.p_ == b.p_; }

 private:
  std::uint32_t p_;
  std::uint64_t magic_;
};

bool is_prime(std::uint64_t n);
/// Smallest prime >= n.
std::uint64_t next_prime(std::uint64_t n);
PrimeField make_prime_field(std::int64_t p);

}  // namespace repairlab
