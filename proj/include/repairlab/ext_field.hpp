// SPDX-License-Identifier: Apache-2.0

#pragma once

#include <array>
#include <cstdint>
#include <span>
#include <string>
#include <vector>

#include <json.hpp>

#include "repairlab/polynomial.hpp"
#include "repairlab/prime_field.hpp"
#include "repairlab/rng.hpp"

namespace repairlab {

inline constexpr int kMaxExtDegree = 32;

/// Element of L[X]/(m(X)) in the power basis 1, psi, psi^2, ... (low-to-high).
/// Coefficients past the extension degree are always zero.
struct ExtElem {
  std::array<std::uint16_t, kMaxExtDegree> c{};
  friend bool operator==(const ExtElem&, const ExtElem&) = default;
};

/// Simple extension B = L(psi) of a prime field L, psi being the class of X
/// modulo a monic irreducible m(X).
class ExtField {
 public:
  using Elem = ExtElem;

  /// Throws NotIrreducible unless `modulus` is monic and irreducible over
  /// `base`, FieldTooLarge if its degree exceeds kMaxExtDegree.
  ExtField(PrimeField base, Polynomial modulus);

  const PrimeField& base() const noexcept { return base_; }
  const Polynomial& modulus() const noexcept { return modulus_; }
  std::uint32_t characteristic() const noexcept { return base_.characteristic(); }
  int degree() const noexcept { return m_; }
  FieldSize size() const noexcept;

  Elem zero() const noexcept { return {}; }
  Elem one() const noexcept {
    Elem e;
    e.c[0] = 1;
    return e;
  }
  /// Residue class of X, i.e. psi.
  Elem generator() const noexcept;
  Elem embed(Fp a) const noexcept {
    Elem e;
    e.c[0] = static_cast<std::uint16_t>(a.v);
    return e;
  }
  bool in_base(const Elem& a) const noexcept;
  Elem from_int(std::int64_t x) const noexcept { return embed(base_.from_int(x)); }

  Elem add(const Elem& a, const Elem& b) const noexcept;
  Elem sub(const Elem& a, const Elem& b) const noexcept;
  Elem neg(const Elem& a) const noexcept;
  Elem mul(const Elem& a, const Elem& b) const noexcept;
  Elem mul_add(const Elem& a, const Elem& b, const Elem& c) const noexcept { return add(a, mul(b, c)); }
  Elem inv(const Elem& a) const;
  Elem div(const Elem& a, const Elem& b) const { return mul(a, inv(b)); }
  Elem pow(const Elem& a, std::uint64_t e) const noexcept;
  bool is_zero(const Elem& a) const noexcept { return a == Elem{}; }

  /// Canonical enumeration: the base-p digits of `index`, least significant
  /// first, are the power-basis coefficients.
  Elem element_at(std::uint64_t index) const noexcept;
  std::uint64_t index_of(const Elem& a) const noexcept;

  Elem random(SplitMix64& rng) const;

  std::vector<std::uint32_t> coefficients(const Elem& a) const;
  Elem from_coefficients(std::span<const std::uint32_t> coeffs) const;
  Polynomial to_polynomial(const Elem& a) const;
  Elem from_polynomial(const Polynomial& a) const;

  std::string to_string(const Elem& a) const;
  /// {"p": p, "tower": [degree, [modulus coefficients low-to-high]]}
  nlohmann::json descriptor() const;

  friend bool operator==(const ExtField& a, const ExtField& b) noexcept {
    return a.base_ == b.base_ && a.modulus_ == b.modulus_;
  }

 private:
  PrimeField base_;
  Polynomial modulus_;
  int m_;
  // reduce_[(d - m) * m + j] = coefficient of psi^j in psi^d, for m <= d <= 2m - 2.
  std::vector<std::uint32_t> reduce_;
};

}  // namespace repairlab
