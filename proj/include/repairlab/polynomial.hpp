// SPDX-License-Identifier: Apache-2.0

#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "repairlab/prime_field.hpp"

namespace repairlab {

/// Dense polynomial over a prime field, coefficients low-to-high. The zero
/// polynomial has no coefficients; otherwise the leading coefficient is nonzero.
class Polynomial {
 public:
  Polynomial() = default;
  explicit Polynomial(std::vector<std::uint32_t> coeffs);

  static Polynomial monomial(std::uint32_t coeff, int degree);

  int degree() const noexcept { return static_cast<int>(coeffs_.size()) - 1; }
  bool is_zero() const noexcept { return coeffs_.empty(); }
  bool is_monic() const noexcept { return !coeffs_.empty() && coeffs_.back() == 1; }
  std::uint32_t coeff(int i) const noexcept {
    return i >= 0 && i < static_cast<int>(coeffs_.size()) ? coeffs_[i] : 0;
  }
  const std::vector<std::uint32_t>& coeffs() const noexcept { return coeffs_; }

  std::string to_string() const;

  friend bool operator==(const Polynomial&, const Polynomial&) = default;

 private:
  void trim();
  std::vector<std::uint32_t> coeffs_;
};

namespace poly {

Polynomial add(const PrimeField& f, const Polynomial& a, const Polynomial& b);
Polynomial sub(const PrimeField& f, const Polynomial& a, const Polynomial& b);
Polynomial mul(const PrimeField& f, const Polynomial& a, const Polynomial& b);
Polynomial scale(const PrimeField& f, const Polynomial& a, Fp c);
/// Quotient and remainder; b must be nonzero.
std::pair<Polynomial, Polynomial> divmod(const PrimeField& f, const Polynomial& a, const Polynomial& b);
Polynomial mod(const PrimeField& f, const Polynomial& a, const Polynomial& b);
/// Monic gcd (zero if both inputs are zero).
Polynomial gcd(const PrimeField& f, Polynomial a, Polynomial b);
/// base^e mod m, with e given as a power of p: computes base^(p^k) by k Frobenius steps.
Polynomial frobenius_power(const PrimeField& f, const Polynomial& base, int k, const Polynomial& m);
Fp evaluate(const PrimeField& f, const Polynomial& a, Fp x);

/// Ben-Or test: f of degree d is irreducible iff gcd(X^(p^i) - X, f) = 1 for
/// every 1 <= i <= d/2.
bool is_irreducible(const PrimeField& f, const Polynomial& m);

/// First monic irreducible of the given degree when candidates x^d + c_{d-1} x^{d-1}
/// + ... + c_0 are scanned by the index sum c_i p^i (c_0 varies fastest, each
/// coefficient through 0, 1, ..., p-1).
Polynomial find_irreducible(const PrimeField& f, int degree);

}  // namespace poly
}  // namespace repairlab
