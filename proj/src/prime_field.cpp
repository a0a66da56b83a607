// SPDX-License-Identifier: Apache-2.0

#include "repairlab/prime_field.hpp"

#include "repairlab/error.hpp"

namespace repairlab {

bool is_prime(std::uint64_t n) {
  if (n < 2) return false;
  if (n % 2 == 0) return n == 2;
  for (std::uint64_t d = 3; d * d <= n; d += 2) {
    if (n % d == 0) return false;
  }
  return true;
}

std::uint64_t next_prime(std::uint64_t n) {
  if (n <= 2) return 2;
  while (!is_prime(n)) ++n;
  return n;
}

PrimeField::PrimeField(std::uint32_t p) : p_(p), magic_(0) {
  if (!is_prime(p)) throw Error(ErrorCode::kNotPrime, std::to_string(p) + " is not prime");
  if (p > kMaxPrime) {
    throw Error(ErrorCode::kFieldTooLarge, "prime " + std::to_string(p) + " exceeds " + std::to_string(kMaxPrime));
  }
  magic_ = UINT64_C(0xFFFFFFFFFFFFFFFF) / p + 1;
}

PrimeField make_prime_field(std::int64_t p) {
  if (p < 2) throw Error(ErrorCode::kNotPrime, std::to_string(p) + " is not prime");
  if (p > static_cast<std::int64_t>(UINT32_MAX)) {
    throw Error(ErrorCode::kFieldTooLarge, std::to_string(p));
  }
  return PrimeField(static_cast<std::uint32_t>(p));
}

Fp PrimeField::from_int(std::int64_t x) const noexcept {
  std::int64_t m = x % static_cast<std::int64_t>(p_);
  if (m < 0) m += p_;
  return {static_cast<std::uint32_t>(m)};
}

Fp PrimeField::inv(Fp a) const {
  if (a.v == 0) throw Error(ErrorCode::kSingular, "inverse of zero in GF(" + std::to_string(p_) + ")");
  // Extended Euclid on (a, p).
  std::int64_t t = 0, new_t = 1;
  std::int64_t r = p_, new_r = a.v;
  while (new_r != 0) {
    std::int64_t q = r / new_r;
    std::int64_t tmp = t - q * new_t;
    t = new_t;
    new_t = tmp;
    tmp = r - q * new_r;
    r = new_r;
    new_r = tmp;
  }
  if (t < 0) t += p_;
  return {static_cast<std::uint32_t>(t)};
}

Fp PrimeField::pow(Fp a, std::uint64_t e) const noexcept {
  Fp result = one();
  Fp base = a;
  while (e != 0) {
    if (e & 1U) result = mul(result, base);
    base = mul(base, base);
    e >>= 1U;
  }
  return result;
}

Fp PrimeField::from_coefficients(std::span<const std::uint32_t> coeffs) const {
  if (coeffs.size() != 1 || coeffs[0] >= p_) {
    throw Error(ErrorCode::kMalformedDump, "prime-field element must be one residue below p");
  }
  return {coeffs[0]};
}

nlohmann::json PrimeField::descriptor() const {
  return {{"p", p_}, {"tower", nlohmann::json::array({1, nlohmann::json::array({0, 1})})}};
}

}  // namespace repairlab
