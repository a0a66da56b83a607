// SPDX-License-Identifier: Apache-2.0

#include "repairlab/ext_field.hpp"

#include <sstream>

#include "repairlab/error.hpp"

namespace repairlab {

ExtField::ExtField(PrimeField base, Polynomial modulus)
    : base_(base), modulus_(std::move(modulus)), m_(modulus_.degree()) {
  if (m_ < 1 || !modulus_.is_monic()) {
    throw Error(ErrorCode::kNotIrreducible, "extension modulus must be monic of degree >= 1");
  }
  if (m_ > kMaxExtDegree) {
    throw Error(ErrorCode::kFieldTooLarge,
                "extension degree " + std::to_string(m_) + " exceeds " + std::to_string(kMaxExtDegree));
  }
  if (!poly::is_irreducible(base_, modulus_)) {
    throw Error(ErrorCode::kNotIrreducible, modulus_.to_string() + " is reducible");
  }
  // psi^m = -(c_0 + ... + c_{m-1} psi^{m-1}); roll forward to psi^{2m-2}.
  const std::size_t m = static_cast<std::size_t>(m_);
  reduce_.assign(m > 1 ? (m - 1) * m : 0, 0);
  std::vector<std::uint32_t> cur(m);
  for (std::size_t j = 0; j < m; ++j) cur[j] = base_.neg({modulus_.coeff(static_cast<int>(j))}).v;
  for (std::size_t d = m; d + 2 <= 2 * m; ++d) {
    std::copy(cur.begin(), cur.end(), reduce_.begin() + static_cast<std::ptrdiff_t>((d - m) * m));
    // multiply by psi
    std::uint32_t top = cur[m - 1];
    for (std::size_t j = m - 1; j > 0; --j) cur[j] = cur[j - 1];
    cur[0] = 0;
    for (std::size_t j = 0; j < m; ++j) cur[j] = base_.mul_add({cur[j]}, {top}, {reduce_[j]}).v;
  }
}

FieldSize ExtField::size() const noexcept {
  FieldSize s = 1;
  for (int i = 0; i < m_; ++i) s *= base_.characteristic();
  return s;
}

ExtElem ExtField::generator() const noexcept {
  if (m_ == 1) return embed(base_.neg({modulus_.coeff(0)}));
  Elem e;
  e.c[1] = 1;
  return e;
}

bool ExtField::in_base(const Elem& a) const noexcept {
  for (int i = 1; i < m_; ++i) {
    if (a.c[i] != 0) return false;
  }
  return true;
}

ExtElem ExtField::add(const Elem& a, const Elem& b) const noexcept {
  Elem r;
  for (int i = 0; i < m_; ++i) r.c[i] = static_cast<std::uint16_t>(base_.add({a.c[i]}, {b.c[i]}).v);
  return r;
}

ExtElem ExtField::sub(const Elem& a, const Elem& b) const noexcept {
  Elem r;
  for (int i = 0; i < m_; ++i) r.c[i] = static_cast<std::uint16_t>(base_.sub({a.c[i]}, {b.c[i]}).v);
  return r;
}

ExtElem ExtField::neg(const Elem& a) const noexcept {
  Elem r;
  for (int i = 0; i < m_; ++i) r.c[i] = static_cast<std::uint16_t>(base_.neg({a.c[i]}).v);
  return r;
}

ExtElem ExtField::mul(const Elem& a, const Elem& b) const noexcept {
  const int m = m_;
  const std::uint64_t p = base_.characteristic();
  std::array<std::uint64_t, 2 * kMaxExtDegree - 1> acc{};
  for (int i = 0; i < m; ++i) {
    const std::uint64_t ai = a.c[i];
    if (ai == 0) continue;
    for (int j = 0; j < m; ++j) acc[i + j] += ai * b.c[j];
  }
  // Each acc[d] < m * p^2 < 2^37. Fold the high part through the reduction table.
  std::array<std::uint64_t, kMaxExtDegree> low{};
  for (int j = 0; j < m; ++j) low[j] = acc[j] % p;
  for (int d = m; d <= 2 * m - 2; ++d) {
    const std::uint64_t h = acc[d] % p;
    if (h == 0) continue;
    const std::uint32_t* row = reduce_.data() + static_cast<std::size_t>(d - m) * m;
    for (int j = 0; j < m; ++j) low[j] += h * row[j];
  }
  Elem r;
  for (int j = 0; j < m; ++j) r.c[j] = static_cast<std::uint16_t>(low[j] % p);
  return r;
}

ExtElem ExtField::inv(const Elem& a) const {
  if (is_zero(a)) throw Error(ErrorCode::kSingular, "inverse of zero in extension field");
  // Extended Euclid: track s with s * a == r (mod modulus).
  Polynomial r0 = modulus_;
  Polynomial r1 = to_polynomial(a);
  Polynomial s0;
  Polynomial s1({1});
  while (!r1.is_zero()) {
    auto [q, rem] = poly::divmod(base_, r0, r1);
    Polynomial s2 = poly::sub(base_, s0, poly::mul(base_, q, s1));
    r0 = std::move(r1);
    r1 = std::move(rem);
    s0 = std::move(s1);
    s1 = std::move(s2);
  }
  // r0 is a nonzero constant since the modulus is irreducible.
  Fp c = base_.inv({r0.coeff(0)});
  return from_polynomial(poly::mod(base_, poly::scale(base_, s0, c), modulus_));
}

ExtElem ExtField::pow(const Elem& a, std::uint64_t e) const noexcept {
  Elem result = one();
  Elem b = a;
  while (e != 0) {
    if (e & 1U) result = mul(result, b);
    b = mul(b, b);
    e >>= 1U;
  }
  return result;
}

ExtElem ExtField::element_at(std::uint64_t index) const noexcept {
  Elem e;
  const std::uint64_t p = base_.characteristic();
  for (int i = 0; i < m_ && index != 0; ++i) {
    e.c[i] = static_cast<std::uint16_t>(index % p);
    index /= p;
  }
  return e;
}

std::uint64_t ExtField::index_of(const Elem& a) const noexcept {
  std::uint64_t idx = 0;
  for (int i = m_ - 1; i >= 0; --i) idx = idx * base_.characteristic() + a.c[i];
  return idx;
}

ExtElem ExtField::random(SplitMix64& rng) const {
  Elem e;
  for (int i = 0; i < m_; ++i) e.c[i] = static_cast<std::uint16_t>(rng.below(base_.characteristic()));
  return e;
}

std::vector<std::uint32_t> ExtField::coefficients(const Elem& a) const {
  return std::vector<std::uint32_t>(a.c.begin(), a.c.begin() + m_);
}

ExtElem ExtField::from_coefficients(std::span<const std::uint32_t> coeffs) const {
  if (static_cast<int>(coeffs.size()) != m_) {
    throw Error(ErrorCode::kMalformedDump, "expected " + std::to_string(m_) + " coefficients, got " +
                                               std::to_string(coeffs.size()));
  }
  Elem e;
  for (int i = 0; i < m_; ++i) {
    if (coeffs[i] >= base_.characteristic()) throw Error(ErrorCode::kMalformedDump, "coefficient out of range");
    e.c[i] = static_cast<std::uint16_t>(coeffs[i]);
  }
  return e;
}

Polynomial ExtField::to_polynomial(const Elem& a) const { return Polynomial(coefficients(a)); }

ExtElem ExtField::from_polynomial(const Polynomial& a) const {
  Polynomial r = a.degree() >= m_ ? poly::mod(base_, a, modulus_) : a;
  Elem e;
  for (int i = 0; i <= r.degree(); ++i) e.c[i] = static_cast<std::uint16_t>(r.coeffs()[i]);
  return e;
}

std::string ExtField::to_string(const Elem& a) const {
  std::ostringstream out;
  out << '[';
  for (int i = 0; i < m_; ++i) {
    if (i) out << ',';
    out << a.c[i];
  }
  out << ']';
  return out.str();
}

nlohmann::json ExtField::descriptor() const {
  std::vector<std::uint32_t> mod(static_cast<std::size_t>(m_) + 1);
  for (int i = 0; i <= m_; ++i) mod[i] = modulus_.coeff(i);
  return {{"p", base_.characteristic()}, {"tower", nlohmann::json::array({m_, mod})}};
}

}  // namespace repairlab
