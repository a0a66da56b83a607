// SPDX-License-Identifier: Apache-2.0

#include "repairlab/polynomial.hpp"

#include <sstream>

#include "repairlab/error.hpp"

namespace repairlab {

Polynomial::Polynomial(std::vector<std::uint32_t> coeffs) : coeffs_(std::move(coeffs)) { trim(); }

Polynomial Polynomial::monomial(std::uint32_t coeff, int degree) {
  std::vector<std::uint32_t> c(static_cast<std::size_t>(degree) + 1, 0);
  c.back() = coeff;
  return Polynomial(std::move(c));
}

void Polynomial::trim() {
  while (!coeffs_.empty() && coeffs_.back() == 0) coeffs_.pop_back();
}

std::string Polynomial::to_string() const {
  if (coeffs_.empty()) return "0";
  std::ostringstream out;
  bool first = true;
  for (int i = degree(); i >= 0; --i) {
    std::uint32_t c = coeffs_[i];
    if (c == 0) continue;
    if (!first) out << " + ";
    first = false;
    if (i == 0) {
      out << c;
    } else {
      if (c != 1) out << c << "*";
      out << "x";
      if (i > 1) out << "^" << i;
    }
  }
  return out.str();
}

namespace poly {

Polynomial add(const PrimeField& f, const Polynomial& a, const Polynomial& b) {
  std::size_t n = std::max(a.coeffs().size(), b.coeffs().size());
  std::vector<std::uint32_t> c(n);
  for (std::size_t i = 0; i < n; ++i) {
    c[i] = f.add({a.coeff(static_cast<int>(i))}, {b.coeff(static_cast<int>(i))}).v;
  }
  return Polynomial(std::move(c));
}

Polynomial sub(const PrimeField& f, const Polynomial& a, const Polynomial& b) {
  std::size_t n = std::max(a.coeffs().size(), b.coeffs().size());
  std::vector<std::uint32_t> c(n);
  for (std::size_t i = 0; i < n; ++i) {
    c[i] = f.sub({a.coeff(static_cast<int>(i))}, {b.coeff(static_cast<int>(i))}).v;
  }
  return Polynomial(std::move(c));
}

Polynomial mul(const PrimeField& f, const Polynomial& a, const Polynomial& b) {
  if (a.is_zero() || b.is_zero()) return {};
  std::vector<std::uint32_t> c(a.coeffs().size() + b.coeffs().size() - 1, 0);
  for (std::size_t i = 0; i < a.coeffs().size(); ++i) {
    if (a.coeffs()[i] == 0) continue;
    for (std::size_t j = 0; j < b.coeffs().size(); ++j) {
      c[i + j] = f.mul_add({c[i + j]}, {a.coeffs()[i]}, {b.coeffs()[j]}).v;
    }
  }
  return Polynomial(std::move(c));
}

Polynomial scale(const PrimeField& f, const Polynomial& a, Fp s) {
  std::vector<std::uint32_t> c(a.coeffs());
  for (auto& x : c) x = f.mul({x}, s).v;
  return Polynomial(std::move(c));
}

std::pair<Polynomial, Polynomial> divmod(const PrimeField& f, const Polynomial& a, const Polynomial& b) {
  if (b.is_zero()) throw Error(ErrorCode::kSingular, "polynomial division by zero");
  if (a.degree() < b.degree()) return {Polynomial{}, a};
  std::vector<std::uint32_t> rem(a.coeffs());
  const int db = b.degree();
  std::vector<std::uint32_t> quot(static_cast<std::size_t>(a.degree() - db) + 1, 0);
  const Fp lead_inv = f.inv({b.coeffs().back()});
  for (int d = a.degree(); d >= db; --d) {
    Fp lead{rem[d]};
    if (lead.v == 0) continue;
    Fp q = f.mul(lead, lead_inv);
    quot[d - db] = q.v;
    Fp nq = f.neg(q);
    for (int j = 0; j <= db; ++j) {
      rem[d - db + j] = f.mul_add({rem[d - db + j]}, nq, {b.coeffs()[j]}).v;
    }
  }
  return {Polynomial(std::move(quot)), Polynomial(std::move(rem))};
}

Polynomial mod(const PrimeField& f, const Polynomial& a, const Polynomial& b) { return divmod(f, a, b).second; }

Polynomial gcd(const PrimeField& f, Polynomial a, Polynomial b) {
  while (!b.is_zero()) {
    Polynomial r = mod(f, a, b);
    a = std::move(b);
    b = std::move(r);
  }
  if (a.is_zero()) return a;
  return scale(f, a, f.inv({a.coeffs().back()}));
}

namespace {

Polynomial powmod(const PrimeField& f, const Polynomial& base, std::uint64_t e, const Polynomial& m) {
  Polynomial result({1});
  Polynomial b = mod(f, base, m);
  while (e != 0) {
    if (e & 1U) result = mod(f, mul(f, result, b), m);
    b = mod(f, mul(f, b, b), m);
    e >>= 1U;
  }
  return result;
}

}  // namespace

Polynomial frobenius_power(const PrimeField& f, const Polynomial& base, int k, const Polynomial& m) {
  Polynomial h = mod(f, base, m);
  for (int i = 0; i < k; ++i) h = powmod(f, h, f.characteristic(), m);
  return h;
}

Fp evaluate(const PrimeField& f, const Polynomial& a, Fp x) {
  Fp acc = f.zero();
  for (int i = a.degree(); i >= 0; --i) acc = f.mul_add({a.coeffs()[i]}, acc, x);
  return acc;
}

bool is_irreducible(const PrimeField& f, const Polynomial& m) {
  const int d = m.degree();
  if (d < 1) return false;
  if (d == 1) return true;
  const Polynomial x({0, 1});
  Polynomial h = x;
  for (int i = 1; i <= d / 2; ++i) {
    h = powmod(f, h, f.characteristic(), m);
    Polynomial g = gcd(f, m, sub(f, h, x));
    if (g.degree() != 0) return false;
  }
  return true;
}

Polynomial find_irreducible(const PrimeField& f, int degree) {
  if (degree < 1) throw Error(ErrorCode::kInvalidParameters, "irreducible degree must be >= 1");
  const std::uint32_t p = f.characteristic();
  // Odometer over (c_0, ..., c_{d-1}) with c_0 the fastest digit: candidates
  // come in the order of the integer sum c_i p^i. With c_0 slowest instead,
  // every multiple of x would be visited first (p^(d-1) of them).
  std::vector<std::uint32_t> c(static_cast<std::size_t>(degree) + 1, 0);
  c[degree] = 1;
  while (true) {
    Polynomial cand(c);
    if (is_irreducible(f, cand)) return cand;
    int pos = 0;
    while (pos < degree) {
      if (++c[pos] < p) break;
      c[pos] = 0;
      ++pos;
    }
    if (pos == degree) break;
  }
  // Unreachable: irreducible polynomials of every degree exist over GF(p).
  throw Error(ErrorCode::kNotIrreducible, "no irreducible polynomial found");
}

}  // namespace poly
}  // namespace repairlab
