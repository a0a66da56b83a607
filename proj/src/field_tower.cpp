// SPDX-License-Identifier: Apache-2.0

#include "repairlab/field_tower.hpp"

#include "repairlab/polynomial.hpp"

namespace repairlab {

FieldTower make_tower(int n, int r, int ell) {
  if (n < 2 || r < 1 || ell < 1) throw Error(ErrorCode::kInvalidParameters, "tower needs n >= 2, r >= 1, ell >= 1");
  PrimeField l(static_cast<std::uint32_t>(next_prime(static_cast<std::uint64_t>(n) + 1)));
  const int degree = (r - 1) * ell + 1;
  ExtField b(l, poly::find_irreducible(l, degree));
  std::vector<ExtElem> lambdas;
  lambdas.reserve(static_cast<std::size_t>(n));
  for (int i = 1; i <= n; ++i) lambdas.push_back(b.from_int(i));
  ExtElem psi = b.generator();
  return FieldTower{l, std::move(b), psi, std::move(lambdas)};
}

std::vector<std::uint64_t> prime_factors(std::uint64_t x) {
  std::vector<std::uint64_t> out;
  for (std::uint64_t d = 2; d * d <= x; ++d) {
    if (x % d != 0) continue;
    out.push_back(d);
    while (x % d == 0) x /= d;
  }
  if (x > 1) out.push_back(x);
  return out;
}

}  // namespace repairlab
