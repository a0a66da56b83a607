// SPDX-License-Identifier: Apache-2.0

#pragma once

#include <cstdint>
#include <vector>

#include "repairlab/error.hpp"
#include "repairlab/ext_field.hpp"
#include "repairlab/prime_field.hpp"

namespace repairlab {

/// L = GF(p) and B = L(psi), with lambda_i = i embedded in B.
struct FieldTower {
  PrimeField l_field;
  ExtField b_field;
  ExtElem psi;
  std::vector<ExtElem> lambdas;
};

/// p = smallest prime >= n + 1, extension degree exactly (r - 1) * ell + 1.
FieldTower make_tower(int n, int r, int ell);

/// Distinct prime factors of x, ascending (trial division).
std::vector<std::uint64_t> prime_factors(std::uint64_t x);

template <class F>
struct SubgroupCosets {
  std::uint64_t subgroup_order = 0;
  typename F::Elem generator{};
  std::vector<typename F::Elem> coset_reps;
  typename F::Elem primitive{};  // g, the smallest primitive element
};

template <class F>
std::uint64_t group_order(const F& field) {
  const FieldSize q = field.size();
  if (q - 1 > static_cast<FieldSize>(UINT64_MAX)) {
    throw Error(ErrorCode::kFieldTooLarge, "multiplicative group order exceeds 64 bits");
  }
  return static_cast<std::uint64_t>(q - 1);
}

/// Smallest element of the canonical enumeration that generates F*.
template <class F>
typename F::Elem primitive_element(const F& field) {
  const std::uint64_t order = group_order(field);
  const auto factors = prime_factors(order);
  for (std::uint64_t idx = 1; idx <= order; ++idx) {
    const auto g = field.element_at(idx);
    bool ok = true;
    for (auto fac : factors) {
      if (field.pow(g, order / fac) == field.one()) {
        ok = false;
        break;
      }
    }
    if (ok) return g;
  }
  throw Error(ErrorCode::kInvalidParameters, "no primitive element found");
}

/// Multiplicative order of a nonzero element, by repeated multiplication.
template <class F>
std::uint64_t element_order(const F& field, const typename F::Elem& a) {
  if (field.is_zero(a)) throw Error(ErrorCode::kSingular, "zero has no multiplicative order");
  std::uint64_t k = 1;
  auto x = a;
  while (!(x == field.one())) {
    x = field.mul(x, a);
    ++k;
  }
  return k;
}

/// Subgroup E of the given order generated by g^((|F|-1)/order), and coset
/// representatives g^0, ..., g^(count-1).
template <class F>
SubgroupCosets<F> subgroup_with_cosets(const F& field, std::uint64_t order, std::uint64_t count) {
  const std::uint64_t q1 = group_order(field);
  if (order == 0 || q1 % order != 0) {
    throw Error(ErrorCode::kOrderDoesNotDivide,
                std::to_string(order) + " does not divide " + std::to_string(q1));
  }
  const std::uint64_t index = q1 / order;
  if (index < count) {
    throw Error(ErrorCode::kNotEnoughCosets,
                std::to_string(index) + " cosets available, " + std::to_string(count) + " requested");
  }
  SubgroupCosets<F> out;
  out.subgroup_order = order;
  out.primitive = primitive_element(field);
  out.generator = field.pow(out.primitive, index);
  out.coset_reps.reserve(count);
  auto s = field.one();
  for (std::uint64_t c = 0; c < count; ++c) {
    out.coset_reps.push_back(s);
    s = field.mul(s, out.primitive);
  }
  return out;
}

}  // namespace repairlab
