// SPDX-License-Identifier: Apache-2.0

#include <doctest.h>

#include "repairlab/error.hpp"
#include "repairlab/ext_field.hpp"
#include "repairlab/field_tower.hpp"
#include "support.hpp"

using namespace repairlab;

namespace {

ExtField ext(std::uint32_t p, int d) {
  PrimeField base(p);
  return ExtField(base, poly::find_irreducible(base, d));
}

}  // namespace

TEST_SUITE("ext_field") {

TEST_CASE("extension field axioms on random samples") {
  for (auto [p, d] : {std::pair{7u, 7}, std::pair{11u, 19}, std::pair{2u, 8}, std::pair{5u, 5}}) {
    const ExtField f = ext(p, d);
    SplitMix64 rng(p * 100 + static_cast<std::uint64_t>(d));
    CAPTURE(p);
    CAPTURE(d);
    for (int t = 0; t < 1500; ++t) {
      const auto a = f.random(rng), b = f.random(rng), c = f.random(rng);
      REQUIRE(f.mul(a, b) == f.mul(b, a));
      REQUIRE(f.mul(f.mul(a, b), c) == f.mul(a, f.mul(b, c)));
      REQUIRE(f.mul(a, f.add(b, c)) == f.add(f.mul(a, b), f.mul(a, c)));
      REQUIRE(f.sub(f.add(a, b), b) == a);
      REQUIRE(f.add(a, f.neg(a)) == f.zero());
      if (!f.is_zero(a)) REQUIRE(f.mul(a, f.inv(a)) == f.one());
    }
  }
}

TEST_CASE("multiplication agrees with polynomial arithmetic modulo m") {
  const ExtField f = ext(11, 19);
  SplitMix64 rng(4);
  for (int t = 0; t < 200; ++t) {
    const auto a = f.random(rng), b = f.random(rng);
    const auto ref = poly::mod(f.base(), poly::mul(f.base(), f.to_polynomial(a), f.to_polynomial(b)), f.modulus());
    REQUIRE(f.to_polynomial(f.mul(a, b)) == ref);
  }
}

TEST_CASE("Frobenius fixes the base field and has order m") {
  const ExtField f = ext(7, 7);
  const auto x = f.generator();
  auto y = x;
  for (int i = 1; i < 7; ++i) {
    y = f.pow(y, 7);
    CHECK_FALSE(y == x);
  }
  CHECK(f.pow(y, 7) == x);
  for (std::uint32_t a = 0; a < 7; ++a) CHECK(f.pow(f.embed({a}), 7) == f.embed({a}));
}

TEST_CASE("canonical enumeration round-trips") {
  const ExtField f = ext(3, 4);
  CHECK(f.size() == 81);
  std::vector<bool> seen(81, false);
  for (std::uint64_t i = 0; i < 81; ++i) {
    const auto e = f.element_at(i);
    CHECK(f.index_of(e) == i);
    seen[f.index_of(e)] = true;
  }
  CHECK(std::all_of(seen.begin(), seen.end(), [](bool b) { return b; }));
  CHECK(f.element_at(1) == f.one());
  CHECK(f.element_at(3) == f.generator());
}

TEST_CASE("coefficients and descriptor") {
  const ExtField f = ext(7, 7);
  CHECK(f.descriptor().dump() == R"({"p":7,"tower":[7,[1,6,0,0,0,0,0,1]]})");
  SplitMix64 rng(1);
  const auto a = f.random(rng);
  const auto c = f.coefficients(a);
  CHECK(c.size() == 7);
  CHECK(f.from_coefficients(c) == a);
  const std::vector<std::uint32_t> bad{9, 0, 0};
  CHECK_THROWS_AS(f.from_coefficients(bad), Error);
}

TEST_CASE("rejects reducible and oversized moduli") {
  const PrimeField base(7);
  CHECK_THROWS_AS(ExtField(base, Polynomial({0, 0, 1})), Error);
  CHECK_THROWS_AS(ExtField(base, Polynomial::monomial(1, 33)), Error);
}

TEST_CASE("field towers for the desk instances") {
  const auto& primes = test::oracle()["primes"];
  const auto t6 = make_tower(6, 3, 3);
  CHECK(t6.l_field.characteristic() == primes["tower_6"].get<std::uint32_t>());
  CHECK(t6.b_field.degree() == 7);
  REQUIRE(t6.lambdas.size() == 6);
  for (int i = 0; i < 6; ++i) {
    CHECK(t6.b_field.in_base(t6.lambdas[static_cast<std::size_t>(i)]));
    CHECK(t6.lambdas[static_cast<std::size_t>(i)] == t6.b_field.from_int(i + 1));
  }
  CHECK(t6.psi == t6.b_field.generator());
  CHECK_FALSE(t6.b_field.in_base(t6.psi));

  const auto t9 = make_tower(9, 3, 9);
  CHECK(t9.l_field.characteristic() == primes["tower_9"].get<std::uint32_t>());
  CHECK(t9.b_field.degree() == 19);
  CHECK(t9.b_field.modulus().to_string() == "x^19 + x^2 + x + 7");
}

TEST_CASE("subgroups and cosets match the reference") {
  for (const auto& row : test::oracle()["subgroups"]) {
    const PrimeField f(row["p"].get<std::uint32_t>());
    const auto reps = row["coset_reps"].get<std::vector<std::uint32_t>>();
    const auto order = row["order_measured"].get<std::uint64_t>();
    const auto sc = subgroup_with_cosets(f, order, reps.size());
    CHECK(sc.primitive.v == row["primitive"].get<std::uint32_t>());
    CHECK(sc.generator.v == row["generator"].get<std::uint32_t>());
    CHECK(element_order(f, sc.generator) == order);
    REQUIRE(sc.coset_reps.size() == reps.size());
    for (std::size_t i = 0; i < reps.size(); ++i) CHECK(sc.coset_reps[i].v == reps[i]);
  }
}

TEST_CASE("cosets of the order-6 subgroup of GF(19) partition GF(19)*") {
  const PrimeField f(19);
  const auto sc = subgroup_with_cosets(f, 6, 3);
  std::vector<int> hits(19, 0);
  for (const auto& rep : sc.coset_reps) {
    auto e = f.one();
    for (int j = 0; j < 6; ++j, e = f.mul(e, sc.generator)) ++hits[f.mul(rep, e).v];
  }
  CHECK(hits[0] == 0);
  for (int x = 1; x < 19; ++x) CHECK(hits[static_cast<std::size_t>(x)] == 1);
}

TEST_CASE("subgroup errors") {
  const PrimeField f(19);
  CHECK_THROWS_AS(subgroup_with_cosets(f, 7, 1), Error);
  CHECK_THROWS_AS(subgroup_with_cosets(f, 6, 4), Error);
  const auto t9 = make_tower(9, 3, 9);
  try {
    group_order(t9.b_field);
    FAIL("expected FieldTooLarge");
  } catch (const Error& e) {
    CHECK(e.code() == ErrorCode::kFieldTooLarge);
  }
}

TEST_CASE("primitive element of a small extension generates everything") {
  const ExtField f = ext(2, 4);
  const auto g = primitive_element(f);
  CHECK(element_order(f, g) == 15);
}

}  // TEST_SUITE
