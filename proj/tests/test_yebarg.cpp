// SPDX-License-Identifier: Apache-2.0

#include <set>

#include <doctest.h>

#include "repairlab/error.hpp"
#include "repairlab/repair_verify.hpp"
#include "repairlab/prime_field.hpp"
#include "repairlab/yebarg.hpp"
#include "support.hpp"

using namespace repairlab;
namespace la = repairlab::linalg;

namespace {

const YeBargCode<PrimeField>& code_42() {
  static const YeBargCode<PrimeField> c = build_yb(4, 2, PrimeField(11));
  return c;
}

}  // namespace

TEST_SUITE("yebarg") {

TEST_CASE("digit arithmetic") {
  const auto& c = code_42();
  CHECK(c.ell == 16);
  for (std::size_t a = 0; a < c.ell; ++a) {
    for (int i = 1; i <= 4; ++i) CHECK(c.insert_digit(c.drop_digit(a, i), i, c.digit(a, i)) == a);
  }
  CHECK(c.digit(0b1010, 2) == 1);
  CHECK(c.digit(0b1010, 1) == 0);
}

TEST_CASE("selector D_1 matches the reference enumeration") {
  const auto& c = code_42();
  const auto d = yb_selector(c, 1);
  CHECK(d.rows() == 8);
  CHECK(d.cols() == 16);
  std::set<std::pair<std::size_t, std::size_t>> ones;
  for (const auto& rc : test::oracle()["yb_d1_n4_r2"]) ones.insert({rc[0].get<std::size_t>(), rc[1].get<std::size_t>()});
  for (std::size_t b = 0; b < 8; ++b)
    for (std::size_t a = 0; a < 16; ++a) CHECK((d(b, a) == c.field.one()) == (ones.count({b, a}) == 1));
}

TEST_CASE("rank conditions of the repair matrices") {
  const auto& c = code_42();
  const PrimeField& f = c.field;
  for (int i = 1; i <= 4; ++i) {
    const auto s = yb_repair_matrix(c, i);
    CHECK(s.rows() == 16);
    for (int j = 1; j <= 4; ++j) {
      const auto rk = la::rank(f, la::mul(f, s, c.pcm.thick_column(static_cast<std::size_t>(j - 1))));
      CHECK(rk == (i == j ? 16u : 8u));
    }
  }
}

TEST_CASE("intersection property") { CHECK(yb_intersection_property(code_42())); }

TEST_CASE("MDS and exact repair with uniform downloads") {
  const auto& c = code_42();
  const auto v = check_mds(c.field, c.pcm);
  CHECK(v.mds);
  CHECK(v.subsets == 6);
  Encoder<PrimeField> enc(c.field, c.pcm);
  SplitMix64 rng(42);
  for (int t = 0; t < 30; ++t) {
    const auto cw = enc.encode_random(rng);
    for (std::size_t i = 0; i < 4; ++i) {
      auto damaged = cw;
      damaged.erase(i);
      const auto res = repair_yb(c, damaged, i);
      REQUIRE(res.block == cw.block_vec(i));
      const auto counts = res.transcript.per_helper_counts();
      for (std::size_t j = 0; j < 4; ++j) REQUIRE(counts[j] == (j == i ? 0u : 8u));
      REQUIRE_FALSE(res.transcript.all_raw());
      const auto via = apply_repair_matrix(c.field, c.pcm, yb_repair_matrix(c, static_cast<int>(i) + 1), damaged, i);
      REQUIRE(via.block == res.block);
    }
  }
}

TEST_CASE("repair is not by transfer") {
  const auto& c = code_42();
  for (int i = 1; i <= 4; ++i) {
    const auto v = is_repair_by_transfer(c.field, c.pcm, yb_repair_matrix(c, i), static_cast<std::size_t>(i - 1));
    CHECK_FALSE(v.overall);
  }
}

TEST_CASE("(3,1) over GF(7) uses six distinct points") {
  const auto c = build_yb(3, 1, PrimeField(7));
  CHECK(c.ell == 8);
  std::set<std::uint32_t> pts;
  for (const auto& row : c.lambda)
    for (auto e : row) pts.insert(e.v);
  CHECK(pts.size() == 6);
  CHECK(pts.count(0) == 0);
  CHECK(check_mds(c.field, c.pcm).mds);
}

TEST_CASE("construction errors") {
  auto code_of = [](auto fn) {
    try {
      fn();
    } catch (const Error& e) {
      return e.code();
    }
    return ErrorCode::kInvalidParameters;
  };
  CHECK(code_of([] { build_yb(3, 1, PrimeField(5)); }) == ErrorCode::kFieldTooSmall);
  CHECK(code_of([] { build_yb(17, 15, PrimeField(251)); }) == ErrorCode::kSubpacketizationBudgetExceeded);
}

}  // TEST_SUITE
