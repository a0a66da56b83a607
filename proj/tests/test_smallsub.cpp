// SPDX-License-Identifier: Apache-2.0

#include <doctest.h>

#include "repairlab/error.hpp"
#include "repairlab/bounds.hpp"
#include "repairlab/repair_verify.hpp"
#include "repairlab/smallsub.hpp"

using namespace repairlab;

namespace {

const SmallSubCode& code_631() {
  static const SmallSubCode c = build_smallsub(6, 3, 1);
  return c;
}
const SmallSubCode& code_962() {
  static const SmallSubCode c = build_smallsub(9, 6, 2);
  return c;
}

ErrorCode code_of(int n, int k, int tau) {
  try {
    build_smallsub(n, k, tau);
  } catch (const Error& e) {
    return e.code();
  }
  return ErrorCode::kInvalidParameters;
}

}  // namespace

TEST_SUITE("smallsub") {

TEST_CASE("overline map lands in [1, m]") {
  CHECK(overline_map(3, 3) == 3);
  CHECK(overline_map(4, 3) == 1);
  CHECK(overline_map(0, 3) == 3);
  CHECK(overline_map(-1, 3) == 2);
  for (int e = -20; e <= 20; ++e) {
    const int v = overline_map(e, 4);
    CHECK(v >= 1);
    CHECK(v <= 4);
    CHECK((v - e) % 4 == 0);
  }
}

TEST_CASE("parameters of the desk instances") {
  const auto& a = code_631();
  CHECK(a.r == 3);
  CHECK(a.s == 2);
  CHECK(a.ell == 3);
  CHECK(a.field().characteristic() == 7);
  CHECK(a.field().degree() == 7);
  CHECK(a.pcm.matrix.rows() == 9);
  CHECK(a.pcm.matrix.cols() == 18);

  const auto& b = code_962();
  CHECK(b.ell == 9);
  CHECK(b.field().characteristic() == 11);
  CHECK(b.field().degree() == 19);
  CHECK(b.pcm.matrix.rows() == 27);
}

TEST_CASE("node and coordinate indexing") {
  const auto& b = code_962();
  for (std::size_t i = 0; i < 9; ++i) {
    const auto [u, v] = b.node_of(i);
    CHECK(b.block_index(u, v) == i);
  }
  for (std::size_t x = 0; x < b.ell; ++x) CHECK(b.coord_index(b.coord_of(x)) == x);
  CHECK(b.coord_of(0) == std::vector<int>{1, 1});
  CHECK(b.coord_of(1) == std::vector<int>{1, 2});
  CHECK(b.coord_of(3) == std::vector<int>{2, 1});
}

TEST_CASE("parameter validation") {
  CHECK(code_of(7, 4, 1) == ErrorCode::kDivisibilityViolation);
  CHECK(code_of(6, 3, 0) == ErrorCode::kTauOutOfRange);
  CHECK(code_of(6, 3, 3) == ErrorCode::kTauOutOfRange);
  CHECK(code_of(3, 3, 1) == ErrorCode::kInvalidParameters);
}

TEST_CASE("encoding a unit message yields a codeword") {
  const auto& a = code_631();
  Encoder<ExtField> enc(a.field(), a.pcm);
  std::vector<ExtElem> msg(enc.message_length());
  msg[0] = a.field().one();
  const auto cw = enc.encode(msg);
  CHECK(is_codeword(a.field(), a.pcm, cw));
  CHECK(cw.block_vec(0)[0] == a.field().one());
}

TEST_CASE("MDS over every 3-subset") {
  CHECK(check_mds(code_631().field(), code_631().pcm).mds);
  const auto v = check_mds(code_962().field(), code_962().pcm);
  CHECK(v.mds);
  CHECK(v.subsets == 84);
}

TEST_CASE("(6,3,1): every repair is exact, downloads 7 raw symbols, and matches the matrix path") {
  const auto& a = code_631();
  Encoder<ExtField> enc(a.field(), a.pcm);
  SplitMix64 rng(31);
  for (int t = 0; t < 20; ++t) {
    const auto cw = enc.encode_random(rng);
    for (std::size_t i = 0; i < 6; ++i) {
      auto damaged = cw;
      damaged.erase(i);
      const auto res = repair_smallsub(a, damaged, i);
      REQUIRE(res.block == cw.block_vec(i));
      REQUIRE(res.transcript.total() == 7);
      REQUIRE(res.transcript.all_raw());
      REQUIRE(res.transcript.stage_counts().at(1) == 5);
      const auto via = apply_repair_matrix(a.field(), a.pcm, smallsub_repair_matrix(a, i), damaged, i);
      REQUIRE(via.block == res.block);
      REQUIRE(via.transcript.per_helper_counts() == res.transcript.per_helper_counts());
    }
  }
  CHECK(Rational(7) <= Rational(2) * cut_set(6, 3, 5, 3));
}

TEST_CASE("(9,6,2): stage counts and totals") {
  const auto& b = code_962();
  Encoder<ExtField> enc(b.field(), b.pcm);
  SplitMix64 rng(962);
  const auto cw = enc.encode_random(rng);
  const Rational bound = Rational(3, 2) * cut_set(9, 6, 8, 9);
  CHECK(bound == 36);
  for (std::size_t i = 0; i < 9; ++i) {
    auto damaged = cw;
    damaged.erase(i);
    const auto res = repair_smallsub(b, damaged, i);
    CAPTURE(i);
    CHECK(res.block == cw.block_vec(i));
    const auto st = res.transcript.stage_counts();
    CHECK(st.at(1) == 24);
    const std::size_t s2 = st.count(2) ? st.at(2) : 0;
    CHECK(s2 <= 6);
    CHECK(res.transcript.total() <= 30);
    CHECK(Rational(static_cast<std::int64_t>(res.transcript.total())) <= bound);
    CHECK(res.transcript.all_raw());
  }
}

TEST_CASE("repair matrices pass the transfer test") {
  for (const auto* c : {&code_631(), &code_962()}) {
    for (std::size_t i = 0; i < c->pcm.n; ++i) {
      const auto s = smallsub_repair_matrix(*c, i);
      CHECK(is_repair_by_transfer(c->field(), c->pcm, s, i).overall);
    }
  }
}

TEST_CASE("(6,3,2) is MSR: 15 symbols per repair") {
  const auto c = build_smallsub(6, 3, 2);
  Encoder<ExtField> enc(c.field(), c.pcm);
  SplitMix64 rng(2);
  const auto cw = enc.encode_random(rng);
  for (std::size_t i = 0; i < 6; ++i) {
    auto damaged = cw;
    damaged.erase(i);
    const auto res = repair_smallsub(c, damaged, i);
    CHECK(res.block == cw.block_vec(i));
    CHECK(res.transcript.total() == 15);
    CHECK(res.transcript.max_per_helper() == 3);
  }
}

TEST_CASE("repair requires exactly the target erased") {
  const auto& a = code_631();
  Encoder<ExtField> enc(a.field(), a.pcm);
  SplitMix64 rng(1);
  auto cw = enc.encode_random(rng);
  CHECK_THROWS_AS(repair_smallsub(a, cw, 0), Error);
  cw.erase(0);
  cw.erase(1);
  CHECK_THROWS_AS(repair_smallsub(a, cw, 0), Error);
}

}  // TEST_SUITE
