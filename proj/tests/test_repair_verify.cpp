// SPDX-License-Identifier: Apache-2.0

#include <doctest.h>

#include "repairlab/error.hpp"
#include "repairlab/generic_repair.hpp"
#include "repairlab/repair_verify.hpp"
#include "repairlab/smallsub.hpp"
#include "repairlab/yebarg.hpp"

using namespace repairlab;
namespace la = repairlab::linalg;

namespace {

// Systematic RS-style array code with ell = 1 over GF(p): rows are powers of
// distinct points, so every r columns form a Vandermonde block.
BlockParityCheck<PrimeField> vandermonde_pcm(const PrimeField& f, std::size_t n, std::size_t r) {
  BlockParityCheck<PrimeField> pcm;
  pcm.n = n;
  pcm.r = r;
  pcm.ell = 1;
  pcm.matrix = Matrix<PrimeField>(r, n);
  for (std::size_t w = 0; w < r; ++w)
    for (std::size_t i = 0; i < n; ++i) pcm.matrix(w, i) = f.pow(f.from_int(static_cast<std::int64_t>(i + 1)), w);
  return pcm;
}

}  // namespace

TEST_SUITE("repair_verify") {

TEST_CASE("parallel and serial MDS checks agree, including the failing subset") {
  const PrimeField f(13);
  auto pcm = vandermonde_pcm(f, 8, 3);
  auto par = check_mds(f, pcm);
  auto ser = check_mds_serial(f, pcm);
  CHECK(par.mds);
  CHECK(ser.mds);
  CHECK(par.subsets == 56);
  // Columns 2 and 5 made equal: {0, 2, 5} is the first subset holding both.
  for (std::size_t w = 0; w < 3; ++w) pcm.matrix(w, 5) = pcm.matrix(w, 2);
  par = check_mds(f, pcm);
  ser = check_mds_serial(f, pcm);
  CHECK_FALSE(par.mds);
  REQUIRE(par.failing);
  REQUIRE(ser.failing);
  CHECK(*par.failing == *ser.failing);
  CHECK(*par.failing == std::vector<std::size_t>{0, 2, 5});
}

TEST_CASE("MDS verdict matches exhaustive erasure decoding on random codes") {
  const PrimeField f(5);
  SplitMix64 rng(99);
  int both = 0;
  for (int t = 0; t < 200; ++t) {
    BlockParityCheck<PrimeField> pcm;
    pcm.n = 4;
    pcm.r = 2;
    pcm.ell = 2;
    pcm.matrix = la::random_matrix(f, 4, 8, rng);
    const bool mds = check_mds(f, pcm).mds;
    REQUIRE(mds == check_mds_serial(f, pcm).mds);
    if (!mds) continue;
    ++both;
    const auto cw = random_kernel_codeword(f, pcm, rng);
    REQUIRE(decode_all_erasure_patterns(f, pcm, cw));
  }
  CHECK(both > 0);
}

TEST_CASE("erasure decoding recovers r erased blocks") {
  const auto code = build_smallsub(6, 3, 1);
  const auto& f = code.field();
  SplitMix64 rng(6);
  const auto cw = Encoder<ExtField>(f, code.pcm).encode_random(rng);
  for (const auto& s : combinations(6, 3)) {
    auto damaged = cw;
    for (auto i : s) damaged.erase(i);
    const auto rec = erasure_decode(f, code.pcm, damaged);
    REQUIRE(rec.symbols() == cw.symbols());
  }
  auto too_many = cw;
  for (std::size_t i = 0; i < 4; ++i) too_many.erase(i);
  CHECK_THROWS_AS(erasure_decode(f, code.pcm, too_many), Error);
}

TEST_CASE("coordinate rowspaces") {
  const PrimeField f(7);
  Matrix<PrimeField> m(2, 4);
  m(0, 1) = f.from_int(3);
  m(1, 3) = f.from_int(5);
  CHECK(rowspace_is_coordinate(f, m));
  m(1, 1) = f.one();
  CHECK(rowspace_is_coordinate(f, m));  // rows still span e_1, e_3
  m(0, 2) = f.one();
  CHECK_FALSE(rowspace_is_coordinate(f, m));
}

TEST_CASE("rank-deficient repair matrices are rejected") {
  const auto code = build_yb(4, 2, PrimeField(11));
  auto s = yb_repair_matrix(code, 1);
  for (std::size_t j = 0; j < s.cols(); ++j) s(0, j) = code.field.zero();
  try {
    plan_repair(code.field, code.pcm, s, 0);
    FAIL("expected RepairMatrixRankDeficient");
  } catch (const Error& e) {
    CHECK(e.code() == ErrorCode::kRepairMatrixRankDeficient);
  }
}

TEST_CASE("execution order of helpers does not change the result") {
  const auto code = build_yb(4, 2, PrimeField(11));
  SplitMix64 rng(3);
  const auto cw = Encoder<PrimeField>(code.field, code.pcm).encode_random(rng);
  auto damaged = cw;
  damaged.erase(2);
  const auto plan = plan_repair(code.field, code.pcm, yb_repair_matrix(code, 3), 2);
  const auto fwd = execute_repair(code.field, plan, damaged, {0, 1, 3});
  const auto rev = execute_repair(code.field, plan, damaged, {3, 1, 0});
  CHECK(fwd.block == cw.block_vec(2));
  CHECK(rev.block == fwd.block);
}

TEST_CASE("classification of repair schemes") {
  const auto yb = build_yb(4, 2, PrimeField(11));
  SplitMix64 rng(5);
  const auto cw = Encoder<PrimeField>(yb.field, yb.pcm).encode_random(rng);
  RepairScheme<PrimeField> scheme{&yb.field, &yb.pcm, {}, {}, {}};
  scheme.nodes.resize(4);
  for (int i = 1; i <= 3; ++i) scheme.nodes[static_cast<std::size_t>(i - 1)] = yb_repair_matrix(yb, i);
  CHECK_FALSE(scheme.complete());
  CHECK_THROWS_AS(classify(scheme, cw), Error);
  scheme.nodes[3] = ProceduralRepair<PrimeField>(
      [&yb](const ArrayCodeword<PrimeField>& c, std::size_t i) { return repair_yb(yb, c, i); });
  CHECK(scheme.complete());
  CHECK(scheme.matrix_ranks_ok());
  const auto cls = classify(scheme, cw);
  CHECK(cls.a_measured == 1);
  CHECK(cls.epsilon_measured == 0);
  CHECK(cls.is_msr);

  const auto ss = build_smallsub(6, 3, 1);
  std::vector<std::vector<std::size_t>> counts(6, std::vector<std::size_t>(6, 0));
  const auto cw2 = Encoder<ExtField>(ss.field(), ss.pcm).encode_random(rng);
  for (std::size_t i = 0; i < 6; ++i) {
    auto d = cw2;
    d.erase(i);
    counts[i] = repair_smallsub(ss, d, i).transcript.per_helper_counts();
  }
  const auto c2 = classify_counts(6, 3, 3, counts);
  CHECK(c2.a_measured == Rational(7, 5));
  CHECK(c2.max_total == 7);
  CHECK_FALSE(c2.is_msr);
  CHECK_THROWS_AS(classify_counts(6, 3, 3, {}), Error);
}

}  // TEST_SUITE
