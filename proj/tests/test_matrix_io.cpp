// SPDX-License-Identifier: Apache-2.0

#include <doctest.h>

#include "repairlab/error.hpp"
#include "repairlab/field_tower.hpp"
#include "repairlab/linalg.hpp"
#include "repairlab/matrix_io.hpp"

using namespace repairlab;

TEST_SUITE("matrix_io") {

TEST_CASE("dump and load round-trip") {
  SplitMix64 rng(1);
  const PrimeField p(251);
  const auto a = linalg::random_matrix(p, 5, 7, rng);
  CHECK(load_matrix(p, dump_matrix(p, a)) == a);

  const auto tower = make_tower(6, 3, 3);
  const auto b = linalg::random_matrix(tower.b_field, 4, 3, rng);
  const auto text = dump_matrix(tower.b_field, b);
  CHECK(load_matrix(tower.b_field, text) == b);
  CHECK(text.rfind("4 3 {\"p\":7,\"tower\":[7,[1,6,0,0,0,0,0,1]]}", 0) == 0);
}

TEST_CASE("malformed dumps are rejected") {
  const PrimeField p(11);
  const PrimeField q(13);
  const Matrix<PrimeField> a(2, 2);
  const auto good = dump_matrix(p, a);
  auto code_of = [](auto fn) {
    try {
      fn();
    } catch (const Error& e) {
      return e.code();
    }
    return ErrorCode::kInvalidParameters;
  };
  CHECK(code_of([&] { load_matrix(q, good); }) == ErrorCode::kMalformedDump);
  CHECK(code_of([&] { load_matrix(p, std::string("2 2 {\"p\":11,\"tower\":[1,[0,1]]}\n0 0\n0\n")); }) ==
        ErrorCode::kMalformedDump);
  CHECK(code_of([&] { load_matrix(p, std::string("1 1 {\"p\":11,\"tower\":[1,[0,1]]}\n12\n")); }) ==
        ErrorCode::kMalformedDump);
  CHECK(code_of([&] { load_matrix(p, std::string("garbage")); }) == ErrorCode::kMalformedDump);
}

}  // TEST_SUITE
