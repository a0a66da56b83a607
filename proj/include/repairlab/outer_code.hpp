// SPDX-License-Identifier: Apache-2.0

#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include <json.hpp>

#include "repairlab/rational.hpp"

namespace repairlab {

/// Block code over the alphabet {1, ..., q}. Codewords are listed in
/// lexicographic message order; that order indexes the composed code's blocks.
struct OuterCode {
  std::string family;
  int q = 0;
  int N = 0;
  int K = 0;
  std::size_t M = 0;
  int D = 0;
  bool is_linear = false;
  std::vector<std::vector<int>> codewords;

  Rational delta() const { return Rational(D, N); }
  nlohmann::json descriptor() const { return {{"family", family}, {"q", q}, {"N", N}, {"K", K}}; }
};

/// M = q codewords (c, ..., c), D = N.
OuterCode repetition_code(int q, int N);

/// Evaluations of polynomials of degree < K at the points 1, ..., N of
/// GF(q_prime), symbol v written as v + 1. Throws LengthExceedsField if
/// N > q_prime - 1 would be needed, i.e. N >= q_prime.
OuterCode reed_solomon_outer(int q_prime, int N, int K);

/// Arbitrary codeword list, treated as nonlinear.
OuterCode custom_outer(int q, std::vector<std::vector<int>> codewords);

int hamming(const std::vector<int>& a, const std::vector<int>& b);

/// Exhaustive minimum pairwise distance; TooFewCodewords below two codewords.
int min_distance(const OuterCode& code);

/// Exhaustive mean distance over ordered pairs of distinct codewords.
Rational average_distance_bruteforce(const OuterCode& code);

/// (q - 1) M / (q (M - 1)) * N.
Rational average_distance_formula(std::int64_t q, std::int64_t M, std::int64_t N);

/// Closed form for a linear code; NotLinear otherwise.
Rational average_distance(const OuterCode& code);

/// q-ary entropy h_q(x) = x log_q(q-1) - x log_q x - (1-x) log_q(1-x).
double entropy_q(int q, double x);

/// 1 - h_q(delta) for 0 < delta <= 1; DeltaOutOfRange otherwise. The o(1)
/// term of the asymptotic statement is dropped.
double gv_rate(int q, double delta);

}  // namespace repairlab
