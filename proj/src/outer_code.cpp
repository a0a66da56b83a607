// SPDX-License-Identifier: Apache-2.0

#include "repairlab/outer_code.hpp"

#include <cmath>

#include "repairlab/combinatorics.hpp"
#include "repairlab/error.hpp"
#include "repairlab/prime_field.hpp"

namespace repairlab {

OuterCode repetition_code(int q, int N) {
  if (q < 2 || N < 1) throw Error(ErrorCode::kInvalidParameters, "repetition code needs q >= 2, N >= 1");
  OuterCode c;
  c.family = "repetition";
  c.q = q;
  c.N = N;
  c.K = 1;
  c.M = static_cast<std::size_t>(q);
  c.D = N;
  c.is_linear = true;
  for (int s = 1; s <= q; ++s) c.codewords.emplace_back(static_cast<std::size_t>(N), s);
  return c;
}

OuterCode reed_solomon_outer(int q_prime, int N, int K) {
  if (!is_prime(static_cast<std::uint64_t>(q_prime))) {
    throw Error(ErrorCode::kNotPrime, std::to_string(q_prime) + " is not prime");
  }
  if (N < 1 || K < 1 || K > N) throw Error(ErrorCode::kInvalidParameters, "need 1 <= K <= N");
  if (N > q_prime - 1) {
    throw Error(ErrorCode::kLengthExceedsField,
                "N = " + std::to_string(N) + " exceeds the " + std::to_string(q_prime - 1) + " nonzero points");
  }
  PrimeField f(static_cast<std::uint32_t>(q_prime));
  OuterCode c;
  c.family = "rs";
  c.q = q_prime;
  c.N = N;
  c.K = K;
  c.M = ipow(static_cast<std::uint64_t>(q_prime), static_cast<unsigned>(K));
  c.D = N - K + 1;
  c.is_linear = true;
  c.codewords.reserve(c.M);
  std::vector<std::uint32_t> msg(static_cast<std::size_t>(K));
  for (std::size_t m = 0; m < c.M; ++m) {
    // m_0 is the most significant digit of the enumeration index.
    std::size_t rest = m;
    for (int t = K - 1; t >= 0; --t) {
      msg[t] = static_cast<std::uint32_t>(rest % static_cast<std::size_t>(q_prime));
      rest /= static_cast<std::size_t>(q_prime);
    }
    std::vector<int> word(static_cast<std::size_t>(N));
    for (int x = 1; x <= N; ++x) {
      Fp acc = f.zero();
      for (int t = K - 1; t >= 0; --t) acc = f.mul_add({msg[t]}, acc, {static_cast<std::uint32_t>(x)});
      word[x - 1] = static_cast<int>(acc.v) + 1;
    }
    c.codewords.push_back(std::move(word));
  }
  return c;
}

OuterCode custom_outer(int q, std::vector<std::vector<int>> codewords) {
  OuterCode c;
  c.family = "custom";
  c.q = q;
  c.N = codewords.empty() ? 0 : static_cast<int>(codewords[0].size());
  c.M = codewords.size();
  c.codewords = std::move(codewords);
  for (const auto& w : c.codewords) {
    if (static_cast<int>(w.size()) != c.N) throw Error(ErrorCode::kShapeMismatch, "codeword lengths differ");
    for (int s : w)
      if (s < 1 || s > q) throw Error(ErrorCode::kInvalidParameters, "symbol outside [1, q]");
  }
  c.D = c.M >= 2 ? min_distance(c) : 0;
  return c;
}

int hamming(const std::vector<int>& a, const std::vector<int>& b) {
  int d = 0;
  for (std::size_t t = 0; t < a.size(); ++t) d += a[t] != b[t] ? 1 : 0;
  return d;
}

int min_distance(const OuterCode& code) {
  if (code.codewords.size() < 2) throw Error(ErrorCode::kTooFewCodewords, "need at least two codewords");
  int best = code.N;
  for (std::size_t x = 0; x < code.codewords.size(); ++x)
    for (std::size_t y = x + 1; y < code.codewords.size(); ++y) best = std::min(best, hamming(code.codewords[x], code.codewords[y]));
  return best;
}

Rational average_distance_bruteforce(const OuterCode& code) {
  if (code.codewords.size() < 2) throw Error(ErrorCode::kTooFewCodewords, "need at least two codewords");
  std::int64_t sum = 0;
  for (std::size_t x = 0; x < code.codewords.size(); ++x)
    for (std::size_t y = x + 1; y < code.codewords.size(); ++y) sum += hamming(code.codewords[x], code.codewords[y]);
  const auto m = static_cast<std::int64_t>(code.codewords.size());
  return Rational(2 * sum, m * (m - 1));
}

Rational average_distance_formula(std::int64_t q, std::int64_t M, std::int64_t N) {
  return Rational((q - 1) * M, q * (M - 1)) * N;
}

Rational average_distance(const OuterCode& code) {
  if (!code.is_linear) throw Error(ErrorCode::kNotLinear, code.family + " code is not linear");
  return average_distance_formula(code.q, static_cast<std::int64_t>(code.M), code.N);
}

double entropy_q(int q, double x) {
  if (x <= 0.0) return 0.0;
  const double lq = std::log(static_cast<double>(q));
  double h = x * std::log(static_cast<double>(q - 1)) / lq - x * std::log(x) / lq;
  if (x < 1.0) h -= (1.0 - x) * std::log1p(-x) / lq;
  return h;
}

double gv_rate(int q, double delta) {
  if (q < 2) throw Error(ErrorCode::kInvalidParameters, "q must be >= 2");
  // The formula is evaluated on all of (0, 1]; past 1 - 1/q it no longer
  // describes a rate guarantee but callers still tabulate it there.
  if (!(delta > 0.0) || delta > 1.0) throw Error(ErrorCode::kDeltaOutOfRange, "delta must lie in (0, 1]");
  return 1.0 - entropy_q(q, delta);
}

}  // namespace repairlab
