// SPDX-License-Identifier: Apache-2.0

#include "repairlab/compose.hpp"

#include <cmath>

namespace repairlab {

InnerScheme<ExtField> inner_from_smallsub(const SmallSubCode& code) {
  InnerScheme<ExtField> in = split_pcm(code.pcm);
  const auto r = static_cast<std::size_t>(code.r);
  for (std::size_t i = 0; i < code.pcm.n; ++i) {
    Matrix<ExtField> full = smallsub_repair_matrix(code, i);
    const std::size_t per = full.rows() / r;
    std::vector<Matrix<ExtField>> parts;
    for (std::size_t w = 0; w < r; ++w) parts.push_back(linalg::block(full, w * per, w * code.ell, per, code.ell));
    in.s.push_back(std::move(parts));
  }
  return in;
}

std::uint32_t select_composition_prime(std::uint64_t rn, std::uint64_t M, std::uint32_t limit) {
  for (std::uint64_t p = rn + 1; p <= limit; p += rn) {
    if ((p - 1) / rn < M) continue;
    if (is_prime(p)) return static_cast<std::uint32_t>(p);
  }
  throw Error(ErrorCode::kNoQualifyingField, "no prime <= " + std::to_string(limit) + " with " + std::to_string(rn) +
                                                 " | p - 1 and " + std::to_string(M) + " cosets");
}

ComposedCode<PrimeField> compose_yb(int n, int k, const OuterCode& outer, ComposeOptions opts) {
  const int r = n - k;
  if (n < 2 || k < 1 || r < 1) throw Error(ErrorCode::kInvalidParameters, "need n > k >= 1");
  if (outer.q > n) {
    throw Error(ErrorCode::kAlphabetLargerThanInner,
                "outer alphabet " + std::to_string(outer.q) + " exceeds inner length " + std::to_string(n));
  }
  const auto rn = static_cast<std::uint64_t>(r) * static_cast<std::uint64_t>(n);
  const std::uint32_t limit = std::min(opts.field_search_limit, kMaxPrime);
  PrimeField f(select_composition_prime(rn, outer.codewords.size(), limit));
  auto cosets = subgroup_with_cosets(f, rn, outer.codewords.size());
  std::vector<std::vector<Fp>> evals(static_cast<std::size_t>(n), std::vector<Fp>(static_cast<std::size_t>(r)));
  for (int i = 1; i <= n; ++i)
    for (int j = 0; j < r; ++j) evals[i - 1][j] = f.pow(cosets.generator, static_cast<std::uint64_t>((i - 1) * r + j));
  auto yb = build_yb(n, k, f, evals);
  auto code = compose(f, inner_from_yb(yb), outer, cosets.coset_reps);
  code.pcm.meta = {{"construction", "composed"},
                   {"inner", {{"n", n}, {"k", k}}},
                   {"outer", outer.descriptor()},
                   {"field_search_limit", limit}};
  return code;
}

Rational epsilon_bound(int r, Rational delta) {
  if (r < 1) throw Error(ErrorCode::kInvalidParameters, "r must be >= 1");
  if (delta < 0 || delta > 1) throw Error(ErrorCode::kDeltaOutOfRange, "delta must lie in [0, 1]");
  return (Rational(1) + Rational(r - 1) * (Rational(1) - delta)) / r;
}

Rational avg_epsilon_bound(int r, std::int64_t q, std::int64_t N, std::int64_t M) {
  const Rational dbar = average_distance_formula(q, M, N);
  return Rational(1) - dbar * Rational(r - 1, static_cast<std::int64_t>(r) * N);
}

double max_code_length_theorem4(int r, int q, double delta_star) {
  return gv_rate(q, delta_star) / std::pow(static_cast<double>(r), static_cast<double>(q));
}

}  // namespace repairlab
