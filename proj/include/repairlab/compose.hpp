// SPDX-License-Identifier: Apache-2.0

#pragma once

#include <cstddef>
#include <cstdint>
#include <vector>

#include "repairlab/array_code.hpp"
#include "repairlab/field_tower.hpp"
#include "repairlab/outer_code.hpp"
#include "repairlab/prime_field.hpp"
#include "repairlab/smallsub.hpp"
#include "repairlab/yebarg.hpp"

namespace repairlab {

/// Inner code in the split form the composition needs: ell x ell blocks
/// h[w][i] of row block w and thick column i, and per-node repair matrices
/// acting on one row block at a time, s[i][w].
template <class F>
struct InnerScheme {
  std::size_t n = 0, r = 0, ell = 0;
  std::vector<std::vector<Matrix<F>>> h;
  std::vector<std::vector<Matrix<F>>> s;
};

template <class F>
InnerScheme<F> split_pcm(const BlockParityCheck<F>& pcm) {
  InnerScheme<F> in;
  in.n = pcm.n;
  in.r = pcm.r;
  in.ell = pcm.ell;
  in.h.resize(pcm.r);
  for (std::size_t w = 0; w < pcm.r; ++w)
    for (std::size_t i = 0; i < pcm.n; ++i) in.h[w].push_back(linalg::block(pcm.matrix, w * pcm.ell, i * pcm.ell, pcm.ell, pcm.ell));
  return in;
}

template <class F>
InnerScheme<F> inner_from_yb(const YeBargCode<F>& code) {
  InnerScheme<F> in = split_pcm(code.pcm);
  for (int i = 1; i <= code.n; ++i) in.s.emplace_back(static_cast<std::size_t>(code.r), yb_selector(code, i));
  return in;
}

/// The small sub-packetization selector touches the same coordinates in
/// every row block, so it splits the same way.
InnerScheme<ExtField> inner_from_smallsub(const SmallSubCode& code);

/// Long code whose thick columns are indexed by outer codewords. Thick column
/// c, row block w is sigma_c^w Diag(h[w][c_1 - 1], ..., h[w][c_N - 1]).
template <class F>
struct ComposedCode {
  using Elem = typename F::Elem;

  F field;
  InnerScheme<F> inner;
  OuterCode outer;
  std::vector<Elem> sigma;  // one coset representative per outer codeword
  BlockParityCheck<F> pcm;
  // Per-helper download is at most (1 + epsilon) l / r, i.e. at most
  // (1/r + excess) l, with epsilon = (r - 1)(1 - D/N) and excess = epsilon / r.
  Rational epsilon;
  Rational excess;

  std::size_t width() const noexcept { return static_cast<std::size_t>(outer.N) * inner.ell; }

  /// Diag over row blocks w of Diag over t of s[c_t - 1][w].
  Matrix<F> repair_matrix(std::size_t c) const {
    if (c >= outer.codewords.size()) throw Error(ErrorCode::kNotACodeword, "codeword index " + std::to_string(c));
    const auto& word = outer.codewords[c];
    std::vector<Matrix<F>> parts;
    for (std::size_t w = 0; w < inner.r; ++w)
      for (int sym : word) parts.push_back(inner.s[static_cast<std::size_t>(sym - 1)][w]);
    return linalg::block_diag(parts);
  }
};

template <class F>
ComposedCode<F> compose(const F& field, InnerScheme<F> inner, OuterCode outer, std::vector<typename F::Elem> sigma) {
  if (outer.q > static_cast<int>(inner.n)) {
    throw Error(ErrorCode::kAlphabetLargerThanInner,
                "outer alphabet " + std::to_string(outer.q) + " exceeds inner length " + std::to_string(inner.n));
  }
  if (sigma.size() != outer.codewords.size()) throw Error(ErrorCode::kShapeMismatch, "one scalar per outer codeword");
  const std::size_t N = static_cast<std::size_t>(outer.N);
  const std::size_t ell = inner.ell;
  const std::size_t width = N * ell;
  const std::size_t M = outer.codewords.size();
  Matrix<F> H(inner.r * width, M * width);
  for (std::size_t c = 0; c < M; ++c) {
    auto alpha = field.one();
    for (std::size_t w = 0; w < inner.r; ++w) {
      for (std::size_t t = 0; t < N; ++t) {
        const Matrix<F>& blk = inner.h[w][static_cast<std::size_t>(outer.codewords[c][t] - 1)];
        linalg::set_block(H, w * width + t * ell, c * width + t * ell, linalg::scale(field, blk, alpha));
      }
      alpha = field.mul(alpha, sigma[c]);
    }
  }
  ComposedCode<F> out{field, std::move(inner), std::move(outer), std::move(sigma), {}, {}, {}};
  out.pcm.n = M;
  out.pcm.ell = width;
  out.pcm.r = out.inner.r;
  out.pcm.matrix = std::move(H);
  const auto r = static_cast<std::int64_t>(out.inner.r);
  out.epsilon = Rational(r - 1) * (Rational(1) - out.outer.delta());
  out.excess = out.epsilon / r;
  return out;
}

struct ComposeOptions {
  std::uint32_t field_search_limit = kMaxPrime;
};

/// Smallest prime p <= limit with rn | p - 1 and (p - 1) / (rn) >= M.
std::uint32_t select_composition_prime(std::uint64_t rn, std::uint64_t M, std::uint32_t limit);

/// Ye-Barg inner (n, k) code whose evaluation points are the powers of the
/// order-rn subgroup generator, lambda_{i,j} = g_E^((i-1) r + j), composed with
/// `outer` over the smallest qualifying prime field. Coset representatives
/// g^0, g^1, ... go to the outer codewords in enumeration order.
ComposedCode<PrimeField> compose_yb(int n, int k, const OuterCode& outer, ComposeOptions opts = {});

/// (1 + (r - 1)(1 - delta)) / r, the per-helper fraction of l.
Rational epsilon_bound(int r, Rational delta);

/// 1 - dbar (r - 1) / (r N) with dbar the mean distance of a linear outer code
/// with M codewords over an alphabet of size q.
Rational avg_epsilon_bound(int r, std::int64_t q, std::int64_t N, std::int64_t M);

/// (1 - h_q(delta*)) / r^q, the length exponent per unit of l without the
/// vanishing term.
double max_code_length_theorem4(int r, int q, double delta_star);

}  // namespace repairlab
