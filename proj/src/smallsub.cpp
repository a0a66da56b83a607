// SPDX-License-Identifier: Apache-2.0

#include "repairlab/smallsub.hpp"

#include <set>

#include "repairlab/combinatorics.hpp"

namespace repairlab {

int overline_map(int e, int m) {
  const int mod = ((e % m) + m) % m;
  return mod == 0 ? m : mod;
}

std::size_t SmallSubCode::coord_index(const std::vector<int>& x) const noexcept {
  std::size_t idx = 0;
  for (int a = 0; a < tau; ++a) idx = idx * static_cast<std::size_t>(r) + static_cast<std::size_t>(x[a] - 1);
  return idx;
}

std::vector<int> SmallSubCode::coord_of(std::size_t idx) const {
  std::vector<int> x(static_cast<std::size_t>(tau));
  for (int a = tau - 1; a >= 0; --a) {
    x[a] = static_cast<int>(idx % static_cast<std::size_t>(r)) + 1;
    idx /= static_cast<std::size_t>(r);
  }
  return x;
}

SmallSubCode build_smallsub(int n, int k, int tau) {
  const int r = n - k;
  if (n < 2 || k < 1 || r < 1) {
    throw Error(ErrorCode::kInvalidParameters, "need n > k >= 1");
  }
  if (n % r != 0) {
    throw Error(ErrorCode::kDivisibilityViolation, "r = " + std::to_string(r) + " does not divide n = " + std::to_string(n));
  }
  const int s = n / r;
  const int max_tau = (n + r - 1) / r;
  if (tau < 1 || tau > max_tau) {
    throw Error(ErrorCode::kTauOutOfRange, "tau = " + std::to_string(tau) + " outside [1, " + std::to_string(max_tau) + "]");
  }
  const std::size_t ell = ipow(static_cast<std::uint64_t>(r), static_cast<unsigned>(tau));

  SmallSubCode code{n, k, r, s, tau, ell, make_tower(n, r, static_cast<int>(ell)), {}};
  const ExtField& B = code.tower.b_field;
  const std::size_t N = static_cast<std::size_t>(n);

  Matrix<ExtField> P(static_cast<std::size_t>(r) * ell, N * ell);
  auto col = [&](std::size_t coord, std::size_t block) { return block * ell + coord; };

  for (std::size_t xi = 0; xi < ell; ++xi) {
    for (std::size_t b = 0; b < N; ++b) P(xi, col(xi, b)) = B.one();
  }
  for (int p = 1; p < r; ++p) {
    std::vector<ExtElem> lam_p(N);
    for (std::size_t b = 0; b < N; ++b) lam_p[b] = B.pow(code.tower.lambdas[b], static_cast<std::uint64_t>(p));
    for (std::size_t xi = 0; xi < ell; ++xi) {
      const std::size_t row = static_cast<std::size_t>(p) * ell + xi;
      for (std::size_t b = 0; b < N; ++b) P(row, col(xi, b)) = B.add(P(row, col(xi, b)), lam_p[b]);
      const auto x = code.coord_of(xi);
      for (int v = 1; v <= s; ++v) {
        const int a = overline_map(v, tau);
        const int u = x[a - 1];
        auto y = x;
        y[a - 1] = overline_map(x[a - 1] + p, r);
        const std::size_t c = col(code.coord_index(y), code.block_index(u, v));
        P(row, c) = B.add(P(row, c), code.tower.psi);
      }
    }
  }

  code.pcm.n = N;
  code.pcm.ell = ell;
  code.pcm.r = static_cast<std::size_t>(r);
  code.pcm.matrix = std::move(P);
  code.pcm.meta = {{"construction", "smallsub"}, {"n", n}, {"k", k}, {"tau", tau}};
  return code;
}

RepairResult<ExtField> repair_smallsub(const SmallSubCode& code, const ArrayCodeword<ExtField>& cw, std::size_t i) {
  const auto erased = cw.erased();
  if (erased.size() != 1 || erased[0] != i) {
    throw Error(ErrorCode::kWrongErasureCount, "repair needs exactly block " + std::to_string(i) + " erased");
  }
  const ExtField& B = code.field();
  const Matrix<ExtField>& P = code.pcm.matrix;
  const std::size_t ell = code.ell;
  const std::size_t N = code.pcm.n;
  const auto [ustar, vstar] = code.node_of(i);
  const int a = overline_map(vstar, code.tau);

  RepairResult<ExtField> res;
  res.transcript.target = i;
  res.transcript.n = N;
  res.block.assign(ell, ExtElem{});

  // known[col] for every column of P; the target block is filled as we go.
  std::vector<bool> known(N * ell, false);
  std::vector<ExtElem> value(N * ell);
  auto fetch = [&](std::size_t c, int stage) {
    if (known[c]) return;
    const std::size_t helper = c / ell;
    res.transcript.add_raw(helper, c % ell, stage);
    known[c] = true;
    value[c] = cw.symbol(helper, c % ell);
  };

  std::vector<std::size_t> coords;  // x with x_a = u*, ascending
  for (std::size_t xi = 0; xi < ell; ++xi) {
    if (code.coord_of(xi)[a - 1] == ustar) coords.push_back(xi);
  }

  // Solve row `row` for the single unknown target column `target_col`,
  // fetching any other helper column that is still unknown.
  auto solve_row = [&](std::size_t row, std::size_t target_col, int stage) {
    ExtElem acc = B.zero();
    for (std::size_t c = 0; c < N * ell; ++c) {
      const ExtElem& h = P(row, c);
      if (B.is_zero(h) || c == target_col) continue;
      if (c / ell == i) {
        if (!known[c]) throw Error(ErrorCode::kUnderdetermined, "repair order left a target symbol unknown");
      } else {
        fetch(c, stage);
      }
      acc = B.mul_add(acc, h, value[c]);
    }
    value[target_col] = B.div(B.neg(acc), P(row, target_col));
    known[target_col] = true;
  };

  for (std::size_t xi : coords) solve_row(xi, i * ell + xi, 1);

  for (int p = 1; p < code.r; ++p) {
    const int uhat = overline_map(ustar + p, code.r);
    for (std::size_t xi : coords) {
      auto y = code.coord_of(xi);
      y[a - 1] = uhat;
      solve_row(static_cast<std::size_t>(p) * ell + xi, i * ell + code.coord_index(y), 2);
    }
  }

  for (std::size_t t = 0; t < ell; ++t) res.block[t] = value[i * ell + t];
  return res;
}

Matrix<ExtField> smallsub_repair_matrix(const SmallSubCode& code, std::size_t i) {
  const auto [ustar, vstar] = code.node_of(i);
  const int a = overline_map(vstar, code.tau);
  std::vector<std::size_t> coords;
  for (std::size_t xi = 0; xi < code.ell; ++xi) {
    if (code.coord_of(xi)[a - 1] == ustar) coords.push_back(xi);
  }
  const ExtField& B = code.field();
  Matrix<ExtField> S(static_cast<std::size_t>(code.r) * coords.size(), code.pcm.matrix.rows());
  std::size_t row = 0;
  for (int p = 0; p < code.r; ++p) {
    for (std::size_t xi : coords) S(row++, static_cast<std::size_t>(p) * code.ell + xi) = B.one();
  }
  return S;
}

}  // namespace repairlab
