// SPDX-License-Identifier: Apache-2.0

#pragma once

#include <cstddef>
#include <optional>
#include <vector>

#include "repairlab/array_code.hpp"
#include "repairlab/combinatorics.hpp"
#include "repairlab/linalg.hpp"

namespace repairlab {

inline constexpr std::size_t kMaxYeBargEll = std::size_t{1} << 16;

/// MSR code with ell = r^n. Node i (1-based) owns the i-th r-ary digit of a
/// coordinate a in [0, ell): a_i = (a / r^(i-1)) mod r, a_1 least significant.
/// Thick column i stacks I, A_i, ..., A_i^(r-1) with A_i = diag(lambda_{i, a_i}).
template <class F>
struct YeBargCode {
  using Elem = typename F::Elem;

  int n = 0, k = 0, r = 0;
  std::size_t ell = 0;
  F field;
  std::vector<std::vector<Elem>> lambda;  // lambda[i-1][j], j in [0, r)
  BlockParityCheck<F> pcm;

  std::size_t stride(int i) const noexcept { return ipow(static_cast<std::uint64_t>(r), static_cast<unsigned>(i - 1)); }
  int digit(std::size_t a, int i) const noexcept { return static_cast<int>((a / stride(i)) % static_cast<std::size_t>(r)); }
  /// a with digit i deleted, as an index in [0, ell / r).
  std::size_t drop_digit(std::size_t a, int i) const noexcept {
    const std::size_t st = stride(i);
    return a % st + (a / (st * static_cast<std::size_t>(r))) * st;
  }
  /// b in [0, ell / r) with digit u inserted at position i.
  std::size_t insert_digit(std::size_t b, int i, int u) const noexcept {
    const std::size_t st = stride(i);
    return b % st + static_cast<std::size_t>(u) * st + (b / st) * st * static_cast<std::size_t>(r);
  }

  /// A_i^w as an ell x ell diagonal matrix.
  Matrix<F> a_power(int i, int w) const {
    Matrix<F> m(ell, ell);
    for (std::size_t a = 0; a < ell; ++a) m(a, a) = field.pow(lambda[i - 1][digit(a, i)], static_cast<std::uint64_t>(w));
    return m;
  }
};

/// Throws FieldTooSmall if |F*| < rn and SubpacketizationBudgetExceeded if
/// r^n > 2^16. Without explicit points, lambda_{i,j} is nonzero element
/// number (i-1) r + j of the canonical enumeration.
template <class F>
YeBargCode<F> build_yb(int n, int k, const F& field,
                       std::optional<std::vector<std::vector<typename F::Elem>>> evals = std::nullopt) {
  const int r = n - k;
  if (n < 2 || k < 1 || r < 1) throw Error(ErrorCode::kInvalidParameters, "need n > k >= 1");
  const std::uint64_t rn = static_cast<std::uint64_t>(r) * static_cast<std::uint64_t>(n);
  if (field.size() - 1 < rn) {
    throw Error(ErrorCode::kFieldTooSmall, "need " + std::to_string(rn) + " distinct nonzero evaluation points");
  }
  std::size_t ell = 1;
  for (int i = 0; i < n; ++i) {
    ell *= static_cast<std::size_t>(r);
    if (ell > kMaxYeBargEll) {
      throw Error(ErrorCode::kSubpacketizationBudgetExceeded,
                  std::to_string(r) + "^" + std::to_string(n) + " exceeds " + std::to_string(kMaxYeBargEll));
    }
  }
  YeBargCode<F> code{n, k, r, ell, field, {}, {}};
  if (evals) {
    code.lambda = std::move(*evals);
    if (code.lambda.size() != static_cast<std::size_t>(n)) throw Error(ErrorCode::kShapeMismatch, "evaluation grid rows");
    for (auto& row : code.lambda)
      if (row.size() != static_cast<std::size_t>(r)) throw Error(ErrorCode::kShapeMismatch, "evaluation grid cols");
  } else {
    code.lambda.assign(static_cast<std::size_t>(n), std::vector<typename F::Elem>(static_cast<std::size_t>(r)));
    for (int i = 1; i <= n; ++i)
      for (int j = 0; j < r; ++j) code.lambda[i - 1][j] = field.element_at(static_cast<std::uint64_t>((i - 1) * r + j + 1));
  }

  Matrix<F> H(static_cast<std::size_t>(r) * ell, static_cast<std::size_t>(n) * ell);
  for (int i = 1; i <= n; ++i) {
    for (std::size_t a = 0; a < ell; ++a) {
      const auto lam = code.lambda[i - 1][code.digit(a, i)];
      auto pw = field.one();
      for (int w = 0; w < r; ++w) {
        H(static_cast<std::size_t>(w) * ell + a, static_cast<std::size_t>(i - 1) * ell + a) = pw;
        pw = field.mul(pw, lam);
      }
    }
  }
  code.pcm.n = static_cast<std::size_t>(n);
  code.pcm.ell = ell;
  code.pcm.r = static_cast<std::size_t>(r);
  code.pcm.matrix = std::move(H);
  code.pcm.meta = {{"construction", "yebarg"}, {"n", n}, {"k", k}};
  return code;
}

/// D_i: (ell / r) x ell with D(b, a) = 1 iff drop_digit(a, i) = b. Node i is 1-based.
template <class F>
Matrix<F> yb_selector(const YeBargCode<F>& code, int i) {
  Matrix<F> d(code.ell / static_cast<std::size_t>(code.r), code.ell);
  for (std::size_t a = 0; a < code.ell; ++a) d(code.drop_digit(a, i), a) = code.field.one();
  return d;
}

/// S_i = I_r (x) D_i.
template <class F>
Matrix<F> yb_repair_matrix(const YeBargCode<F>& code, int i) {
  return linalg::kron(code.field, linalg::identity(code.field, static_cast<std::size_t>(code.r)), yb_selector(code, i));
}

/// Repair of block `node` (0-based). For each group b, helper j sends the sum
/// of its r symbols at coordinates insert_digit(b, i, u); the r target symbols
/// of the group follow from an r x r Vandermonde system in lambda_{i, 0..r-1}.
template <class F>
RepairResult<F> repair_yb(const YeBargCode<F>& code, const ArrayCodeword<F>& cw, std::size_t node) {
  const auto erased = cw.erased();
  if (erased.size() != 1 || erased[0] != node) {
    throw Error(ErrorCode::kWrongErasureCount, "repair needs exactly block " + std::to_string(node) + " erased");
  }
  const F& f = code.field;
  const int i = static_cast<int>(node) + 1;
  const std::size_t groups = code.ell / static_cast<std::size_t>(code.r);
  const auto r = static_cast<std::size_t>(code.r);

  RepairResult<F> res;
  res.transcript.target = node;
  res.transcript.n = cw.n();
  res.block.assign(code.ell, typename F::Elem{});

  Matrix<F> vander(r, r);
  for (std::size_t w = 0; w < r; ++w)
    for (std::size_t u = 0; u < r; ++u) vander(w, u) = f.pow(code.lambda[i - 1][u], w);

  for (std::size_t b = 0; b < groups; ++b) {
    std::vector<std::size_t> coords(r);
    for (std::size_t u = 0; u < r; ++u) coords[u] = code.insert_digit(b, i, static_cast<int>(u));
    Matrix<F> rhs(r, 1);
    for (int j = 1; j <= code.n; ++j) {
      if (j == i) continue;
      const auto hj = static_cast<std::size_t>(j - 1);
      // Helper side.
      auto mu = f.zero();
      for (auto a : coords) mu = f.add(mu, cw.symbol(hj, a));
      Download d;
      d.helper = hj;
      d.indices = coords;
      if (r > 1) d.coefficients.assign(r, f.to_string(f.one()));
      res.transcript.entries.push_back(std::move(d));
      // Repair side: digit j is shared by every coordinate of the group.
      const auto lam = code.lambda[j - 1][code.digit(coords[0], j)];
      auto pw = f.one();
      for (std::size_t w = 0; w < r; ++w) {
        rhs(w, 0) = f.sub(rhs(w, 0), f.mul(pw, mu));
        pw = f.mul(pw, lam);
      }
    }
    Matrix<F> x = linalg::solve(f, vander, rhs);
    for (std::size_t u = 0; u < r; ++u) res.block[coords[u]] = x(u, 0);
  }
  return res;
}

/// Subspace conditions on D_i A_j^w (nodes 1-based, w in [0, r)):
/// for i = j the spaces for distinct w meet only in zero, for i != j each
/// equals rowspace(D_i). Intersections are measured through stacked ranks.
template <class F>
bool yb_intersection_property(const YeBargCode<F>& code) {
  const F& f = code.field;
  const std::size_t part = code.ell / static_cast<std::size_t>(code.r);
  for (int i = 1; i <= code.n; ++i) {
    const Matrix<F> d = yb_selector(code, i);
    for (int j = 1; j <= code.n; ++j) {
      std::vector<Matrix<F>> da;
      for (int w = 0; w < code.r; ++w) da.push_back(linalg::mul(f, d, code.a_power(j, w)));
      for (int w1 = 0; w1 < code.r; ++w1) {
        if (linalg::rank(f, da[w1]) != part) return false;
        if (i != j) {
          if (linalg::rank(f, linalg::vstack<F>({da[w1], d})) != part) return false;
          continue;
        }
        for (int w2 = w1 + 1; w2 < code.r; ++w2) {
          if (linalg::rank(f, linalg::vstack<F>({da[w1], da[w2]})) != 2 * part) return false;
        }
      }
    }
  }
  return true;
}

}  // namespace repairlab
