// SPDX-License-Identifier: Apache-2.0

#pragma once

#include <atomic>
#include <cstddef>
#include <optional>
#include <vector>

#include <omp.h>

#include "repairlab/array_code.hpp"
#include "repairlab/combinatorics.hpp"
#include "repairlab/linalg.hpp"

namespace repairlab {

struct MdsVerdict {
  bool mds = true;
  std::optional<std::vector<std::size_t>> failing;  // lexicographically first failing subset
  std::size_t subsets = 0;                           // C(n, r)
};

/// Every r-subset of thick columns must be a full-rank r*ell square. Subsets
/// are checked in parallel; once a failure is seen, later subsets are skipped
/// and the smallest failing index wins, so the verdict matches the serial scan.
template <class F>
MdsVerdict check_mds(const F& f, const BlockParityCheck<F>& pcm) {
  const auto subsets = combinations(pcm.n, pcm.r);
  const auto count = static_cast<std::ptrdiff_t>(subsets.size());
  const std::size_t full = pcm.r * pcm.ell;
  std::atomic<std::ptrdiff_t> first_fail{count};
#pragma omp parallel for schedule(dynamic, 1)
  for (std::ptrdiff_t s = 0; s < count; ++s) {
    if (s > first_fail.load(std::memory_order_relaxed)) continue;
    if (linalg::rank(f, pcm.thick_columns(subsets[static_cast<std::size_t>(s)])) != full) {
      std::ptrdiff_t cur = first_fail.load();
      while (s < cur && !first_fail.compare_exchange_weak(cur, s)) {
      }
    }
  }
  MdsVerdict v;
  v.subsets = subsets.size();
  if (first_fail.load() < count) {
    v.mds = false;
    v.failing = subsets[static_cast<std::size_t>(first_fail.load())];
  }
  return v;
}

/// Lexicographic scan with early exit, one thread, reference rank.
template <class F>
MdsVerdict check_mds_serial(const F& f, const BlockParityCheck<F>& pcm) {
  MdsVerdict v;
  const auto subsets = combinations(pcm.n, pcm.r);
  v.subsets = subsets.size();
  for (const auto& s : subsets) {
    if (linalg::rank_reference(f, pcm.thick_columns(s)) != pcm.r * pcm.ell) {
      v.mds = false;
      v.failing = s;
      return v;
    }
  }
  return v;
}

/// Fill in up to r erased blocks from the parity equations.
template <class F>
ArrayCodeword<F> erasure_decode(const F& f, const BlockParityCheck<F>& pcm, const ArrayCodeword<F>& cw) {
  const auto erased = cw.erased();
  if (erased.size() > pcm.r) {
    throw Error(ErrorCode::kWrongErasureCount,
                std::to_string(erased.size()) + " erasures exceed r = " + std::to_string(pcm.r));
  }
  ArrayCodeword<F> out = cw;
  if (erased.empty()) return out;
  // rhs = -sum over known blocks of H_j c_j; erased blocks are zero in cw.
  auto syn = linalg::mul_vec(f, pcm.matrix, cw.symbols());
  for (auto& e : syn) e = f.neg(e);
  Matrix<F> x = linalg::solve_full_column_rank(f, pcm.thick_columns(erased), linalg::column<F>(syn));
  for (std::size_t t = 0; t < erased.size(); ++t) {
    std::vector<typename F::Elem> blk(pcm.ell);
    for (std::size_t u = 0; u < pcm.ell; ++u) blk[u] = x(t * pcm.ell + u, 0);
    out.set_block(erased[t], blk);
  }
  return out;
}

/// Repair of block `target` through a repair matrix S: helper j sends
/// B_j c_j where B_j is a row basis of S H_j, and S H_j = T_j B_j.
template <class F>
struct RepairPlan {
  std::size_t target = 0;
  Matrix<F> s_target;                 // S H_target, rank ell
  std::vector<Matrix<F>> basis;       // B_j; empty for the target
  std::vector<Matrix<F>> coeff;       // T_j
  std::vector<std::size_t> ranks;     // rank(S H_j); 0 for the target

  std::size_t total() const {
    std::size_t t = 0;
    for (auto r : ranks) t += r;
    return t;
  }
};

template <class F>
RepairPlan<F> plan_repair(const F& f, const BlockParityCheck<F>& pcm, const Matrix<F>& s, std::size_t target) {
  if (s.cols() != pcm.matrix.rows()) throw Error(ErrorCode::kShapeMismatch, "repair matrix width");
  RepairPlan<F> plan;
  plan.target = target;
  const Matrix<F> sh = linalg::mul(f, s, pcm.matrix);
  plan.s_target = linalg::block(sh, 0, target * pcm.ell, sh.rows(), pcm.ell);
  const std::size_t rt = linalg::rank(f, plan.s_target);
  if (rt != pcm.ell) {
    throw Error(ErrorCode::kRepairMatrixRankDeficient,
                "rank(S H_i) = " + std::to_string(rt) + " < " + std::to_string(pcm.ell));
  }
  plan.basis.resize(pcm.n);
  plan.coeff.resize(pcm.n);
  plan.ranks.assign(pcm.n, 0);
  const auto n = static_cast<std::ptrdiff_t>(pcm.n);
#pragma omp parallel for schedule(dynamic, 1) if (!omp_in_parallel())
  for (std::ptrdiff_t jj = 0; jj < n; ++jj) {
    const auto j = static_cast<std::size_t>(jj);
    if (j == target) continue;
    Matrix<F> shj = linalg::block(sh, 0, j * pcm.ell, sh.rows(), pcm.ell);
    auto e = linalg::rref(f, shj);
    const std::size_t rk = e.pivots.size();
    plan.ranks[j] = rk;
    plan.basis[j] = linalg::block(e.m, 0, 0, rk, pcm.ell);
    plan.coeff[j] = linalg::select_cols(shj, e.pivots);
  }
  return plan;
}

/// Runs a plan against a codeword with exactly the target erased. Helpers
/// are visited in `order` (all non-target nodes, any permutation); the
/// default is ascending.
template <class F>
RepairResult<F> execute_repair(const F& f, const RepairPlan<F>& plan, const ArrayCodeword<F>& cw,
                               std::vector<std::size_t> order = {}) {
  const auto erased = cw.erased();
  if (erased.size() != 1 || erased[0] != plan.target) {
    throw Error(ErrorCode::kWrongErasureCount, "repair needs exactly the target block erased");
  }
  if (order.empty()) {
    for (std::size_t j = 0; j < cw.n(); ++j)
      if (j != plan.target) order.push_back(j);
  }
  RepairResult<F> res;
  res.transcript.target = plan.target;
  res.transcript.n = cw.n();
  std::vector<typename F::Elem> rhs(plan.s_target.rows());
  for (std::size_t j : order) {
    if (plan.ranks[j] == 0) continue;
    const Matrix<F>& b = plan.basis[j];
    const auto cj = cw.block_vec(j);
    // Helper side: each basis row is one downloaded symbol.
    std::vector<typename F::Elem> sent = linalg::mul_vec(f, b, cj);
    for (std::size_t row = 0; row < b.rows(); ++row) {
      Download d;
      d.helper = j;
      for (std::size_t t = 0; t < b.cols(); ++t) {
        if (f.is_zero(b(row, t))) continue;
        d.indices.push_back(t);
        d.coefficients.push_back(f.to_string(b(row, t)));
      }
      if (d.indices.size() == 1 && b(row, d.indices[0]) == f.one()) d.coefficients.clear();
      res.transcript.entries.push_back(std::move(d));
    }
    // Repair side: only `sent` is used from here on.
    auto contrib = linalg::mul_vec(f, plan.coeff[j], sent);
    for (std::size_t t = 0; t < rhs.size(); ++t) rhs[t] = f.sub(rhs[t], contrib[t]);
  }
  Matrix<F> x = linalg::solve_full_column_rank(f, plan.s_target, linalg::column<F>(rhs));
  res.block.resize(x.rows());
  for (std::size_t t = 0; t < x.rows(); ++t) res.block[t] = x(t, 0);
  return res;
}

template <class F>
RepairResult<F> apply_repair_matrix(const F& f, const BlockParityCheck<F>& pcm, const Matrix<F>& s,
                                    const ArrayCodeword<F>& cw, std::size_t target) {
  return execute_repair(f, plan_repair(f, pcm, s, target), cw);
}

struct TransferVerdict {
  std::vector<bool> per_helper;  // true for the target by convention
  bool overall = true;
};

/// Rowspace of S H_j is spanned by unit vectors iff every row of its reduced
/// echelon form has exactly one nonzero.
template <class F>
bool rowspace_is_coordinate(const F& f, const Matrix<F>& m) {
  auto e = linalg::rref(f, m);
  for (std::size_t row = 0; row < e.pivots.size(); ++row) {
    std::size_t nz = 0;
    for (const auto& x : e.m.row(row)) nz += f.is_zero(x) ? 0 : 1;
    if (nz != 1) return false;
  }
  return true;
}

template <class F>
TransferVerdict is_repair_by_transfer(const F& f, const BlockParityCheck<F>& pcm, const Matrix<F>& s,
                                      std::size_t target) {
  const Matrix<F> sh = linalg::mul(f, s, pcm.matrix);
  TransferVerdict v;
  v.per_helper.assign(pcm.n, true);
  for (std::size_t j = 0; j < pcm.n; ++j) {
    if (j == target) continue;
    v.per_helper[j] = rowspace_is_coordinate(f, linalg::block(sh, 0, j * pcm.ell, sh.rows(), pcm.ell));
    v.overall = v.overall && v.per_helper[j];
  }
  return v;
}

/// Checks that erasure decoding succeeds on every r-subset erasure of `cw`
/// and restores it exactly. Used as the oracle for check_mds.
template <class F>
bool decode_all_erasure_patterns(const F& f, const BlockParityCheck<F>& pcm, const ArrayCodeword<F>& cw) {
  const auto subsets = combinations(pcm.n, pcm.r);
  const auto count = static_cast<std::ptrdiff_t>(subsets.size());
  std::atomic<bool> ok{true};
#pragma omp parallel for schedule(dynamic, 1)
  for (std::ptrdiff_t s = 0; s < count; ++s) {
    if (!ok.load(std::memory_order_relaxed)) continue;
    ArrayCodeword<F> damaged = cw;
    for (auto i : subsets[static_cast<std::size_t>(s)]) damaged.erase(i);
    try {
      if (!(erasure_decode(f, pcm, damaged).symbols() == cw.symbols())) ok = false;
    } catch (const Error&) {
      ok = false;
    }
  }
  return ok.load();
}

}  // namespace repairlab
