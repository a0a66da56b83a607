// SPDX-License-Identifier: Apache-2.0

#pragma once

#include <algorithm>
#include <cstddef>
#include <optional>
#include <utility>
#include <vector>

#include <omp.h>

#include "repairlab/error.hpp"
#include "repairlab/matrix.hpp"
#include "repairlab/rng.hpp"

namespace repairlab::linalg {

// Row updates below this many element operations stay serial.
inline constexpr std::size_t kParallelWork = 1U << 14;

template <class F>
Matrix<F> identity(const F& f, std::size_t n) {
  Matrix<F> m(n, n);
  for (std::size_t i = 0; i < n; ++i) m(i, i) = f.one();
  return m;
}

template <class F>
Matrix<F> random_matrix(const F& f, std::size_t rows, std::size_t cols, SplitMix64& rng) {
  Matrix<F> m(rows, cols);
  for (auto& e : m.data()) e = f.random(rng);
  return m;
}

template <class F>
bool is_zero_matrix(const F& f, const Matrix<F>& m) {
  return std::all_of(m.data().begin(), m.data().end(), [&](const auto& e) { return f.is_zero(e); });
}

template <class F>
Matrix<F> transpose(const Matrix<F>& a) {
  Matrix<F> t(a.cols(), a.rows());
  for (std::size_t i = 0; i < a.rows(); ++i)
    for (std::size_t j = 0; j < a.cols(); ++j) t(j, i) = a(i, j);
  return t;
}

template <class F>
Matrix<F> add(const F& f, const Matrix<F>& a, const Matrix<F>& b) {
  if (a.rows() != b.rows() || a.cols() != b.cols()) throw Error(ErrorCode::kShapeMismatch, "add");
  Matrix<F> c(a.rows(), a.cols());
  for (std::size_t k = 0; k < a.data().size(); ++k) c.data()[k] = f.add(a.data()[k], b.data()[k]);
  return c;
}

template <class F>
Matrix<F> sub(const F& f, const Matrix<F>& a, const Matrix<F>& b) {
  if (a.rows() != b.rows() || a.cols() != b.cols()) throw Error(ErrorCode::kShapeMismatch, "sub");
  Matrix<F> c(a.rows(), a.cols());
  for (std::size_t k = 0; k < a.data().size(); ++k) c.data()[k] = f.sub(a.data()[k], b.data()[k]);
  return c;
}

template <class F>
Matrix<F> scale(const F& f, const Matrix<F>& a, const typename F::Elem& s) {
  Matrix<F> c(a.rows(), a.cols());
  for (std::size_t k = 0; k < a.data().size(); ++k) c.data()[k] = f.mul(a.data()[k], s);
  return c;
}

/// a * b. Zero entries of `a` are skipped, which makes selector-style
/// products (repair matrices are mostly zero) cheap.
template <class F>
Matrix<F> mul(const F& f, const Matrix<F>& a, const Matrix<F>& b) {
  if (a.cols() != b.rows()) throw Error(ErrorCode::kShapeMismatch, "mul: inner dimensions differ");
  Matrix<F> c(a.rows(), b.cols());
  const auto rows = static_cast<std::ptrdiff_t>(a.rows());
  const bool par = a.rows() * a.cols() * b.cols() >= kParallelWork && !omp_in_parallel();
#pragma omp parallel for schedule(static) if (par)
  for (std::ptrdiff_t i = 0; i < rows; ++i) {
    auto out = c.row(static_cast<std::size_t>(i));
    for (std::size_t k = 0; k < a.cols(); ++k) {
      const auto& aik = a(static_cast<std::size_t>(i), k);
      if (f.is_zero(aik)) continue;
      auto brow = b.row(k);
      for (std::size_t j = 0; j < b.cols(); ++j) out[j] = f.mul_add(out[j], aik, brow[j]);
    }
  }
  return c;
}

template <class F>
std::vector<typename F::Elem> mul_vec(const F& f, const Matrix<F>& a, const std::vector<typename F::Elem>& x) {
  if (a.cols() != x.size()) throw Error(ErrorCode::kShapeMismatch, "mul_vec");
  std::vector<typename F::Elem> y(a.rows());
  for (std::size_t i = 0; i < a.rows(); ++i) {
    auto row = a.row(i);
    for (std::size_t j = 0; j < a.cols(); ++j) {
      if (!f.is_zero(row[j])) y[i] = f.mul_add(y[i], row[j], x[j]);
    }
  }
  return y;
}

template <class F>
Matrix<F> column(const std::vector<typename F::Elem>& v) {
  return Matrix<F>(v.size(), 1, v);
}

template <class F>
Matrix<F> select_cols(const Matrix<F>& a, const std::vector<std::size_t>& cols) {
  Matrix<F> s(a.rows(), cols.size());
  for (std::size_t i = 0; i < a.rows(); ++i)
    for (std::size_t j = 0; j < cols.size(); ++j) s(i, j) = a(i, cols[j]);
  return s;
}

template <class F>
Matrix<F> select_rows(const Matrix<F>& a, const std::vector<std::size_t>& rows) {
  Matrix<F> s(rows.size(), a.cols());
  for (std::size_t i = 0; i < rows.size(); ++i) std::copy(a.row(rows[i]).begin(), a.row(rows[i]).end(), s.row(i).begin());
  return s;
}

/// Contiguous block of `nr` x `nc` starting at (r0, c0).
template <class F>
Matrix<F> block(const Matrix<F>& a, std::size_t r0, std::size_t c0, std::size_t nr, std::size_t nc) {
  if (r0 + nr > a.rows() || c0 + nc > a.cols()) throw Error(ErrorCode::kShapeMismatch, "block out of range");
  Matrix<F> s(nr, nc);
  for (std::size_t i = 0; i < nr; ++i)
    for (std::size_t j = 0; j < nc; ++j) s(i, j) = a(r0 + i, c0 + j);
  return s;
}

template <class F>
void set_block(Matrix<F>& a, std::size_t r0, std::size_t c0, const Matrix<F>& b) {
  if (r0 + b.rows() > a.rows() || c0 + b.cols() > a.cols()) throw Error(ErrorCode::kShapeMismatch, "set_block");
  for (std::size_t i = 0; i < b.rows(); ++i)
    for (std::size_t j = 0; j < b.cols(); ++j) a(r0 + i, c0 + j) = b(i, j);
}

template <class F>
Matrix<F> hstack(const std::vector<Matrix<F>>& parts) {
  if (parts.empty()) return {};
  std::size_t cols = 0;
  for (const auto& p : parts) {
    if (p.rows() != parts[0].rows()) throw Error(ErrorCode::kShapeMismatch, "hstack: row counts differ");
    cols += p.cols();
  }
  Matrix<F> m(parts[0].rows(), cols);
  std::size_t c0 = 0;
  for (const auto& p : parts) {
    set_block(m, 0, c0, p);
    c0 += p.cols();
  }
  return m;
}

template <class F>
Matrix<F> vstack(const std::vector<Matrix<F>>& parts) {
  if (parts.empty()) return {};
  std::size_t rows = 0;
  for (const auto& p : parts) {
    if (p.cols() != parts[0].cols()) throw Error(ErrorCode::kShapeMismatch, "vstack: column counts differ");
    rows += p.rows();
  }
  Matrix<F> m(rows, parts[0].cols());
  std::size_t r0 = 0;
  for (const auto& p : parts) {
    set_block(m, r0, 0, p);
    r0 += p.rows();
  }
  return m;
}

template <class F>
Matrix<F> block_diag(const std::vector<Matrix<F>>& parts) {
  std::size_t rows = 0, cols = 0;
  for (const auto& p : parts) {
    rows += p.rows();
    cols += p.cols();
  }
  Matrix<F> m(rows, cols);
  std::size_t r0 = 0, c0 = 0;
  for (const auto& p : parts) {
    set_block(m, r0, c0, p);
    r0 += p.rows();
    c0 += p.cols();
  }
  return m;
}

template <class F>
Matrix<F> kron(const F& f, const Matrix<F>& a, const Matrix<F>& b) {
  Matrix<F> m(a.rows() * b.rows(), a.cols() * b.cols());
  for (std::size_t i = 0; i < a.rows(); ++i)
    for (std::size_t j = 0; j < a.cols(); ++j) {
      const auto& aij = a(i, j);
      if (f.is_zero(aij)) continue;
      for (std::size_t p = 0; p < b.rows(); ++p)
        for (std::size_t q = 0; q < b.cols(); ++q) m(i * b.rows() + p, j * b.cols() + q) = f.mul(aij, b(p, q));
    }
  return m;
}

enum class Layout { kDense, kBlockDiag, kKron };

/// Dense: a full grid with consistent row heights and column widths.
/// BlockDiag: a single grid row listing the diagonal blocks.
/// Kron: a single grid row [A, B], giving A (x) B.
template <class F>
Matrix<F> assemble(const F& f, const std::vector<std::vector<Matrix<F>>>& grid, Layout layout) {
  switch (layout) {
    case Layout::kDense: {
      std::vector<Matrix<F>> rows;
      rows.reserve(grid.size());
      for (const auto& g : grid) rows.push_back(hstack(g));
      for (std::size_t i = 1; i < grid.size(); ++i) {
        if (grid[i].size() != grid[0].size()) throw Error(ErrorCode::kShapeMismatch, "ragged block grid");
        for (std::size_t j = 0; j < grid[i].size(); ++j) {
          if (grid[i][j].cols() != grid[0][j].cols()) throw Error(ErrorCode::kShapeMismatch, "block widths differ");
        }
      }
      return vstack(rows);
    }
    case Layout::kBlockDiag:
      if (grid.size() != 1) throw Error(ErrorCode::kShapeMismatch, "block_diag takes one list of blocks");
      return block_diag(grid[0]);
    case Layout::kKron:
      if (grid.size() != 1 || grid[0].size() != 2) throw Error(ErrorCode::kShapeMismatch, "kron takes [A, B]");
      return kron(f, grid[0][0], grid[0][1]);
  }
  throw Error(ErrorCode::kShapeMismatch, "unknown layout");
}

namespace detail {

// dst[from..] -= factor * src[from..]
template <class F>
inline void row_axpy(const F& f, std::span<typename F::Elem> dst, std::span<const typename F::Elem> src,
                     const typename F::Elem& factor, std::size_t from) {
  const auto nf = f.neg(factor);
  for (std::size_t k = from; k < dst.size(); ++k) {
    if (!f.is_zero(src[k])) dst[k] = f.mul_add(dst[k], nf, src[k]);
  }
}

}  // namespace detail

template <class F>
struct Echelon {
  Matrix<F> m;
  std::vector<std::size_t> pivots;  // pivot column of row 0, 1, ...
  typename F::Elem det{};           // signed pivot product; meaningful only at full rank
};

/// Gauss-Jordan on the first `pivot_cols` columns: pivot = first nonzero row
/// in column order, pivots normalized to one. With `reduce`, entries above
/// pivots are cleared as well (reduced row echelon form). Row updates for one
/// pivot are independent and run in parallel for large matrices.
template <class F>
Echelon<F> eliminate(const F& f, Matrix<F> m, std::size_t pivot_cols, bool reduce) {
  Echelon<F> out;
  out.det = f.one();
  const std::size_t rows = m.rows();
  std::size_t r = 0;
  for (std::size_t c = 0; c < pivot_cols && r < rows; ++c) {
    std::size_t p = r;
    while (p < rows && f.is_zero(m(p, c))) ++p;
    if (p == rows) {
      out.det = f.zero();
      continue;
    }
    if (p != r) {
      std::swap_ranges(m.row(p).begin(), m.row(p).end(), m.row(r).begin());
      out.det = f.neg(out.det);
    }
    const auto piv = m(r, c);
    out.det = f.mul(out.det, piv);
    const auto inv = f.inv(piv);
    auto prow = m.row(r);
    for (std::size_t k = c; k < m.cols(); ++k) prow[k] = f.mul(prow[k], inv);

    const std::size_t first = reduce ? 0 : r + 1;
    const auto last = static_cast<std::ptrdiff_t>(rows);
    const bool par = (rows - first) * (m.cols() - c) >= kParallelWork && !omp_in_parallel();
    std::span<const typename F::Elem> src = m.row(r);
#pragma omp parallel for schedule(static) if (par)
    for (std::ptrdiff_t i = static_cast<std::ptrdiff_t>(first); i < last; ++i) {
      const auto ui = static_cast<std::size_t>(i);
      if (ui == r) continue;
      const auto factor = m(ui, c);
      if (f.is_zero(factor)) continue;
      detail::row_axpy(f, m.row(ui), src, factor, c);
    }
    out.pivots.push_back(c);
    ++r;
  }
  out.m = std::move(m);
  return out;
}

template <class F>
std::size_t rank(const F& f, const Matrix<F>& a) {
  return eliminate(f, a, a.cols(), false).pivots.size();
}

/// Serial fraction-free elimination (cross-multiplication, no inverses).
/// Independent of `rank`; kept as a reference for tests and benchmarks.
template <class F>
std::size_t rank_reference(const F& f, Matrix<F> m) {
  std::size_t r = 0;
  for (std::size_t c = 0; c < m.cols() && r < m.rows(); ++c) {
    std::size_t p = r;
    while (p < m.rows() && f.is_zero(m(p, c))) ++p;
    if (p == m.rows()) continue;
    std::swap_ranges(m.row(p).begin(), m.row(p).end(), m.row(r).begin());
    const auto piv = m(r, c);
    for (std::size_t i = r + 1; i < m.rows(); ++i) {
      const auto lead = m(i, c);
      if (f.is_zero(lead)) continue;
      for (std::size_t k = c; k < m.cols(); ++k) m(i, k) = f.sub(f.mul(piv, m(i, k)), f.mul(lead, m(r, k)));
    }
    ++r;
  }
  return r;
}

template <class F>
typename F::Elem det(const F& f, const Matrix<F>& a) {
  if (a.rows() != a.cols()) throw Error(ErrorCode::kNotSquare, std::to_string(a.rows()) + "x" + std::to_string(a.cols()));
  if (a.rows() == 0) return f.one();
  auto e = eliminate(f, a, a.cols(), false);
  return e.pivots.size() == a.rows() ? e.det : f.zero();
}

template <class F>
Echelon<F> rref(const F& f, const Matrix<F>& a) {
  return eliminate(f, a, a.cols(), true);
}

/// x with a * x = b for square invertible a.
template <class F>
Matrix<F> solve(const F& f, const Matrix<F>& a, const Matrix<F>& b) {
  if (a.rows() != a.cols()) throw Error(ErrorCode::kNotSquare, "solve needs a square system");
  if (b.rows() != a.rows()) throw Error(ErrorCode::kShapeMismatch, "solve: right-hand side rows");
  const std::size_t n = a.cols();
  auto e = eliminate(f, hstack<F>({a, b}), n, true);
  if (e.pivots.size() < n) throw Error(ErrorCode::kSingular, "coefficient matrix is singular");
  return block(e.m, 0, n, n, b.cols());
}

template <class F>
Matrix<F> inverse(const F& f, const Matrix<F>& a) {
  return solve(f, a, identity(f, a.rows()));
}

/// Unique x with a * x = b for a of full column rank (rows may exceed
/// columns). Throws Underdetermined if the rank is short, Inconsistent if b
/// is outside the column space.
template <class F>
Matrix<F> solve_full_column_rank(const F& f, const Matrix<F>& a, const Matrix<F>& b) {
  if (b.rows() != a.rows()) throw Error(ErrorCode::kShapeMismatch, "solve: right-hand side rows");
  const std::size_t n = a.cols();
  auto e = eliminate(f, hstack<F>({a, b}), n, true);
  if (e.pivots.size() < n) {
    throw Error(ErrorCode::kUnderdetermined,
                "rank " + std::to_string(e.pivots.size()) + " < " + std::to_string(n) + " unknowns");
  }
  for (std::size_t i = n; i < e.m.rows(); ++i) {
    for (std::size_t j = n; j < e.m.cols(); ++j) {
      if (!f.is_zero(e.m(i, j))) throw Error(ErrorCode::kInconsistent, "right-hand side outside column space");
    }
  }
  return block(e.m, 0, n, n, b.cols());
}

/// Basis of {x : a x = 0}, one basis vector per column of the result.
template <class F>
Matrix<F> nullspace(const F& f, const Matrix<F>& a) {
  auto e = rref(f, a);
  std::vector<bool> is_pivot(a.cols(), false);
  for (auto c : e.pivots) is_pivot[c] = true;
  std::vector<std::size_t> free_cols;
  for (std::size_t c = 0; c < a.cols(); ++c)
    if (!is_pivot[c]) free_cols.push_back(c);
  Matrix<F> basis(a.cols(), free_cols.size());
  for (std::size_t k = 0; k < free_cols.size(); ++k) {
    basis(free_cols[k], k) = f.one();
    for (std::size_t i = 0; i < e.pivots.size(); ++i) basis(e.pivots[i], k) = f.neg(e.m(i, free_cols[k]));
  }
  return basis;
}

}  // namespace repairlab::linalg
