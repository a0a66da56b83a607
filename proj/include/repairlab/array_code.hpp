// SPDX-License-Identifier: Apache-2.0

#pragma once

#include <algorithm>
#include <cstddef>
#include <map>
#include <span>
#include <string>
#include <vector>

#include <json.hpp>

#include "repairlab/error.hpp"
#include "repairlab/linalg.hpp"
#include "repairlab/matrix.hpp"
#include "repairlab/rng.hpp"

namespace repairlab {

/// r*ell x n*ell parity-check matrix viewed as n thick columns of width ell.
template <class F>
struct BlockParityCheck {
  std::size_t n = 0;
  std::size_t ell = 0;
  std::size_t r = 0;
  Matrix<F> matrix;
  nlohmann::json meta;

  std::size_t k() const noexcept { return n - r; }

  Matrix<F> thick_column(std::size_t i) const { return linalg::block(matrix, 0, i * ell, matrix.rows(), ell); }

  Matrix<F> thick_columns(const std::vector<std::size_t>& idx) const {
    std::vector<std::size_t> cols;
    cols.reserve(idx.size() * ell);
    for (auto i : idx)
      for (std::size_t t = 0; t < ell; ++t) cols.push_back(i * ell + t);
    return linalg::select_cols(matrix, cols);
  }

  void validate_shape() const {
    if (matrix.rows() != r * ell || matrix.cols() != n * ell) {
      throw Error(ErrorCode::kShapeMismatch, "parity-check matrix is " + std::to_string(matrix.rows()) + "x" +
                                                 std::to_string(matrix.cols()) + ", expected " +
                                                 std::to_string(r * ell) + "x" + std::to_string(n * ell));
    }
  }
};

/// n blocks of ell symbols stored contiguously, plus an erasure mask. Erasing
/// a block also wipes its contents so no repair path can read it by accident.
template <class F>
class ArrayCodeword {
 public:
  using Elem = typename F::Elem;

  ArrayCodeword() = default;
  ArrayCodeword(std::size_t n, std::size_t ell) : n_(n), ell_(ell), symbols_(n * ell), erased_(n, false) {}
  ArrayCodeword(std::size_t n, std::size_t ell, std::vector<Elem> symbols)
      : n_(n), ell_(ell), symbols_(std::move(symbols)), erased_(n, false) {
    if (symbols_.size() != n * ell) throw Error(ErrorCode::kShapeMismatch, "codeword length");
  }

  std::size_t n() const noexcept { return n_; }
  std::size_t ell() const noexcept { return ell_; }

  std::span<Elem> block(std::size_t i) noexcept { return {symbols_.data() + i * ell_, ell_}; }
  std::span<const Elem> block(std::size_t i) const noexcept { return {symbols_.data() + i * ell_, ell_}; }
  std::vector<Elem> block_vec(std::size_t i) const { return {block(i).begin(), block(i).end()}; }
  const Elem& symbol(std::size_t i, std::size_t t) const noexcept { return symbols_[i * ell_ + t]; }

  void set_block(std::size_t i, std::span<const Elem> values) {
    if (values.size() != ell_) throw Error(ErrorCode::kShapeMismatch, "block length");
    std::copy(values.begin(), values.end(), block(i).begin());
    erased_[i] = false;
  }

  void erase(std::size_t i) {
    std::fill(block(i).begin(), block(i).end(), Elem{});
    erased_[i] = true;
  }

  bool is_erased(std::size_t i) const noexcept { return erased_[i]; }
  std::vector<std::size_t> erased() const {
    std::vector<std::size_t> out;
    for (std::size_t i = 0; i < n_; ++i)
      if (erased_[i]) out.push_back(i);
    return out;
  }

  const std::vector<Elem>& symbols() const noexcept { return symbols_; }

  friend bool operator==(const ArrayCodeword&, const ArrayCodeword&) = default;

 private:
  std::size_t n_ = 0;
  std::size_t ell_ = 0;
  std::vector<Elem> symbols_;
  std::vector<bool> erased_;
};

template <class F>
bool is_codeword(const F& f, const BlockParityCheck<F>& pcm, const ArrayCodeword<F>& c) {
  auto syn = linalg::mul_vec(f, pcm.matrix, c.symbols());
  return std::all_of(syn.begin(), syn.end(), [&](const auto& e) { return f.is_zero(e); });
}

/// Systematic encoder: message on blocks 0..k-1, parity blocks k..n-1 solved
/// from the last r thick columns.
template <class F>
class Encoder {
 public:
  using Elem = typename F::Elem;

  Encoder(const F& f, const BlockParityCheck<F>& pcm) : f_(f), n_(pcm.n), k_(pcm.k()), ell_(pcm.ell) {
    std::vector<std::size_t> sys, par;
    for (std::size_t i = 0; i < n_; ++i) (i < k_ ? sys : par).push_back(i);
    Matrix<F> hp = pcm.thick_columns(par);
    Matrix<F> hs = pcm.thick_columns(sys);
    Matrix<F> hp_inv;
    try {
      hp_inv = linalg::inverse(f, hp);
    } catch (const Error& e) {
      if (e.code() != ErrorCode::kSingular) throw;
      throw Error(ErrorCode::kSingularParityBlock, "parity thick columns are singular");
    }
    gen_ = linalg::scale(f, linalg::mul(f, hp_inv, hs), f.neg(f.one()));
  }

  std::size_t message_length() const noexcept { return k_ * ell_; }

  ArrayCodeword<F> encode(const std::vector<Elem>& message) const {
    if (message.size() != message_length()) {
      throw Error(ErrorCode::kShapeMismatch, "message length " + std::to_string(message.size()) + ", expected " +
                                                 std::to_string(message_length()));
    }
    std::vector<Elem> symbols(message);
    auto parity = linalg::mul_vec(f_, gen_, message);
    symbols.insert(symbols.end(), parity.begin(), parity.end());
    return ArrayCodeword<F>(n_, ell_, std::move(symbols));
  }

  ArrayCodeword<F> encode_random(SplitMix64& rng) const {
    std::vector<Elem> m(message_length());
    for (auto& e : m) e = f_.random(rng);
    return encode(m);
  }

 private:
  F f_;
  std::size_t n_, k_, ell_;
  Matrix<F> gen_;
};

/// Random element of the null space, for codes that are not (or not yet
/// known to be) MDS.
template <class F>
ArrayCodeword<F> random_kernel_codeword(const F& f, const BlockParityCheck<F>& pcm, SplitMix64& rng) {
  Matrix<F> basis = linalg::nullspace(f, pcm.matrix);
  std::vector<typename F::Elem> coeffs(basis.cols());
  for (auto& e : coeffs) e = f.random(rng);
  return ArrayCodeword<F>(pcm.n, pcm.ell, linalg::mul_vec(f, basis, coeffs));
}

/// One quantity sent by a helper: either a stored symbol verbatim or a linear
/// combination of its symbols.
struct Download {
  std::size_t helper = 0;
  int stage = 0;
  std::vector<std::size_t> indices;
  std::vector<std::string> coefficients;  // empty for a raw symbol

  bool raw() const noexcept { return indices.size() == 1 && coefficients.empty(); }
};

struct RepairTranscript {
  std::size_t target = 0;
  std::size_t n = 0;
  std::vector<Download> entries;

  void add_raw(std::size_t helper, std::size_t index, int stage = 0) {
    entries.push_back(Download{helper, stage, {index}, {}});
  }

  std::vector<std::size_t> per_helper_counts() const {
    std::vector<std::size_t> counts(n, 0);
    for (const auto& d : entries) ++counts[d.helper];
    return counts;
  }
  std::size_t total() const noexcept { return entries.size(); }
  std::size_t max_per_helper() const {
    auto c = per_helper_counts();
    return c.empty() ? 0 : *std::max_element(c.begin(), c.end());
  }
  std::map<int, std::size_t> stage_counts() const {
    std::map<int, std::size_t> out;
    for (const auto& d : entries) ++out[d.stage];
    return out;
  }
  bool all_raw() const {
    return std::all_of(entries.begin(), entries.end(), [](const Download& d) { return d.raw(); });
  }
};

template <class F>
struct RepairResult {
  std::vector<typename F::Elem> block;
  RepairTranscript transcript;
};

}  // namespace repairlab
