// SPDX-License-Identifier: Apache-2.0

#pragma once

#include <cstddef>
#include <utility>
#include <vector>

#include "repairlab/array_code.hpp"
#include "repairlab/ext_field.hpp"
#include "repairlab/field_tower.hpp"

namespace repairlab {

/// e if 1 <= e mod m, otherwise m (so the result lies in [1, m]).
int overline_map(int e, int m);

/// Small sub-packetization code with design parameter tau, ell = r^tau.
///
/// Node (u, v) in [r] x [s] is block (u - 1) s + v - 1 (0-based). A symbol
/// coordinate x in [r]^tau has index sum (x_a - 1) r^(tau - a), x_1 most
/// significant. Rows [0, ell) are the plain sums, rows [p ell, (p + 1) ell)
/// the lambda^p sums with psi coupling.
struct SmallSubCode {
  int n = 0, k = 0, r = 0, s = 0, tau = 0;
  std::size_t ell = 0;
  FieldTower tower;
  BlockParityCheck<ExtField> pcm;

  const ExtField& field() const noexcept { return tower.b_field; }

  std::size_t block_index(int u, int v) const noexcept { return static_cast<std::size_t>((u - 1) * s + v - 1); }
  std::pair<int, int> node_of(std::size_t i) const noexcept {
    return {static_cast<int>(i) / s + 1, static_cast<int>(i) % s + 1};
  }
  std::size_t coord_index(const std::vector<int>& x) const noexcept;
  std::vector<int> coord_of(std::size_t idx) const;
};

/// Throws DivisibilityViolation if r does not divide n and TauOutOfRange
/// unless 1 <= tau <= ceil(n / r).
SmallSubCode build_smallsub(int n, int k, int tau);

/// Two-stage repair of block i; every download is a stored symbol.
/// Stage 1 uses the plain sums over coordinates with x_a = u*, stage 2 the
/// coupled rows for p = 1..r-1 in coordinate order. A symbol already fetched
/// is never fetched twice.
RepairResult<ExtField> repair_smallsub(const SmallSubCode& code, const ArrayCodeword<ExtField>& cw, std::size_t i);

/// Selector of the rows used by repair_smallsub: {p ell + idx(x) : x_a = u*}
/// for p = 0..r-1.
Matrix<ExtField> smallsub_repair_matrix(const SmallSubCode& code, std::size_t i);

}  // namespace repairlab
