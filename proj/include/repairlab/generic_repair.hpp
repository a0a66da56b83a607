// SPDX-License-Identifier: Apache-2.0

#pragma once

#include <cstddef>
#include <functional>
#include <optional>
#include <variant>
#include <vector>

#include "repairlab/array_code.hpp"
#include "repairlab/bounds.hpp"
#include "repairlab/repair_verify.hpp"

namespace repairlab {

template <class F>
using ProceduralRepair = std::function<RepairResult<F>(const ArrayCodeword<F>&, std::size_t)>;

/// Per-node repair strategy for one code: a repair matrix run through the
/// generic executor, or a construction-specific routine.
template <class F>
struct RepairScheme {
  const F* field = nullptr;
  const BlockParityCheck<F>* pcm = nullptr;
  std::vector<std::optional<std::variant<Matrix<F>, ProceduralRepair<F>>>> nodes;
  std::optional<Rational> declared_a;
  std::optional<Rational> declared_epsilon;

  bool complete() const {
    for (const auto& s : nodes)
      if (!s) return false;
    return nodes.size() == pcm->n;
  }

  RepairResult<F> repair(const ArrayCodeword<F>& cw, std::size_t i) const {
    if (i >= nodes.size() || !nodes[i]) throw Error(ErrorCode::kIncompleteScheme, "no strategy for node " + std::to_string(i));
    if (const auto* s = std::get_if<Matrix<F>>(&*nodes[i])) return apply_repair_matrix(*field, *pcm, *s, cw, i);
    return std::get<ProceduralRepair<F>>(*nodes[i])(cw, i);
  }

  /// Matrix strategies must make block i solvable: rank(S H_i) = ell.
  bool matrix_ranks_ok() const {
    for (std::size_t i = 0; i < nodes.size(); ++i) {
      if (!nodes[i]) continue;
      if (const auto* s = std::get_if<Matrix<F>>(&*nodes[i])) {
        if (linalg::rank(*field, linalg::mul(*field, *s, pcm->thick_column(i))) != pcm->ell) return false;
      }
    }
    return true;
  }
};

struct Classification {
  Rational a_measured;
  Rational epsilon_measured;
  bool is_msr = false;
  std::size_t max_total = 0;
  std::size_t max_per_helper = 0;
};

/// per_helper[i][j] = symbols downloaded from j while repairing i (t = n - 1).
/// a = max_i total_i / cut-set, eps = max_{i,j} beta_{j,i} r / ell - 1.
Classification classify_counts(int n, int k, std::size_t ell, const std::vector<std::vector<std::size_t>>& per_helper);

template <class F>
Classification classify(const RepairScheme<F>& scheme, const ArrayCodeword<F>& cw) {
  if (!scheme.complete()) throw Error(ErrorCode::kIncompleteScheme, "scheme lacks a strategy for some node");
  std::vector<std::vector<std::size_t>> counts;
  for (std::size_t i = 0; i < scheme.pcm->n; ++i) {
    ArrayCodeword<F> damaged = cw;
    damaged.erase(i);
    counts.push_back(scheme.repair(damaged, i).transcript.per_helper_counts());
  }
  return classify_counts(static_cast<int>(scheme.pcm->n), static_cast<int>(scheme.pcm->k()), scheme.pcm->ell, counts);
}

}  // namespace repairlab
