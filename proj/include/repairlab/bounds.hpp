// SPDX-License-Identifier: Apache-2.0

#pragma once

#include <cstdint>
#include <optional>

#include <json.hpp>

#include "repairlab/outer_code.hpp"

namespace repairlab {

/// Slack for comparisons against bounds with irrational values.
inline constexpr double kBoundSlack = 1e-9;

/// A bound value; `exact` is set whenever the value is rational.
struct BoundValue {
  double value = 0.0;
  std::optional<Rational> exact;
};

/// (t / (t - k + 1)) * ell; TOutOfRange unless k <= t <= n - 1.
Rational cut_set(int n, int k, int t, std::int64_t ell);

/// k <= 2 log2(ell) (log_{r/(r-1)}(ell) + 1) + 1 with r = n - k; RIsOne at r = 1.
bool gtc_feasible(int n, int k, std::int64_t ell);
double gtc_rhs(int n, int k, std::int64_t ell);

/// (n - k)^(k / (n - k)); exact when (n - k) divides k.
BoundValue twb_min_ell(int n, int k);

/// (n - k) / b.
Rational min_ell_appendix_a(int n, int k, Rational b);

/// (r ell)^((ell / r)(1 + eps) + 1); exact when the exponent is an integer
/// and the power fits in 64 bits.
BoundValue thm5_max_nodes(int r, std::int64_t ell, Rational eps);

nlohmann::json to_json(const BoundValue& b);
nlohmann::json to_json(const Rational& q);

}  // namespace repairlab
