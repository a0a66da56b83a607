// SPDX-License-Identifier: Apache-2.0

#include "repairlab/generic_repair.hpp"

namespace repairlab {

Classification classify_counts(int n, int k, std::size_t ell, const std::vector<std::vector<std::size_t>>& per_helper) {
  if (per_helper.size() != static_cast<std::size_t>(n)) {
    throw Error(ErrorCode::kIncompleteScheme, "measurements for " + std::to_string(per_helper.size()) + " of " +
                                                  std::to_string(n) + " nodes");
  }
  Classification c;
  for (const auto& row : per_helper) {
    std::size_t total = 0;
    for (auto b : row) {
      total += b;
      c.max_per_helper = std::max(c.max_per_helper, b);
    }
    c.max_total = std::max(c.max_total, total);
  }
  const auto l = static_cast<std::int64_t>(ell);
  c.a_measured = Rational(static_cast<std::int64_t>(c.max_total)) / cut_set(n, k, n - 1, l);
  c.epsilon_measured = Rational(static_cast<std::int64_t>(c.max_per_helper) * (n - k), l) - 1;
  c.is_msr = c.epsilon_measured == 0;
  return c;
}

}  // namespace repairlab
