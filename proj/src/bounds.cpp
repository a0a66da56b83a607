// SPDX-License-Identifier: Apache-2.0

#include "repairlab/bounds.hpp"

#include <cmath>

#include "repairlab/error.hpp"

namespace repairlab {

Rational cut_set(int n, int k, int t, std::int64_t ell) {
  if (t < k || t > n - 1) {
    throw Error(ErrorCode::kTOutOfRange, "t = " + std::to_string(t) + " outside [" + std::to_string(k) + ", " +
                                             std::to_string(n - 1) + "]");
  }
  return Rational(t, t - k + 1) * ell;
}

double gtc_rhs(int n, int k, std::int64_t ell) {
  const int r = n - k;
  if (r == 1) throw Error(ErrorCode::kRIsOne, "log base r/(r-1) undefined at r = 1");
  if (r < 1 || ell < 1) throw Error(ErrorCode::kInvalidParameters, "need n > k and ell >= 1");
  const double l2 = std::log2(static_cast<double>(ell));
  const double lb = std::log(static_cast<double>(ell)) / std::log(static_cast<double>(r) / (r - 1));
  return 2.0 * l2 * (lb + 1.0) + 1.0;
}

bool gtc_feasible(int n, int k, std::int64_t ell) { return static_cast<double>(k) <= gtc_rhs(n, k, ell) + kBoundSlack; }

namespace {

// b^e if it fits in int64.
std::optional<std::int64_t> exact_pow(std::int64_t b, std::int64_t e) {
  std::int64_t out = 1;
  for (std::int64_t i = 0; i < e; ++i) {
    if (b != 0 && out > INT64_MAX / b) return std::nullopt;
    out *= b;
  }
  return out;
}

}  // namespace

BoundValue twb_min_ell(int n, int k) {
  const int r = n - k;
  if (k < 1 || r < 1) throw Error(ErrorCode::kInvalidParameters, "need n > k >= 1");
  BoundValue b;
  b.value = std::pow(static_cast<double>(r), static_cast<double>(k) / r);
  if (k % r == 0) {
    if (auto v = exact_pow(r, k / r)) b.exact = Rational(*v);
  }
  return b;
}

Rational min_ell_appendix_a(int n, int k, Rational b) {
  if (b < 1) throw Error(ErrorCode::kInvalidParameters, "b must be >= 1");
  return Rational(n - k) / b;
}

BoundValue thm5_max_nodes(int r, std::int64_t ell, Rational eps) {
  if (r < 1 || ell < 1 || eps < 0) throw Error(ErrorCode::kInvalidParameters, "need r >= 1, ell >= 1, eps >= 0");
  const Rational expo = Rational(ell, r) * (Rational(1) + eps) + 1;
  const double base = static_cast<double>(r) * static_cast<double>(ell);
  BoundValue b;
  b.value = std::pow(base, boost::rational_cast<double>(expo));
  if (expo.denominator() == 1) {
    if (auto v = exact_pow(static_cast<std::int64_t>(r) * ell, expo.numerator())) b.exact = Rational(*v);
  }
  return b;
}

nlohmann::json to_json(const Rational& q) {
  if (q.denominator() == 1) return q.numerator();
  return std::to_string(q.numerator()) + "/" + std::to_string(q.denominator());
}

nlohmann::json to_json(const BoundValue& b) {
  if (b.exact) return to_json(*b.exact);
  return b.value;
}

}  // namespace repairlab
