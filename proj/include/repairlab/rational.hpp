// SPDX-License-Identifier: Apache-2.0

#pragma once

#include <cstdint>

#include <boost/rational.hpp>

namespace repairlab {

using Rational = boost::rational<std::int64_t>;

}  // namespace repairlab

// Boost 1.74 defines rational == integer in terms of integer == rational.
// With C++20 reversed candidates the two call each other forever, so give the
// integer comparisons exact-match overloads that win overload resolution.
namespace boost {
inline bool operator==(const rational<std::int64_t>& a, std::int64_t b) {
  return a.denominator() == 1 && a.numerator() == b;
}
inline bool operator==(const rational<std::int64_t>& a, int b) { return a == static_cast<std::int64_t>(b); }
}  // namespace boost
