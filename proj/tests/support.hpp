// SPDX-License-Identifier: Apache-2.0
//
// Shared helpers for the unit tests.

#pragma once

#include <fstream>
#include <string>

#include <json.hpp>

#include "repairlab/rational.hpp"

namespace repairlab::test {

/// Reference values produced by tests/oracles/oracle.py.
inline const nlohmann::json& oracle() {
  static const nlohmann::json j = [] {
    std::ifstream in(std::string(REPAIRLAB_FIXTURES) + "/oracle.json");
    return nlohmann::json::parse(in);
  }();
  return j;
}

/// Integer or "a/b" string, as written by the oracle and by to_json.
inline Rational rational_of(const nlohmann::json& j) {
  if (j.is_number_integer()) return Rational(j.get<std::int64_t>());
  const auto s = j.get<std::string>();
  const auto slash = s.find('/');
  return Rational(std::stoll(s.substr(0, slash)), std::stoll(s.substr(slash + 1)));
}

inline std::string spec_path(const std::string& name) { return std::string(REPAIRLAB_SPECS) + "/" + name; }

}  // namespace repairlab::test
