// SPDX-License-Identifier: Apache-2.0

#pragma once

#include <cstdint>
#include <optional>
#include <ostream>
#include <string>

#include <json.hpp>

#include "repairlab/cli/spec.hpp"

namespace repairlab::cli {

inline constexpr int kExitPass = 0;
inline constexpr int kExitVerifyFailed = 1;
inline constexpr int kExitSpecError = 2;
inline constexpr const char* kReportSchema = "repairlab.report/1";
inline constexpr const char* kManifestSchema = "repairlab.manifest/1";

struct VerifyOptions {
  std::optional<int> trials;
  std::optional<std::uint64_t> seed;
};

/// Full verification run. The JSON holds no timing, so equal spec and seed
/// give byte-identical output. `text` receives the human-readable report.
nlohmann::json verify_spec(const CodeSpec& spec, const VerifyOptions& opts, std::ostream& text);

/// Builds the code and writes pcm.txt and manifest.json into `out_dir`.
nlohmann::json build_spec(const CodeSpec& spec, const std::string& out_dir);

struct BoundsArgs {
  int n = 0, k = 0, t = 0;
  std::int64_t ell = 0;
  std::optional<std::string> b;    // rational, e.g. "3/2"
  std::optional<std::string> eps;  // rational
  std::optional<int> tau;
};
nlohmann::json bounds_report(const BoundsArgs& args);

/// Renders the comparison table (1) or the composition examples (2).
nlohmann::json table(int which, std::ostream& text);

/// Honors REPAIRLAB_THREADS if set.
void configure_threads();

}  // namespace repairlab::cli
