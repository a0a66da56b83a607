// SPDX-License-Identifier: Apache-2.0

#pragma once

#include <cstdint>
#include <optional>
#include <string>

#include <json.hpp>

namespace repairlab::cli {

enum class Construction { kSmallSub, kYeBarg, kComposed };

struct OuterSpec {
  std::string family;  // "repetition" or "rs"
  int q = 0;
  int N = 0;
  int K = 1;
};

/// Parsed code-spec file. Keys:
///   construction: "smallsub" | "yebarg" | "composed"
///   smallsub: n, k, tau
///   yebarg:   n, k, field (optional prime; default smallest prime p with p - 1 >= rn)
///   composed: inner {n, k}, outer {family, q, N, K}, field_search_limit (optional)
///   seed, trials (optional), pcm_dump (optional path to a replacement matrix)
struct CodeSpec {
  Construction construction = Construction::kSmallSub;
  int n = 0;
  int k = 0;
  int tau = 1;
  std::optional<std::uint32_t> field;
  OuterSpec outer;
  std::uint32_t field_search_limit = 65521;
  std::uint64_t seed = 1;
  int trials = 100;
  std::optional<std::string> pcm_dump;
  nlohmann::json raw;
};

/// Throws SpecParseError on malformed JSON, unknown constructions or
/// missing/ill-typed keys. Relative pcm_dump paths resolve against `base_dir`.
CodeSpec parse_spec(const std::string& text, const std::string& base_dir = ".");
CodeSpec load_spec(const std::string& path);

std::string construction_name(Construction c);

}  // namespace repairlab::cli
