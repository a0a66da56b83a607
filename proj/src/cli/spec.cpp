// SPDX-License-Identifier: Apache-2.0

#include "repairlab/cli/spec.hpp"

#include <filesystem>
#include <fstream>
#include <sstream>

#include "repairlab/error.hpp"

namespace repairlab::cli {

namespace {

[[noreturn]] void fail(const std::string& what) { throw Error(ErrorCode::kSpecParseError, what); }

template <class T>
T get(const nlohmann::json& j, const char* key) {
  if (!j.contains(key)) fail(std::string("missing key '") + key + "'");
  try {
    return j.at(key).get<T>();
  } catch (const nlohmann::json::exception&) {
    fail(std::string("key '") + key + "' has the wrong type");
  }
}

template <class T>
T get_or(const nlohmann::json& j, const char* key, T fallback) {
  return j.contains(key) ? get<T>(j, key) : fallback;
}

}  // namespace

std::string construction_name(Construction c) {
  switch (c) {
    case Construction::kSmallSub: return "smallsub";
    case Construction::kYeBarg: return "yebarg";
    case Construction::kComposed: return "composed";
  }
  return "unknown";
}

CodeSpec parse_spec(const std::string& text, const std::string& base_dir) {
  CodeSpec s;
  try {
    s.raw = nlohmann::json::parse(text);
  } catch (const nlohmann::json::exception& e) {
    fail(std::string("invalid JSON: ") + e.what());
  }
  if (!s.raw.is_object()) fail("spec must be a JSON object");
  const auto& j = s.raw;
  const auto kind = get<std::string>(j, "construction");
  if (kind == "smallsub") {
    s.construction = Construction::kSmallSub;
    s.n = get<int>(j, "n");
    s.k = get<int>(j, "k");
    s.tau = get_or<int>(j, "tau", 1);
  } else if (kind == "yebarg") {
    s.construction = Construction::kYeBarg;
    s.n = get<int>(j, "n");
    s.k = get<int>(j, "k");
    if (j.contains("field")) s.field = get<std::uint32_t>(j, "field");
  } else if (kind == "composed") {
    s.construction = Construction::kComposed;
    const auto inner = get<nlohmann::json>(j, "inner");
    s.n = get<int>(inner, "n");
    s.k = get<int>(inner, "k");
    const auto outer = get<nlohmann::json>(j, "outer");
    s.outer.family = get<std::string>(outer, "family");
    if (s.outer.family != "repetition" && s.outer.family != "rs") fail("outer family must be 'repetition' or 'rs'");
    s.outer.q = get<int>(outer, "q");
    s.outer.N = get<int>(outer, "N");
    s.outer.K = get_or<int>(outer, "K", 1);
    s.field_search_limit = get_or<std::uint32_t>(j, "field_search_limit", s.field_search_limit);
  } else {
    fail("unknown construction '" + kind + "'");
  }
  s.seed = get_or<std::uint64_t>(j, "seed", s.seed);
  s.trials = get_or<int>(j, "trials", s.trials);
  if (s.trials < 1) fail("trials must be >= 1");
  if (j.contains("pcm_dump")) {
    std::filesystem::path p = get<std::string>(j, "pcm_dump");
    if (p.is_relative()) p = std::filesystem::path(base_dir) / p;
    s.pcm_dump = p.string();
  }
  return s;
}

CodeSpec load_spec(const std::string& path) {
  std::ifstream in(path);
  if (!in) fail("cannot read spec file '" + path + "'");
  std::ostringstream buf;
  buf << in.rdbuf();
  const auto dir = std::filesystem::path(path).parent_path();
  return parse_spec(buf.str(), dir.empty() ? "." : dir.string());
}

}  // namespace repairlab::cli
