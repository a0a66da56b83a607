// SPDX-License-Identifier: Apache-2.0

#include <sys/wait.h>

#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <sstream>

#include <doctest.h>

#include "repairlab/cli/commands.hpp"
#include "repairlab/error.hpp"
#include "support.hpp"

using namespace repairlab;
namespace fs = std::filesystem;

namespace {

int run_cli(const std::string& args) {
  const std::string cmd = std::string(REPAIRLAB_CLI) + " " + args + " > /dev/null 2>&1";
  const int status = std::system(cmd.c_str());
  return WIFEXITED(status) ? WEXITSTATUS(status) : -1;
}

std::string slurp(const fs::path& p) {
  std::ifstream in(p);
  std::ostringstream s;
  s << in.rdbuf();
  return s.str();
}

fs::path scratch_dir(const std::string& name) {
  auto d = fs::temp_directory_path() / ("repairlab_test_" + name);
  fs::remove_all(d);
  fs::create_directories(d);
  return d;
}

}  // namespace

TEST_SUITE("cli") {

TEST_CASE("spec parsing") {
  const auto s = cli::parse_spec(R"({"construction":"composed","inner":{"n":5,"k":3},
                                     "outer":{"family":"rs","q":5,"N":4,"K":2},"seed":7})");
  CHECK(s.construction == cli::Construction::kComposed);
  CHECK(s.n == 5);
  CHECK(s.outer.K == 2);
  CHECK(s.seed == 7);
  CHECK(s.trials == 100);
  auto code_of = [](const std::string& text) {
    try {
      cli::parse_spec(text);
    } catch (const Error& e) {
      return e.code();
    }
    return ErrorCode::kInvalidParameters;
  };
  CHECK(code_of("{") == ErrorCode::kSpecParseError);
  CHECK(code_of("[1]") == ErrorCode::kSpecParseError);
  CHECK(code_of(R"({"construction":"lrc","n":4,"k":2})") == ErrorCode::kSpecParseError);
  CHECK(code_of(R"({"construction":"smallsub","k":2})") == ErrorCode::kSpecParseError);
  CHECK(code_of(R"({"construction":"smallsub","n":"six","k":2})") == ErrorCode::kSpecParseError);
  CHECK(code_of(R"({"construction":"smallsub","n":6,"k":3,"trials":0})") == ErrorCode::kSpecParseError);
  CHECK(code_of(R"({"construction":"composed","inner":{"n":3,"k":1},"outer":{"family":"ag","q":3,"N":2}})") ==
        ErrorCode::kSpecParseError);
}

TEST_CASE("verify reports are deterministic and carry no timing") {
  const auto spec = cli::load_spec(test::spec_path("smallsub_6_3_1.json"));
  std::ostringstream t1, t2;
  const auto a = cli::verify_spec(spec, {10, 5}, t1);
  const auto b = cli::verify_spec(spec, {10, 5}, t2);
  CHECK(a.dump() == b.dump());
  CHECK(a["verdict"] == "PASS");
  CHECK(a["mds"]["verdict"] == true);
  CHECK(a["trials"] == 10);
  CHECK(a["seed"] == 5);
  CHECK(a.dump().find("second") == std::string::npos);
  for (const auto& node : a["nodes"]) {
    CHECK(node["exact"] == true);
    CHECK(node["total_downloaded"] == 7);
  }
  CHECK(a["classification"]["a_measured"] == "7/5");
  CHECK(a["repair_by_transfer"] == true);
}

TEST_CASE("Ye-Barg report: uniform downloads, no transfer") {
  const auto spec = cli::load_spec(test::spec_path("yebarg_4_2.json"));
  std::ostringstream text;
  const auto r = cli::verify_spec(spec, {5, std::nullopt}, text);
  CHECK(r["verdict"] == "PASS");
  CHECK(r["repair_by_transfer"] == false);
  CHECK(r["classification"]["is_msr"] == true);
  for (const auto& node : r["nodes"]) CHECK(node["per_helper_max"] == 8);
}

TEST_CASE("tampered parity-check dump fails verification") {
  const auto spec = cli::load_spec(test::spec_path("yebarg_4_2_tampered.json"));
  std::ostringstream text;
  const auto r = cli::verify_spec(spec, {}, text);
  CHECK(r["verdict"] == "FAIL");
  CHECK(r["mds"]["verdict"] == false);
  CHECK_FALSE(r.contains("nodes"));
}

TEST_CASE("build writes the dump and a manifest") {
  const auto dir = scratch_dir("build");
  const auto m = cli::build_spec(cli::load_spec(test::spec_path("smallsub_6_3_1.json")), dir.string());
  CHECK(m["ell"] == 3);
  CHECK(m["field"]["p"] == 7);
  CHECK(m["field"]["tower"][0] == 7);
  CHECK(m["schema"] == cli::kManifestSchema);
  CHECK(fs::exists(dir / "pcm.txt"));
  CHECK(nlohmann::json::parse(slurp(dir / "manifest.json")) == m);

  const auto dir2 = scratch_dir("build_composed");
  const auto c = cli::build_spec(cli::load_spec(test::spec_path("composed_a.json")), dir2.string());
  CHECK(c["field"]["p"] == 19);
  CHECK(c["ell"] == 16);
}

TEST_CASE("bounds command") {
  cli::BoundsArgs a;
  a.n = 6;
  a.k = 3;
  a.t = 5;
  a.ell = 3;
  a.b = "2";
  a.eps = "0";
  const auto j = cli::bounds_report(a);
  CHECK(j["cut_set_total"] == 5);
  CHECK(j["twb_min_ell"] == 3);
  CHECK(j["appendixA_min_ell"] == "3/2");
  a.n = 6;
  a.k = 5;
  a.t = 5;
  CHECK(cli::bounds_report(a)["gtc_feasible"] == "RIsOne");
  a.b = "x/y";
  CHECK_THROWS_AS(cli::bounds_report(a), Error);
  a.b = "0.5";
  CHECK_THROWS_AS(cli::bounds_report(a), Error);
}

TEST_CASE("table 2 values") {
  std::ostringstream text;
  const auto t = cli::table(2, text);
  const double beta[] = {0.675, 0.55, 0.6, 0.466};
  const double avg[] = {0.653, 0.55, 0.554, 0.415};
  for (std::size_t i = 0; i < 4; ++i) {
    CHECK(std::abs(t["rows"][i]["beta_over_l"].get<double>() - beta[i]) < 1e-3);
    CHECK(std::abs(t["rows"][i]["avg_beta_over_l"].get<double>() - avg[i]) < 1e-3);
  }
  CHECK(t["rows"][1]["l"] == 80);
  CHECK(text.str().find("not rebuilt") != std::string::npos);
}

TEST_CASE("exit codes of the executable") {
  CHECK(run_cli("verify " + test::spec_path("smallsub_6_3_1.json") + " --trials 3") == cli::kExitPass);
  CHECK(run_cli("verify " + test::spec_path("yebarg_4_2_tampered.json")) == cli::kExitVerifyFailed);
  CHECK(run_cli("verify " + test::spec_path("malformed.json")) == cli::kExitSpecError);
  CHECK(run_cli("build " + test::spec_path("malformed.json")) == cli::kExitSpecError);
  CHECK(run_cli("verify /nonexistent/spec.json") == cli::kExitSpecError);
  CHECK(run_cli("table 3") == cli::kExitSpecError);
  CHECK(run_cli("table 1") == cli::kExitPass);
  CHECK(run_cli("bounds --n 6 --k 5 --t 5 --ell 3") == cli::kExitPass);
  CHECK(run_cli("bounds --n 6 --k 3 --t 9 --ell 3") == cli::kExitSpecError);
}

TEST_CASE("CLI JSON output is byte-identical across runs") {
  const auto dir = scratch_dir("det");
  const auto spec = test::spec_path("composed_a.json");
  REQUIRE(run_cli("verify " + spec + " --seed 11 --json " + (dir / "a.json").string()) == 0);
  REQUIRE(run_cli("verify " + spec + " --seed 11 --json " + (dir / "b.json").string()) == 0);
  CHECK(slurp(dir / "a.json") == slurp(dir / "b.json"));
  REQUIRE(run_cli("verify " + spec + " --seed 12 --json " + (dir / "c.json").string()) == 0);
  CHECK(slurp(dir / "a.json") != slurp(dir / "c.json"));
}

TEST_CASE("thread cap from the environment keeps results identical") {
  const auto dir = scratch_dir("threads");
  const auto spec = test::spec_path("smallsub_9_6_2.json");
  REQUIRE(run_cli("verify " + spec + " --trials 3 --json " + (dir / "a.json").string()) == 0);
  REQUIRE(::setenv("REPAIRLAB_THREADS", "1", 1) == 0);
  REQUIRE(run_cli("verify " + spec + " --trials 3 --json " + (dir / "b.json").string()) == 0);
  ::unsetenv("REPAIRLAB_THREADS");
  CHECK(slurp(dir / "a.json") == slurp(dir / "b.json"));
}

}  // TEST_SUITE
