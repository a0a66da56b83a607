// SPDX-License-Identifier: Apache-2.0
//
// repairlab: build, verify and tabulate regenerating array codes.

#include <filesystem>
#include <fstream>
#include <iostream>

#include <CLI11.hpp>

#include "repairlab/cli/commands.hpp"

namespace cli = repairlab::cli;

int main(int argc, char** argv) {
  CLI::App app{"repairlab: regenerating-code construction and verification harness"};
  app.require_subcommand(1);

  std::string spec_path, out_dir, json_path;
  std::optional<int> trials;
  std::optional<std::uint64_t> seed;
  cli::BoundsArgs bargs;
  int which = 0;

  auto* build = app.add_subcommand("build", "build a code and write pcm.txt + manifest.json");
  build->add_option("spec", spec_path, "code-spec JSON file")->required();
  build->add_option("--out", out_dir, "artifact directory (default: <spec dir>/<spec stem>.build)");

  auto* verify = app.add_subcommand("verify", "run the full verification suite");
  verify->add_option("spec", spec_path, "code-spec JSON file")->required();
  verify->add_option("--trials", trials, "random codewords per node");
  verify->add_option("--seed", seed, "splitmix64 seed for the trial codewords");
  verify->add_option("--json", json_path, "write the JSON report here");

  auto* bounds = app.add_subcommand("bounds", "evaluate the bandwidth and node-count bounds");
  bounds->add_option("--n", bargs.n)->required();
  bounds->add_option("--k", bargs.k)->required();
  bounds->add_option("--t", bargs.t)->required();
  bounds->add_option("--ell", bargs.ell)->required();
  bounds->add_option("--b", bargs.b, "rational, e.g. 3/2");
  bounds->add_option("--eps", bargs.eps, "rational, e.g. 1/8");
  bounds->add_option("--tau", bargs.tau);

  auto* tab = app.add_subcommand("table", "print table 1 or 2");
  tab->add_option("which", which)->required()->check(CLI::IsMember({1, 2}));

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int rc = app.exit(e);
    return rc == 0 ? cli::kExitPass : cli::kExitSpecError;
  }

  cli::configure_threads();
  try {
    if (*build) {
      const auto spec = cli::load_spec(spec_path);
      if (out_dir.empty()) {
        const std::filesystem::path p(spec_path);
        out_dir = (p.parent_path() / (p.stem().string() + ".build")).string();
      }
      const auto manifest = cli::build_spec(spec, out_dir);
      std::cout << manifest.dump(2) << "\n";
      return cli::kExitPass;
    }
    if (*verify) {
      const auto spec = cli::load_spec(spec_path);
      const auto report = cli::verify_spec(spec, {trials, seed}, std::cout);
      if (!json_path.empty()) std::ofstream(json_path) << report.dump(2) << "\n";
      return report.at("verdict") == "PASS" ? cli::kExitPass : cli::kExitVerifyFailed;
    }
    if (*bounds) {
      std::cout << cli::bounds_report(bargs).dump(2) << "\n";
      return cli::kExitPass;
    }
    if (*tab) {
      cli::table(which, std::cout);
      return cli::kExitPass;
    }
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return cli::kExitSpecError;
  }
  return cli::kExitSpecError;
}
