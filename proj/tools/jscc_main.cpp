#include <cstdint>
#include <iostream>
#include <optional>
#include <string>

#include "CLI11.hpp"

#include "jscc/cli.hpp"

int main(int argc, char** argv) {
  CLI::App app{"causal joint source-channel filter design over FIR classes"};
  app.require_subcommand(1);

  std::string config;
  std::string out_dir = ".";
  std::string design_path;
  int jobs = 1;
  std::uint64_t seed = 0;

  auto* design =
      app.add_subcommand("design", "solve one problem and synthesize C and D");
  auto* sweep_cmd =
      app.add_subcommand("sweep", "distortion vs SNR over a delay list");
  auto* opta =
      app.add_subcommand("opta", "theoretical distortion floor per SNR");
  auto* simulate =
      app.add_subcommand("simulate", "Monte Carlo check of a design file");

  for (auto* cmd : {design, sweep_cmd, opta, simulate}) {
    cmd->add_option("--config", config, "JSON config file")->required();
    cmd->add_option("--out", out_dir, "output directory (default .)");
  }
  sweep_cmd->add_option("--jobs", jobs, "worker threads for sweep cells");
  simulate->add_option("--design", design_path, "design.json to simulate")
      ->required();
  auto* seed_opt =
      simulate->add_option("--seed", seed, "override the configured seed");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    // help/version exit 0; any usage error maps onto the config error code
    return app.exit(e) == 0 ? 0 : 1;
  }

  try {
    if (design->parsed()) return jscc::cmd_design(config, out_dir);
    if (sweep_cmd->parsed()) return jscc::cmd_sweep(config, out_dir, jobs);
    if (opta->parsed()) return jscc::cmd_opta(config, out_dir);
    std::optional<std::uint64_t> seed_override;
    if (seed_opt->count() > 0) seed_override = seed;
    return jscc::cmd_simulate(config, design_path, out_dir, seed_override);
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 1;
  }
}
