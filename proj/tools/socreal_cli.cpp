// socreal: command-line front end for the two-agent simulation.
//
//   socreal run --config cfg.json [--seed N] [--out DIR]
//   socreal sweep --seeds 0..9 [--config cfg.json] [--out DIR] [--threads N]
//   socreal validate-config --config cfg.json
//   socreal dump-defaults

#include <cstdlib>
#include <exception>
#include <iostream>
#include <optional>
#include <string>

#include <CLI11.hpp>

#include "socreal/config.hpp"
#include "socreal/experiment.hpp"

namespace {

using socreal::RunConfig;

RunConfig resolve(const std::string& config_path, std::optional<std::uint64_t> seed,
                  const std::optional<std::string>& out) {
  RunConfig cfg = config_path.empty() ? RunConfig{} : socreal::load_config(config_path);
  if (const char* env = std::getenv(socreal::kOutDirEnv); env != nullptr && *env != '\0') cfg.out_dir = env;
  if (out) cfg.out_dir = *out;
  if (seed) cfg.seed = *seed;
  cfg.validate();
  return cfg;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Two-agent interoceptive active inference with a Metropolis-Hastings naming game"};
  app.require_subcommand(1);

  std::string config_path;
  std::optional<std::uint64_t> seed;
  std::optional<std::string> out;
  std::string seed_range;
  unsigned threads = 0;

  auto* run_cmd = app.add_subcommand("run", "Run one simulation and write its CSV log and snapshots");
  run_cmd->add_option("--config", config_path, "Flat JSON config file")->required()->check(CLI::ExistingFile);
  run_cmd->add_option("--seed", seed, "Override the config seed");
  run_cmd->add_option("--out", out, "Output directory (overrides config and $SOCREAL_OUT_DIR)");

  auto* sweep_cmd = app.add_subcommand("sweep", "Independent runs over a seed range, one directory per seed");
  sweep_cmd->add_option("--seeds", seed_range, "Inclusive seed range a..b")->required();
  sweep_cmd->add_option("--config", config_path, "Flat JSON config file (defaults if omitted)")
      ->check(CLI::ExistingFile);
  sweep_cmd->add_option("--out", out, "Base output directory");
  sweep_cmd->add_option("--threads", threads, "Worker threads (0 = all cores)");

  auto* validate_cmd = app.add_subcommand("validate-config", "Check a config file and print the resolved config");
  validate_cmd->add_option("--config,config", config_path, "Flat JSON config file")
      ->required()
      ->check(CLI::ExistingFile);

  auto* defaults_cmd = app.add_subcommand("dump-defaults", "Print the full default configuration");

  CLI11_PARSE(app, argc, argv);

  try {
    if (*defaults_cmd) {
      std::cout << socreal::to_json(RunConfig{}).dump(2) << '\n';
      return EXIT_SUCCESS;
    }
    if (*validate_cmd) {
      const RunConfig cfg = resolve(config_path, std::nullopt, std::nullopt);
      std::cout << socreal::to_json(cfg).dump(2) << '\n';
      return EXIT_SUCCESS;
    }
    if (*run_cmd) {
      const RunConfig cfg = resolve(config_path, seed, out);
      const auto result = socreal::run(cfg);
      std::cerr << "wrote " << result.out_dir.string() << " (" << result.snapshots_written << " snapshots)\n";
      return EXIT_SUCCESS;
    }
    if (*sweep_cmd) {
      const RunConfig cfg = resolve(config_path, std::nullopt, out);
      const auto seeds = socreal::parse_seed_range(seed_range);
      const auto results = socreal::sweep(cfg, seeds, threads);
      for (const auto& r : results) std::cerr << "wrote " << r.out_dir.string() << '\n';
      return EXIT_SUCCESS;
    }
  } catch (const std::invalid_argument& e) {
    std::cerr << "config error: " << e.what() << '\n';
    return 2;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << '\n';
    return 1;
  }
  return EXIT_FAILURE;
}
