#pragma once

#include <cstddef>
#include <cstdint>
#include <filesystem>
#include <string>
#include <string_view>

#include <nlohmann/json.hpp>

#include "socreal/learning.hpp"

namespace socreal {

/// How listener/speaker roles are scheduled within the run.
enum class RoleScheme {
  /// Two exchanges per step with roles swapped; both bodies move every step.
  DoubleExchange,
  /// One exchange per step; A listens on even steps, B on odd steps.
  AlternateSteps,
};

std::string_view role_scheme_name(RoleScheme s);

/// Environment variable that overrides RunConfig::out_dir (a --out flag
/// still wins over it).
inline constexpr const char* kOutDirEnv = "SOCREAL_OUT_DIR";

struct RunConfig {
  std::uint64_t seed = 0;
  std::uint64_t total_steps = 10000;

  std::size_t num_obs = 36;
  std::size_t num_states = 36;
  std::size_t num_actions = 5;
  std::size_t num_symbols = 15;

  LearningConfig learning;
  RoleScheme role_scheme = RoleScheme::DoubleExchange;

  double initial_count = 0.1;
  double energy_target = 2.5;
  double energy_sharpness = 1.0;       // beta_E
  double temperature_sharpness = 1.0;  // beta_T
  double temperature_target_A = 5.0;
  double temperature_target_B = 0.0;

  std::size_t acceptance_window = 200;
  std::uint64_t snapshot_interval = 500;
  std::string out_dir = "runs/run";

  /// Throws std::invalid_argument describing the first violated constraint.
  void validate() const;

  std::size_t exchanges_per_step() const { return role_scheme == RoleScheme::DoubleExchange ? 2 : 1; }
};

/// Flat JSON object; every key is optional and unknown keys are rejected.
nlohmann::ordered_json to_json(const RunConfig& cfg);
RunConfig config_from_json(const nlohmann::json& j);

/// Throws std::runtime_error if the file is unreadable or malformed.
RunConfig load_config(const std::filesystem::path& path);

}  // namespace socreal
