#include "socreal/config.hpp"

#include <cmath>
#include <fstream>
#include <stdexcept>
#include <type_traits>

namespace socreal {

std::string_view role_scheme_name(RoleScheme s) {
  return s == RoleScheme::DoubleExchange ? "double_exchange" : "alternate_steps";
}

void RunConfig::validate() const {
  if (num_obs == 0 || num_states == 0 || num_actions == 0 || num_symbols == 0)
    throw std::invalid_argument("dimensions must be positive");
  if (num_obs != 36 || num_states != 36 || num_actions != 5)
    throw std::invalid_argument("num_obs, num_states and num_actions must be 36, 36 and 5 for the body environment");
  learning.validate();
  if (!(initial_count > 0.0)) throw std::invalid_argument("initial_count must be > 0");
  for (double x : {energy_target, energy_sharpness, temperature_sharpness, temperature_target_A, temperature_target_B})
    if (!std::isfinite(x)) throw std::invalid_argument("preference template parameters must be finite");
  if (acceptance_window == 0) throw std::invalid_argument("acceptance_window must be > 0");
  if (snapshot_interval == 0) throw std::invalid_argument("snapshot_interval must be > 0");
  if (total_steps % snapshot_interval != 0)
    throw std::invalid_argument("snapshot_interval must divide total_steps");
  if (out_dir.empty()) throw std::invalid_argument("out_dir must not be empty");
}

nlohmann::ordered_json to_json(const RunConfig& cfg) {
  nlohmann::ordered_json j;
  j["seed"] = cfg.seed;
  j["total_steps"] = cfg.total_steps;
  j["num_obs"] = cfg.num_obs;
  j["num_states"] = cfg.num_states;
  j["num_actions"] = cfg.num_actions;
  j["num_symbols"] = cfg.num_symbols;
  j["eta_C"] = cfg.learning.eta_C;
  j["eta_E"] = cfg.learning.eta_E;
  j["tau_E"] = cfg.learning.tau_E;
  j["H_thres"] = cfg.learning.entropy_threshold;
  j["T_phase"] = cfg.learning.phase_length;
  j["first_phase"] = std::string(phase_name(cfg.learning.first_phase));
  j["role_scheme"] = std::string(role_scheme_name(cfg.role_scheme));
  j["initial_count"] = cfg.initial_count;
  j["energy_target"] = cfg.energy_target;
  j["beta_E"] = cfg.energy_sharpness;
  j["beta_T"] = cfg.temperature_sharpness;
  j["temperature_target_A"] = cfg.temperature_target_A;
  j["temperature_target_B"] = cfg.temperature_target_B;
  j["acceptance_window"] = cfg.acceptance_window;
  j["snapshot_interval"] = cfg.snapshot_interval;
  j["out_dir"] = cfg.out_dir;
  return j;
}

namespace {

template <typename T>
void read(const nlohmann::json& j, const char* key, T& into) {
  if (auto it = j.find(key); it != j.end()) {
    if constexpr (std::is_integral_v<T>) {
      if (!it->is_number_unsigned())
        throw std::invalid_argument(std::string("config key '") + key + "' must be a nonnegative integer");
    }
    try {
      into = it->get<T>();
    } catch (const nlohmann::json::exception&) {
      throw std::invalid_argument(std::string("config key '") + key + "' has the wrong type");
    }
  }
}

}  // namespace

RunConfig config_from_json(const nlohmann::json& j) {
  if (!j.is_object()) throw std::invalid_argument("config must be a flat JSON object");
  RunConfig cfg;
  const auto known = to_json(cfg);
  for (const auto& [key, value] : j.items()) {
    if (!known.contains(key)) throw std::invalid_argument("unknown config key '" + key + "'");
    if (value.is_object() || value.is_array()) throw std::invalid_argument("config key '" + key + "' must be a scalar");
  }

  read(j, "seed", cfg.seed);
  read(j, "total_steps", cfg.total_steps);
  read(j, "num_obs", cfg.num_obs);
  read(j, "num_states", cfg.num_states);
  read(j, "num_actions", cfg.num_actions);
  read(j, "num_symbols", cfg.num_symbols);
  read(j, "eta_C", cfg.learning.eta_C);
  read(j, "eta_E", cfg.learning.eta_E);
  read(j, "tau_E", cfg.learning.tau_E);
  read(j, "H_thres", cfg.learning.entropy_threshold);
  read(j, "T_phase", cfg.learning.phase_length);
  read(j, "initial_count", cfg.initial_count);
  read(j, "energy_target", cfg.energy_target);
  read(j, "beta_E", cfg.energy_sharpness);
  read(j, "beta_T", cfg.temperature_sharpness);
  read(j, "temperature_target_A", cfg.temperature_target_A);
  read(j, "temperature_target_B", cfg.temperature_target_B);
  read(j, "acceptance_window", cfg.acceptance_window);
  read(j, "snapshot_interval", cfg.snapshot_interval);
  read(j, "out_dir", cfg.out_dir);

  std::string first_phase(phase_name(cfg.learning.first_phase));
  read(j, "first_phase", first_phase);
  if (first_phase == "C") cfg.learning.first_phase = Phase::Preference;
  else if (first_phase == "E") cfg.learning.first_phase = Phase::Interpretation;
  else throw std::invalid_argument("first_phase must be \"C\" or \"E\"");

  std::string scheme(role_scheme_name(cfg.role_scheme));
  read(j, "role_scheme", scheme);
  if (scheme == "double_exchange") cfg.role_scheme = RoleScheme::DoubleExchange;
  else if (scheme == "alternate_steps") cfg.role_scheme = RoleScheme::AlternateSteps;
  else throw std::invalid_argument("role_scheme must be double_exchange or alternate_steps");

  return cfg;
}

RunConfig load_config(const std::filesystem::path& path) {
  std::ifstream in(path);
  if (!in) throw std::runtime_error("cannot open config file " + path.string());
  nlohmann::json j;
  try {
    j = nlohmann::json::parse(in);
  } catch (const nlohmann::json::parse_error& e) {
    throw std::runtime_error("malformed config " + path.string() + ": " + e.what());
  }
  return config_from_json(j);
}

}  // namespace socreal
