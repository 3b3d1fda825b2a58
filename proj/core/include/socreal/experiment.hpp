#pragma once

#include <cstdint>
#include <filesystem>
#include <iosfwd>
#include <string>
#include <vector>

#include <nlohmann/json.hpp>

#include "socreal/config.hpp"
#include "socreal/simulation.hpp"

namespace socreal {

/// Column order of the per-exchange CSV log.
inline constexpr const char* kCsvHeader =
    "step,exchange,listener_id,speaker_id,w_sp,w_li,w_used,accepted,r,action,energy_A,temp_A,energy_B,temp_B,"
    "jsd_C,acc_rate_200,entA_A,entA_B,phase,gate_sp";

/// Leading comment line of the CSV; documents encodings of the columns.
inline constexpr const char* kCsvComment =
    "# socreal exchange log; agent ids 0=A 1=B; actions 0=Cool 1=Warm 2=Eat 3=Play 4=Sleep; "
    "obs index = 6*energy+temp; phase C=preference E=interpretation; gate_sp 1=speaker gate open";

/// Shortest round-trip decimal representation.
std::string format_double(double x);

void write_csv_preamble(std::ostream& out);
void write_csv_row(std::ostream& out, const StepLog& log);

/// {step, agent: {A|B: {A, C, C_scores, phi}}, E}; matrices row-major.
nlohmann::ordered_json snapshot_json(const Simulation& sim);

struct MetricsSeries {
  std::vector<double> jsd_C;
  std::vector<double> acceptance_rate;
  std::vector<double> mean_entropy_A;
  std::vector<double> mean_entropy_B;
};

/// Per-record time series; acceptance rate is recomputed from the outcomes
/// over a trailing window. Throws std::invalid_argument on empty input.
MetricsSeries metrics_stream(const std::vector<StepLog>& logs, std::size_t window = 200);

struct RunResult {
  std::filesystem::path out_dir;
  double initial_jsd_C = 0.0;
  std::vector<StepLog> logs;  // only kept when requested
  std::uint64_t snapshots_written = 0;
};

struct RunOptions {
  bool keep_logs = false;
  bool write_files = true;
};

/// Runs the whole simulation. Writes, under cfg.out_dir:
///   config.json            config echo
///   log.csv                one row per exchange
///   snapshots/step_NNNNNNN.json   every snapshot_interval steps, including 0
/// Throws std::runtime_error on I/O failure, std::invalid_argument on config errors.
RunResult run(const RunConfig& cfg, const RunOptions& opts = {});

/// Parses "a..b" (inclusive) into the list of seeds.
std::vector<std::uint64_t> parse_seed_range(const std::string& text);

/// Independent runs, one per seed, into base.out_dir/seed_<n>. Uses up to
/// `threads` worker threads (0 = hardware concurrency).
std::vector<RunResult> sweep(const RunConfig& base, const std::vector<std::uint64_t>& seeds, unsigned threads = 0);

}  // namespace socreal
