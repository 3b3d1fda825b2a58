#include "socreal/experiment.hpp"

#include <algorithm>
#include <atomic>
#include <charconv>
#include <cstdio>
#include <exception>
#include <fstream>
#include <mutex>
#include <ostream>
#include <stdexcept>
#include <thread>

namespace socreal {

std::string format_double(double x) {
  char buf[64];
  const auto res = std::to_chars(buf, buf + sizeof(buf), x);
  return std::string(buf, res.ptr);
}

void write_csv_preamble(std::ostream& out) { out << kCsvComment << '\n' << kCsvHeader << '\n'; }

void write_csv_row(std::ostream& out, const StepLog& log) {
  const auto& o = log.outcome;
  out << log.step << ',' << log.exchange << ',' << log.listener << ',' << log.speaker << ',' << o.speaker_symbol << ','
      << o.listener_symbol << ',' << o.used_symbol << ',' << (o.accepted ? 1 : 0) << ','
      << format_double(o.acceptance_ratio) << ',' << log.action << ',' << log.body[kAgentA].energy << ','
      << log.body[kAgentA].temperature << ',' << log.body[kAgentB].energy << ',' << log.body[kAgentB].temperature
      << ',' << format_double(log.jsd_C) << ',' << format_double(log.acceptance_rate) << ','
      << format_double(log.mean_likelihood_entropy[kAgentA]) << ','
      << format_double(log.mean_likelihood_entropy[kAgentB]) << ',' << phase_name(log.phase) << ','
      << (log.gate_speaker ? 1 : 0) << '\n';
}

namespace {

nlohmann::ordered_json row_major(const Matrix& m) {
  auto arr = nlohmann::ordered_json::array();
  for (double x : m.data()) arr.push_back(x);
  return arr;
}

nlohmann::ordered_json agent_json(const AgentModel& model) {
  nlohmann::ordered_json j;
  j["A"] = row_major(model.likelihood().matrix());
  j["C"] = model.preference().vec();
  j["C_scores"] = model.preference_scores();
  j["phi"] = model.posterior().vec();
  return j;
}

void write_snapshot(const std::filesystem::path& dir, const Simulation& sim) {
  char name[32];
  std::snprintf(name, sizeof(name), "step_%07llu.json", static_cast<unsigned long long>(sim.steps_done()));
  std::ofstream out(dir / name);
  if (!out) throw std::runtime_error("cannot write snapshot " + (dir / name).string());
  out << snapshot_json(sim).dump() << '\n';
  if (!out) throw std::runtime_error("failed writing snapshot " + (dir / name).string());
}

}  // namespace

nlohmann::ordered_json snapshot_json(const Simulation& sim) {
  nlohmann::ordered_json j;
  j["step"] = sim.steps_done();
  j["agent"]["A"] = agent_json(sim.agent(kAgentA));
  j["agent"]["B"] = agent_json(sim.agent(kAgentB));
  j["E"] = row_major(sim.interpretation().matrix().matrix());
  return j;
}

MetricsSeries metrics_stream(const std::vector<StepLog>& logs, std::size_t window) {
  if (logs.empty()) throw std::invalid_argument("metrics_stream: empty log");
  MetricsSeries m;
  AcceptanceWindow acc(window);
  for (const auto& log : logs) {
    acc.push(log.outcome.accepted);
    m.jsd_C.push_back(log.jsd_C);
    m.acceptance_rate.push_back(acc.rate());
    m.mean_entropy_A.push_back(log.mean_likelihood_entropy[kAgentA]);
    m.mean_entropy_B.push_back(log.mean_likelihood_entropy[kAgentB]);
  }
  return m;
}

RunResult run(const RunConfig& cfg, const RunOptions& opts) {
  Simulation sim(cfg);
  RunResult result;
  result.out_dir = cfg.out_dir;
  result.initial_jsd_C = sim.preference_divergence();

  std::ofstream csv;
  std::filesystem::path snap_dir = result.out_dir / "snapshots";
  if (opts.write_files) {
    std::error_code ec;
    std::filesystem::create_directories(snap_dir, ec);
    if (ec) throw std::runtime_error("cannot create output directory " + snap_dir.string() + ": " + ec.message());
    {
      std::ofstream echo(result.out_dir / "config.json");
      if (!echo) throw std::runtime_error("cannot write " + (result.out_dir / "config.json").string());
      echo << to_json(cfg).dump(2) << '\n';
    }
    csv.open(result.out_dir / "log.csv");
    if (!csv) throw std::runtime_error("cannot write " + (result.out_dir / "log.csv").string());
    write_csv_preamble(csv);
    write_snapshot(snap_dir, sim);
    ++result.snapshots_written;
  }

  while (!sim.finished()) {
    for (const auto& log : sim.next_step()) {
      if (opts.write_files) write_csv_row(csv, log);
      if (opts.keep_logs) result.logs.push_back(log);
    }
    if (opts.write_files && sim.steps_done() % cfg.snapshot_interval == 0) {
      write_snapshot(snap_dir, sim);
      ++result.snapshots_written;
    }
  }
  if (opts.write_files) {
    csv.flush();
    if (!csv) throw std::runtime_error("failed writing " + (result.out_dir / "log.csv").string());
  }
  return result;
}

std::vector<std::uint64_t> parse_seed_range(const std::string& text) {
  const auto dots = text.find("..");
  if (dots == std::string::npos) throw std::invalid_argument("seed range must look like a..b");
  auto parse = [&](std::string_view s) {
    std::uint64_t v = 0;
    const auto res = std::from_chars(s.data(), s.data() + s.size(), v);
    if (s.empty() || res.ec != std::errc() || res.ptr != s.data() + s.size())
      throw std::invalid_argument("bad seed '" + std::string(s) + "' in range " + text);
    return v;
  };
  const std::string_view view(text);
  const std::uint64_t lo = parse(view.substr(0, dots));
  const std::uint64_t hi = parse(view.substr(dots + 2));
  if (hi < lo) throw std::invalid_argument("empty seed range " + text);
  std::vector<std::uint64_t> seeds;
  for (std::uint64_t s = lo; s <= hi; ++s) seeds.push_back(s);
  return seeds;
}

std::vector<RunResult> sweep(const RunConfig& base, const std::vector<std::uint64_t>& seeds, unsigned threads) {
  base.validate();
  if (threads == 0) threads = std::max(1u, std::thread::hardware_concurrency());
  threads = std::min<unsigned>(threads, static_cast<unsigned>(std::max<std::size_t>(seeds.size(), 1)));

  std::vector<RunResult> results(seeds.size());
  std::atomic<std::size_t> next{0};
  std::exception_ptr failure;
  std::mutex failure_mutex;

  auto worker = [&] {
    for (std::size_t i = next++; i < seeds.size(); i = next++) {
      try {
        RunConfig cfg = base;
        cfg.seed = seeds[i];
        cfg.out_dir = (std::filesystem::path(base.out_dir) / ("seed_" + std::to_string(seeds[i]))).string();
        results[i] = run(cfg);
      } catch (...) {
        std::lock_guard lock(failure_mutex);
        if (!failure) failure = std::current_exception();
      }
    }
  };
  {
    std::vector<std::jthread> pool;
    for (unsigned t = 0; t < threads; ++t) pool.emplace_back(worker);
  }
  if (failure) std::rethrow_exception(failure);
  return results;
}

}  // namespace socreal
