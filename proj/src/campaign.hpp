#pragma once
#include <cstdint>
#include <vector>

#include "config.hpp"
#include "engine.hpp"
#include "metrics.hpp"

namespace ifomsim {

struct CellKey {
  Policy policy = Policy::NONE_DUAL_STATIC;
  LoadLevel load = LoadLevel::MEDIUM;
};

struct CellResult {
  CellKey key;
  std::vector<RunResult> runs;  // one per replication, seed order
};

// Replicated (policy x load) grid. Replication r of every cell runs with
// seed base_seed + r and a freshly dropped topology. Work items are
// independent, so with threads > 1 they fan out over an OpenMP loop; with
// threads == 1 the loop body runs serially in the same order. Both paths
// produce identical results.
std::vector<CellResult> run_campaign(const SimConfig& cfg,
                                     const std::vector<CellKey>& cells,
                                     int reps, uint64_t base_seed,
                                     int threads);

// Per-IeU rollups of one replication.
std::vector<double> per_ieu_throughput_bps(const RunResult& run);
std::vector<double> per_ieu_energy_j(const RunResult& run, bool with_idle);
std::vector<double> per_ieu_ftp_energy_j(const RunResult& run,
                                         bool with_idle);
// Saturation utilization: summed IeU throughput over summed configured rates.
double u_sat_of_run(const RunResult& run);

// Flow-class rollups (non-blocked flows).
double mean_goodput_bps(const RunResult& run, FlowClass cls);
double mean_latency_us(const RunResult& run, FlowClass cls);
double min_goodput_bps(const RunResult& run, FlowClass cls);

// Mean over replications of a per-run statistic.
template <typename Fn>
double cell_mean(const CellResult& cell, Fn&& stat) {
  if (cell.runs.empty()) return 0.0;
  double s = 0.0;
  for (const RunResult& r : cell.runs) s += stat(r);
  return s / double(cell.runs.size());
}

}  // namespace ifomsim
