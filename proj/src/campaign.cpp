#include "campaign.hpp"

#include <map>

#ifdef _OPENMP
#include <omp.h>
#endif

namespace ifomsim {

std::vector<CellResult> run_campaign(const SimConfig& cfg,
                                     const std::vector<CellKey>& cells,
                                     int reps, uint64_t base_seed,
                                     int threads) {
  std::vector<CellResult> out(cells.size());
  for (size_t c = 0; c < cells.size(); ++c) {
    out[c].key = cells[c];
    out[c].runs.resize(size_t(reps));
  }
  struct Item {
    int cell;
    int rep;
  };
  std::vector<Item> items;
  items.reserve(cells.size() * size_t(reps));
  for (size_t c = 0; c < cells.size(); ++c)
    for (int r = 0; r < reps; ++r) items.push_back({int(c), r});

  auto work = [&](const Item& it) {
    const CellKey& key = cells[size_t(it.cell)];
    out[size_t(it.cell)].runs[size_t(it.rep)] = simulate_run(
        cfg, key.policy, key.load, base_seed + uint64_t(it.rep), nullptr);
  };

#ifdef _OPENMP
  if (threads > 1) {
#pragma omp parallel for schedule(dynamic, 1) num_threads(threads)
    for (long i = 0; i < long(items.size()); ++i) work(items[size_t(i)]);
    return out;
  }
#endif
  for (const Item& it : items) work(it);
  return out;
}

std::vector<double> per_ieu_throughput_bps(const RunResult& run) {
  std::map<int, double> by_node;
  for (const FlowResult& f : run.flows)
    if (f.ieu) by_node[f.node_id] += f.goodput_bps;
  std::vector<double> v;
  for (const auto& [node, tput] : by_node) v.push_back(tput);
  return v;
}

static std::vector<double> ieu_energy(const RunResult& run, bool with_idle,
                                      bool ftp_only) {
  std::map<int, double> by_node;
  for (const FlowResult& f : run.flows) {
    if (!f.ieu) continue;
    if (ftp_only && f.cls != FlowClass::FTP) continue;
    double j = f.active_j + f.node_j + (with_idle ? f.idle_share_j : 0.0);
    by_node[f.node_id] += j;
  }
  std::vector<double> v;
  for (const auto& [node, j] : by_node) v.push_back(j);
  return v;
}

std::vector<double> per_ieu_energy_j(const RunResult& run, bool with_idle) {
  return ieu_energy(run, with_idle, false);
}

std::vector<double> per_ieu_ftp_energy_j(const RunResult& run,
                                         bool with_idle) {
  return ieu_energy(run, with_idle, true);
}

double u_sat_of_run(const RunResult& run) {
  double tput = 0.0, tmax = 0.0;
  for (const FlowResult& f : run.flows) {
    if (!f.ieu) continue;
    tput += f.goodput_bps;
    tmax += f.configured_bps;
  }
  return tmax > 0.0 ? tput / tmax : 0.0;
}

double mean_goodput_bps(const RunResult& run, FlowClass cls) {
  double s = 0.0;
  int n = 0;
  for (const FlowResult& f : run.flows)
    if (f.cls == cls && !f.blocked && f.ieu) {
      s += f.goodput_bps;
      ++n;
    }
  return n ? s / double(n) : 0.0;
}

double mean_latency_us(const RunResult& run, FlowClass cls) {
  double s = 0.0;
  int n = 0;
  for (const FlowResult& f : run.flows)
    if (f.cls == cls && !f.blocked && f.ieu && f.delivered_pkts > 0) {
      s += f.mean_latency_us;
      ++n;
    }
  return n ? s / double(n) : 0.0;
}

double min_goodput_bps(const RunResult& run, FlowClass cls) {
  double best = -1.0;
  for (const FlowResult& f : run.flows)
    if (f.cls == cls && !f.blocked) {
      if (best < 0.0 || f.goodput_bps < best) best = f.goodput_bps;
    }
  return best < 0.0 ? 0.0 : best;
}

}  // namespace ifomsim
