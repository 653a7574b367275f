#pragma once
#include <cstdint>
#include <string>
#include <vector>

#include "traffic.hpp"

namespace ifomsim {

// Latency bookkeeping: exact mean/max, quantiles by nearest rank over the
// retained samples.
class LatencyAccum {
 public:
  void add(int64_t latency_us);
  uint64_t count() const { return count_; }
  double mean_us() const { return count_ ? sum_us_ / double(count_) : 0.0; }
  int64_t max_us() const { return max_us_; }
  double quantile_us(double q) const;

 private:
  std::vector<int64_t> samples_;
  uint64_t count_ = 0;
  double sum_us_ = 0.0;
  int64_t max_us_ = 0;
};

// Network utilization against saturation: sum of per-user throughput over
// t_max * n_users.
double u_sat(const std::vector<double>& per_user_tput_bps, double t_max_bps);

struct FlowResult {
  int flow_id = 0;
  int node_id = 0;
  FlowClass cls = FlowClass::FTP;
  bool ieu = false;
  bool premium = false;
  bool blocked = false;
  double configured_bps = 0.0;
  uint64_t generated_pkts = 0;
  uint64_t delivered_pkts = 0;
  uint64_t ontime_pkts = 0;
  uint64_t late_pkts = 0;
  uint64_t dropped_pkts = 0;
  uint64_t generated_bits = 0;
  uint64_t ontime_bits = 0;
  uint64_t delivered_bits = 0;
  double goodput_bps = 0.0;
  double mean_latency_us = 0.0;
  double p50_latency_us = 0.0;
  double p95_latency_us = 0.0;
  int64_t max_latency_us = 0;
  double time_on_wlan_s = 0.0;
  bool ever_on_wlan = false;
  int switches = 0;
  // attributed energy over the measurement window
  double active_j = 0.0;      // transmit-side share
  double idle_share_j = 0.0;  // equal split of radio idle floor
  double node_j = 0.0;        // receive side at the terminal
};

struct ApResult {
  int ap_id = 0;
  double mean_util = 0.0;
  double mean_backlogged = 0.0;
  int assoc_peak = 0;
  double served_payload_bps = 0.0;
  double energy_j = 0.0;
};

struct RunResult {
  uint64_t seed = 0;
  double window_s = 0.0;
  std::vector<FlowResult> flows;
  std::vector<ApResult> aps;
  // admission and association
  uint64_t lte_gbr_attempts = 0;
  uint64_t lte_gbr_blocked = 0;
  uint64_t wlan_assoc_attempts = 0;
  uint64_t wlan_assoc_rejected = 0;
  uint64_t switches_completed = 0;
  // whole-cell energy over the window (central site + hotspots + terminals)
  double enb_energy_j = 0.0;
  double enb_idle_j = 0.0;
  double ap_energy_j = 0.0;
  double node_energy_j = 0.0;
  double mean_sector_prb_util = 0.0;

  double blocking() const;
  // (late + dropped) / generated over all packets; only delay-budgeted
  // classes can contribute late packets
  double qos_loss() const;
  // (generated - delivered) / generated over every flow
  double unserved_fraction() const;
};

// Mean over values; 0 for empty input.
double mean_of(const std::vector<double>& v);
// Sample standard deviation; 0 for fewer than two values.
double stddev_of(const std::vector<double>& v);

}  // namespace ifomsim
