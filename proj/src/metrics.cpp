#include "metrics.hpp"

#include <algorithm>
#include <cmath>

#include "errors.hpp"

namespace ifomsim {

void LatencyAccum::add(int64_t latency_us) {
  if (latency_us < 0) latency_us = 0;
  samples_.push_back(latency_us);
  count_ += 1;
  sum_us_ += double(latency_us);
  max_us_ = std::max(max_us_, latency_us);
}

double LatencyAccum::quantile_us(double q) const {
  if (count_ == 0) return 0.0;
  uint64_t rank = uint64_t(std::ceil(q * double(count_)));
  if (rank == 0) rank = 1;
  std::vector<int64_t> v = samples_;
  auto nth = v.begin() + (rank - 1);
  std::nth_element(v.begin(), nth, v.end());
  return double(*nth);
}

double u_sat(const std::vector<double>& per_user_tput_bps, double t_max_bps) {
  if (per_user_tput_bps.empty()) throw DomainError("u_sat needs users");
  if (!(t_max_bps > 0.0)) throw DomainError("u_sat needs t_max > 0");
  double sum = 0.0;
  for (double t : per_user_tput_bps) sum += t;
  return sum / (t_max_bps * double(per_user_tput_bps.size()));
}

double RunResult::blocking() const {
  uint64_t attempts = lte_gbr_attempts + wlan_assoc_attempts;
  if (attempts == 0) return 0.0;
  return double(lte_gbr_blocked + wlan_assoc_rejected) / double(attempts);
}

double RunResult::qos_loss() const {
  uint64_t gen = 0, bad = 0;
  for (const auto& f : flows) {
    gen += f.generated_pkts;
    bad += f.late_pkts + f.dropped_pkts;
  }
  if (gen == 0) return 0.0;
  return double(bad) / double(gen);
}

double RunResult::unserved_fraction() const {
  uint64_t gen = 0, del = 0;
  for (const auto& f : flows) {
    gen += f.generated_pkts;
    del += f.delivered_pkts;
  }
  if (gen == 0 || del >= gen) return 0.0;
  return double(gen - del) / double(gen);
}

double mean_of(const std::vector<double>& v) {
  if (v.empty()) return 0.0;
  double s = 0.0;
  for (double x : v) s += x;
  return s / double(v.size());
}

double stddev_of(const std::vector<double>& v) {
  if (v.size() < 2) return 0.0;
  double m = mean_of(v);
  double acc = 0.0;
  for (double x : v) acc += (x - m) * (x - m);
  return std::sqrt(acc / double(v.size() - 1));
}

}  // namespace ifomsim
