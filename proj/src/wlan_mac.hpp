#pragma once
#include <cstdint>
#include <utility>
#include <vector>

namespace ifomsim {

// Contention-loss factor for n stations sharing the channel: piecewise
// linear in log(n) between configured knots, clamped at both ends. The curve
// multiplies the nominal MAC efficiency, so two stations keep the full
// efficiency and dense cells degrade the way saturated CSMA/CA does.
double contention_factor(const std::vector<std::pair<double, double>>& curve,
                         double n_stations);

struct WlanDemand {
  int id = 0;
  double queue_bits = 0.0;  // on-air backlog
  double phy_bps = 0.0;     // link rate towards this station
};

struct WlanGrant {
  int id = 0;
  double served_bits = 0.0;
  double airtime_s = 0.0;
};

// Equal-airtime waterfill of one serve interval across backlogged stations.
// Stations that need less than the fair share release the remainder to the
// others, so the tick is work-conserving. served = eff * f * phy * airtime.
std::vector<WlanGrant> wlan_serve_tick(const std::vector<WlanDemand>& demands,
                                       double tick_s, double eff, double f);

// Rolling busy-share window behind the beacon utilization field:
// util = on-air bits served / (eff * phy_cap * window).
class UtilWindow {
 public:
  UtilWindow(int slots, double slot_s, double eff, double phy_cap_bps);
  void push(double served_onair_bits);
  double utilization() const;

 private:
  std::vector<double> ring_;
  int head_ = 0;
  int filled_ = 0;
  double sum_ = 0.0;
  double denom_bits_ = 0.0;
};

}  // namespace ifomsim
