#pragma once
#include "config.hpp"
#include "ifom.hpp"
#include "traffic.hpp"

namespace ifomsim {

enum class SteerReason {
  VIDEO_PIN,      // guaranteed-rate class stays on the licensed link
  PREMIUM_PIN,    // premium subscriber stays on the licensed link
  DIST_FAIL,      // no usable access point in range
  THPT_FAIL,      // offload underperformed the throughput floor
  WLAN_OVERLOAD,  // access point utilization above the spill threshold
  WLAN_OK,        // offload (or stay offloaded)
  BETTER_NET      // picked by rate-estimate comparison
};

const char* to_string(SteerReason r);

// Per-flow snapshot the epoch controller feeds to a policy. Rates are
// trailing-epoch estimates; ratio is the hotspot's mean served fraction over
// its offloaded best-effort flows (delivered payload rate over configured
// rate), so residents and would-be entrants judge the same signal.
struct SteerInput {
  FlowClass cls = FlowClass::FTP;
  bool premium = false;
  bool wlan_capable = false;
  bool ap_in_range = false;
  Iface current = IFACE_LTE;
  double ratio = 0.0;
  double wlan_util = 0.0;
  double lte_offered_bps = 0.0;
  double wlan_offered_bps = 0.0;
  bool light_regime = false;
};

struct SteerDecision {
  Iface target = IFACE_LTE;
  SteerReason reason = SteerReason::VIDEO_PIN;
};

// Throughput-first: route every eligible best-effort flow to the hotspot
// while it sustains tmax_min_ratio, to the licensed link otherwise.
SteerDecision decide_throughput_max(const SteerInput& in, const SimConfig& cfg);

// Energy-first: offload freely under light load; otherwise spill only from
// overloaded hotspots, keep flows the hotspot serves above ee_retain_ratio,
// and place the rest by comparing offered-rate estimates.
SteerDecision decide_energy_efficient(const SteerInput& in,
                                      const SimConfig& cfg);

}  // namespace ifomsim
