#include "steering.hpp"

namespace ifomsim {

const char* to_string(SteerReason r) {
  switch (r) {
    case SteerReason::VIDEO_PIN: return "VIDEO_PIN";
    case SteerReason::PREMIUM_PIN: return "PREMIUM_PIN";
    case SteerReason::DIST_FAIL: return "DIST_FAIL";
    case SteerReason::THPT_FAIL: return "THPT_FAIL";
    case SteerReason::WLAN_OVERLOAD: return "WLAN_OVERLOAD";
    case SteerReason::WLAN_OK: return "WLAN_OK";
    case SteerReason::BETTER_NET: return "BETTER_NET";
  }
  return "?";
}

SteerDecision decide_throughput_max(const SteerInput& in,
                                    const SimConfig& cfg) {
  if (in.cls != FlowClass::FTP) return {IFACE_LTE, SteerReason::VIDEO_PIN};
  if (in.premium) return {IFACE_LTE, SteerReason::PREMIUM_PIN};
  if (!in.wlan_capable || !in.ap_in_range)
    return {IFACE_LTE, SteerReason::DIST_FAIL};
  if (in.ratio < cfg.tmax_min_ratio)
    return {IFACE_LTE, SteerReason::THPT_FAIL};
  return {IFACE_WLAN, SteerReason::WLAN_OK};
}

SteerDecision decide_energy_efficient(const SteerInput& in,
                                      const SimConfig& cfg) {
  if (in.cls != FlowClass::FTP) return {IFACE_LTE, SteerReason::VIDEO_PIN};
  if (in.premium) return {IFACE_LTE, SteerReason::PREMIUM_PIN};
  if (!in.wlan_capable || !in.ap_in_range)
    return {IFACE_LTE, SteerReason::DIST_FAIL};
  if (in.light_regime) return {IFACE_WLAN, SteerReason::WLAN_OK};
  if (in.wlan_util > cfg.ee_overload_util)
    return {IFACE_LTE, SteerReason::WLAN_OVERLOAD};
  if (in.current == IFACE_WLAN && in.ratio > cfg.ee_retain_ratio)
    return {IFACE_WLAN, SteerReason::WLAN_OK};
  if (in.wlan_offered_bps >= in.lte_offered_bps)
    return {IFACE_WLAN, SteerReason::BETTER_NET};
  return {IFACE_LTE, SteerReason::BETTER_NET};
}

}  // namespace ifomsim
