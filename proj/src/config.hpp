#pragma once
#include <cstdint>
#include <string>
#include <utility>
#include <vector>

namespace ifomsim {

enum class Policy { NONE_ALL_LTE, NONE_DUAL_STATIC, TMAX, EE };
enum class LoadLevel { LIGHT, MEDIUM, HEAVY };

const char* to_string(Policy p);
const char* to_string(LoadLevel l);
Policy policy_from_string(const std::string& s);
LoadLevel load_from_string(const std::string& s);

// Full simulation configuration. Defaults reproduce the reference scenarios;
// every value can be overridden from an INI file and is echoed back verbatim
// by write_ini(), so a run directory always carries its exact settings.
struct SimConfig {
  // deployment
  double isd_m = 500.0;
  double hotspot_offset_m = 120.0;
  double hotspot_radius_m = 60.0;
  double min_dist_m = 35.0;
  int drop_max_tries = 1000;

  // channel
  double shadow_sigma_db = 8.0;
  double shadow_site_correlation = 0.5;
  double enb_tx_power_dbm = 46.0;
  double enb_antenna_gain_dbi = 17.0;
  double wap_tx_power_dbm = 23.0;
  double noise_figure_enb_db = 9.0;
  double noise_figure_ue_db = 5.0;
  double noise_figure_wap_db = 4.0;
  double extra_noise_margin_db = 0.0;

  // lte
  double lte_bandwidth_hz = 10e6;
  int lte_n_prb = 50;
  int lte_tti_us = 1000;
  double lte_spectral_eff = 0.75;
  double lte_cap_bps_per_hz = 4.8;
  double gbr_admission_margin = 0.9;
  // Cap unspent GBR credit at a few TTIs of catch-up. A deep cap lets a
  // bearer that was skipped under transient congestion return with a burst
  // entitlement large enough to crowd out its peers, which then accumulate
  // the same burst, and the scheduler oscillates instead of settling.
  double scheduler_credit_cap_ms = 5.0;
  double lte_core_delay_ms = 3.0;

  // wlan
  double wlan_phy_cap_bps = 54e6;
  double wlan_map_bandwidth_hz = 8.5e6;
  double wlan_channel_bandwidth_hz = 20e6;
  double wlan_spectral_eff = 0.75;
  double wlan_mac_efficiency = 0.55;
  // n_stations:factor knots, linearly interpolated in log(n)
  std::vector<std::pair<double, double>> wlan_contention_curve = {
      {2, 1.0}, {4, 0.8}, {8, 0.56}, {12, 0.42},
      {18, 0.40}, {27, 0.28}, {40, 0.24}};
  int wlan_serve_tick_us = 1000;
  double wlan_beacon_period_ms = 100.0;
  double wlan_util_window_ms = 1000.0;
  double wlan_assoc_reject_util = 0.95;
  double wlan_range_m = 60.0;
  double wlan_path_delay_ms = 8.0;

  // ifom
  double binding_update_delay_ms = 20.0;
  int tunnel_header_bytes = 68;

  // energy
  double enb_idle_w = 90.0;
  double enb_tx_w = 40.0;
  double enb_alpha = 4.27;
  double lte_ue_rx_w = 1.0;
  double wlan_voltage_v = 3.0;
  double wlan_tx_ma = 380.0;
  double wlan_rx_ma = 313.0;
  double wlan_idle_ma = 273.0;
  double wlan_sleep_ma = 33.0;

  // steering
  double epoch_ms = 1000.0;
  int hysteresis_epochs = 2;
  int backoff_start_epochs = 2;
  int backoff_max_epochs = 16;
  double tmax_min_ratio = 0.70;
  double ee_retain_ratio = 0.50;
  double ee_overload_util = 0.80;
  int light_load_max_ieus = 36;
  double light_load_prb_util = 0.40;
  int switch_budget_divisor = 8;

  // traffic
  double voip_rate_bps = 12200.0;
  int voip_packet_bytes = 33;
  double voip_pdb_ms = 100.0;
  double video_rate_bps = 1.5e6;
  int video_packet_bytes = 250;
  double video_pdb_ms = 150.0;
  double ftp_rate_bps = 512000.0;
  int ftp_packet_bytes = 1024;
  double bg_ftp_rate_bps = 512000.0;
  double premium_fraction = 0.0;
  double flow_stagger_ms = 1000.0;

  // scenario shapes
  int scenario = 2;
  int s1_ieus_per_sector = 2;
  int s1_background_light = 12;
  int s1_background_medium = 48;
  int s1_background_heavy = 120;
  int s2_ieus_light = 36;
  int s2_ieus_medium = 54;
  int s2_ieus_heavy = 81;
  int s2_video_flows = 1;  // per IeU alongside one FTP flow

  // run
  double duration_s = 30.0;
  double warmup_s = 2.0;
  double tail_ms = 500.0;
  uint64_t seed = 1;
  int reps = 1;
  std::string policy = "none-dual-static";
  std::string load = "medium";
  std::string out_dir = "out";
  int threads = 1;
  bool trace_packets = false;
  bool trace_bindings = false;
};

// Strict INI: unknown section/key or a malformed value is a ConfigError
// naming the offending key and line. Applies on top of `base`.
SimConfig parse_ini(const std::string& text, const SimConfig& base = {});
SimConfig load_ini_file(const std::string& path, const SimConfig& base = {});

// Serializes every key, grouped by section, in schema order. Parsing the
// output reproduces the config exactly.
std::string write_ini(const SimConfig& cfg);

}  // namespace ifomsim
