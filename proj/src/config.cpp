#include "config.hpp"

#include <cstdio>
#include <cstdlib>
#include <fstream>
#include <functional>
#include <sstream>

#include "errors.hpp"

namespace ifomsim {

const char* to_string(Policy p) {
  switch (p) {
    case Policy::NONE_ALL_LTE: return "none-all-lte";
    case Policy::NONE_DUAL_STATIC: return "none-dual-static";
    case Policy::TMAX: return "tmax";
    case Policy::EE: return "ee";
  }
  return "?";
}

const char* to_string(LoadLevel l) {
  switch (l) {
    case LoadLevel::LIGHT: return "light";
    case LoadLevel::MEDIUM: return "medium";
    case LoadLevel::HEAVY: return "heavy";
  }
  return "?";
}

Policy policy_from_string(const std::string& s) {
  if (s == "none-all-lte") return Policy::NONE_ALL_LTE;
  if (s == "none-dual-static") return Policy::NONE_DUAL_STATIC;
  if (s == "tmax") return Policy::TMAX;
  if (s == "ee") return Policy::EE;
  throw ConfigError("unknown policy '" + s + "'");
}

LoadLevel load_from_string(const std::string& s) {
  if (s == "light") return LoadLevel::LIGHT;
  if (s == "medium") return LoadLevel::MEDIUM;
  if (s == "heavy") return LoadLevel::HEAVY;
  throw ConfigError("unknown load '" + s + "'");
}

namespace {

struct KeyDesc {
  const char* section;
  const char* key;
  std::function<void(SimConfig&, const std::string&, int)> set;
  std::function<std::string(const SimConfig&)> get;
};

[[noreturn]] void bad_value(const char* key, const std::string& v, int line) {
  throw ConfigError("bad value '" + v + "' for key '" + key + "' at line " +
                    std::to_string(line));
}

double parse_double(const char* key, const std::string& v, int line) {
  char* end = nullptr;
  double d = std::strtod(v.c_str(), &end);
  if (end == v.c_str() || *end != '\0') bad_value(key, v, line);
  return d;
}

long long parse_int(const char* key, const std::string& v, int line) {
  char* end = nullptr;
  long long i = std::strtoll(v.c_str(), &end, 10);
  if (end == v.c_str() || *end != '\0') bad_value(key, v, line);
  return i;
}

bool parse_bool(const char* key, const std::string& v, int line) {
  if (v == "true" || v == "1") return true;
  if (v == "false" || v == "0") return false;
  bad_value(key, v, line);
}

std::string fmt_double(double d) {
  char buf[64];
  std::snprintf(buf, sizeof buf, "%.17g", d);
  return buf;
}

KeyDesc dk(const char* sec, const char* key, double SimConfig::*m) {
  return {sec, key,
          [key, m](SimConfig& c, const std::string& v, int line) {
            c.*m = parse_double(key, v, line);
          },
          [m](const SimConfig& c) { return fmt_double(c.*m); }};
}

KeyDesc ik(const char* sec, const char* key, int SimConfig::*m) {
  return {sec, key,
          [key, m](SimConfig& c, const std::string& v, int line) {
            c.*m = int(parse_int(key, v, line));
          },
          [m](const SimConfig& c) { return std::to_string(c.*m); }};
}

KeyDesc uk(const char* sec, const char* key, uint64_t SimConfig::*m) {
  return {sec, key,
          [key, m](SimConfig& c, const std::string& v, int line) {
            c.*m = uint64_t(parse_int(key, v, line));
          },
          [m](const SimConfig& c) { return std::to_string(c.*m); }};
}

KeyDesc bk(const char* sec, const char* key, bool SimConfig::*m) {
  return {sec, key,
          [key, m](SimConfig& c, const std::string& v, int line) {
            c.*m = parse_bool(key, v, line);
          },
          [m](const SimConfig& c) { return c.*m ? "true" : "false"; }};
}

KeyDesc sk(const char* sec, const char* key, std::string SimConfig::*m) {
  return {sec, key,
          [m](SimConfig& c, const std::string& v, int) { c.*m = v; },
          [m](const SimConfig& c) { return c.*m; }};
}

std::vector<std::pair<double, double>> parse_curve(const char* key,
                                                   const std::string& v,
                                                   int line) {
  std::vector<std::pair<double, double>> out;
  std::stringstream ss(v);
  std::string item;
  while (std::getline(ss, item, ',')) {
    auto colon = item.find(':');
    if (colon == std::string::npos) bad_value(key, v, line);
    double n = parse_double(key, item.substr(0, colon), line);
    double f = parse_double(key, item.substr(colon + 1), line);
    if (!out.empty() && n <= out.back().first) bad_value(key, v, line);
    out.emplace_back(n, f);
  }
  if (out.empty()) bad_value(key, v, line);
  return out;
}

std::string fmt_curve(const std::vector<std::pair<double, double>>& c) {
  std::string s;
  for (size_t i = 0; i < c.size(); ++i) {
    if (i) s += ',';
    s += fmt_double(c[i].first) + ":" + fmt_double(c[i].second);
  }
  return s;
}

const std::vector<KeyDesc>& schema() {
  static const std::vector<KeyDesc> s = [] {
    std::vector<KeyDesc> v;
    v.push_back(dk("deployment", "isd_m", &SimConfig::isd_m));
    v.push_back(dk("deployment", "hotspot_offset_m", &SimConfig::hotspot_offset_m));
    v.push_back(dk("deployment", "hotspot_radius_m", &SimConfig::hotspot_radius_m));
    v.push_back(dk("deployment", "min_dist_m", &SimConfig::min_dist_m));
    v.push_back(ik("deployment", "drop_max_tries", &SimConfig::drop_max_tries));

    v.push_back(dk("channel", "shadow_sigma_db", &SimConfig::shadow_sigma_db));
    v.push_back(dk("channel", "shadow_site_correlation",
                   &SimConfig::shadow_site_correlation));
    v.push_back(dk("channel", "enb_tx_power_dbm", &SimConfig::enb_tx_power_dbm));
    v.push_back(dk("channel", "enb_antenna_gain_dbi", &SimConfig::enb_antenna_gain_dbi));
    v.push_back(dk("channel", "wap_tx_power_dbm", &SimConfig::wap_tx_power_dbm));
    v.push_back(dk("channel", "noise_figure_enb_db", &SimConfig::noise_figure_enb_db));
    v.push_back(dk("channel", "noise_figure_ue_db", &SimConfig::noise_figure_ue_db));
    v.push_back(dk("channel", "noise_figure_wap_db", &SimConfig::noise_figure_wap_db));
    v.push_back(dk("channel", "extra_noise_margin_db", &SimConfig::extra_noise_margin_db));

    v.push_back(dk("lte", "bandwidth_hz", &SimConfig::lte_bandwidth_hz));
    v.push_back(ik("lte", "n_prb", &SimConfig::lte_n_prb));
    v.push_back(ik("lte", "tti_us", &SimConfig::lte_tti_us));
    v.push_back(dk("lte", "spectral_eff", &SimConfig::lte_spectral_eff));
    v.push_back(dk("lte", "cap_bps_per_hz", &SimConfig::lte_cap_bps_per_hz));
    v.push_back(dk("lte", "gbr_admission_margin", &SimConfig::gbr_admission_margin));
    v.push_back(dk("lte", "scheduler_credit_cap_ms", &SimConfig::scheduler_credit_cap_ms));
    v.push_back(dk("lte", "core_delay_ms", &SimConfig::lte_core_delay_ms));

    v.push_back(dk("wlan", "phy_cap_bps", &SimConfig::wlan_phy_cap_bps));
    v.push_back(dk("wlan", "map_bandwidth_hz", &SimConfig::wlan_map_bandwidth_hz));
    v.push_back(dk("wlan", "channel_bandwidth_hz", &SimConfig::wlan_channel_bandwidth_hz));
    v.push_back(dk("wlan", "spectral_eff", &SimConfig::wlan_spectral_eff));
    v.push_back(dk("wlan", "mac_efficiency", &SimConfig::wlan_mac_efficiency));
    v.push_back({"wlan", "contention_curve",
                 [](SimConfig& c, const std::string& val, int line) {
                   c.wlan_contention_curve =
                       parse_curve("contention_curve", val, line);
                 },
                 [](const SimConfig& c) {
                   return fmt_curve(c.wlan_contention_curve);
                 }});
    v.push_back(ik("wlan", "serve_tick_us", &SimConfig::wlan_serve_tick_us));
    v.push_back(dk("wlan", "beacon_period_ms", &SimConfig::wlan_beacon_period_ms));
    v.push_back(dk("wlan", "util_window_ms", &SimConfig::wlan_util_window_ms));
    v.push_back(dk("wlan", "assoc_reject_util", &SimConfig::wlan_assoc_reject_util));
    v.push_back(dk("wlan", "range_m", &SimConfig::wlan_range_m));
    v.push_back(dk("wlan", "path_delay_ms", &SimConfig::wlan_path_delay_ms));

    v.push_back(dk("ifom", "binding_update_delay_ms", &SimConfig::binding_update_delay_ms));
    v.push_back(ik("ifom", "tunnel_header_bytes", &SimConfig::tunnel_header_bytes));

    v.push_back(dk("energy", "enb_idle_w", &SimConfig::enb_idle_w));
    v.push_back(dk("energy", "enb_tx_w", &SimConfig::enb_tx_w));
    v.push_back(dk("energy", "enb_alpha", &SimConfig::enb_alpha));
    v.push_back(dk("energy", "lte_ue_rx_w", &SimConfig::lte_ue_rx_w));
    v.push_back(dk("energy", "wlan_voltage_v", &SimConfig::wlan_voltage_v));
    v.push_back(dk("energy", "wlan_tx_ma", &SimConfig::wlan_tx_ma));
    v.push_back(dk("energy", "wlan_rx_ma", &SimConfig::wlan_rx_ma));
    v.push_back(dk("energy", "wlan_idle_ma", &SimConfig::wlan_idle_ma));
    v.push_back(dk("energy", "wlan_sleep_ma", &SimConfig::wlan_sleep_ma));

    v.push_back(dk("steering", "epoch_ms", &SimConfig::epoch_ms));
    v.push_back(ik("steering", "hysteresis_epochs", &SimConfig::hysteresis_epochs));
    v.push_back(ik("steering", "backoff_start_epochs", &SimConfig::backoff_start_epochs));
    v.push_back(ik("steering", "backoff_max_epochs", &SimConfig::backoff_max_epochs));
    v.push_back(dk("steering", "tmax_min_ratio", &SimConfig::tmax_min_ratio));
    v.push_back(dk("steering", "ee_retain_ratio", &SimConfig::ee_retain_ratio));
    v.push_back(dk("steering", "ee_overload_util", &SimConfig::ee_overload_util));
    v.push_back(ik("steering", "light_load_max_ieus", &SimConfig::light_load_max_ieus));
    v.push_back(dk("steering", "light_load_prb_util", &SimConfig::light_load_prb_util));
    v.push_back(ik("steering", "switch_budget_divisor", &SimConfig::switch_budget_divisor));

    v.push_back(dk("traffic", "voip_rate_bps", &SimConfig::voip_rate_bps));
    v.push_back(ik("traffic", "voip_packet_bytes", &SimConfig::voip_packet_bytes));
    v.push_back(dk("traffic", "voip_pdb_ms", &SimConfig::voip_pdb_ms));
    v.push_back(dk("traffic", "video_rate_bps", &SimConfig::video_rate_bps));
    v.push_back(ik("traffic", "video_packet_bytes", &SimConfig::video_packet_bytes));
    v.push_back(dk("traffic", "video_pdb_ms", &SimConfig::video_pdb_ms));
    v.push_back(dk("traffic", "ftp_rate_bps", &SimConfig::ftp_rate_bps));
    v.push_back(ik("traffic", "ftp_packet_bytes", &SimConfig::ftp_packet_bytes));
    v.push_back(dk("traffic", "bg_ftp_rate_bps", &SimConfig::bg_ftp_rate_bps));
    v.push_back(dk("traffic", "premium_fraction", &SimConfig::premium_fraction));
    v.push_back(dk("traffic", "flow_stagger_ms", &SimConfig::flow_stagger_ms));

    v.push_back(ik("scenario", "scenario", &SimConfig::scenario));
    v.push_back(ik("scenario", "s1_ieus_per_sector", &SimConfig::s1_ieus_per_sector));
    v.push_back(ik("scenario", "s1_background_light", &SimConfig::s1_background_light));
    v.push_back(ik("scenario", "s1_background_medium", &SimConfig::s1_background_medium));
    v.push_back(ik("scenario", "s1_background_heavy", &SimConfig::s1_background_heavy));
    v.push_back(ik("scenario", "s2_ieus_light", &SimConfig::s2_ieus_light));
    v.push_back(ik("scenario", "s2_ieus_medium", &SimConfig::s2_ieus_medium));
    v.push_back(ik("scenario", "s2_ieus_heavy", &SimConfig::s2_ieus_heavy));
    v.push_back(ik("scenario", "s2_video_flows", &SimConfig::s2_video_flows));

    v.push_back(dk("run", "duration_s", &SimConfig::duration_s));
    v.push_back(dk("run", "warmup_s", &SimConfig::warmup_s));
    v.push_back(dk("run", "tail_ms", &SimConfig::tail_ms));
    v.push_back(uk("run", "seed", &SimConfig::seed));
    v.push_back(ik("run", "reps", &SimConfig::reps));
    v.push_back(sk("run", "policy", &SimConfig::policy));
    v.push_back(sk("run", "load", &SimConfig::load));
    v.push_back(sk("run", "out_dir", &SimConfig::out_dir));
    v.push_back(ik("run", "threads", &SimConfig::threads));
    v.push_back(bk("run", "trace_packets", &SimConfig::trace_packets));
    v.push_back(bk("run", "trace_bindings", &SimConfig::trace_bindings));
    return v;
  }();
  return s;
}

std::string trim(const std::string& s) {
  size_t a = s.find_first_not_of(" \t\r");
  if (a == std::string::npos) return "";
  size_t b = s.find_last_not_of(" \t\r");
  return s.substr(a, b - a + 1);
}

}  // namespace

SimConfig parse_ini(const std::string& text, const SimConfig& base) {
  SimConfig cfg = base;
  std::stringstream ss(text);
  std::string line;
  std::string section;
  int lineno = 0;
  while (std::getline(ss, line)) {
    ++lineno;
    std::string t = trim(line);
    if (t.empty() || t[0] == '#' || t[0] == ';') continue;
    if (t.front() == '[') {
      if (t.back() != ']')
        throw ConfigError("malformed section header at line " +
                          std::to_string(lineno));
      section = trim(t.substr(1, t.size() - 2));
      bool known = false;
      for (const auto& d : schema())
        if (section == d.section) { known = true; break; }
      if (!known)
        throw ConfigError("unknown section '" + section + "' at line " +
                          std::to_string(lineno));
      continue;
    }
    auto eq = t.find('=');
    if (eq == std::string::npos)
      throw ConfigError("expected key=value at line " + std::to_string(lineno));
    std::string key = trim(t.substr(0, eq));
    std::string val = trim(t.substr(eq + 1));
    if (section.empty())
      throw ConfigError("key '" + key + "' outside any section at line " +
                        std::to_string(lineno));
    const KeyDesc* found = nullptr;
    for (const auto& d : schema()) {
      if (section == d.section && key == d.key) {
        found = &d;
        break;
      }
    }
    if (!found)
      throw ConfigError("unknown key '" + section + "." + key + "' at line " +
                        std::to_string(lineno));
    found->set(cfg, val, lineno);
  }
  return cfg;
}

SimConfig load_ini_file(const std::string& path, const SimConfig& base) {
  std::ifstream in(path);
  if (!in) throw ConfigError("cannot open config file '" + path + "'");
  std::stringstream ss;
  ss << in.rdbuf();
  return parse_ini(ss.str(), base);
}

std::string write_ini(const SimConfig& cfg) {
  std::string out;
  std::string cur;
  for (const auto& d : schema()) {
    if (cur != d.section) {
      if (!out.empty()) out += "\n";
      cur = d.section;
      out += "[" + cur + "]\n";
    }
    out += std::string(d.key) + " = " + d.get(cfg) + "\n";
  }
  return out;
}

}  // namespace ifomsim
