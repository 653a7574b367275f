#include "output.hpp"

#include <algorithm>
#include <cstdio>
#include <fstream>
#include <sstream>

#include "errors.hpp"
#include "json.hpp"

namespace ifomsim {

using nlohmann::json;

namespace {

json flow_to_json(const FlowResult& f) {
  json j;
  j["flow_id"] = f.flow_id;
  j["node_id"] = f.node_id;
  j["class"] = to_string(f.cls);
  j["ieu"] = f.ieu;
  j["premium"] = f.premium;
  j["blocked"] = f.blocked;
  j["configured_bps"] = f.configured_bps;
  j["goodput_bps"] = f.goodput_bps;
  j["generated_pkts"] = f.generated_pkts;
  j["delivered_pkts"] = f.delivered_pkts;
  j["ontime_pkts"] = f.ontime_pkts;
  j["late_pkts"] = f.late_pkts;
  j["mean_latency_us"] = f.mean_latency_us;
  j["p50_latency_us"] = f.p50_latency_us;
  j["p95_latency_us"] = f.p95_latency_us;
  j["max_latency_us"] = f.max_latency_us;
  j["time_on_wlan_s"] = f.time_on_wlan_s;
  j["switches"] = f.switches;
  j["active_j"] = f.active_j;
  j["idle_share_j"] = f.idle_share_j;
  j["node_j"] = f.node_j;
  j["energy_cost_j"] = f.active_j + f.node_j;
  return j;
}

json run_to_json(const RunResult& run) {
  json j;
  j["seed"] = run.seed;
  j["window_s"] = run.window_s;
  j["blocking"] = run.blocking();
  j["qos_loss"] = run.qos_loss();
  j["unserved_fraction"] = run.unserved_fraction();
  j["lte_gbr_attempts"] = run.lte_gbr_attempts;
  j["lte_gbr_blocked"] = run.lte_gbr_blocked;
  j["wlan_assoc_attempts"] = run.wlan_assoc_attempts;
  j["wlan_assoc_rejected"] = run.wlan_assoc_rejected;
  j["switches_completed"] = run.switches_completed;
  j["u_sat"] = u_sat_of_run(run);
  j["mean_sector_prb_util"] = run.mean_sector_prb_util;
  j["enb_energy_j"] = run.enb_energy_j;
  j["enb_idle_j"] = run.enb_idle_j;
  j["ap_energy_j"] = run.ap_energy_j;
  j["node_energy_j"] = run.node_energy_j;
  std::vector<double> tput = per_ieu_throughput_bps(run);
  std::vector<double> en = per_ieu_energy_j(run, false);
  j["mean_ieu_throughput_bps"] = mean_of(tput);
  j["mean_ieu_energy_j"] = mean_of(en);
  json aps = json::array();
  for (const ApResult& a : run.aps) {
    json ja;
    ja["ap_id"] = a.ap_id;
    ja["mean_util"] = a.mean_util;
    ja["mean_backlogged"] = a.mean_backlogged;
    ja["assoc_peak"] = a.assoc_peak;
    ja["served_payload_bps"] = a.served_payload_bps;
    ja["energy_j"] = a.energy_j;
    aps.push_back(ja);
  }
  j["aps"] = aps;
  return j;
}

}  // namespace

std::string run_summary_json(const RunResult& run, Policy policy,
                             LoadLevel load) {
  json j = run_to_json(run);
  j["policy"] = to_string(policy);
  j["load"] = to_string(load);
  json flows = json::array();
  for (const FlowResult& f : run.flows) flows.push_back(flow_to_json(f));
  j["flows"] = flows;
  return j.dump(2) + "\n";
}

std::string flows_csv(const RunResult& run) {
  std::ostringstream os;
  os << "flow_id,node_id,class,ieu,premium,blocked,configured_bps,"
        "goodput_bps,generated_pkts,delivered_pkts,ontime_pkts,late_pkts,"
        "mean_latency_us,p50_latency_us,p95_latency_us,max_latency_us,"
        "time_on_wlan_s,switches,active_j,idle_share_j,node_j\n";
  char buf[512];
  for (const FlowResult& f : run.flows) {
    std::snprintf(buf, sizeof buf,
                  "%d,%d,%s,%d,%d,%d,%.17g,%.17g,%llu,%llu,%llu,%llu,%.17g,"
                  "%.17g,%.17g,%lld,%.17g,%d,%.17g,%.17g,%.17g\n",
                  f.flow_id, f.node_id, to_string(f.cls), int(f.ieu),
                  int(f.premium), int(f.blocked), f.configured_bps,
                  f.goodput_bps, (unsigned long long)f.generated_pkts,
                  (unsigned long long)f.delivered_pkts,
                  (unsigned long long)f.ontime_pkts,
                  (unsigned long long)f.late_pkts, f.mean_latency_us,
                  f.p50_latency_us, f.p95_latency_us,
                  (long long)f.max_latency_us, f.time_on_wlan_s, f.switches,
                  f.active_j, f.idle_share_j, f.node_j);
    os << buf;
  }
  return os.str();
}

std::string cdf_csv(std::vector<double> values, const std::string& header) {
  std::sort(values.begin(), values.end());
  std::ostringstream os;
  os << header << ",cumulative_fraction\n";
  char buf[96];
  for (size_t i = 0; i < values.size(); ++i) {
    std::snprintf(buf, sizeof buf, "%.17g,%.17g\n", values[i],
                  double(i + 1) / double(values.size()));
    os << buf;
  }
  return os.str();
}

std::string aggregate_json(const CellResult& cell) {
  json j;
  j["policy"] = to_string(cell.key.policy);
  j["load"] = to_string(cell.key.load);
  j["reps"] = cell.runs.size();
  auto stat = [&](const char* name, auto&& fn) {
    std::vector<double> v;
    for (const RunResult& r : cell.runs) v.push_back(fn(r));
    j[name] = {{"mean", mean_of(v)}, {"stddev", stddev_of(v)}};
  };
  stat("ieu_throughput_bps", [](const RunResult& r) {
    return mean_of(per_ieu_throughput_bps(r));
  });
  stat("ieu_energy_j", [](const RunResult& r) {
    return mean_of(per_ieu_energy_j(r, false));
  });
  stat("ieu_energy_with_idle_j", [](const RunResult& r) {
    return mean_of(per_ieu_energy_j(r, true));
  });
  stat("ieu_ftp_energy_j", [](const RunResult& r) {
    return mean_of(per_ieu_ftp_energy_j(r, false));
  });
  stat("u_sat", [](const RunResult& r) { return u_sat_of_run(r); });
  stat("blocking", [](const RunResult& r) { return r.blocking(); });
  stat("qos_loss", [](const RunResult& r) { return r.qos_loss(); });
  stat("unserved_fraction",
       [](const RunResult& r) { return r.unserved_fraction(); });
  stat("video_mean_latency_us", [](const RunResult& r) {
    return mean_latency_us(r, FlowClass::VIDEO);
  });
  stat("voip_mean_latency_us", [](const RunResult& r) {
    return mean_latency_us(r, FlowClass::VOIP);
  });
  stat("ftp_mean_goodput_bps", [](const RunResult& r) {
    return mean_goodput_bps(r, FlowClass::FTP);
  });
  stat("switches", [](const RunResult& r) {
    return double(r.switches_completed);
  });
  return j.dump(2) + "\n";
}

std::string comparison_csv(const std::vector<CellResult>& cells) {
  std::ostringstream os;
  os << "policy,load,ieu_throughput_bps,ieu_energy_j,u_sat,blocking,"
        "qos_loss,video_mean_latency_us,ftp_mean_goodput_bps,switches\n";
  char buf[512];
  for (const CellResult& c : cells) {
    double tput = cell_mean(c, [](const RunResult& r) {
      return mean_of(per_ieu_throughput_bps(r));
    });
    double en = cell_mean(c, [](const RunResult& r) {
      return mean_of(per_ieu_energy_j(r, false));
    });
    double us = cell_mean(c, [](const RunResult& r) { return u_sat_of_run(r); });
    double bl = cell_mean(c, [](const RunResult& r) { return r.blocking(); });
    double lo = cell_mean(c, [](const RunResult& r) { return r.qos_loss(); });
    double vl = cell_mean(c, [](const RunResult& r) {
      return mean_latency_us(r, FlowClass::VIDEO);
    });
    double fg = cell_mean(c, [](const RunResult& r) {
      return mean_goodput_bps(r, FlowClass::FTP);
    });
    double sw = cell_mean(c, [](const RunResult& r) {
      return double(r.switches_completed);
    });
    std::snprintf(buf, sizeof buf, "%s,%s,%.17g,%.17g,%.17g,%.17g,%.17g,%.17g,%.17g,%.17g\n",
                  to_string(c.key.policy), to_string(c.key.load), tput, en,
                  us, bl, lo, vl, fg, sw);
    os << buf;
  }
  return os.str();
}

std::string campaign_json(const std::vector<CellResult>& cells,
                          const SimConfig& cfg, uint64_t base_seed,
                          int reps) {
  json j;
  j["base_seed"] = base_seed;
  j["reps"] = reps;
  j["scenario"] = cfg.scenario;
  j["duration_s"] = cfg.duration_s;
  j["warmup_s"] = cfg.warmup_s;
  json arr = json::array();
  for (const CellResult& c : cells) {
    json jc;
    jc["policy"] = to_string(c.key.policy);
    jc["load"] = to_string(c.key.load);
    jc["dir"] = std::string(to_string(c.key.policy)) + "_" +
                to_string(c.key.load);
    arr.push_back(jc);
  }
  j["cells"] = arr;
  return j.dump(2) + "\n";
}

void write_text_file(const std::string& path, const std::string& content) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw ConfigError("cannot write file '" + path + "'");
  out << content;
}

}  // namespace ifomsim
