// Batch front end: runs a (policy x load) grid of replicated drops and
// writes per-run, per-cell and campaign-level artifacts under --out.
#include <cstdio>
#include <filesystem>
#include <sstream>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "campaign.hpp"
#include "config.hpp"
#include "engine.hpp"
#include "errors.hpp"
#include "output.hpp"

namespace fs = std::filesystem;
using namespace ifomsim;

namespace {

std::vector<std::string> split_list(const std::string& s) {
  std::vector<std::string> out;
  std::stringstream ss(s);
  std::string item;
  while (std::getline(ss, item, ',')) {
    if (!item.empty()) out.push_back(item);
  }
  return out;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"heterogeneous downlink simulator with flow mobility"};

  std::string config_path, policy_arg, load_arg, out_dir;
  uint64_t seed = 0;
  int reps = -1, threads = -1, header_bytes = -1;
  double duration = -1.0;
  bool trace_packets = false, trace_bindings = false;

  app.add_option("--config", config_path, "INI configuration file");
  app.add_option("--policy", policy_arg,
                 "policy or comma list: none-all-lte, none-dual-static, "
                 "tmax, ee");
  app.add_option("--load", load_arg, "load or comma list: light, medium, heavy");
  app.add_option("--seed", seed, "base seed (replication r uses seed + r)");
  app.add_option("--reps", reps, "replications per cell");
  app.add_option("--duration", duration, "simulated seconds per run");
  app.add_option("--out", out_dir, "output directory");
  app.add_option("--threads", threads, "worker threads for the grid");
  app.add_option("--header-bytes", header_bytes,
                 "tunnel header size on the offload path (24 or 68)")
      ->check(CLI::IsMember({24, 68}));
  app.add_flag("--trace-packets", trace_packets,
               "write per-packet delivery rows per run");
  app.add_flag("--trace-bindings", trace_bindings,
               "write binding and switch rows per run");

  CLI11_PARSE(app, argc, argv);

  try {
    SimConfig cfg;
    if (!config_path.empty()) cfg = load_ini_file(config_path, cfg);
    if (!policy_arg.empty()) cfg.policy = policy_arg;
    if (!load_arg.empty()) cfg.load = load_arg;
    if (seed != 0) cfg.seed = seed;
    if (reps > 0) cfg.reps = reps;
    if (duration > 0.0) cfg.duration_s = duration;
    if (!out_dir.empty()) cfg.out_dir = out_dir;
    if (threads > 0) cfg.threads = threads;
    if (header_bytes > 0) cfg.tunnel_header_bytes = header_bytes;
    if (trace_packets) cfg.trace_packets = true;
    if (trace_bindings) cfg.trace_bindings = true;

    std::vector<CellKey> cells;
    for (const std::string& p : split_list(cfg.policy))
      for (const std::string& l : split_list(cfg.load))
        cells.push_back({policy_from_string(p), load_from_string(l)});
    if (cells.empty()) throw ConfigError("no cells: check --policy/--load");

    bool tracing = cfg.trace_packets || cfg.trace_bindings;
    std::vector<CellResult> results;
    std::vector<std::vector<std::string>> bind_rows, pkt_rows;
    if (!tracing) {
      results = run_campaign(cfg, cells, cfg.reps, cfg.seed, cfg.threads);
    } else {
      // tracing hooks append to per-run buffers, so run serially
      results.resize(cells.size());
      bind_rows.resize(cells.size() * size_t(cfg.reps));
      pkt_rows.resize(cells.size() * size_t(cfg.reps));
      for (size_t c = 0; c < cells.size(); ++c) {
        results[c].key = cells[c];
        for (int r = 0; r < cfg.reps; ++r) {
          size_t slot = c * size_t(cfg.reps) + size_t(r);
          EngineHooks hooks;
          char buf[256];
          if (cfg.trace_bindings)
            hooks.binding = [&, slot](int64_t t, int flow, const char* op,
                                      const char* from, const char* to,
                                      const char* reason) {
              std::snprintf(buf, sizeof buf, "%lld,%d,%s,%s,%s,%s",
                            (long long)t, flow, op, from, to, reason);
              bind_rows[slot].push_back(buf);
            };
          if (cfg.trace_packets)
            hooks.packet = [&, slot](int64_t created, int flow, int iface,
                                     int64_t delivered, int64_t latency,
                                     bool on_time) {
              std::snprintf(buf, sizeof buf, "%lld,%d,%d,%lld,%lld,%d",
                            (long long)created, flow, iface,
                            (long long)delivered, (long long)latency,
                            int(on_time));
              pkt_rows[slot].push_back(buf);
            };
          results[c].runs.push_back(simulate_run(cfg, cells[c].policy,
                                                 cells[c].load,
                                                 cfg.seed + uint64_t(r),
                                                 &hooks));
        }
      }
    }

    fs::create_directories(cfg.out_dir);
    for (size_t c = 0; c < results.size(); ++c) {
      const CellResult& cell = results[c];
      std::string cell_dir = cfg.out_dir + "/" +
                             to_string(cell.key.policy) + "_" +
                             to_string(cell.key.load);
      fs::create_directories(cell_dir);
      write_text_file(cell_dir + "/config_echo.ini", write_ini(cfg));
      write_text_file(cell_dir + "/aggregate.json", aggregate_json(cell));
      for (size_t r = 0; r < cell.runs.size(); ++r) {
        const RunResult& run = cell.runs[r];
        std::string run_dir =
            cell_dir + "/run_" + std::to_string(run.seed);
        fs::create_directories(run_dir);
        write_text_file(run_dir + "/summary.json",
                        run_summary_json(run, cell.key.policy, cell.key.load));
        write_text_file(run_dir + "/flows.csv", flows_csv(run));
        write_text_file(run_dir + "/cdf_throughput.csv",
                        cdf_csv(per_ieu_throughput_bps(run),
                                "ieu_throughput_bps"));
        write_text_file(run_dir + "/cdf_energy.csv",
                        cdf_csv(per_ieu_energy_j(run, false),
                                "ieu_energy_j"));
        if (tracing) {
          size_t slot = c * size_t(cfg.reps) + r;
          if (cfg.trace_bindings) {
            std::string text = "t_us,flow_id,op,from,to,reason\n";
            for (const std::string& row : bind_rows[slot]) text += row + "\n";
            write_text_file(run_dir + "/bindings.csv", text);
          }
          if (cfg.trace_packets) {
            std::string text =
                "created_us,flow_id,iface,delivered_us,latency_us,on_time\n";
            for (const std::string& row : pkt_rows[slot]) text += row + "\n";
            write_text_file(run_dir + "/packets.csv", text);
          }
        }
      }
    }
    write_text_file(cfg.out_dir + "/comparison.csv", comparison_csv(results));
    write_text_file(cfg.out_dir + "/campaign.json",
                    campaign_json(results, cfg, cfg.seed, cfg.reps));
    std::printf("wrote %zu cell(s) x %d rep(s) to %s\n", results.size(),
                cfg.reps, cfg.out_dir.c_str());
    return 0;
  } catch (const std::exception& e) {
    std::fprintf(stderr, "error: %s\n", e.what());
    return 1;
  }
}
