// Times the campaign grid serially and with the parallel worker path on the
// same cells, checks the serialized summaries are byte-identical, and prints
// the speedup.
#include <chrono>
#include <cstdio>
#include <string>
#include <vector>
#ifdef _OPENMP
#include <omp.h>
#endif

#include "CLI11.hpp"
#include "campaign.hpp"
#include "config.hpp"
#include "output.hpp"

using namespace ifomsim;
using Clock = std::chrono::steady_clock;

static std::string serialize_all(const std::vector<CellResult>& cells) {
  std::string s;
  for (const CellResult& c : cells)
    for (const RunResult& r : c.runs)
      s += run_summary_json(r, c.key.policy, c.key.load);
  return s;
}

int main(int argc, char** argv) {
  CLI::App app{"serial vs parallel campaign benchmark"};
  int reps = 4, threads = 0;
  double duration = 10.0;
  uint64_t seed = 1;
  app.add_option("--reps", reps, "replications per cell");
  app.add_option("--threads", threads, "parallel worker count (0 = hardware)");
  app.add_option("--duration", duration, "simulated seconds per run");
  app.add_option("--seed", seed, "base seed");
  CLI11_PARSE(app, argc, argv);

#ifdef _OPENMP
  if (threads <= 0) threads = omp_get_max_threads();
#else
  if (threads <= 0) threads = 1;
  std::printf("built without OpenMP, parallel path runs serially\n");
#endif

  SimConfig cfg;
  cfg.duration_s = duration;
  std::vector<CellKey> cells = {
      {Policy::NONE_DUAL_STATIC, LoadLevel::MEDIUM},
      {Policy::TMAX, LoadLevel::MEDIUM},
      {Policy::EE, LoadLevel::MEDIUM},
  };

  auto t0 = Clock::now();
  auto serial = run_campaign(cfg, cells, reps, seed, 1);
  auto t1 = Clock::now();
  auto parallel = run_campaign(cfg, cells, reps, seed, threads);
  auto t2 = Clock::now();

  double s_ms = std::chrono::duration<double, std::milli>(t1 - t0).count();
  double p_ms = std::chrono::duration<double, std::milli>(t2 - t1).count();

  std::string a = serialize_all(serial), b = serialize_all(parallel);
  bool identical = (a == b);

  std::printf("cells=%zu reps=%d runs=%zu duration=%.1fs\n", cells.size(),
              reps, cells.size() * size_t(reps), duration);
  std::printf("serial   : %8.1f ms\n", s_ms);
  std::printf("parallel : %8.1f ms  (threads=%d)\n", p_ms, threads);
  std::printf("speedup  : %.2fx\n", p_ms > 0 ? s_ms / p_ms : 0.0);
  std::printf("outputs  : %s\n", identical ? "byte-identical" : "MISMATCH");
  return identical ? 0 : 1;
}
