#pragma once
#include <cstdint>
#include <functional>
#include <string>

#include "config.hpp"
#include "metrics.hpp"
#include "topology.hpp"

namespace ifomsim {

// Optional observers for per-event output. Binding rows fire on every flow
// placement, switch initiation and completion; packet rows on every
// delivery. Both see times in microseconds.
struct EngineHooks {
  std::function<void(int64_t t_us, int flow, const char* op, const char* from,
                     const char* to, const char* reason)>
      binding;
  std::function<void(int64_t created_us, int flow, int iface,
                     int64_t delivered_us, int64_t latency_us, bool on_time)>
      packet;
};

// Runs one seeded replication of the configured scenario and returns the
// windowed metrics. Identical inputs give identical results on every
// platform; all randomness derives from `seed`.
RunResult simulate_run(const SimConfig& cfg, Policy policy, LoadLevel load,
                       uint64_t seed, const EngineHooks* hooks = nullptr);

}  // namespace ifomsim
