#pragma once
#include <string>
#include <vector>

#include "campaign.hpp"
#include "config.hpp"
#include "metrics.hpp"

namespace ifomsim {

// Serialized artifacts are deterministic: object keys are emitted sorted and
// floating-point values use the shortest round-trip form, so re-running a
// configuration reproduces files byte for byte.
std::string run_summary_json(const RunResult& run, Policy policy,
                             LoadLevel load);
std::string flows_csv(const RunResult& run);
// Two-column CSV (value, cumulative fraction) over the given sample.
std::string cdf_csv(std::vector<double> values, const std::string& header);
std::string aggregate_json(const CellResult& cell);
std::string comparison_csv(const std::vector<CellResult>& cells);
std::string campaign_json(const std::vector<CellResult>& cells,
                          const SimConfig& cfg, uint64_t base_seed, int reps);

void write_text_file(const std::string& path, const std::string& content);

}  // namespace ifomsim
