#pragma once
#include <cstdint>
#include <vector>

namespace ifomsim {

// Downlink PRB scheduler for one sector, one TTI. Capacity is accounted
// fluidly: a grant charges exactly drained_bits / bits_per_prb blocks, so
// small packets cost what they carry instead of a rounded-up whole block.
// Three passes:
//  1. GBR bearers drain min(queue, credit) in strict priority bands, where
//     credit is a token bucket refilled at the guaranteed rate each TTI
//     and capped at credit_cap_s worth of tokens. Within a band the
//     bearers take one-PRB quanta round robin (the final quantum may be
//     fractional), resuming after the bearer the previous TTI granted
//     last, so a capacity shortage rotates across the band.
//  2. Remaining capacity goes to backlogged non-GBR bearers round-robin in
//     the same quanta, continuing after the bearer that ended the previous
//     TTI's rotation.
//  3. Anything still left goes to backlogged GBR bearers (same banded
//     rotation and marker as pass 1) without touching credits, so the
//     scheduler is work-conserving.

struct SchedBearer {
  int id = 0;
  bool gbr = false;
  int priority = 9;
  double gbr_bps = 0.0;
  double credit_bits = 0.0;
  double queue_bits = 0.0;
  double bits_per_prb = 0.0;
};

struct SchedGrant {
  int id = 0;
  double prbs = 0.0;
  double drained_bits = 0.0;
  double credit_after = 0.0;
};

struct SchedOutcome {
  std::vector<SchedGrant> grants;  // one per input bearer, input order
  double prbs_used = 0.0;
  int rr_last_id = -1;   // feed back into the next TTI
  int gbr_last_id = -1;  // rotation marker for the guaranteed bands
};

SchedOutcome schedule_tti(const std::vector<SchedBearer>& bearers, int n_prb,
                          double tti_s, double credit_cap_s, int rr_last_id,
                          int gbr_last_id);

// GBR admission: accept when the already-admitted guaranteed rate plus the
// new bearer's stays within margin * achievable link rate.
bool admit_gbr(double admitted_gbr_sum_bps, double new_gbr_bps,
               double achievable_bps, double margin);

}  // namespace ifomsim
