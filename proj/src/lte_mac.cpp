#include "lte_mac.hpp"

#include <algorithm>
#include <cmath>

namespace ifomsim {

SchedOutcome schedule_tti(const std::vector<SchedBearer>& bearers, int n_prb,
                          double tti_s, double credit_cap_s, int rr_last_id,
                          int gbr_last_id) {
  SchedOutcome out;
  out.rr_last_id = rr_last_id;
  out.gbr_last_id = gbr_last_id;
  out.grants.reserve(bearers.size());

  struct Work {
    size_t idx;
    double credit;
    double queue;
  };
  std::vector<Work> w(bearers.size());
  for (size_t i = 0; i < bearers.size(); ++i) {
    const SchedBearer& b = bearers[i];
    double credit = 0.0;
    if (b.gbr)
      credit = std::min(b.credit_bits + b.gbr_bps * tti_s,
                        b.gbr_bps * credit_cap_s);
    w[i] = {i, credit, b.queue_bits};
    out.grants.push_back({b.id, 0.0, 0.0, 0.0});
  }
  double left = double(n_prb);

  std::vector<size_t> gbr_idx, be_idx;
  for (size_t i = 0; i < bearers.size(); ++i)
    (bearers[i].gbr ? gbr_idx : be_idx).push_back(i);
  std::sort(gbr_idx.begin(), gbr_idx.end(), [&](size_t a, size_t b) {
    if (bearers[a].priority != bearers[b].priority)
      return bearers[a].priority < bearers[b].priority;
    return bearers[a].id < bearers[b].id;
  });
  std::sort(be_idx.begin(), be_idx.end(), [&](size_t a, size_t b) {
    return bearers[a].id < bearers[b].id;
  });

  // Guaranteed service runs in strict priority bands; within a band the
  // bearers take one-block quanta round robin, resuming after the last id
  // granted, so a capacity shortage rotates across the band instead of
  // always clipping the bearers sorted last.
  auto gbr_band_rotation = [&](bool use_credit) {
    size_t lo = 0;
    while (lo < gbr_idx.size() && left > 1e-12) {
      size_t hi = lo;
      while (hi < gbr_idx.size() &&
             bearers[gbr_idx[hi]].priority == bearers[gbr_idx[lo]].priority)
        ++hi;
      size_t idx = lo;
      while (idx < hi && bearers[gbr_idx[idx]].id <= out.gbr_last_id) ++idx;
      if (idx == hi) idx = lo;
      size_t dry = 0;
      while (left > 1e-12 && dry < hi - lo) {
        size_t i = gbr_idx[idx];
        ++idx;
        if (idx == hi) idx = lo;
        const SchedBearer& b = bearers[i];
        double avail =
            use_credit ? std::min(w[i].queue, w[i].credit) : w[i].queue;
        if (avail <= 0.0 || b.bits_per_prb <= 0.0) {
          ++dry;
          continue;
        }
        dry = 0;
        double quantum = std::min(1.0, left);
        double drained = std::min(avail, quantum * b.bits_per_prb);
        double p = drained / b.bits_per_prb;
        w[i].queue -= drained;
        if (use_credit) w[i].credit = std::max(0.0, w[i].credit - drained);
        out.grants[i].prbs += p;
        out.grants[i].drained_bits += drained;
        out.gbr_last_id = b.id;
        left -= p;
      }
      lo = hi;
    }
  };

  gbr_band_rotation(true);

  auto one_prb_rotation = [&](const std::vector<size_t>& order, size_t start,
                              bool track_rr) {
    if (order.empty()) return;
    size_t idx = start % order.size();
    size_t dry = 0;
    while (left > 1e-12 && dry < order.size()) {
      size_t i = order[idx];
      idx = (idx + 1) % order.size();
      const SchedBearer& b = bearers[i];
      if (w[i].queue <= 0.0 || b.bits_per_prb <= 0.0) {
        ++dry;
        continue;
      }
      dry = 0;
      double quantum = std::min(1.0, left);
      double drained = std::min(w[i].queue, quantum * b.bits_per_prb);
      double p = drained / b.bits_per_prb;
      w[i].queue -= drained;
      out.grants[i].prbs += p;
      out.grants[i].drained_bits += drained;
      if (track_rr) out.rr_last_id = b.id;
      left -= p;
    }
  };

  size_t be_start = 0;
  while (be_start < be_idx.size() &&
         bearers[be_idx[be_start]].id <= out.rr_last_id)
    ++be_start;
  one_prb_rotation(be_idx, be_start, true);
  gbr_band_rotation(false);

  for (size_t i = 0; i < bearers.size(); ++i)
    out.grants[i].credit_after = w[i].credit;
  out.prbs_used = double(n_prb) - left;
  return out;
}

bool admit_gbr(double admitted_gbr_sum_bps, double new_gbr_bps,
               double achievable_bps, double margin) {
  return admitted_gbr_sum_bps + new_gbr_bps <=
         margin * achievable_bps + 1e-9;
}

}  // namespace ifomsim
