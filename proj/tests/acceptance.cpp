// Acceptance gate: twelve criteria covering formula exactness, protocol
// invariants, determinism, and the comparative campaign claims. Each
// criterion prints exactly one PASS/FAIL line and the process exits nonzero
// if any fail. Campaign grids are run once and shared across criteria; the
// first criterion that needs a grid pays its wall-clock cost.
#include <algorithm>
#include <chrono>
#include <cmath>
#include <cstdarg>
#include <cstdio>
#include <optional>
#include <random>
#include <sstream>
#include <string>
#include <vector>

#include "campaign.hpp"
#include "channel.hpp"
#include "config.hpp"
#include "energy.hpp"
#include "engine.hpp"
#include "ifom.hpp"
#include "lte_mac.hpp"
#include "metrics.hpp"
#include "output.hpp"

using namespace ifomsim;

namespace {

// pinned tolerances
constexpr double kEnergyRelTol = 1e-9;
constexpr double kTunnelOverheadPct = 6.640625;
constexpr double kPathLossTolDb = 1e-3;
constexpr double kLtePl500mDb = 116.781;
constexpr double kWlanPl60mDb = 95.858;
constexpr double kVoipFloorBps = 12000.0;
constexpr double kVoipLatencyCapUs = 50000.0;
constexpr double kFtpOutageBps = 128000.0;
constexpr double kDualEnergySavingFloor = 0.20;
constexpr double kTmaxGainFloor = 1.15;
constexpr double kEeThroughputFloor = 0.90;
constexpr double kEeEnergySavingFloor = 0.10;
constexpr double kBlockingCap = 0.05;
constexpr double kVideoPdbUs = 100000.0;
constexpr double kSchedTolPrb = 1e-9;

// pinned runtime budgets in seconds; 0 means no stated budget
constexpr double kBudget[13] = {0, 1.0, 1.0, 0, 30.0, 120.0, 300.0,
                                300.0, 300.0, 0, 0, 0, 0};

constexpr int kReps = 5;
constexpr uint64_t kBaseSeed = 1;

struct Verdict {
  bool ok = false;
  std::string detail;
};

double now_s() {
  using clk = std::chrono::steady_clock;
  return std::chrono::duration<double>(clk::now().time_since_epoch()).count();
}

std::string fmt(const char* f, ...) {
  char buf[512];
  va_list ap;
  va_start(ap, f);
  vsnprintf(buf, sizeof buf, f, ap);
  va_end(ap);
  return buf;
}

// --- shared campaign grids ------------------------------------------------

SimConfig steering_cfg() {
  SimConfig c;
  c.duration_s = 30.0;
  c.warmup_s = 8.0;
  c.ftp_rate_bps = 1024000.0;
  return c;
}

SimConfig association_cfg() {
  SimConfig c;
  c.duration_s = 30.0;
  c.warmup_s = 8.0;
  return c;
}

SimConfig qos_cfg() {
  SimConfig c;
  c.scenario = 1;
  c.ftp_rate_bps = 256000.0;
  c.premium_fraction = 0.25;
  c.duration_s = 30.0;
  c.warmup_s = 8.0;
  return c;
}

struct Grids {
  std::vector<CellResult> s1;        // scenario 1: tmax, ee x loads
  std::vector<CellResult> pair;      // scenario 2: all-lte vs dual, medium
  std::vector<CellResult> steering;  // scenario 2, contended hotspot rates
  std::vector<RunResult> extra;      // determinism re-runs, for the pin scan

  void ensure_s1() {
    if (!s1.empty()) return;
    std::vector<CellKey> cells;
    for (Policy p : {Policy::TMAX, Policy::EE})
      for (LoadLevel l : {LoadLevel::LIGHT, LoadLevel::MEDIUM,
                          LoadLevel::HEAVY})
        cells.push_back({p, l});
    s1 = run_campaign(qos_cfg(), cells, kReps, kBaseSeed, 1);
  }
  void ensure_pair() {
    if (!pair.empty()) return;
    std::vector<CellKey> cells{{Policy::NONE_ALL_LTE, LoadLevel::MEDIUM},
                               {Policy::NONE_DUAL_STATIC, LoadLevel::MEDIUM}};
    pair = run_campaign(association_cfg(), cells, kReps, kBaseSeed, 1);
  }
  void ensure_steering() {
    if (!steering.empty()) return;
    std::vector<CellKey> cells;
    for (Policy p : {Policy::NONE_DUAL_STATIC, Policy::TMAX, Policy::EE})
      for (LoadLevel l : {LoadLevel::LIGHT, LoadLevel::MEDIUM,
                          LoadLevel::HEAVY})
        cells.push_back({p, l});
    steering = run_campaign(steering_cfg(), cells, kReps, kBaseSeed, 1);
  }

  const CellResult& cell(const std::vector<CellResult>& grid, Policy p,
                         LoadLevel l) const {
    for (const CellResult& c : grid)
      if (c.key.policy == p && c.key.load == l) return c;
    static CellResult empty;
    return empty;
  }
};

double cell_ieu_throughput(const CellResult& c) {
  return cell_mean(c, [](const RunResult& r) {
    return mean_of(per_ieu_throughput_bps(r));
  });
}

double cell_ieu_ftp_energy(const CellResult& c) {
  return cell_mean(c, [](const RunResult& r) {
    return mean_of(per_ieu_ftp_energy_j(r, false));
  });
}

const char* load_name(LoadLevel l) {
  switch (l) {
    case LoadLevel::LIGHT: return "light";
    case LoadLevel::MEDIUM: return "medium";
    case LoadLevel::HEAVY: return "heavy";
  }
  return "?";
}

// --- criteria -------------------------------------------------------------

Verdict ac1_energy() {
  const double p_idle = 90.0, p_tx = 40.0, alpha = 4.27, p_rx = 10.0;
  std::mt19937_64 rng(42);
  std::uniform_real_distribution<double> dur(0.0, 7200.0);
  auto close = [](double got, double want) {
    return std::abs(got - want) <= kEnergyRelTol * std::max(1.0, std::abs(want));
  };
  int bad = 0;
  for (int i = 0; i < 1000; ++i) {
    double ti = dur(rng), tt = dur(rng), tr = dur(rng);
    EnbEnergy e = enb_energy_j(ti, tt, tr, p_idle, p_tx, alpha, p_rx);
    double idle = p_idle * ti;
    double tx = (p_idle + alpha * p_tx) * tt;
    double rx = (p_idle + p_rx) * tr;
    if (!close(e.idle_j, idle) || !close(e.tx_j, tx) || !close(e.rx_j, rx) ||
        !close(e.total_j, idle + tx + rx))
      ++bad;
  }
  EnbEnergy a1 = enb_energy_j(2.0, 0.0, 0.0, p_idle, p_tx, alpha, p_rx);
  EnbEnergy a2 = enb_energy_j(0.0, 1.0, 0.0, p_idle, p_tx, alpha, p_rx);
  bool anchors = close(a1.idle_j, 180.0) && close(a2.tx_j, 260.8);
  if (bad == 0 && anchors)
    return {true, "1000 random triples within 1e-9, anchors 180 J and 260.8 J exact"};
  return {false, fmt("%d mismatched triples, anchors %s", bad,
                     anchors ? "ok" : "off")};
}

Verdict ac2_tunnel() {
  double got = tunnel_overhead_pct(68, 1024);
  if (got == kTunnelOverheadPct)
    return {true, fmt("tunnel_overhead_pct(68, 1024) = %.6f%% exact", got)};
  return {false, fmt("got %.9f%%, want %.6f%%", got, kTunnelOverheadPct)};
}

Verdict ac3_pathloss() {
  double lte = path_loss_macro_db(500.0);
  double wlan = path_loss_wlan_db(60.0);
  double us = u_sat({1.0, 2.0, 3.0}, 3.0);
  bool ok_lte = std::abs(lte - kLtePl500mDb) < kPathLossTolDb;
  bool ok_wlan = std::abs(wlan - kWlanPl60mDb) < kPathLossTolDb;
  bool ok_us = us == 2.0 / 3.0;
  if (ok_lte && ok_wlan && ok_us)
    return {true, fmt("PL %.3f / %.3f dB within 1e-3, u_sat 2/3 exact", lte,
                      wlan)};
  return {false, fmt("PL %.4f/%.4f dB, u_sat %.12f", lte, wlan, us)};
}

Verdict ac4_invariants() {
  std::mt19937_64 rng(7);
  long violations = 0;
  long ops = 0;
  for (int seq = 0; seq < 100000; ++seq) {
    BindingCache bc;
    for (int k = 0; k < 12; ++k) {
      switch (rng() % 6) {
        case 0:
          bc.register_interface(rng() % 2 ? IFACE_WLAN : IFACE_LTE, rng());
          break;
        case 1:
          bc.deregister_interface(rng() % 2 ? IFACE_WLAN : IFACE_LTE);
          break;
        case 2: {
          const auto& ents = bc.entries();
          if (ents.empty()) break;
          int fid = int(rng() % 8);
          int bid = ents[rng() % ents.size()].bid;
          bc.bind_flow(fid, selector_for_flow(fid, fid), bid,
                       int(rng() % 4));
          break;
        }
        case 3:
          bc.unbind_flow(int(rng() % 8));
          break;
        case 4:
          (void)bc.route(selector_for_flow(int(rng() % 8), int(rng() % 8)));
          break;
        default:
          (void)bc.flow_binding(int(rng() % 8));
          break;
      }
      ++ops;
      if (!bc.invariants_hold()) ++violations;
      // one binding per flow, and no binding may point at a dropped entry
      std::vector<int> fids;
      for (const FlowBinding& fb : bc.flows()) {
        fids.push_back(fb.fid);
        bool found = false;
        for (const BindingEntry& be : bc.entries())
          if (be.bid == fb.bid) found = true;
        if (!found) ++violations;
      }
      std::sort(fids.begin(), fids.end());
      if (std::adjacent_find(fids.begin(), fids.end()) != fids.end())
        ++violations;
    }
  }
  if (violations == 0)
    return {true, fmt("%ld operations across 100000 sequences, zero violations",
                      ops)};
  return {false, fmt("%ld violations", violations)};
}

Verdict ac5_qos(Grids& g) {
  g.ensure_s1();
  double min_voip = 1e18, worst_lat = 0.0, min_ftp_light = 1e18;
  long voip_flows = 0;
  for (const CellResult& c : g.s1)
    for (const RunResult& r : c.runs)
      for (const FlowResult& f : r.flows) {
        if (f.blocked) continue;
        if (f.cls == FlowClass::VOIP) {
          ++voip_flows;
          min_voip = std::min(min_voip, f.goodput_bps);
          worst_lat = std::max(worst_lat, f.mean_latency_us);
        }
        if (f.cls == FlowClass::FTP && c.key.load == LoadLevel::LIGHT)
          min_ftp_light = std::min(min_ftp_light, f.goodput_bps);
      }
  bool ok = voip_flows > 0 && min_voip >= kVoipFloorBps &&
            worst_lat < kVoipLatencyCapUs && min_ftp_light > kFtpOutageBps;
  std::string d =
      fmt("min voice %.2f kb/s (floor 12.0), worst voice latency %.2f ms "
          "(cap 50), min light FTP %.1f kb/s (floor 128)",
          min_voip / 1000.0, worst_lat / 1000.0, min_ftp_light / 1000.0);
  return {ok, d};
}

Verdict ac6_association(Grids& g) {
  g.ensure_pair();
  double lte = cell_ieu_ftp_energy(
      g.cell(g.pair, Policy::NONE_ALL_LTE, LoadLevel::MEDIUM));
  double dual = cell_ieu_ftp_energy(
      g.cell(g.pair, Policy::NONE_DUAL_STATIC, LoadLevel::MEDIUM));
  double saving = lte > 0.0 ? 1.0 - dual / lte : 0.0;
  bool ok = saving >= kDualEnergySavingFloor;
  return {ok, fmt("per-IeU FTP energy %.2f J via LTE vs %.2f J via WLAN, "
                  "saving %.1f%% (floor 20%%)",
                  lte, dual, saving * 100.0)};
}

Verdict ac7_tmax_gain(Grids& g) {
  g.ensure_steering();
  double base = cell_ieu_throughput(
      g.cell(g.steering, Policy::NONE_DUAL_STATIC, LoadLevel::HEAVY));
  double tmax = cell_ieu_throughput(
      g.cell(g.steering, Policy::TMAX, LoadLevel::HEAVY));
  double ratio = base > 0.0 ? tmax / base : 0.0;
  bool ok = ratio >= kTmaxGainFloor;
  return {ok, fmt("heavy per-IeU throughput %.3f Mb/s vs dual-static %.3f "
                  "Mb/s, ratio %.3f (floor 1.15)",
                  tmax / 1e6, base / 1e6, ratio)};
}

Verdict ac8_ee_tradeoff(Grids& g) {
  g.ensure_steering();
  double worst_ratio = 1e18;
  std::string worst_load;
  for (LoadLevel l : {LoadLevel::LIGHT, LoadLevel::MEDIUM, LoadLevel::HEAVY}) {
    double t = cell_ieu_throughput(g.cell(g.steering, Policy::TMAX, l));
    double e = cell_ieu_throughput(g.cell(g.steering, Policy::EE, l));
    double ratio = t > 0.0 ? e / t : 0.0;
    if (ratio < worst_ratio) {
      worst_ratio = ratio;
      worst_load = load_name(l);
    }
  }
  double pool_t = 0.0, pool_e = 0.0;
  for (LoadLevel l : {LoadLevel::LIGHT, LoadLevel::MEDIUM}) {
    pool_t += cell_ieu_ftp_energy(g.cell(g.steering, Policy::TMAX, l));
    pool_e += cell_ieu_ftp_energy(g.cell(g.steering, Policy::EE, l));
  }
  double saving = pool_t > 0.0 ? 1.0 - pool_e / pool_t : 0.0;
  bool ok = worst_ratio >= kEeThroughputFloor &&
            saving >= kEeEnergySavingFloor;
  return {ok, fmt("throughput ratio %.3f at %s (floor 0.90), light+medium "
                  "FTP energy saving %.1f%% (floor 10%%)",
                  worst_ratio, worst_load.c_str(), saving * 100.0)};
}

Verdict ac9_loss_blocking(Grids& g) {
  g.ensure_steering();
  double worst_loss = 0.0, worst_block = 0.0;
  for (Policy p : {Policy::TMAX, Policy::EE})
    for (LoadLevel l : {LoadLevel::LIGHT, LoadLevel::MEDIUM,
                        LoadLevel::HEAVY}) {
      const CellResult& c = g.cell(g.steering, p, l);
      for (const RunResult& r : c.runs) {
        if (l != LoadLevel::HEAVY)
          worst_loss = std::max(worst_loss, r.qos_loss());
        worst_block = std::max(worst_block, r.blocking());
      }
    }
  bool ok = worst_loss == 0.0 && worst_block < kBlockingCap;
  return {ok, fmt("loss %.3g at light/medium (need 0), worst blocking %.3g "
                  "(cap 0.05)",
                  worst_loss, worst_block)};
}

Verdict ac10_video_pdb(Grids& g) {
  g.ensure_steering();
  double worst = 0.0;
  long flows = 0;
  for (Policy p : {Policy::TMAX, Policy::EE})
    for (LoadLevel l : {LoadLevel::LIGHT, LoadLevel::MEDIUM,
                        LoadLevel::HEAVY})
      for (const RunResult& r : g.cell(g.steering, p, l).runs)
        for (const FlowResult& f : r.flows)
          if (f.cls == FlowClass::VIDEO && !f.blocked) {
            ++flows;
            worst = std::max(worst, f.mean_latency_us);
          }
  bool ok = flows > 0 && worst < kVideoPdbUs;
  return {ok, fmt("worst of %ld video-flow mean latencies %.2f ms (budget "
                  "100 ms)",
                  flows, worst / 1000.0)};
}

// independent allocator oracle for the exhaustive scheduler comparison
struct OracleOut {
  std::vector<double> prbs, drained, credit;
  double used = 0.0;
  int rr_last = -1, gbr_last = -1;
};

OracleOut oracle_schedule(std::vector<SchedBearer> b, int n_prb, double tti_s,
                          double cap_s, int rr_last, int gbr_last) {
  size_t n = b.size();
  OracleOut out;
  out.prbs.assign(n, 0.0);
  out.drained.assign(n, 0.0);
  out.credit.assign(n, 0.0);
  out.rr_last = rr_last;
  out.gbr_last = gbr_last;
  for (size_t i = 0; i < n; ++i) {
    if (b[i].gbr)
      b[i].credit_bits = std::min(b[i].credit_bits + b[i].gbr_bps * tti_s,
                                  b[i].gbr_bps * cap_s);
    else
      b[i].credit_bits = 0.0;
  }
  double left = double(n_prb);
  std::vector<size_t> gbr, be;
  for (size_t i = 0; i < n; ++i) (b[i].gbr ? gbr : be).push_back(i);
  std::sort(gbr.begin(), gbr.end(), [&](size_t x, size_t y) {
    if (b[x].priority != b[y].priority) return b[x].priority < b[y].priority;
    return b[x].id < b[y].id;
  });
  std::sort(be.begin(), be.end(),
            [&](size_t x, size_t y) { return b[x].id < b[y].id; });

  auto banded = [&](bool use_credit) {
    size_t lo = 0;
    while (lo < gbr.size() && left > 1e-12) {
      size_t hi = lo;
      while (hi < gbr.size() && b[gbr[hi]].priority == b[gbr[lo]].priority)
        ++hi;
      size_t idx = lo;
      while (idx < hi && b[gbr[idx]].id <= out.gbr_last) ++idx;
      if (idx == hi) idx = lo;
      size_t dry = 0;
      while (left > 1e-12 && dry < hi - lo) {
        size_t i = gbr[idx];
        ++idx;
        if (idx == hi) idx = lo;
        double avail = use_credit
                           ? std::min(b[i].queue_bits, b[i].credit_bits)
                           : b[i].queue_bits;
        if (avail <= 0.0 || b[i].bits_per_prb <= 0.0) {
          ++dry;
          continue;
        }
        dry = 0;
        double d = std::min(avail, std::min(1.0, left) * b[i].bits_per_prb);
        double p = d / b[i].bits_per_prb;
        b[i].queue_bits -= d;
        if (use_credit)
          b[i].credit_bits = std::max(0.0, b[i].credit_bits - d);
        out.prbs[i] += p;
        out.drained[i] += d;
        out.gbr_last = b[i].id;
        left -= p;
      }
      lo = hi;
    }
  };

  banded(true);
  if (!be.empty()) {
    size_t start = 0;
    while (start < be.size() && b[be[start]].id <= out.rr_last) ++start;
    size_t idx = start % be.size();
    size_t dry = 0;
    while (left > 1e-12 && dry < be.size()) {
      size_t i = be[idx];
      idx = (idx + 1) % be.size();
      if (b[i].queue_bits <= 0.0 || b[i].bits_per_prb <= 0.0) {
        ++dry;
        continue;
      }
      dry = 0;
      double d = std::min(b[i].queue_bits,
                          std::min(1.0, left) * b[i].bits_per_prb);
      double p = d / b[i].bits_per_prb;
      b[i].queue_bits -= d;
      out.prbs[i] += p;
      out.drained[i] += d;
      out.rr_last = b[i].id;
      left -= p;
    }
  }
  banded(false);
  for (size_t i = 0; i < n; ++i) out.credit[i] = b[i].credit_bits;
  out.used = double(n_prb) - left;
  return out;
}

SchedBearer acc_bearer(int id, int type, double queue, double credit,
                       double bpp) {
  SchedBearer b;
  b.id = id;
  if (type == 0) {
    b.gbr = true;
    b.priority = 2;
    b.gbr_bps = 12200.0;
  } else if (type == 1) {
    b.gbr = true;
    b.priority = 4;
    b.gbr_bps = 1.5e6;
  } else {
    b.gbr = false;
    b.priority = 9;
  }
  b.queue_bits = queue;
  b.credit_bits = credit;
  b.bits_per_prb = bpp;
  return b;
}

Verdict ac11_determinism(Grids& g) {
  SimConfig c = steering_cfg();
  c.duration_s = 12.0;
  c.warmup_s = 4.0;
  RunResult r1 = simulate_run(c, Policy::TMAX, LoadLevel::MEDIUM, 1);
  RunResult r2 = simulate_run(c, Policy::TMAX, LoadLevel::MEDIUM, 1);
  bool same =
      run_summary_json(r1, Policy::TMAX, LoadLevel::MEDIUM) ==
          run_summary_json(r2, Policy::TMAX, LoadLevel::MEDIUM) &&
      flows_csv(r1) == flows_csv(r2);
  g.extra.push_back(r1);
  g.extra.push_back(r2);

  // exhaustive allocator comparison over every option combination for one,
  // two, and three bearers
  struct Opt {
    int type;
    double queue, credit;
  };
  std::vector<Opt> opts;
  for (int type = 0; type < 3; ++type)
    for (double q : {0.0, 500.0, 5000.0, 50000.0}) {
      opts.push_back({type, q, 0.0});
      if (type != 2) opts.push_back({type, q, 1000.0});
    }
  long cases = 0, mismatches = 0;
  auto compare = [&](const std::vector<SchedBearer>& bs, int n_prb, int rr,
                     int gl) {
    OracleOut want = oracle_schedule(bs, n_prb, 0.001, 0.1, rr, gl);
    SchedOutcome got = schedule_tti(bs, n_prb, 0.001, 0.1, rr, gl);
    bool ok = std::abs(got.prbs_used - want.used) < kSchedTolPrb &&
              got.rr_last_id == want.rr_last &&
              got.gbr_last_id == want.gbr_last;
    for (size_t i = 0; ok && i < bs.size(); ++i)
      ok = std::abs(got.grants[i].prbs - want.prbs[i]) < kSchedTolPrb &&
           std::abs(got.grants[i].drained_bits - want.drained[i]) < 1e-6 &&
           std::abs(got.grants[i].credit_after - want.credit[i]) < 1e-6;
    ++cases;
    if (!ok) ++mismatches;
  };
  for (int n_prb : {1, 3, 10, 50})
    for (int rr : {-1, 2})
      for (int gl : {-1, 1})
        for (double bpp : {960.0, 250.0}) {
          for (size_t a = 0; a < opts.size(); ++a) {
            compare({acc_bearer(1, opts[a].type, opts[a].queue,
                                opts[a].credit, bpp)},
                    n_prb, rr, gl);
            for (size_t c2 = 0; c2 < opts.size(); ++c2) {
              compare({acc_bearer(1, opts[a].type, opts[a].queue,
                                  opts[a].credit, bpp),
                       acc_bearer(2, opts[c2].type, opts[c2].queue,
                                  opts[c2].credit, bpp)},
                      n_prb, rr, gl);
            }
          }
        }
  for (int n_prb : {1, 3, 10, 50})
    for (size_t a = 0; a < opts.size(); ++a)
      for (size_t c2 = 0; c2 < opts.size(); ++c2)
        for (size_t e = 0; e < opts.size(); ++e)
          compare({acc_bearer(1, opts[a].type, opts[a].queue, opts[a].credit,
                              960.0),
                   acc_bearer(2, opts[c2].type, opts[c2].queue,
                              opts[c2].credit, 960.0),
                   acc_bearer(3, opts[e].type, opts[e].queue, opts[e].credit,
                              960.0)},
                  n_prb, -1, -1);
  bool ok = same && mismatches == 0;
  return {ok, fmt("repeat run byte-identical: %s; allocator vs oracle: %ld "
                  "cases, %ld mismatches",
                  same ? "yes" : "NO", cases, mismatches)};
}

Verdict ac12_pins(Grids& g) {
  g.ensure_s1();
  g.ensure_pair();
  g.ensure_steering();
  long checked = 0, violations = 0;
  auto scan = [&](const RunResult& r) {
    for (const FlowResult& f : r.flows) {
      bool pinned = f.cls == FlowClass::VOIP || f.cls == FlowClass::VIDEO ||
                    f.premium;
      if (!pinned) continue;
      ++checked;
      if (f.ever_on_wlan || f.time_on_wlan_s > 0.0 || f.switches != 0)
        ++violations;
    }
  };
  for (const std::vector<CellResult>* grid : {&g.s1, &g.pair, &g.steering})
    for (const CellResult& c : *grid)
      for (const RunResult& r : c.runs) scan(r);
  for (const RunResult& r : g.extra) scan(r);
  bool ok = checked > 0 && violations == 0;
  return {ok, fmt("%ld pinned flows scanned across every acceptance run, %ld "
                  "on the unlicensed path",
                  checked, violations)};
}

}  // namespace

int main() {
  Grids grids;
  int failures = 0;
  auto report = [&](int k, Verdict v, double secs) {
    bool within = kBudget[k] == 0.0 || secs <= kBudget[k];
    bool ok = v.ok && within;
    if (!ok) ++failures;
    std::string note = v.detail;
    if (!within) note += fmt(" [over %.0f s budget]", kBudget[k]);
    printf("AC%d %s — %s [%.1f s]\n", k, ok ? "PASS" : "FAIL", note.c_str(),
           secs);
    fflush(stdout);
  };
  auto timed = [&](int k, auto&& fn) {
    double t0 = now_s();
    Verdict v = fn();
    report(k, v, now_s() - t0);
  };

  timed(1, [&] { return ac1_energy(); });
  timed(2, [&] { return ac2_tunnel(); });
  timed(3, [&] { return ac3_pathloss(); });
  timed(4, [&] { return ac4_invariants(); });
  timed(5, [&] { return ac5_qos(grids); });
  timed(6, [&] { return ac6_association(grids); });
  timed(7, [&] { return ac7_tmax_gain(grids); });
  timed(8, [&] { return ac8_ee_tradeoff(grids); });
  timed(9, [&] { return ac9_loss_blocking(grids); });
  timed(10, [&] { return ac10_video_pdb(grids); });
  timed(11, [&] { return ac11_determinism(grids); });
  timed(12, [&] { return ac12_pins(grids); });

  if (failures) {
    printf("%d of 12 criteria failed\n", failures);
    return 1;
  }
  printf("all 12 criteria passed\n");
  return 0;
}
