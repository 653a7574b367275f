#include "engine.hpp"

#include <algorithm>
#include <cmath>
#include <deque>
#include <queue>
#include <vector>

#include "channel.hpp"
#include "energy.hpp"
#include "errors.hpp"
#include "ifom.hpp"
#include "lte_mac.hpp"
#include "rng.hpp"
#include "steering.hpp"
#include "traffic.hpp"
#include "wlan_mac.hpp"

namespace ifomsim {

namespace {

// Dispatch order inside one instant: starts and arrivals land in queues,
// binding switches apply, then the MACs serve, then control-plane reads.
enum EvKind : int {
  EV_FLOW_START = 0,
  EV_ARRIVAL = 1,
  EV_SWITCH_DONE = 2,
  EV_TTI = 3,
  EV_WLAN = 4,
  EV_BEACON = 5,
  EV_EPOCH = 6,
  EV_RUN_END = 7,
};

struct Ev {
  int64_t t;
  int kind;
  int a;
  uint64_t seq;
};

struct EvCmp {
  bool operator()(const Ev& x, const Ev& y) const {
    if (x.t != y.t) return x.t > y.t;
    if (x.kind != y.kind) return x.kind > y.kind;
    if (x.a != y.a) return x.a > y.a;
    return x.seq > y.seq;
  }
};

struct Pkt {
  int64_t created_us;
  int32_t payload_bytes;
  double onair_bits;
};

struct PktQueue {
  std::deque<Pkt> q;
  double head_served = 0.0;
  double rem = 0.0;

  void push(const Pkt& p) {
    q.push_back(p);
    rem += p.onair_bits;
  }
  bool backlogged() const { return rem > 1e-9; }

  template <typename Fn>
  void drain(double bits, Fn&& deliver) {
    while (bits > 1e-9 && !q.empty()) {
      double need = q.front().onair_bits - head_served;
      if (bits + 1e-9 >= need) {
        deliver(q.front());
        bits -= need;
        rem -= need;
        head_served = 0.0;
        q.pop_front();
      } else {
        head_served += bits;
        rem -= bits;
        bits = 0.0;
      }
    }
    if (rem < 0.0) rem = 0.0;
  }
};

struct FlowState {
  int id = 0;
  int node = 0;
  int sector = 0;
  ClassSpec spec;
  TrafficSelector sel;
  bool ieu = false;
  bool premium = false;
  bool central = false;
  bool wlan_eligible = false;  // capable, in range, not premium, best effort
  bool blocked = false;
  bool started = false;
  Iface iface = IFACE_LTE;
  bool pending_switch = false;
  Iface pending_target = IFACE_LTE;
  int64_t start_us = 0;
  int64_t next_k = 0;
  double credit_bits = 0.0;
  PktQueue lteq;
  PktQueue wlanq;
  // trailing-epoch delivery, payload bits
  uint64_t epoch_payload_bits = 0;
  int last_switch_epoch = -1000000;
  int fail_streak = 0;
  int backoff_until_epoch = 0;
  // measurement window accumulators
  uint64_t generated_pkts = 0, delivered_pkts = 0, ontime_pkts = 0;
  uint64_t late_pkts = 0;
  uint64_t generated_bits = 0, delivered_bits = 0, ontime_bits = 0;
  LatencyAccum lat;
  int64_t wlan_since_us = -1;
  double time_on_wlan_us = 0.0;
  bool ever_on_wlan = false;
  int switches = 0;
  double active_j = 0.0, idle_share_j = 0.0, node_j = 0.0;
};

struct SectorState {
  int id = 0;
  bool central = false;
  std::vector<int> flows;
  double admitted_gbr_bps = 0.0;
  int rr_last = -1;
  int gbr_rr_last = -1;
  double u_prev = 0.0;
  // epoch accumulators
  double epoch_prb = 0.0;
  uint64_t epoch_ttis = 0;
  double epoch_be_backlog = 0.0;
  // window accumulators (central only)
  double win_prb = 0.0;
  uint64_t win_ttis = 0;
};

struct ApState {
  int id = 0;
  UtilWindow util;
  double published_util = 0.0;
  int n_assoc = 0;
  int assoc_peak = 0;
  std::vector<int> flows;  // candidate flows homed on this AP
  double epoch_backlog = 0.0;
  uint64_t epoch_ticks = 0;
  double win_util_sum = 0.0;
  uint64_t win_ticks = 0;
  double win_backlog = 0.0;
  double win_served_payload_bits = 0.0;
  double energy_j = 0.0;

  ApState(int slots, double slot_s, double eff, double cap)
      : util(slots, slot_s, eff, cap) {}
};

class Sim {
 public:
  Sim(const SimConfig& cfg, Policy policy, LoadLevel load, uint64_t seed,
      const EngineHooks* hooks)
      : cfg_(cfg), policy_(policy), load_(load), seed_(seed), hooks_(hooks) {}

  RunResult run();

 private:
  const SimConfig& cfg_;
  Policy policy_;
  LoadLevel load_;
  uint64_t seed_;
  const EngineHooks* hooks_;

  Topology topo_;
  std::vector<FlowState> flows_;
  std::vector<SectorState> sectors_;
  std::vector<ApState> aps_;
  std::vector<BindingCache> caches_;
  std::vector<char> node_assoc_;
  std::vector<int> wlan_bid_;  // binding id of the WLAN interface per node

  // radio bookkeeping
  std::vector<std::vector<double>> rx_mw_;  // node x sector
  std::vector<double> serving_mw_;
  std::vector<double> achievable_bps_;  // interference-free licensed rate
  std::vector<double> wlan_phy_bps_;
  double lte_noise_mw_ = 0.0;
  double lte_cap_bps_ = 0.0;

  // per-TTI link cache
  std::vector<double> bpp_cache_;
  std::vector<int64_t> bpp_tag_;
  int64_t tti_index_ = 0;

  std::priority_queue<Ev, std::vector<Ev>, EvCmp> evq_;
  uint64_t evseq_ = 0;
  int64_t now_ = 0;
  int64_t dur_us_ = 0, warm_us_ = 0, wend_us_ = 0;
  double window_s_ = 0.0;
  int64_t tti_us_ = 0, wtick_us_ = 0;
  int total_ieus_ = 0;

  RunResult res_;

  void push_ev(int64_t t, int kind, int a) {
    evq_.push({t, kind, a, evseq_++});
  }
  bool in_window(int64_t t) const { return t >= warm_us_ && t < wend_us_; }

  void build();
  void start_flow(int fid);
  void arrival(int fid);
  void tti_tick();
  void wlan_tick();
  void beacon();
  void epoch(int e);
  void switch_done(int fid);
  void finish();

  double bpp_for_node(int node);
  void deliver(FlowState& f, const Pkt& p, int64_t t_deliver, Iface via);
  bool associate(int node);
  void maybe_dissociate(int node);
  void apply_iface(FlowState& f, Iface target);
  void note_binding(int64_t t, const FlowState& f, const char* op,
                    const char* from, const char* to, const char* reason);
};

void Sim::note_binding(int64_t t, const FlowState& f, const char* op,
                       const char* from, const char* to, const char* reason) {
  if (hooks_ && hooks_->binding) hooks_->binding(t, f.id, op, from, to, reason);
}

void Sim::build() {
  topo_ = build_topology(cfg_, load_, seed_);
  size_t n_nodes = topo_.nodes.size();
  size_t n_secs = topo_.sectors.size();

  caches_.resize(n_nodes);
  node_assoc_.assign(n_nodes, 0);
  wlan_bid_.assign(n_nodes, -1);

  uint64_t shadow_seed = hash_combine(hash64(seed_), fnv1a("shadow"));
  lte_noise_mw_ = dbm_to_mw(noise_floor_dbm(
      cfg_.lte_bandwidth_hz, cfg_.noise_figure_ue_db, cfg_.extra_noise_margin_db));
  lte_cap_bps_ = cfg_.lte_cap_bps_per_hz * cfg_.lte_bandwidth_hz;
  double wlan_noise_dbm = noise_floor_dbm(cfg_.wlan_channel_bandwidth_hz,
                                          cfg_.noise_figure_ue_db,
                                          cfg_.extra_noise_margin_db);

  rx_mw_.assign(n_nodes, std::vector<double>(n_secs, 0.0));
  serving_mw_.assign(n_nodes, 0.0);
  achievable_bps_.assign(n_nodes, 0.0);
  wlan_phy_bps_.assign(n_nodes, 0.0);
  for (size_t n = 0; n < n_nodes; ++n) {
    const NodeGeom& node = topo_.nodes[n];
    // Shadowing toward different sites shares a node-local component, so the
    // spread between the serving and interfering paths is narrower than two
    // independent draws. Total variance stays at shadow_sigma_db squared.
    double corr = cfg_.shadow_site_correlation;
    double wc = std::sqrt(corr), ws = std::sqrt(1.0 - corr);
    double common = shadowing_db(shadow_seed, fnv1a("site_common"), uint64_t(n),
                                 cfg_.shadow_sigma_db);
    double shade_site[7];
    for (int s = 0; s < 7; ++s)
      shade_site[s] =
          wc * common + ws * shadowing_db(shadow_seed,
                                          hash_combine(fnv1a("site"), s),
                                          uint64_t(n), cfg_.shadow_sigma_db);
    for (size_t j = 0; j < n_secs; ++j) {
      const SectorGeom& sec = topo_.sectors[j];
      double d = dist(node.pos, sec.site_pos);
      if (d < 1.0) d = 1.0;
      double th = off_boresight_deg(sec, node.pos);
      double rx_dbm = cfg_.enb_tx_power_dbm + cfg_.enb_antenna_gain_dbi -
                      sector_attenuation_db(th) - path_loss_macro_db(d) -
                      shade_site[sec.site];
      rx_mw_[n][j] = dbm_to_mw(rx_dbm);
    }
    serving_mw_[n] = rx_mw_[n][node.serving_sector];
    double snr_db = mw_to_dbm(serving_mw_[n]) - mw_to_dbm(lte_noise_mw_);
    achievable_bps_[n] = rate_from_sinr_bps(
        snr_db, cfg_.lte_bandwidth_hz, cfg_.lte_spectral_eff, lte_cap_bps_);
    if (node.ap_id >= 0) {
      double shade = shadowing_db(shadow_seed,
                                  hash_combine(fnv1a("ap"), node.ap_id),
                                  uint64_t(n), cfg_.shadow_sigma_db);
      double rx = cfg_.wap_tx_power_dbm - path_loss_wlan_db(node.dist_ap_m) -
                  shade;
      wlan_phy_bps_[n] =
          rate_from_sinr_bps(rx - wlan_noise_dbm, cfg_.wlan_map_bandwidth_hz,
                             cfg_.wlan_spectral_eff, cfg_.wlan_phy_cap_bps);
    }
  }

  sectors_.resize(n_secs);
  for (size_t j = 0; j < n_secs; ++j) {
    sectors_[j].id = int(j);
    sectors_[j].central = topo_.sectors[j].central;
  }
  int util_slots =
      std::max(1, int(std::llround(cfg_.wlan_util_window_ms * 1000.0 /
                                   double(cfg_.wlan_serve_tick_us))));
  for (size_t a = 0; a < topo_.ap_pos.size(); ++a) {
    aps_.emplace_back(util_slots, double(cfg_.wlan_serve_tick_us) * 1e-6,
                      cfg_.wlan_mac_efficiency, cfg_.wlan_phy_cap_bps);
    aps_.back().id = int(a);
  }

  // flows, in node order
  Rng stagger_probe(0);
  auto stagger_of = [&](int fid) {
    Rng r = derive_stream(seed_, "stagger", uint64_t(fid));
    return int64_t(r.uniform() * cfg_.flow_stagger_ms * 1000.0);
  };
  auto add_flow = [&](const NodeGeom& node, FlowClass cls, double rate_bps) {
    FlowState f;
    f.id = int(flows_.size());
    f.node = node.id;
    f.sector = node.serving_sector;
    f.spec = make_class_spec(cls, cfg_);
    if (cls == FlowClass::FTP && rate_bps > 0.0) f.spec.rate_bps = rate_bps;
    f.sel = selector_for_flow(node.id, f.id);
    f.ieu = node.ieu;
    f.premium = node.premium;
    f.central = topo_.sectors[node.serving_sector].central;
    f.wlan_eligible = cls == FlowClass::FTP && node.wlan_capable &&
                      node.ap_id >= 0 && !node.premium;
    f.start_us = stagger_of(f.id);
    flows_.push_back(f);
    sectors_[f.sector].flows.push_back(f.id);
    if (node.ap_id >= 0) aps_[node.ap_id].flows.push_back(f.id);
  };

  for (const NodeGeom& node : topo_.nodes) {
    caches_[node.id].register_interface(IFACE_LTE, 1000u + node.id);
    if (!node.ieu) {
      add_flow(node, FlowClass::FTP, cfg_.bg_ftp_rate_bps);
      continue;
    }
    if (cfg_.scenario == 1) {
      add_flow(node, FlowClass::VOIP, 0.0);
      add_flow(node, FlowClass::FTP, cfg_.ftp_rate_bps);
    } else {
      for (int v = 0; v < cfg_.s2_video_flows; ++v)
        add_flow(node, FlowClass::VIDEO, 0.0);
      add_flow(node, FlowClass::FTP, cfg_.ftp_rate_bps);
    }
    ++total_ieus_;
  }

  bpp_cache_.assign(n_nodes, 0.0);
  bpp_tag_.assign(n_nodes, -1);

  dur_us_ = int64_t(std::llround(cfg_.duration_s * 1e6));
  warm_us_ = int64_t(std::llround(cfg_.warmup_s * 1e6));
  wend_us_ = dur_us_ - int64_t(std::llround(cfg_.tail_ms * 1000.0));
  if (wend_us_ <= warm_us_)
    throw ConfigError("measurement window is empty: check duration/warmup/tail");
  window_s_ = double(wend_us_ - warm_us_) * 1e-6;
  tti_us_ = cfg_.lte_tti_us;
  wtick_us_ = cfg_.wlan_serve_tick_us;

  for (const FlowState& f : flows_) push_ev(f.start_us, EV_FLOW_START, f.id);
  push_ev(0, EV_TTI, 0);
  push_ev(0, EV_WLAN, 0);
  push_ev(int64_t(std::llround(cfg_.wlan_beacon_period_ms * 1000.0)),
          EV_BEACON, 0);
  push_ev(int64_t(std::llround(cfg_.epoch_ms * 1000.0)), EV_EPOCH, 1);
  push_ev(dur_us_, EV_RUN_END, 0);
}

bool Sim::associate(int node) {
  const NodeGeom& g = topo_.nodes[node];
  if (g.ap_id < 0) return false;
  if (node_assoc_[node]) return true;
  ApState& ap = aps_[g.ap_id];
  res_.wlan_assoc_attempts += 1;
  if (ap.published_util >= cfg_.wlan_assoc_reject_util) {
    res_.wlan_assoc_rejected += 1;
    return false;
  }
  node_assoc_[node] = 1;
  ap.n_assoc += 1;
  ap.assoc_peak = std::max(ap.assoc_peak, ap.n_assoc);
  wlan_bid_[node] =
      caches_[node].register_interface(IFACE_WLAN, 2000u + uint64_t(node));
  return true;
}

void Sim::maybe_dissociate(int node) {
  if (!node_assoc_[node]) return;
  const NodeGeom& g = topo_.nodes[node];
  for (int fid : aps_[g.ap_id].flows) {
    const FlowState& f = flows_[fid];
    if (f.node != node) continue;
    if (f.iface == IFACE_WLAN) return;
    if (f.pending_switch && f.pending_target == IFACE_WLAN) return;
    if (f.wlanq.backlogged()) return;
  }
  node_assoc_[node] = 0;
  aps_[g.ap_id].n_assoc -= 1;
  caches_[node].deregister_interface(IFACE_WLAN);
  wlan_bid_[node] = -1;
}

void Sim::apply_iface(FlowState& f, Iface target) {
  if (f.iface == target) return;
  if (f.iface == IFACE_WLAN && f.wlan_since_us >= 0) {
    f.time_on_wlan_us += double(now_ - f.wlan_since_us);
    f.wlan_since_us = -1;
  }
  f.iface = target;
  if (target == IFACE_WLAN) {
    f.wlan_since_us = now_;
    f.ever_on_wlan = true;
    caches_[f.node].bind_flow(f.id, f.sel, wlan_bid_[f.node], 1);
  } else {
    caches_[f.node].unbind_flow(f.id);
  }
}

void Sim::start_flow(int fid) {
  FlowState& f = flows_[fid];
  f.started = true;
  if (f.spec.gbr) {
    res_.lte_gbr_attempts += 1;
    SectorState& sec = sectors_[f.sector];
    if (!admit_gbr(sec.admitted_gbr_bps, f.spec.rate_bps,
                   achievable_bps_[f.node], cfg_.gbr_admission_margin)) {
      res_.lte_gbr_blocked += 1;
      f.blocked = true;
      note_binding(now_, f, "admit", "-", "-", "BLOCKED");
      return;
    }
    sec.admitted_gbr_bps += f.spec.rate_bps;
    f.credit_bits = double(f.spec.packet_bytes) * 8.0;
  }
  // Static dual-mode placement: best-effort flows of in-range dual nodes go
  // out through the hotspot; every policy then corrects from its epochs.
  if (policy_ != Policy::NONE_ALL_LTE && f.wlan_eligible) {
    if (associate(f.node)) {
      apply_iface(f, IFACE_WLAN);
      f.ever_on_wlan = true;
      note_binding(now_, f, "place", "lte", "wlan", "WLAN_OK");
    } else {
      note_binding(now_, f, "place", "lte", "lte", "REJECTED");
    }
  }
  push_ev(f.start_us, EV_ARRIVAL, fid);
}

void Sim::arrival(int fid) {
  FlowState& f = flows_[fid];
  Iface via = caches_[f.node].route(f.sel);
  int pk_bits = f.spec.packet_bytes * 8;
  Pkt p;
  p.created_us = now_;
  p.payload_bytes = f.spec.packet_bytes;
  p.onair_bits =
      double(on_air_bits(f.spec.packet_bytes, via == IFACE_WLAN,
                         cfg_.tunnel_header_bytes));
  if (in_window(now_)) {
    f.generated_pkts += 1;
    f.generated_bits += uint64_t(pk_bits);
  }
  (via == IFACE_WLAN ? f.wlanq : f.lteq).push(p);
  int64_t t_next = cbr_arrival_us(f.start_us, f.next_k + 1, pk_bits,
                                  f.spec.rate_bps);
  f.next_k += 1;
  if (t_next < dur_us_) push_ev(t_next, EV_ARRIVAL, fid);
}

void Sim::deliver(FlowState& f, const Pkt& p, int64_t t_deliver, Iface via) {
  int64_t latency = t_deliver - p.created_us;
  int64_t pk_bits = int64_t(p.payload_bytes) * 8;
  f.epoch_payload_bits += uint64_t(pk_bits);
  // Delivery metrics key on the delivery instant, so a queue in overload
  // still reports the rate it actually drains at instead of whatever part
  // of its backlog happens to clear before the run ends.
  if (t_deliver >= warm_us_ && t_deliver < wend_us_) {
    f.delivered_pkts += 1;
    f.delivered_bits += uint64_t(pk_bits);
    bool on_time = f.spec.pdb_us == 0 || latency <= f.spec.pdb_us;
    if (on_time) {
      f.ontime_pkts += 1;
      f.ontime_bits += uint64_t(pk_bits);
    } else {
      f.late_pkts += 1;
    }
    f.lat.add(latency);
    if (hooks_ && hooks_->packet)
      hooks_->packet(p.created_us, f.id, int(via), t_deliver, latency, on_time);
  }
}

double Sim::bpp_for_node(int node) {
  if (bpp_tag_[node] == tti_index_) return bpp_cache_[node];
  const std::vector<double>& rx = rx_mw_[node];
  int serving = topo_.nodes[node].serving_sector;
  int serving_site = topo_.sectors[size_t(serving)].site;
  // Co-sited sectors are scheduled from the same mast and stay orthogonal;
  // only other sites interfere, weighted by their last-TTI duty cycle.
  double interference = 0.0;
  for (size_t j = 0; j < sectors_.size(); ++j) {
    if (topo_.sectors[j].site == serving_site) continue;
    if (sectors_[j].u_prev > 0.0) interference += rx[j] * sectors_[j].u_prev;
  }
  double sinr = serving_mw_[node] / (lte_noise_mw_ + interference);
  double rate = cfg_.lte_spectral_eff * cfg_.lte_bandwidth_hz *
                std::log2(1.0 + sinr);
  if (rate > lte_cap_bps_) rate = lte_cap_bps_;
  double bpp = rate * double(tti_us_) * 1e-6 / double(cfg_.lte_n_prb);
  bpp_cache_[node] = bpp;
  bpp_tag_[node] = tti_index_;
  return bpp;
}

void Sim::tti_tick() {
  ++tti_index_;
  bool inw = in_window(now_);
  double tti_s = double(tti_us_) * 1e-6;
  int64_t t_deliver =
      now_ + tti_us_ + int64_t(std::llround(cfg_.lte_core_delay_ms * 1000.0));
  std::vector<double> new_u(sectors_.size(), 0.0);
  std::vector<SchedBearer> bearers;
  std::vector<int> bearer_fids;

  for (SectorState& sec : sectors_) {
    bearers.clear();
    bearer_fids.clear();
    int be_backlogged = 0;
    for (int fid : sec.flows) {
      FlowState& f = flows_[fid];
      if (f.blocked || !f.started) continue;
      bool on_lte = f.iface == IFACE_LTE;
      bool residual = f.lteq.backlogged();
      if (f.spec.gbr) {
        if (!on_lte && !residual) continue;  // GBR never leaves in practice
      } else {
        if (!residual) continue;  // BE bearers only matter when backlogged
        if (on_lte) ++be_backlogged;
      }
      SchedBearer b;
      b.id = f.id;
      b.gbr = f.spec.gbr;
      b.priority = f.spec.priority;
      b.gbr_bps = f.spec.gbr ? f.spec.rate_bps : 0.0;
      b.credit_bits = f.credit_bits;
      b.queue_bits = f.lteq.rem;
      b.bits_per_prb = bpp_for_node(f.node);
      bearers.push_back(b);
      bearer_fids.push_back(fid);
    }
    sec.epoch_be_backlog += double(be_backlogged);
    SchedOutcome out = schedule_tti(bearers, cfg_.lte_n_prb, tti_s,
                                    cfg_.scheduler_credit_cap_ms * 1e-3,
                                    sec.rr_last, sec.gbr_rr_last);
    sec.rr_last = out.rr_last_id;
    sec.gbr_rr_last = out.gbr_last_id;
    double used_frac = double(out.prbs_used) / double(cfg_.lte_n_prb);
    new_u[sec.id] = used_frac;
    sec.epoch_prb += double(out.prbs_used);
    sec.epoch_ttis += 1;

    for (size_t i = 0; i < out.grants.size(); ++i) {
      const SchedGrant& g = out.grants[i];
      FlowState& f = flows_[bearer_fids[i]];
      f.credit_bits = g.credit_after;
      if (g.drained_bits > 0.0)
        f.lteq.drain(g.drained_bits, [&](const Pkt& p) {
          deliver(f, p, t_deliver, IFACE_LTE);
        });
    }

    if (sec.central) {
      double t_tx = used_frac * tti_s;
      if (inw) {
        sec.win_prb += double(out.prbs_used);
        sec.win_ttis += 1;
        double active_w = cfg_.enb_idle_w + cfg_.enb_alpha * cfg_.enb_tx_w;
        res_.enb_energy_j += cfg_.enb_idle_w * (tti_s - t_tx) + active_w * t_tx;
        res_.enb_idle_j += cfg_.enb_idle_w * (tti_s - t_tx);
        int lte_routed = 0;
        for (int fid : sec.flows) {
          const FlowState& f = flows_[fid];
          if (!f.blocked && f.started && f.iface == IFACE_LTE) ++lte_routed;
        }
        double idle_each =
            lte_routed > 0
                ? cfg_.enb_idle_w * (tti_s - t_tx) / double(lte_routed)
                : 0.0;
        if (lte_routed > 0)
          for (int fid : sec.flows) {
            FlowState& f = flows_[fid];
            if (!f.blocked && f.started && f.iface == IFACE_LTE)
              f.idle_share_j += idle_each;
          }
        for (size_t i = 0; i < out.grants.size(); ++i) {
          const SchedGrant& g = out.grants[i];
          if (g.prbs <= 0.0) continue;
          FlowState& f = flows_[bearer_fids[i]];
          double share_s = g.prbs / double(cfg_.lte_n_prb) * tti_s;
          f.active_j += active_w * share_s;
          f.node_j += cfg_.lte_ue_rx_w * share_s;
        }
      }
    }
  }
  for (SectorState& sec : sectors_) sec.u_prev = new_u[sec.id];
  if (now_ + tti_us_ + tti_us_ <= dur_us_) push_ev(now_ + tti_us_, EV_TTI, 0);
}

void Sim::wlan_tick() {
  bool inw = in_window(now_);
  double tick_s = double(wtick_us_) * 1e-6;
  int64_t t_deliver =
      now_ + wtick_us_ +
      int64_t(std::llround(cfg_.wlan_path_delay_ms * 1000.0));
  std::vector<WlanDemand> demands;
  std::vector<int> demand_fids;

  for (ApState& ap : aps_) {
    demands.clear();
    demand_fids.clear();
    for (int fid : ap.flows) {
      FlowState& f = flows_[fid];
      if (!f.started || !f.wlanq.backlogged()) continue;
      demands.push_back({f.id, f.wlanq.rem, wlan_phy_bps_[f.node]});
      demand_fids.push_back(fid);
    }
    int n_b = int(demands.size());
    double served_onair = 0.0;
    double busy_s = 0.0;
    double payload_bits = 0.0;
    if (n_b > 0) {
      // Contention cost is set by how many stations hold the channel's
      // attention, not by how many happen to have traffic this tick.
      double f_c = contention_factor(cfg_.wlan_contention_curve,
                                     double(std::max(ap.n_assoc, n_b)));
      std::vector<WlanGrant> grants = wlan_serve_tick(
          demands, tick_s, cfg_.wlan_mac_efficiency, f_c);
      for (size_t i = 0; i < grants.size(); ++i) {
        const WlanGrant& g = grants[i];
        if (g.served_bits <= 0.0) continue;
        FlowState& f = flows_[demand_fids[i]];
        uint64_t ep_before = f.epoch_payload_bits;
        f.wlanq.drain(g.served_bits, [&](const Pkt& p) {
          deliver(f, p, t_deliver, IFACE_WLAN);
        });
        payload_bits += double(f.epoch_payload_bits - ep_before);
        served_onair += g.served_bits;
        busy_s += g.airtime_s;
        if (inw) {
          double vi = cfg_.wlan_voltage_v * 1e-3;
          f.active_j += vi * cfg_.wlan_tx_ma * g.airtime_s;
          f.node_j += vi * cfg_.wlan_rx_ma * g.airtime_s;
        }
      }
    }
    ap.util.push(served_onair);
    ap.epoch_backlog += double(n_b);
    ap.epoch_ticks += 1;
    if (inw) {
      double vi = cfg_.wlan_voltage_v * 1e-3;
      double idle_j = vi * cfg_.wlan_idle_ma * (tick_s - busy_s);
      ap.energy_j += vi * cfg_.wlan_tx_ma * busy_s + idle_j;
      int wlan_routed = 0;
      for (int fid : ap.flows)
        if (flows_[fid].started && flows_[fid].iface == IFACE_WLAN)
          ++wlan_routed;
      if (wlan_routed > 0) {
        double each = idle_j / double(wlan_routed);
        for (int fid : ap.flows) {
          FlowState& f = flows_[fid];
          if (f.started && f.iface == IFACE_WLAN) f.idle_share_j += each;
        }
      }
      ap.win_ticks += 1;
      ap.win_util_sum += ap.util.utilization();
      ap.win_backlog += double(n_b);
      ap.win_served_payload_bits += payload_bits;
    }
  }
  if (now_ + wtick_us_ + wtick_us_ <= dur_us_)
    push_ev(now_ + wtick_us_, EV_WLAN, 0);
}

void Sim::beacon() {
  for (ApState& ap : aps_) ap.published_util = ap.util.utilization();
  int64_t period = int64_t(std::llround(cfg_.wlan_beacon_period_ms * 1000.0));
  if (now_ + period <= dur_us_) push_ev(now_ + period, EV_BEACON, 0);
}

void Sim::epoch(int e) {
  double epoch_s = cfg_.epoch_ms * 1e-3;
  bool steering = policy_ == Policy::TMAX || policy_ == Policy::EE;
  if (steering) {
    // regime and per-sector spare-capacity summaries
    double cen_prb = 0.0, cen_ttis = 0.0;
    for (const SectorState& sec : sectors_) {
      if (!sec.central) continue;
      cen_prb += sec.epoch_prb;
      cen_ttis += double(sec.epoch_ttis);
    }
    double mean_util =
        cen_ttis > 0.0 ? cen_prb / (cen_ttis * double(cfg_.lte_n_prb)) : 0.0;
    bool light = total_ieus_ <= cfg_.light_load_max_ieus ||
                 mean_util < cfg_.light_load_prb_util;

    struct Cand {
      int fid;
      Iface target;
      SteerReason reason;
      double ratio;
    };
    std::vector<std::vector<Cand>> to_lte(aps_.size()), to_wlan(aps_.size());

    // The throughput policy judges hotspot health by the mean served
    // fraction across the flows the hotspot currently carries; an idle
    // hotspot counts as healthy.
    std::vector<double> ap_ratio(aps_.size(), 1.0);
    std::vector<int> ap_cnt(aps_.size(), 0);
    for (const FlowState& f : flows_) {
      if (!f.started || f.blocked) continue;
      if (f.spec.cls != FlowClass::FTP || f.iface != IFACE_WLAN) continue;
      int a = topo_.nodes[f.node].ap_id;
      if (a < 0 || f.spec.rate_bps <= 0.0) continue;
      double r = double(f.epoch_payload_bits) / epoch_s / f.spec.rate_bps;
      if (ap_cnt[a] == 0) ap_ratio[a] = 0.0;
      ap_ratio[a] += r;
      ap_cnt[a] += 1;
    }
    for (size_t a = 0; a < aps_.size(); ++a)
      if (ap_cnt[a] > 0) ap_ratio[a] /= double(ap_cnt[a]);

    for (FlowState& f : flows_) {
      if (!f.started || f.blocked || f.pending_switch) continue;
      if (f.spec.cls != FlowClass::FTP) continue;
      if (!f.ieu && !topo_.nodes[f.node].wlan_capable) continue;
      const NodeGeom& node = topo_.nodes[f.node];
      const SectorState& sec = sectors_[f.sector];

      double own_ratio =
          f.spec.rate_bps > 0.0
              ? double(f.epoch_payload_bits) / epoch_s / f.spec.rate_bps
              : 0.0;
      SteerInput in;
      in.cls = f.spec.cls;
      in.premium = f.premium;
      in.wlan_capable = node.wlan_capable;
      in.ap_in_range = node.ap_id >= 0;
      in.current = f.iface;
      // The energy policy judges the flow's own service instead.
      in.ratio = policy_ == Policy::TMAX && node.ap_id >= 0
                     ? ap_ratio[node.ap_id]
                     : own_ratio;
      in.light_regime = light;
      if (node.ap_id >= 0) {
        const ApState& ap = aps_[node.ap_id];
        in.wlan_util = ap.published_util;
        double nb = ap.epoch_ticks
                        ? ap.epoch_backlog / double(ap.epoch_ticks)
                        : 0.0;
        double f_next = contention_factor(cfg_.wlan_contention_curve,
                                          double(ap.n_assoc + 1));
        in.wlan_offered_bps = cfg_.wlan_mac_efficiency * f_next *
                              wlan_phy_bps_[f.node] / (nb + 1.0);
      }
      double sec_util = sec.epoch_ttis
                            ? sec.epoch_prb / (double(sec.epoch_ttis) *
                                               double(cfg_.lte_n_prb))
                            : 0.0;
      double be_mean = sec.epoch_ttis
                           ? sec.epoch_be_backlog / double(sec.epoch_ttis)
                           : 0.0;
      in.lte_offered_bps =
          achievable_bps_[f.node] * std::max(0.0, 1.0 - sec_util) /
          (be_mean + 1.0);

      SteerDecision d = policy_ == Policy::TMAX
                            ? decide_throughput_max(in, cfg_)
                            : decide_energy_efficient(in, cfg_);
      if (f.iface == IFACE_WLAN && d.target == IFACE_WLAN) f.fail_streak = 0;
      if (d.target == f.iface || node.ap_id < 0) continue;
      Cand c{f.id, d.target, d.reason, own_ratio};
      (d.target == IFACE_LTE ? to_lte : to_wlan)[node.ap_id].push_back(c);
    }

    for (size_t a = 0; a < aps_.size(); ++a) {
      ApState& ap = aps_[a];
      int budget = std::max(
          1, (ap.n_assoc + cfg_.switch_budget_divisor - 1) /
                 cfg_.switch_budget_divisor);
      // worst-served flows leave first
      std::sort(to_lte[a].begin(), to_lte[a].end(),
                [](const Cand& x, const Cand& y) {
                  if (x.ratio != y.ratio) return x.ratio < y.ratio;
                  return x.fid < y.fid;
                });
      int out_left = budget;
      for (const Cand& c : to_lte[a]) {
        if (out_left == 0) break;
        FlowState& f = flows_[c.fid];
        if (e - f.last_switch_epoch < cfg_.hysteresis_epochs) continue;
        if (c.reason == SteerReason::THPT_FAIL ||
            c.reason == SteerReason::WLAN_OVERLOAD) {
          f.fail_streak += 1;
          int hold = cfg_.backoff_start_epochs
                     << std::min(f.fail_streak - 1, 8);
          f.backoff_until_epoch =
              e + std::min(hold, cfg_.backoff_max_epochs);
        }
        f.pending_switch = true;
        f.pending_target = IFACE_LTE;
        f.last_switch_epoch = e;
        push_ev(now_ + int64_t(std::llround(cfg_.binding_update_delay_ms *
                                            1000.0)),
                EV_SWITCH_DONE, f.id);
        note_binding(now_, f, "initiate", "wlan", "lte", to_string(c.reason));
        --out_left;
      }
      std::sort(to_wlan[a].begin(), to_wlan[a].end(),
                [](const Cand& x, const Cand& y) { return x.fid < y.fid; });
      int in_left = budget;
      for (const Cand& c : to_wlan[a]) {
        if (in_left == 0) break;
        FlowState& f = flows_[c.fid];
        if (e - f.last_switch_epoch < cfg_.hysteresis_epochs) continue;
        if (e < f.backoff_until_epoch) continue;
        if (!associate(f.node)) continue;
        f.pending_switch = true;
        f.pending_target = IFACE_WLAN;
        f.last_switch_epoch = e;
        push_ev(now_ + int64_t(std::llround(cfg_.binding_update_delay_ms *
                                            1000.0)),
                EV_SWITCH_DONE, f.id);
        note_binding(now_, f, "initiate", "lte", "wlan", to_string(c.reason));
        --in_left;
      }
    }
  }

  for (FlowState& f : flows_) f.epoch_payload_bits = 0;
  for (SectorState& sec : sectors_) {
    sec.epoch_prb = 0.0;
    sec.epoch_ttis = 0;
    sec.epoch_be_backlog = 0.0;
  }
  for (ApState& ap : aps_) {
    ap.epoch_backlog = 0.0;
    ap.epoch_ticks = 0;
  }
  for (const NodeGeom& node : topo_.nodes)
    if (node.ap_id >= 0) maybe_dissociate(node.id);

  int64_t period = int64_t(std::llround(cfg_.epoch_ms * 1000.0));
  int64_t t_next = int64_t(e + 1) * period;
  if (t_next <= dur_us_ - 1) push_ev(t_next, EV_EPOCH, e + 1);
}

void Sim::switch_done(int fid) {
  FlowState& f = flows_[fid];
  if (!f.pending_switch) return;
  f.pending_switch = false;
  Iface target = f.pending_target;
  if (target == f.iface) return;
  apply_iface(f, target);
  f.switches += 1;
  res_.switches_completed += 1;
  note_binding(now_, f, "complete", target == IFACE_WLAN ? "lte" : "wlan",
               target == IFACE_WLAN ? "wlan" : "lte", "SWITCH");
  if (target == IFACE_LTE) maybe_dissociate(f.node);
}

void Sim::finish() {
  res_.seed = seed_;
  res_.window_s = window_s_;
  for (FlowState& f : flows_) {
    if (f.iface == IFACE_WLAN && f.wlan_since_us >= 0) {
      f.time_on_wlan_us += double(dur_us_ - f.wlan_since_us);
      f.wlan_since_us = -1;
    }
    FlowResult r;
    r.flow_id = f.id;
    r.node_id = f.node;
    r.cls = f.spec.cls;
    r.ieu = f.ieu;
    r.premium = f.premium;
    r.blocked = f.blocked;
    r.configured_bps = f.spec.rate_bps;
    r.generated_pkts = f.generated_pkts;
    r.delivered_pkts = f.delivered_pkts;
    r.ontime_pkts = f.ontime_pkts;
    r.late_pkts = f.late_pkts;
    r.dropped_pkts = 0;
    r.generated_bits = f.generated_bits;
    r.delivered_bits = f.delivered_bits;
    r.ontime_bits = f.ontime_bits;
    r.goodput_bps = double(f.ontime_bits) / window_s_;
    r.mean_latency_us = f.lat.mean_us();
    r.p50_latency_us = f.lat.quantile_us(0.50);
    r.p95_latency_us = f.lat.quantile_us(0.95);
    r.max_latency_us = f.lat.max_us();
    r.time_on_wlan_s = f.time_on_wlan_us * 1e-6;
    r.ever_on_wlan = f.ever_on_wlan;
    r.switches = f.switches;
    r.active_j = f.active_j;
    r.idle_share_j = f.idle_share_j;
    r.node_j = f.node_j;
    res_.flows.push_back(r);
    res_.node_energy_j += f.node_j;
  }
  for (ApState& ap : aps_) {
    ApResult a;
    a.ap_id = ap.id;
    a.mean_util = ap.win_ticks ? ap.win_util_sum / double(ap.win_ticks) : 0.0;
    a.mean_backlogged =
        ap.win_ticks ? ap.win_backlog / double(ap.win_ticks) : 0.0;
    a.assoc_peak = ap.assoc_peak;
    a.served_payload_bps = ap.win_served_payload_bits / window_s_;
    a.energy_j = ap.energy_j;
    res_.aps.push_back(a);
    res_.ap_energy_j += ap.energy_j;
  }
  double prb = 0.0, ttis = 0.0;
  for (const SectorState& sec : sectors_) {
    if (!sec.central) continue;
    prb += sec.win_prb;
    ttis += double(sec.win_ttis);
  }
  res_.mean_sector_prb_util =
      ttis > 0.0 ? prb / (ttis * double(cfg_.lte_n_prb)) : 0.0;
}

RunResult Sim::run() {
  build();
  while (!evq_.empty()) {
    Ev ev = evq_.top();
    evq_.pop();
    now_ = ev.t;
    if (ev.kind == EV_RUN_END) break;
    switch (ev.kind) {
      case EV_FLOW_START: start_flow(ev.a); break;
      case EV_ARRIVAL: arrival(ev.a); break;
      case EV_SWITCH_DONE: switch_done(ev.a); break;
      case EV_TTI: tti_tick(); break;
      case EV_WLAN: wlan_tick(); break;
      case EV_BEACON: beacon(); break;
      case EV_EPOCH: epoch(ev.a); break;
      default: break;
    }
  }
  now_ = dur_us_;
  finish();
  return res_;
}

}  // namespace

RunResult simulate_run(const SimConfig& cfg, Policy policy, LoadLevel load,
                       uint64_t seed, const EngineHooks* hooks) {
  Sim sim(cfg, policy, load, seed, hooks);
  return sim.run();
}

}  // namespace ifomsim
