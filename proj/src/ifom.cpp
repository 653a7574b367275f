#include "ifom.hpp"

#include <algorithm>

#include "errors.hpp"

namespace ifomsim {

int BindingCache::register_interface(Iface iface, uint64_t coa) {
  for (auto& e : entries_) {
    if (e.iface == iface) {
      e.coa = coa;
      return e.bid;
    }
  }
  BindingEntry e;
  e.bid = next_bid_++;
  e.iface = iface;
  e.coa = coa;
  e.priority = (iface == IFACE_LTE) ? 10 : 20;
  entries_.push_back(e);
  return e.bid;
}

void BindingCache::deregister_interface(Iface iface) {
  int bid = -1;
  for (const auto& e : entries_)
    if (e.iface == iface) bid = e.bid;
  if (bid < 0) return;
  flows_.erase(std::remove_if(flows_.begin(), flows_.end(),
                              [&](const FlowBinding& f) { return f.bid == bid; }),
               flows_.end());
  entries_.erase(std::remove_if(entries_.begin(), entries_.end(),
                                [&](const BindingEntry& e) { return e.bid == bid; }),
                 entries_.end());
}

bool BindingCache::interface_registered(Iface iface) const {
  for (const auto& e : entries_)
    if (e.iface == iface) return true;
  return false;
}

void BindingCache::bind_flow(int fid, const TrafficSelector& sel, int bid,
                             int priority) {
  bool bid_ok = false;
  for (const auto& e : entries_)
    if (e.bid == bid) bid_ok = true;
  if (!bid_ok) throw DomainError("bind_flow: unknown binding id");
  for (auto& f : flows_) {
    if (f.fid == fid) {
      f.sel = sel;
      f.bid = bid;
      f.priority = priority;
      return;
    }
  }
  flows_.push_back({fid, bid, sel, priority});
}

void BindingCache::unbind_flow(int fid) {
  flows_.erase(std::remove_if(flows_.begin(), flows_.end(),
                              [&](const FlowBinding& f) { return f.fid == fid; }),
               flows_.end());
}

std::optional<FlowBinding> BindingCache::flow_binding(int fid) const {
  for (const auto& f : flows_)
    if (f.fid == fid) return f;
  return std::nullopt;
}

Iface BindingCache::route(const TrafficSelector& sel) const {
  const FlowBinding* best = nullptr;
  for (const auto& f : flows_) {
    if (!(f.sel == sel)) continue;
    if (!best || f.priority > best->priority ||
        (f.priority == best->priority && f.fid < best->fid))
      best = &f;
  }
  if (!best) return IFACE_LTE;
  for (const auto& e : entries_)
    if (e.bid == best->bid) return e.iface;
  return IFACE_LTE;
}

bool BindingCache::invariants_hold() const {
  for (size_t i = 0; i < entries_.size(); ++i)
    for (size_t j = i + 1; j < entries_.size(); ++j) {
      if (entries_[i].bid == entries_[j].bid) return false;
      if (entries_[i].iface == entries_[j].iface) return false;
    }
  for (size_t i = 0; i < flows_.size(); ++i) {
    bool found = false;
    for (const auto& e : entries_)
      if (e.bid == flows_[i].bid) found = true;
    if (!found) return false;  // dangling flow binding
    for (size_t j = i + 1; j < flows_.size(); ++j)
      if (flows_[i].fid == flows_[j].fid) return false;
  }
  return true;
}

double tunnel_overhead_pct(int header_bytes, int payload_bytes) {
  if (payload_bytes <= 0) throw DomainError("overhead needs payload > 0");
  return 100.0 * double(header_bytes) / double(payload_bytes);
}

int64_t on_air_bits(int payload_bytes, bool tunnelled, int header_bytes) {
  int64_t bytes = payload_bytes + (tunnelled ? header_bytes : 0);
  return bytes * 8;
}

TrafficSelector selector_for_flow(int node_id, int fid) {
  TrafficSelector s;
  s.src_ip = 0x0a000000u | uint32_t(node_id);
  s.dst_ip = 0xc0a80001u;
  s.src_port = uint16_t(40000 + (fid % 20000));
  s.dst_port = uint16_t(5000 + (fid % 60000));
  s.proto = 17;
  return s;
}

}  // namespace ifomsim
