#pragma once
#include <cstdint>
#include <optional>
#include <vector>

namespace ifomsim {

// Flow-binding state for dual-interface nodes: one binding-cache entry per
// registered interface (care-of address) and per-flow bindings that steer a
// traffic selector onto one of them. Packets that match no flow binding
// follow the home (LTE) path. Interface switches are prepared by the caller
// and applied atomically via bind_flow once the binding update completes.

enum Iface : int { IFACE_LTE = 0, IFACE_WLAN = 1 };

struct TrafficSelector {
  uint32_t src_ip = 0;
  uint32_t dst_ip = 0;
  uint16_t src_port = 0;
  uint16_t dst_port = 0;
  uint8_t proto = 17;

  bool operator==(const TrafficSelector&) const = default;
};

struct BindingEntry {
  int bid = 0;
  Iface iface = IFACE_LTE;
  uint64_t coa = 0;
  int priority = 0;
};

struct FlowBinding {
  int fid = 0;
  int bid = 0;
  TrafficSelector sel;
  int priority = 0;
};

class BindingCache {
 public:
  // Registers (or refreshes) the care-of address for an interface and
  // returns its binding id. Binding ids are stable per interface.
  int register_interface(Iface iface, uint64_t coa);
  // Drops the interface entry; flow bindings pointing at it are removed and
  // their flows revert to the home path.
  void deregister_interface(Iface iface);
  bool interface_registered(Iface iface) const;

  // Creates or atomically retargets the binding for `fid`. The binding id
  // must exist. Selector lookups see either the old or the new state, never
  // a mix.
  void bind_flow(int fid, const TrafficSelector& sel, int bid, int priority);
  void unbind_flow(int fid);
  std::optional<FlowBinding> flow_binding(int fid) const;

  // Longest-priority-first selector match; home path when nothing matches.
  Iface route(const TrafficSelector& sel) const;

  const std::vector<BindingEntry>& entries() const { return entries_; }
  const std::vector<FlowBinding>& flows() const { return flows_; }

  // Structural invariants; used by tests after every mutation.
  bool invariants_hold() const;

 private:
  std::vector<BindingEntry> entries_;
  std::vector<FlowBinding> flows_;
  int next_bid_ = 1;
};

// Header cost of tunnelling via the care-of path, relative to payload size.
double tunnel_overhead_pct(int header_bytes, int payload_bytes);

// Bits on the air for one packet on the given path.
int64_t on_air_bits(int payload_bytes, bool tunnelled, int header_bytes);

// Deterministic synthetic selector for a flow id.
TrafficSelector selector_for_flow(int node_id, int fid);

}  // namespace ifomsim
