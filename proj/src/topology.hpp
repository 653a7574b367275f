#pragma once
#include <cstdint>
#include <vector>

#include "config.hpp"

namespace ifomsim {

struct Vec2 {
  double x = 0.0;
  double y = 0.0;
};

double dist(const Vec2& a, const Vec2& b);

// One eNB sector. Sites carry three sectors with boresights 0/120/240
// degrees from east. Each central sector has a pico hotspot 120 m out along
// the boresight with an access point at its centre.
struct SectorGeom {
  int id = 0;
  int site = 0;
  Vec2 site_pos;
  double boresight_deg = 0.0;
  bool central = false;
  Vec2 hotspot;
  int ap_id = -1;  // index into Topology::ap_pos, -1 if no AP
};

struct NodeGeom {
  int id = 0;
  bool ieu = false;           // measured user (vs background load)
  bool wlan_capable = false;
  bool premium = false;
  Vec2 pos;
  int serving_sector = 0;
  double dist_site_m = 0.0;
  int ap_id = -1;             // nearest AP if within radio range, else -1
  double dist_ap_m = -1.0;
};

struct Topology {
  std::vector<Vec2> sites;          // [0] is the measured central site
  std::vector<SectorGeom> sectors;  // central sectors first (ids 0..2)
  std::vector<Vec2> ap_pos;
  std::vector<int> ap_sector;       // owning sector per AP
  std::vector<NodeGeom> nodes;
};

// Off-boresight angle of `p` seen from `sec`, in degrees within [-180, 180].
double off_boresight_deg(const SectorGeom& sec, const Vec2& p);

// Seven-site hexagonal layout (centre plus one ring) with per-scenario user
// drops. Node order is deterministic for a given (cfg, seed): central IeUs
// sector by sector, then scenario-1 background users, then one background
// user per surrounding sector. Throws PlacementError when a constrained drop
// cannot be satisfied within cfg.drop_max_tries attempts.
Topology build_topology(const SimConfig& cfg, LoadLevel load, uint64_t seed);

}  // namespace ifomsim
