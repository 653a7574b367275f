#include "topology.hpp"

#include <cmath>

#include "errors.hpp"
#include "rng.hpp"

namespace ifomsim {

namespace {
constexpr double kPi = 3.14159265358979323846;

double wrap_deg(double d) {
  d = std::fmod(d, 360.0);
  if (d > 180.0) d -= 360.0;
  if (d < -180.0) d += 360.0;
  return d;
}
}  // namespace

double dist(const Vec2& a, const Vec2& b) {
  return std::hypot(a.x - b.x, a.y - b.y);
}

double off_boresight_deg(const SectorGeom& sec, const Vec2& p) {
  double az = std::atan2(p.y - sec.site_pos.y, p.x - sec.site_pos.x) * 180.0 / kPi;
  return wrap_deg(az - sec.boresight_deg);
}

namespace {

int nearest_site(const std::vector<Vec2>& sites, const Vec2& p) {
  int best = 0;
  double bd = dist(sites[0], p);
  for (size_t i = 1; i < sites.size(); ++i) {
    double d = dist(sites[i], p);
    if (d < bd - 1e-12) {
      bd = d;
      best = int(i);
    }
  }
  return best;
}

// Uniform drop inside the Voronoi hex of `sec.site`, restricted to the
// sector wedge and at least min_dist from the mast.
Vec2 drop_in_sector(const Topology& topo, const SectorGeom& sec,
                    const SimConfig& cfg, Rng& rng) {
  double circum = cfg.isd_m / std::sqrt(3.0);
  for (int tries = 0; tries < cfg.drop_max_tries; ++tries) {
    double r = circum * std::sqrt(rng.uniform());
    double a = 2.0 * kPi * rng.uniform();
    Vec2 p{sec.site_pos.x + r * std::cos(a), sec.site_pos.y + r * std::sin(a)};
    if (r < cfg.min_dist_m) continue;
    if (nearest_site(topo.sites, p) != sec.site) continue;
    double th = off_boresight_deg(sec, p);
    if (th <= -60.0 || th > 60.0) continue;
    return p;
  }
  throw PlacementError("sector drop failed after " +
                       std::to_string(cfg.drop_max_tries) + " tries");
}

Vec2 drop_in_hotspot(const SectorGeom& sec, const SimConfig& cfg, Rng& rng) {
  for (int tries = 0; tries < cfg.drop_max_tries; ++tries) {
    double r = cfg.hotspot_radius_m * std::sqrt(rng.uniform());
    double a = 2.0 * kPi * rng.uniform();
    Vec2 p{sec.hotspot.x + r * std::cos(a), sec.hotspot.y + r * std::sin(a)};
    if (dist(p, sec.site_pos) < cfg.min_dist_m) continue;
    return p;
  }
  throw PlacementError("hotspot drop failed after " +
                       std::to_string(cfg.drop_max_tries) + " tries");
}

NodeGeom make_node(const Topology& topo, const SimConfig& cfg, int id,
                   const Vec2& pos, int sector, bool ieu, bool wlan) {
  NodeGeom n;
  n.id = id;
  n.ieu = ieu;
  n.wlan_capable = wlan;
  n.pos = pos;
  n.serving_sector = sector;
  n.dist_site_m = dist(pos, topo.sectors[sector].site_pos);
  if (wlan) {
    for (size_t a = 0; a < topo.ap_pos.size(); ++a) {
      double d = dist(pos, topo.ap_pos[a]);
      if (d <= cfg.wlan_range_m && (n.ap_id < 0 || d < n.dist_ap_m)) {
        n.ap_id = int(a);
        n.dist_ap_m = d;
      }
    }
  }
  return n;
}

}  // namespace

Topology build_topology(const SimConfig& cfg, LoadLevel load, uint64_t seed) {
  Topology topo;
  topo.sites.push_back({0.0, 0.0});
  for (int k = 0; k < 6; ++k) {
    double a = k * 60.0 * kPi / 180.0;
    topo.sites.push_back({cfg.isd_m * std::cos(a), cfg.isd_m * std::sin(a)});
  }
  // Central sectors first so sector id == AP id for the measured cell.
  for (int site = 0; site < 7; ++site) {
    for (int s = 0; s < 3; ++s) {
      SectorGeom sec;
      sec.id = int(topo.sectors.size());
      sec.site = site;
      sec.site_pos = topo.sites[site];
      sec.boresight_deg = 120.0 * s;
      sec.central = (site == 0);
      double br = sec.boresight_deg * kPi / 180.0;
      sec.hotspot = {sec.site_pos.x + cfg.hotspot_offset_m * std::cos(br),
                     sec.site_pos.y + cfg.hotspot_offset_m * std::sin(br)};
      if (sec.central) {
        sec.ap_id = int(topo.ap_pos.size());
        topo.ap_pos.push_back(sec.hotspot);
        topo.ap_sector.push_back(sec.id);
      }
      topo.sectors.push_back(sec);
    }
  }

  Rng drop = derive_stream(seed, "topology-drop");
  auto premium_draw = [&](int node_id) {
    uint64_t key = hash_combine(hash_combine(hash64(seed), fnv1a("premium")),
                                hash64(uint64_t(node_id)));
    uint64_t s = key;
    double u = double(splitmix64(s) >> 11) * 0x1.0p-53;
    return u < cfg.premium_fraction;
  };

  int next_id = 0;
  if (cfg.scenario == 1) {
    // Per central sector: one LTE-only IeU dropped anywhere in the sector and
    // one dual-mode IeU dropped in the hotspot.
    for (int s = 0; s < 3; ++s) {
      const SectorGeom& sec = topo.sectors[s];
      for (int k = 0; k < cfg.s1_ieus_per_sector; ++k) {
        bool dual = (k % 2 == 1);
        Vec2 p = dual ? drop_in_hotspot(sec, cfg, drop)
                      : drop_in_sector(topo, sec, cfg, drop);
        NodeGeom n = make_node(topo, cfg, next_id, p, s, true, dual);
        n.premium = premium_draw(next_id);
        topo.nodes.push_back(n);
        ++next_id;
      }
    }
    int bg = cfg.s1_background_medium;
    if (load == LoadLevel::LIGHT) bg = cfg.s1_background_light;
    if (load == LoadLevel::HEAVY) bg = cfg.s1_background_heavy;
    for (int i = 0; i < bg; ++i) {
      int s = i % 3;
      Vec2 p = drop_in_sector(topo, topo.sectors[s], cfg, drop);
      topo.nodes.push_back(make_node(topo, cfg, next_id, p, s, false, true));
      ++next_id;
    }
  } else {
    int ieus = cfg.s2_ieus_medium;
    if (load == LoadLevel::LIGHT) ieus = cfg.s2_ieus_light;
    if (load == LoadLevel::HEAVY) ieus = cfg.s2_ieus_heavy;
    for (int s = 0; s < 3; ++s) {
      int count = ieus / 3 + (s < ieus % 3 ? 1 : 0);
      const SectorGeom& sec = topo.sectors[s];
      for (int k = 0; k < count; ++k) {
        Vec2 p = drop_in_hotspot(sec, cfg, drop);
        NodeGeom n = make_node(topo, cfg, next_id, p, s, true, true);
        n.premium = premium_draw(next_id);
        topo.nodes.push_back(n);
        ++next_id;
      }
    }
  }
  // One background user per surrounding sector keeps the outer ring loaded.
  for (size_t s = 3; s < topo.sectors.size(); ++s) {
    Vec2 p = drop_in_sector(topo, topo.sectors[s], cfg, drop);
    topo.nodes.push_back(
        make_node(topo, cfg, next_id, p, int(s), false, false));
    ++next_id;
  }
  return topo;
}

}  // namespace ifomsim
