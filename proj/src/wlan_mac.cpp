#include "wlan_mac.hpp"

#include <algorithm>
#include <cmath>

#include "errors.hpp"

namespace ifomsim {

double contention_factor(const std::vector<std::pair<double, double>>& curve,
                         double n_stations) {
  if (curve.empty()) throw DomainError("empty contention curve");
  if (n_stations <= curve.front().first) return curve.front().second;
  if (n_stations >= curve.back().first) return curve.back().second;
  for (size_t i = 1; i < curve.size(); ++i) {
    if (n_stations <= curve[i].first) {
      double x0 = std::log(curve[i - 1].first);
      double x1 = std::log(curve[i].first);
      double t = (std::log(n_stations) - x0) / (x1 - x0);
      return curve[i - 1].second +
             t * (curve[i].second - curve[i - 1].second);
    }
  }
  return curve.back().second;
}

std::vector<WlanGrant> wlan_serve_tick(const std::vector<WlanDemand>& demands,
                                       double tick_s, double eff, double f) {
  std::vector<WlanGrant> out(demands.size());
  for (size_t i = 0; i < demands.size(); ++i) out[i].id = demands[i].id;

  struct Need {
    size_t idx;
    double airtime;
  };
  std::vector<Need> need;
  for (size_t i = 0; i < demands.size(); ++i) {
    const WlanDemand& d = demands[i];
    if (d.queue_bits <= 0.0 || d.phy_bps <= 0.0) continue;
    need.push_back({i, d.queue_bits / (eff * f * d.phy_bps)});
  }
  if (need.empty()) return out;
  std::sort(need.begin(), need.end(), [&](const Need& a, const Need& b) {
    if (a.airtime != b.airtime) return a.airtime < b.airtime;
    return demands[a.idx].id < demands[b.idx].id;
  });

  double left = tick_s;
  size_t remaining = need.size();
  for (const Need& n : need) {
    double share = left / double(remaining);
    double grant = std::min(n.airtime, share);
    const WlanDemand& d = demands[n.idx];
    double bits = std::min(d.queue_bits, grant * eff * f * d.phy_bps);
    out[n.idx].airtime_s = grant;
    out[n.idx].served_bits = bits;
    left -= grant;
    --remaining;
  }
  return out;
}

UtilWindow::UtilWindow(int slots, double slot_s, double eff,
                       double phy_cap_bps)
    : ring_(size_t(slots), 0.0), denom_bits_(eff * phy_cap_bps * slot_s) {
  if (slots <= 0 || !(denom_bits_ > 0.0))
    throw DomainError("bad utilization window parameters");
}

void UtilWindow::push(double served_onair_bits) {
  sum_ -= ring_[head_];
  ring_[head_] = served_onair_bits;
  sum_ += served_onair_bits;
  head_ = (head_ + 1) % int(ring_.size());
  if (filled_ < int(ring_.size())) ++filled_;
}

double UtilWindow::utilization() const {
  if (filled_ == 0) return 0.0;
  return sum_ / (denom_bits_ * double(filled_));
}

}  // namespace ifomsim
