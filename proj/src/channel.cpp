#include "channel.hpp"

#include <cmath>

#include "errors.hpp"
#include "rng.hpp"

namespace ifomsim {

double path_loss_macro_db(double distance_m) {
  if (!(distance_m > 0.0)) throw DomainError("path loss needs distance > 0");
  return 128.1 + 37.6 * std::log10(distance_m / 1000.0);
}

double path_loss_wlan_db(double distance_m) {
  if (!(distance_m > 0.0)) throw DomainError("path loss needs distance > 0");
  return 140.7 + 36.7 * std::log10(distance_m / 1000.0);
}

double sector_attenuation_db(double theta_deg) {
  double t = std::fmod(theta_deg, 360.0);
  if (t > 180.0) t -= 360.0;
  if (t < -180.0) t += 360.0;
  double a = 12.0 * (t / 70.0) * (t / 70.0);
  return a < 25.0 ? a : 25.0;
}

double dbm_to_mw(double dbm) { return std::pow(10.0, dbm / 10.0); }

double mw_to_dbm(double mw) {
  if (!(mw > 0.0)) throw DomainError("mw_to_dbm needs power > 0");
  return 10.0 * std::log10(mw);
}

double noise_floor_dbm(double bandwidth_hz, double noise_figure_db,
                       double margin_db) {
  if (!(bandwidth_hz > 0.0)) throw DomainError("noise needs bandwidth > 0");
  return -174.0 + 10.0 * std::log10(bandwidth_hz) + noise_figure_db + margin_db;
}

double shadowing_db(uint64_t shadow_seed, uint64_t tx_key, uint64_t rx_key,
                    double sigma_db) {
  uint64_t key = hash_combine(hash_combine(shadow_seed, tx_key), rx_key);
  return sigma_db * normal_from_key(key);
}

double rate_from_sinr_bps(double sinr_db, double bandwidth_hz,
                          double efficiency, double cap_bps) {
  double sinr = std::pow(10.0, sinr_db / 10.0);
  double r = efficiency * bandwidth_hz * std::log2(1.0 + sinr);
  if (r < 0.0) r = 0.0;
  return r < cap_bps ? r : cap_bps;
}

double sinr_db_from_powers(double signal_dbm, double noise_mw,
                           double interference_mw) {
  double denom = noise_mw + interference_mw;
  if (!(denom > 0.0)) throw DomainError("sinr needs noise + interference > 0");
  return signal_dbm - mw_to_dbm(denom);
}

}  // namespace ifomsim
