#pragma once
#include <cstdint>

namespace ifomsim {

// Radio propagation and link-rate math. Everything here is a pure function;
// shadowing is frozen per link via counter-based draws keyed on the endpoint
// identities, so values do not depend on the order links are evaluated in.

// Log-distance path loss, distance in metres (input), model terms in km.
double path_loss_macro_db(double distance_m);   // 128.1 + 37.6 log10(R_km)
double path_loss_wlan_db(double distance_m);    // 140.7 + 36.7 log10(R_km)

// 3-sector pattern: attenuation relative to boresight, clipped at 25 dB.
// theta_deg is the off-boresight angle; any real value is accepted and
// wrapped into [-180, 180].
double sector_attenuation_db(double theta_deg);

double dbm_to_mw(double dbm);
double mw_to_dbm(double mw);

// Thermal noise over `bandwidth_hz` plus receiver noise figure and an
// additional fixed margin, in dBm.
double noise_floor_dbm(double bandwidth_hz, double noise_figure_db,
                       double margin_db);

// Frozen log-normal shadowing in dB for the link (tx_key, rx_key).
double shadowing_db(uint64_t shadow_seed, uint64_t tx_key, uint64_t rx_key,
                    double sigma_db);

// Attenuated-capacity link rate in bit/s: min(cap, eff * B * log2(1 + sinr)).
// `sinr_db` may be arbitrarily low; the result is clamped at 0.
double rate_from_sinr_bps(double sinr_db, double bandwidth_hz,
                          double efficiency, double cap_bps);

double sinr_db_from_powers(double signal_dbm, double noise_mw,
                           double interference_mw);

}  // namespace ifomsim
