#pragma once

namespace ifomsim {

// Base-station power model: a fixed floor while powered, a PA term scaled by
// the amplifier inefficiency while transmitting, and a receive add-on.
//   E_idle = P_idle * t_idle
//   E_tx   = (P_idle + alpha * P_tx) * t_tx
//   E_rx   = (P_idle + P_rx) * t_rx
struct EnbEnergy {
  double idle_j = 0.0;
  double tx_j = 0.0;
  double rx_j = 0.0;
  double total_j = 0.0;
};

EnbEnergy enb_energy_j(double t_idle_s, double t_tx_s, double t_rx_s,
                       double p_idle_w, double p_tx_w, double alpha,
                       double p_rx_w);

// Current-draw model for 802.11 devices: E = V * I * t per state.
struct WlanEnergyParams {
  double voltage_v = 3.0;
  double tx_ma = 380.0;
  double rx_ma = 313.0;
  double idle_ma = 273.0;
  double sleep_ma = 33.0;
};

struct WlanEnergy {
  double tx_j = 0.0;
  double rx_j = 0.0;
  double idle_j = 0.0;
  double sleep_j = 0.0;
  double total_j = 0.0;
};

WlanEnergy wlan_energy_j(const WlanEnergyParams& p, double t_tx_s,
                         double t_rx_s, double t_idle_s, double t_sleep_s);

// Relative saving of consumption e2 against e1: (e1 - e2) / e1.
double energy_gain(double e1_j, double e2_j);

}  // namespace ifomsim
