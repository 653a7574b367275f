#include "energy.hpp"

#include "errors.hpp"

namespace ifomsim {

EnbEnergy enb_energy_j(double t_idle_s, double t_tx_s, double t_rx_s,
                       double p_idle_w, double p_tx_w, double alpha,
                       double p_rx_w) {
  if (t_idle_s < 0.0 || t_tx_s < 0.0 || t_rx_s < 0.0)
    throw DomainError("energy needs non-negative state times");
  EnbEnergy e;
  e.idle_j = p_idle_w * t_idle_s;
  e.tx_j = (p_idle_w + alpha * p_tx_w) * t_tx_s;
  e.rx_j = (p_idle_w + p_rx_w) * t_rx_s;
  e.total_j = e.idle_j + e.tx_j + e.rx_j;
  return e;
}

WlanEnergy wlan_energy_j(const WlanEnergyParams& p, double t_tx_s,
                         double t_rx_s, double t_idle_s, double t_sleep_s) {
  if (t_tx_s < 0.0 || t_rx_s < 0.0 || t_idle_s < 0.0 || t_sleep_s < 0.0)
    throw DomainError("energy needs non-negative state times");
  WlanEnergy e;
  e.tx_j = p.voltage_v * p.tx_ma * 1e-3 * t_tx_s;
  e.rx_j = p.voltage_v * p.rx_ma * 1e-3 * t_rx_s;
  e.idle_j = p.voltage_v * p.idle_ma * 1e-3 * t_idle_s;
  e.sleep_j = p.voltage_v * p.sleep_ma * 1e-3 * t_sleep_s;
  e.total_j = e.tx_j + e.rx_j + e.idle_j + e.sleep_j;
  return e;
}

double energy_gain(double e1_j, double e2_j) {
  if (!(e1_j > 0.0)) throw DomainError("energy gain needs baseline > 0");
  return (e1_j - e2_j) / e1_j;
}

}  // namespace ifomsim
