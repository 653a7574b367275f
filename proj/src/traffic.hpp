#pragma once
#include <cstdint>

#include "config.hpp"

namespace ifomsim {

enum class FlowClass { VOIP, VIDEO, FTP };

const char* to_string(FlowClass c);

// Bearer-class parameters: QCI, GBR flag and rate, fixed packet size, packet
// delay budget (0 means none) and scheduling priority (lower wins).
struct ClassSpec {
  FlowClass cls = FlowClass::FTP;
  int qci = 9;
  bool gbr = false;
  double rate_bps = 0.0;
  int packet_bytes = 0;
  int64_t pdb_us = 0;
  int priority = 9;
};

ClassSpec make_class_spec(FlowClass cls, const SimConfig& cfg);

// Constant-bit-rate arrival instant of packet k (k = 0, 1, ...) for a flow
// that starts at start_us. Closed form in k, so the sequence carries no
// cumulative rounding drift: generated bits track rate * elapsed to within
// one packet at every instant.
int64_t cbr_arrival_us(int64_t start_us, int64_t k, int packet_bits,
                       double rate_bps);

double cbr_period_us(int packet_bits, double rate_bps);

}  // namespace ifomsim
