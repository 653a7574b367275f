#include "traffic.hpp"

#include <cmath>

#include "errors.hpp"

namespace ifomsim {

const char* to_string(FlowClass c) {
  switch (c) {
    case FlowClass::VOIP: return "voip";
    case FlowClass::VIDEO: return "video";
    case FlowClass::FTP: return "ftp";
  }
  return "?";
}

ClassSpec make_class_spec(FlowClass cls, const SimConfig& cfg) {
  ClassSpec s;
  s.cls = cls;
  switch (cls) {
    case FlowClass::VOIP:
      s.qci = 1;
      s.gbr = true;
      s.rate_bps = cfg.voip_rate_bps;
      s.packet_bytes = cfg.voip_packet_bytes;
      s.pdb_us = int64_t(std::llround(cfg.voip_pdb_ms * 1000.0));
      s.priority = 2;
      break;
    case FlowClass::VIDEO:
      s.qci = 2;
      s.gbr = true;
      s.rate_bps = cfg.video_rate_bps;
      s.packet_bytes = cfg.video_packet_bytes;
      s.pdb_us = int64_t(std::llround(cfg.video_pdb_ms * 1000.0));
      s.priority = 4;
      break;
    case FlowClass::FTP:
      s.qci = 9;
      s.gbr = false;
      s.rate_bps = cfg.ftp_rate_bps;
      s.packet_bytes = cfg.ftp_packet_bytes;
      s.pdb_us = 0;
      s.priority = 9;
      break;
  }
  return s;
}

int64_t cbr_arrival_us(int64_t start_us, int64_t k, int packet_bits,
                       double rate_bps) {
  if (!(rate_bps > 0.0)) throw DomainError("cbr rate must be > 0");
  double offset = double(k) * double(packet_bits) * 1e6 / rate_bps;
  return start_us + int64_t(std::llround(offset));
}

double cbr_period_us(int packet_bits, double rate_bps) {
  if (!(rate_bps > 0.0)) throw DomainError("cbr rate must be > 0");
  return double(packet_bits) * 1e6 / rate_bps;
}

}  // namespace ifomsim
