#include <cmath>
#include <cstdint>

#include "config.hpp"
#include "doctest.h"
#include "traffic.hpp"

using namespace ifomsim;

TEST_CASE("class table carries the configured QoS parameters") {
  SimConfig cfg;
  ClassSpec voip = make_class_spec(FlowClass::VOIP, cfg);
  CHECK(voip.qci == 1);
  CHECK(voip.gbr);
  CHECK(voip.rate_bps == 12200.0);
  CHECK(voip.packet_bytes == 33);
  CHECK(voip.pdb_us == 100000);
  CHECK(voip.priority < 9);

  ClassSpec video = make_class_spec(FlowClass::VIDEO, cfg);
  CHECK(video.qci == 2);
  CHECK(video.gbr);
  CHECK(video.rate_bps == 1.5e6);
  CHECK(video.packet_bytes == 250);
  CHECK(video.pdb_us == 150000);
  CHECK(video.priority > voip.priority);

  ClassSpec ftp = make_class_spec(FlowClass::FTP, cfg);
  CHECK(ftp.qci == 9);
  CHECK_FALSE(ftp.gbr);
  CHECK(ftp.rate_bps == 512000.0);
  CHECK(ftp.packet_bytes == 1024);
  CHECK(ftp.pdb_us == 0);
  CHECK(ftp.priority == 9);

  cfg.ftp_rate_bps = 1024000.0;
  CHECK(make_class_spec(FlowClass::FTP, cfg).rate_bps == 1024000.0);
}

TEST_CASE("ftp 512k: exact 16 ms period") {
  // 1024 B = 8192 bits at 512 kb/s -> 16000 us, an integer period
  CHECK(cbr_period_us(8192, 512000.0) == doctest::Approx(16000.0));
  for (int64_t k = 0; k <= 100; ++k)
    CHECK(cbr_arrival_us(0, k, 8192, 512000.0) == 16000 * k);
  CHECK(cbr_arrival_us(2500, 4, 8192, 512000.0) == 2500 + 64000);
}

TEST_CASE("video 1.5M: fractional period, exact every third packet") {
  // 250 B = 2000 bits at 1.5 Mb/s -> 4000/3 us
  CHECK(cbr_period_us(2000, 1.5e6) == doctest::Approx(4000.0 / 3.0));
  CHECK(cbr_arrival_us(0, 1, 2000, 1.5e6) == 1333);
  CHECK(cbr_arrival_us(0, 2, 2000, 1.5e6) == 2667);
  CHECK(cbr_arrival_us(0, 3, 2000, 1.5e6) == 4000);
  CHECK(cbr_arrival_us(0, 300, 2000, 1.5e6) == 400000);
}

TEST_CASE("voip 12.2k: 21.639 ms period") {
  // 33 B = 264 bits at 12.2 kb/s -> 21639.344... us
  CHECK(cbr_period_us(264, 12200.0) == doctest::Approx(21639.344).epsilon(1e-6));
  int64_t t1 = cbr_arrival_us(0, 1, 264, 12200.0);
  CHECK(std::llabs(t1 - 21639) <= 1);
}

TEST_CASE("arrivals carry no cumulative drift") {
  // closed form in k: |t_k - k*period| <= 0.5 us at every k
  const int pkt_bits[] = {264, 2000, 8192};
  const double rates[] = {12200.0, 1.5e6, 512000.0};
  for (int c = 0; c < 3; ++c) {
    double period = cbr_period_us(pkt_bits[c], rates[c]);
    int64_t prev = cbr_arrival_us(0, 0, pkt_bits[c], rates[c]);
    CHECK(prev == 0);
    for (int64_t k = 1; k <= 1000; ++k) {
      int64_t t = cbr_arrival_us(0, k, pkt_bits[c], rates[c]);
      CHECK(std::abs(double(t) - double(k) * period) <= 0.5);
      CHECK(t > prev);
      prev = t;
    }
  }
}
