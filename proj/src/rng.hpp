#pragma once
#include <cstdint>
#include <string_view>

namespace ifomsim {

// Deterministic PRNG built on splitmix64. All simulation randomness flows
// through named streams derived from (master_seed, stream_tag), so adding a
// consumer never perturbs the draws seen by existing ones. Uniform doubles use
// the top 53 bits of the raw output, which is bit-stable across platforms.

uint64_t splitmix64(uint64_t& state);
uint64_t hash64(uint64_t x);
uint64_t hash_combine(uint64_t a, uint64_t b);
uint64_t fnv1a(std::string_view s);

class Rng {
 public:
  Rng() : s_{0x9e3779b97f4a7c15ull} {}
  explicit Rng(uint64_t seed) : s_(seed ? seed : 0x9e3779b97f4a7c15ull) {}

  uint64_t next_u64() { return splitmix64(s_); }

  // [0,1), 53-bit resolution
  double uniform() { return double(next_u64() >> 11) * 0x1.0p-53; }

  // uniform integer in [0,n), n>0; modulo bias is irrelevant at our n
  uint64_t uniform_int(uint64_t n) { return next_u64() % n; }

  double normal();  // standard normal, Box-Muller, internally cached pair

  uint64_t state() const { return s_; }

 private:
  uint64_t s_;
  bool have_spare_ = false;
  double spare_ = 0.0;
};

// Stream derivation: mixes the master seed with a tag hash and optional
// integer subkeys. Equal inputs give equal streams on every platform.
Rng derive_stream(uint64_t master_seed, std::string_view tag);
Rng derive_stream(uint64_t master_seed, std::string_view tag, uint64_t k1);
Rng derive_stream(uint64_t master_seed, std::string_view tag, uint64_t k1,
                  uint64_t k2);

// Counter-based standard normal: a pure function of the key, used where a
// value must not depend on evaluation order (e.g. per-link shadowing).
double normal_from_key(uint64_t key);

}  // namespace ifomsim
