#include "rng.hpp"

#include <cmath>

namespace ifomsim {

uint64_t splitmix64(uint64_t& state) {
  uint64_t z = (state += 0x9e3779b97f4a7c15ull);
  z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ull;
  z = (z ^ (z >> 27)) * 0x94d049bb133111ebull;
  return z ^ (z >> 31);
}

uint64_t hash64(uint64_t x) {
  uint64_t s = x;
  return splitmix64(s);
}

uint64_t hash_combine(uint64_t a, uint64_t b) {
  return hash64(a ^ (b + 0x9e3779b97f4a7c15ull + (a << 6) + (a >> 2)));
}

uint64_t fnv1a(std::string_view s) {
  uint64_t h = 0xcbf29ce484222325ull;
  for (unsigned char c : s) {
    h ^= c;
    h *= 0x100000001b3ull;
  }
  return h;
}

double Rng::normal() {
  if (have_spare_) {
    have_spare_ = false;
    return spare_;
  }
  // Box-Muller on two fresh uniforms; u1 nudged away from zero so log() is
  // finite for every raw draw.
  double u1 = (double((next_u64() >> 11)) + 0.5) * 0x1.0p-53;
  double u2 = double(next_u64() >> 11) * 0x1.0p-53;
  double r = std::sqrt(-2.0 * std::log(u1));
  double a = 2.0 * 3.14159265358979323846 * u2;
  spare_ = r * std::sin(a);
  have_spare_ = true;
  return r * std::cos(a);
}

Rng derive_stream(uint64_t master_seed, std::string_view tag) {
  return Rng(hash_combine(hash64(master_seed), fnv1a(tag)));
}

Rng derive_stream(uint64_t master_seed, std::string_view tag, uint64_t k1) {
  return Rng(hash_combine(hash_combine(hash64(master_seed), fnv1a(tag)),
                          hash64(k1)));
}

Rng derive_stream(uint64_t master_seed, std::string_view tag, uint64_t k1,
                  uint64_t k2) {
  return Rng(hash_combine(
      hash_combine(hash_combine(hash64(master_seed), fnv1a(tag)), hash64(k1)),
      hash64(k2)));
}

double normal_from_key(uint64_t key) {
  uint64_t s = hash64(key);
  uint64_t a = splitmix64(s);
  uint64_t b = splitmix64(s);
  double u1 = (double(a >> 11) + 0.5) * 0x1.0p-53;
  double u2 = double(b >> 11) * 0x1.0p-53;
  return std::sqrt(-2.0 * std::log(u1)) *
         std::cos(2.0 * 3.14159265358979323846 * u2);
}

}  // namespace ifomsim
