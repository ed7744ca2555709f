#include "hsc/rng.hpp"

namespace hsc {

std::uint64_t splitmix64(std::uint64_t& state) {
  state += 0x9e3779b97f4a7c15ULL;
  std::uint64_t z = state;
  z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
  z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
  return z ^ (z >> 31);
}

Rng::Rng(std::uint64_t seed) : eng_(seed) {}

Rng Rng::stream(std::uint64_t master_seed, std::uint64_t stream_id) {
  std::uint64_t s = master_seed;
  splitmix64(s);
  s ^= 0xd1b54a32d192ed03ULL * (stream_id + 1);
  return Rng(splitmix64(s));
}

std::uint64_t Rng::next_u64() { return eng_(); }

double Rng::uniform01() {
  return static_cast<double>(next_u64() >> 11) * 0x1.0p-53;
}

std::uint32_t Rng::uniform_below(std::uint32_t bound) {
  // Lemire's multiply-shift rejection sampler on 32-bit lanes.
  std::uint32_t x = static_cast<std::uint32_t>(next_u64() >> 32);
  std::uint64_t m = static_cast<std::uint64_t>(x) * bound;
  std::uint32_t lo = static_cast<std::uint32_t>(m);
  if (lo < bound) {
    std::uint32_t threshold = (0u - bound) % bound;
    while (lo < threshold) {
      x = static_cast<std::uint32_t>(next_u64() >> 32);
      m = static_cast<std::uint64_t>(x) * bound;
      lo = static_cast<std::uint32_t>(m);
    }
  }
  return static_cast<std::uint32_t>(m >> 32);
}

double Rng::signed_coeff() {
  bool negative = (next_u64() & 1ULL) != 0;
  double mag = 0.1 + 0.9 * uniform01();
  return negative ? -mag : mag;
}

}  // namespace hsc
