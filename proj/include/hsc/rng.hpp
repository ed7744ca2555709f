#pragma once

#include <cstdint>
#include <random>

namespace hsc {

// Mixes a 64-bit state and returns the next value (splitmix64 step).
std::uint64_t splitmix64(std::uint64_t& state);

// Deterministic random source. Built on std::mt19937_64, whose output
// sequence is fully specified by the standard; all value mappings are done
// by hand here so results are identical across compilers and platforms.
class Rng {
 public:
  explicit Rng(std::uint64_t seed);

  // Independent substream of a master seed. Streams with different ids are
  // decorrelated by splitmix64 mixing.
  static Rng stream(std::uint64_t master_seed, std::uint64_t stream_id);

  std::uint64_t next_u64();

  // Uniform double in [0, 1), 53-bit resolution.
  double uniform01();

  // Uniform integer in [0, bound). bound must be positive. Unbiased
  // (Lemire rejection).
  std::uint32_t uniform_below(std::uint32_t bound);

  // Uniform on [-1, -0.1] union [0.1, 1]: magnitude bounded away from zero.
  double signed_coeff();

 private:
  std::mt19937_64 eng_;
};

}  // namespace hsc
