#pragma once

#include <array>
#include <cstdint>

namespace rstab {

/// xoshiro256** seeded through splitmix64. Bounded draws use rejection
/// sampling on the raw 64-bit output, so streams are reproducible on any
/// platform (unlike std::uniform_int_distribution).
class Rng {
 public:
  explicit Rng(std::uint64_t seed);

  std::uint64_t next();
  /// Uniform integer in [lo, hi]; requires lo <= hi.
  std::int64_t uniform(std::int64_t lo, std::int64_t hi);
  /// True with probability num/den; requires den > 0.
  bool bernoulli(std::uint64_t num, std::uint64_t den);
  /// Independent generator derived from this one's stream.
  Rng split();

 private:
  std::array<std::uint64_t, 4> s_{};
};

std::uint64_t splitmix64(std::uint64_t& state);

}  // namespace rstab
