#pragma once

#include <cstdint>
#include <random>

namespace cordon {

// SplitMix64 finalizer. Used to derive independent stream seeds.
std::uint64_t splitmix64(std::uint64_t x) noexcept;

// Seed for one trial: splitmix64(splitmix64(master + stream) + attempt).
// `stream` is the global trial index within a sweep, `attempt` counts re-seeds after a
// discarded environment.
std::uint64_t derive_seed(std::uint64_t master, std::uint64_t stream, std::uint64_t attempt = 0) noexcept;

// Portable random stream: std::mt19937_64 (whose output sequence is fixed by the standard)
// plus bounded sampling done here, because std::uniform_int_distribution differs between
// standard libraries.
class Rng {
 public:
  explicit Rng(std::uint64_t seed) : engine_(seed) {}

  std::uint64_t next() { return engine_(); }

  // Uniform integer in [lo, hi]. Requires lo <= hi.
  std::int64_t uniform(std::int64_t lo, std::int64_t hi);

  // Uniform index in [0, n). Requires n > 0.
  std::uint64_t below(std::uint64_t n);

 private:
  std::mt19937_64 engine_;
};

}  // namespace cordon
