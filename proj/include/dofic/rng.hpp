#pragma once

#include <cstdint>

namespace dofic {

// splitmix64. Self-contained so seeded runs are byte-stable across
// standard libraries and platforms.
class SplitMix64 {
 public:
  explicit SplitMix64(std::uint64_t seed) : state_(seed) {}

  std::uint64_t next() {
    std::uint64_t z = (state_ += 0x9E3779B97F4A7C15ULL);
    z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ULL;
    z = (z ^ (z >> 27)) * 0x94D049BB133111EBULL;
    return z ^ (z >> 31);
  }

 private:
  std::uint64_t state_;
};

/// One independent stream per (seed, stream index). Every simulation trial
/// and every swept configuration gets its own stream, so results do not
/// depend on scheduling or iteration order.
class Rng {
 public:
  Rng(std::uint64_t seed, std::uint64_t stream)
      : gen_(seed ^ (0xA0761D6478BD642FULL * (stream + 1))) {
    // burn a few outputs so nearby streams decorrelate
    gen_.next();
    gen_.next();
  }

  std::uint64_t next_u64() { return gen_.next(); }

  /// Uniform integer on [-limit, limit].
  long channel_entry(long limit = 1000000) {
    const std::uint64_t span = 2 * static_cast<std::uint64_t>(limit) + 1;
    return static_cast<long>(next_u64() % span) - limit;
  }

  long nonzero_entry(long limit = 1000000) {
    long v = 0;
    while (v == 0) v = channel_entry(limit);
    return v;
  }

  std::uint64_t below(std::uint64_t n) { return next_u64() % n; }

 private:
  SplitMix64 gen_;
};

}  // namespace dofic
