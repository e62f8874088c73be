#pragma once

#include <cstdint>
#include <random>

namespace mvpure {

/// Stream tags keep draws for different purposes statistically disjoint
/// even when the user passes equal seed values.
enum class StreamTag : uint64_t {
  channel = 1,
  noise = 2,
  symbol = 3,
  perturb = 4,
  noise_covariance = 5,
  test = 6,
};

uint64_t splitmix64(uint64_t x);

/// Derives an independent engine seed from (seed, tag, index). Blocks,
/// grid points and channel attempts each get their own counter-derived
/// stream, so results do not depend on execution order.
uint64_t derive_stream_seed(uint64_t seed, StreamTag tag, uint64_t index);

/// Seeded random stream with explicit transforms (Box-Muller for
/// normals) so draws are identical across standard libraries.
class RandomStream {
 public:
  explicit RandomStream(uint64_t seed) : engine_(seed) {}

  /// Uniform in [0, 1).
  double uniform();

  /// Standard normal N(0, 1).
  double gaussian();

  /// k uniform random bits, k <= 32.
  uint32_t bits(int k);

  /// Uniform integer in [lo, hi].
  int uniform_int(int lo, int hi);

 private:
  std::mt19937_64 engine_;
  bool have_cached_ = false;
  double cached_ = 0.0;
};

}  // namespace mvpure
