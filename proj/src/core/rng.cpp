#include "core/rng.hpp"

#include <cmath>
#include <numbers>

namespace mvpure {

uint64_t splitmix64(uint64_t x) {
  x += 0x9e3779b97f4a7c15ULL;
  x = (x ^ (x >> 30)) * 0xbf58476d1ce4e5b9ULL;
  x = (x ^ (x >> 27)) * 0x94d049bb133111ebULL;
  return x ^ (x >> 31);
}

uint64_t derive_stream_seed(uint64_t seed, StreamTag tag, uint64_t index) {
  uint64_t h = splitmix64(seed);
  h = splitmix64(h ^ static_cast<uint64_t>(tag));
  h = splitmix64(h ^ index);
  return h;
}

double RandomStream::uniform() {
  // 53-bit mantissa; strictly below 1.
  return static_cast<double>(engine_() >> 11) * 0x1p-53;
}

double RandomStream::gaussian() {
  if (have_cached_) {
    have_cached_ = false;
    return cached_;
  }
  double u1 = uniform();
  if (u1 <= 0.0) u1 = 0x1p-53;
  const double u2 = uniform();
  const double r = std::sqrt(-2.0 * std::log(u1));
  const double a = 2.0 * std::numbers::pi * u2;
  cached_ = r * std::sin(a);
  have_cached_ = true;
  return r * std::cos(a);
}

uint32_t RandomStream::bits(int k) {
  return static_cast<uint32_t>(engine_() >> (64 - k));
}

int RandomStream::uniform_int(int lo, int hi) {
  const uint64_t span = static_cast<uint64_t>(hi - lo) + 1;
  return lo + static_cast<int>(engine_() % span);
}

}  // namespace mvpure
