#pragma once

#include <bit>
#include <cmath>
#include <cstdint>
#include <initializer_list>
#include <numbers>

namespace ovlab {

// SplitMix64 finalizer; full-avalanche 64-bit mix.
constexpr std::uint64_t mix64(std::uint64_t z) noexcept {
  z ^= z >> 30;
  z *= 0xBF58476D1CE4E5B9ull;
  z ^= z >> 27;
  z *= 0x94D049BB133111EBull;
  z ^= z >> 31;
  return z;
}

inline std::uint64_t key_bits(double x) noexcept { return std::bit_cast<std::uint64_t>(x); }

// Path prefixes that keep streams drawn by different subsystems disjoint
// even when the remaining path elements coincide.
namespace stream_domain {
inline constexpr std::uint64_t overshoot = 0x01;
inline constexpr std::uint64_t ladder = 0x02;
inline constexpr std::uint64_t stationary = 0x03;
inline constexpr std::uint64_t bootstrap = 0x04;
inline constexpr std::uint64_t coupling = 0x05;
inline constexpr std::uint64_t diagnostics = 0x06;
}  // namespace stream_domain

// Counter-based random stream. The generator state is derived by hashing
// (master seed, index path), so the stream for a given replicate is a pure
// function of its coordinates: independent of scheduling and worker count,
// and bit-identical across runs with the same seed.
class RngStream {
public:
  explicit RngStream(std::uint64_t seed) noexcept : state_(seed) {}

  static RngStream derive(std::uint64_t master_seed,
                          std::initializer_list<std::uint64_t> path) noexcept {
    std::uint64_t h = mix64(master_seed ^ 0x9E3779B97F4A7C15ull);
    for (std::uint64_t p : path) h = mix64(h ^ mix64(p + 0x9E3779B97F4A7C15ull));
    return RngStream(h);
  }

  std::uint64_t next_u64() noexcept {
    state_ += 0x9E3779B97F4A7C15ull;
    return mix64(state_);
  }

  // uniform on [0, 1), 53-bit resolution
  double uniform01() noexcept { return static_cast<double>(next_u64() >> 11) * 0x1.0p-53; }

  // uniform on (0, 1]; safe as a log() argument
  double uniform_pos() noexcept {
    return static_cast<double>((next_u64() >> 11) + 1) * 0x1.0p-53;
  }

  // standard normal via Box-Muller; the second value of each pair is cached
  double normal() noexcept {
    if (has_spare_) {
      has_spare_ = false;
      return spare_;
    }
    const double r = std::sqrt(-2.0 * std::log(uniform_pos()));
    const double t = 2.0 * std::numbers::pi * uniform01();
    spare_ = r * std::sin(t);
    has_spare_ = true;
    return r * std::cos(t);
  }

private:
  std::uint64_t state_;
  double spare_ = 0.0;
  bool has_spare_ = false;
};

}  // namespace ovlab
