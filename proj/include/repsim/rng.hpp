#pragma once

#include <cmath>
#include <cstdint>
#include <initializer_list>

namespace repsim {

/// Counter-based pseudo-random generator.
///
/// Every output is a pure function of (seed, stream ids, draw counter), so a
/// stream can be reconstructed at any point by any worker: draws are
/// reproducible bit-for-bit regardless of scheduling or thread count.
/// Sub-streams are derived by absorbing stream ids into the key, e.g.
/// `CounterRng(seed, {kTag, sample_index})` gives every Monte-Carlo sample
/// its own independent stream.
class CounterRng {
 public:
  explicit CounterRng(std::uint64_t seed) : key_(mix64(seed)) {}

  CounterRng(std::uint64_t seed, std::initializer_list<std::uint64_t> stream)
      : key_(mix64(seed)) {
    for (std::uint64_t s : stream) split(s);
  }

  /// Derives a sub-stream in place; draws restart from counter 0.
  void split(std::uint64_t stream_id) {
    key_ = mix64(key_ ^ mix64(stream_id));
    counter_ = 0;
    has_cached_normal_ = false;
  }

  std::uint64_t next_u64() { return mix64(key_ ^ counter_++); }

  /// Uniform on [0, 1), 53-bit resolution.
  double next_double() {
    return static_cast<double>(next_u64() >> 11) * 0x1.0p-53;
  }

  /// Uniform on (0, 1]; safe as a log() argument.
  double next_open() {
    return static_cast<double>((next_u64() >> 11) + 1) * 0x1.0p-53;
  }

  /// Standard normal via Box-Muller; generates pairs, caches the second.
  double next_normal() {
    if (has_cached_normal_) {
      has_cached_normal_ = false;
      return cached_normal_;
    }
    const double u1 = next_open();
    const double u2 = next_double();
    const double r = std::sqrt(-2.0 * std::log(u1));
    const double a = 2.0 * kPi * u2;
    cached_normal_ = r * std::sin(a);
    has_cached_normal_ = true;
    return r * std::cos(a);
  }

  /// Uniform on {0, ..., n-1}. Bias is O(n / 2^64).
  std::uint64_t next_below(std::uint64_t n) {
    return static_cast<std::uint64_t>(
        (static_cast<unsigned __int128>(next_u64()) * n) >> 64);
  }

  /// Uniform integer on [lo, hi], both ends inclusive.
  int next_int(int lo, int hi) {
    return lo + static_cast<int>(next_below(
                    static_cast<std::uint64_t>(hi - lo) + 1));
  }

  /// +1 or -1 with equal probability.
  double next_sign() { return (next_u64() >> 63) ? 1.0 : -1.0; }

  /// Gamma(shape, 1) via Marsaglia-Tsang squeeze; shape > 0.
  double next_gamma(double shape) {
    if (shape < 1.0) {
      const double u = next_open();
      return next_gamma(shape + 1.0) * std::pow(u, 1.0 / shape);
    }
    const double d = shape - 1.0 / 3.0;
    const double c = 1.0 / std::sqrt(9.0 * d);
    for (;;) {
      double x = 0.0;
      double v = 0.0;
      do {
        x = next_normal();
        v = 1.0 + c * x;
      } while (v <= 0.0);
      v = v * v * v;
      const double u = next_open();
      const double x2 = x * x;
      if (u < 1.0 - 0.0331 * x2 * x2) return d * v;
      if (std::log(u) < 0.5 * x2 + d * (1.0 - v + std::log(v))) return d * v;
    }
  }

 private:
  static constexpr double kPi = 3.14159265358979323846;

  // SplitMix64 finalizer; full avalanche on 64 bits.
  static std::uint64_t mix64(std::uint64_t z) {
    z += 0x9E3779B97F4A7C15ull;
    z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ull;
    z = (z ^ (z >> 27)) * 0x94D049BB133111EBull;
    return z ^ (z >> 31);
  }

  std::uint64_t key_ = 0;
  std::uint64_t counter_ = 0;
  double cached_normal_ = 0.0;
  bool has_cached_normal_ = false;
};

}  // namespace repsim
