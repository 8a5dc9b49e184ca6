#pragma once

#include <cstdint>

namespace egodiv {

/// SplitMix64 (Steele, Lea & Flood). Portable and bit-identical everywhere;
/// every randomized routine in the library draws from it.
///
/// Reference vector: seed 1234567 yields 6457827717110365317,
/// 3203168211198807973, 9817491932198370423, 4593380528125082431,
/// 16408922859458223821.
class SplitMix64 {
 public:
  using result_type = std::uint64_t;

  explicit SplitMix64(std::uint64_t seed) noexcept : state_(seed) {}

  std::uint64_t next() noexcept {
    std::uint64_t z = (state_ += 0x9E3779B97F4A7C15ULL);
    z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ULL;
    z = (z ^ (z >> 27)) * 0x94D049BB133111EBULL;
    return z ^ (z >> 31);
  }

  std::uint64_t operator()() noexcept { return next(); }
  static constexpr std::uint64_t min() noexcept { return 0; }
  static constexpr std::uint64_t max() noexcept { return UINT64_MAX; }

  /// Uniform in [0, 1) with 53 random bits.
  double uniform() noexcept { return static_cast<double>(next() >> 11) * 0x1.0p-53; }

  /// Uniform integer in [0, bound); bound must be positive. Lemire's method.
  std::uint64_t below(std::uint64_t bound) noexcept;

  bool bernoulli(double p) noexcept { return uniform() < p; }

  /// Standard normal via Box-Muller (one draw consumes two uniforms).
  double normal() noexcept;

 private:
  std::uint64_t state_;
};

/// Independent stream seed for item `stream` under a master seed.
std::uint64_t derive_seed(std::uint64_t master, std::uint64_t stream) noexcept;

}  // namespace egodiv
