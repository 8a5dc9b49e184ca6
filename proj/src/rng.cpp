#include "egodiv/rng.hpp"

#include <cmath>
#include <numbers>

namespace egodiv {

namespace {
__extension__ using u128 = unsigned __int128;
}

std::uint64_t SplitMix64::below(std::uint64_t bound) noexcept {
  u128 product = static_cast<u128>(next()) * bound;
  auto low = static_cast<std::uint64_t>(product);
  if (low < bound) {
    const std::uint64_t floor = (0 - bound) % bound;
    while (low < floor) {
      product = static_cast<u128>(next()) * bound;
      low = static_cast<std::uint64_t>(product);
    }
  }
  return static_cast<std::uint64_t>(product >> 64);
}

double SplitMix64::normal() noexcept {
  double u1 = uniform();
  while (u1 <= 0.0) u1 = uniform();
  const double u2 = uniform();
  return std::sqrt(-2.0 * std::log(u1)) * std::cos(2.0 * std::numbers::pi * u2);
}

std::uint64_t derive_seed(std::uint64_t master, std::uint64_t stream) noexcept {
  SplitMix64 mix(master ^ (stream * 0xD1B54A32D192ED03ULL));
  mix.next();
  return mix.next();
}

}  // namespace egodiv
